#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "doorways/io.hpp"
#include "doorways/metrics.hpp"
#include "doorways/sight.hpp"
#include "doorways/sturmian.hpp"

namespace doorways {

namespace {

struct Config {
    std::string format = "text";
    std::string slope_range;
    std::size_t horizon = kDefaultHorizon;
    std::size_t bound = kDefaultEnumerationBound;
    std::uint64_t seed = 0;
    bool assert_feasible = false;
};

class AssertionFailed : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

void check_format(const Config& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (c.format == f) return;
    }
    throw ParseError("format \"" + c.format + "\" is not available for this command");
}

SlopeRange parse_slope_range(const std::string& text, const SlopeRange& fallback) {
    if (text.empty()) return fallback;
    if (text == "any") return SlopeRange::unrestricted();
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("slope range must look like lo:hi, got \"" + text + "\"");
    SlopeRange r;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    if (!lo.empty()) r.lo = parse_rational(lo);
    if (!hi.empty()) r.hi = parse_rational(hi);
    return r;
}

std::string read_argument(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot read " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// JSON spec, or the shorthands "family:N" for H(N) and "limit" for its limit.
InfiniteHallwaySpec parse_spec_argument(const std::string& arg) {
    const std::string text = read_argument(arg);
    if (text == "limit") return discontinuity_limit();
    if (text.rfind("family:", 0) == 0) {
        try {
            return discontinuity_family(std::stoull(text.substr(7)));
        } catch (const std::logic_error&) {
            throw ParseError("bad family index in \"" + text + "\"");
        }
    }
    return parse_spec(text);
}

bool looks_like_json(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

// Comma separated doorway positions, e.g. "0,0,1".
FiniteHallway parse_lefts(const std::string& text) {
    std::vector<std::int64_t> lefts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            lefts.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ParseError("bad doorway position \"" + item + "\"");
        }
    }
    if (lefts.empty()) throw ParseError("a hallway needs at least one doorway");
    return FiniteHallway(std::move(lefts));
}

std::string interval_text(const Interval& i) { return i.to_string(); }

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path);
    f << contents;
}

void add_common(CLI::App* cmd, Config& c, bool slopes, bool horizon, bool bound) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "svg"}));
    if (slopes) cmd->add_option("--slope-range", c.slope_range, "Slope range lo:hi (either side may be empty), or any");
    if (horizon) cmd->add_option("--horizon", c.horizon, "Letters examined for non-periodic hallways");
    if (bound) cmd->add_option("--bound", c.bound, "Largest n accepted");
}

int cmd_check(const std::string& bits, const Config& c, std::ostream& out) {
    check_format(c, {"text", "json"});
    const BinaryWord word(bits);
    const FiniteHallway h = phi_inv(word.to_word());
    const bool sturmian = admits_line_of_sight(h, parse_slope_range(c.slope_range, SlopeRange::unrestricted()));
    std::optional<LineOfSight> witness;
    std::optional<Interval> slopes;
    if (admits_line_of_sight(h)) {
        witness = rational_line_of_sight(h);
        if (h.n() > 0) slopes = slope_interval(h);
    }
    if (c.format == "json") {
        Json j{{"word", word.str()}, {"sturmian", sturmian}};
        j["witness"] = witness ? to_json(*witness) : Json(nullptr);
        j["slope_interval"] = slopes ? to_json(*slopes) : Json(nullptr);
        out << j.dump() << "\n";
    } else {
        out << "word: " << (word.empty() ? "(empty)" : word.str()) << "\n";
        out << "sturmian: " << (sturmian ? "true" : "false") << "\n";
        if (witness) {
            out << "witness: slope " << witness->slope.to_string() << ", intercept " << witness->intercept.to_string()
                << "\n";
        }
        if (slopes) {
            out << "slope interval: " << interval_text(*slopes) << "\n";
        } else if (witness) {
            out << "slope interval: (-inf, inf)\n";
        }
    }
    if (c.assert_feasible && !sturmian) throw AssertionFailed("word is not Sturmian");
    return kExitOk;
}

int cmd_gen(const std::string& alpha, const std::string& beta, const std::string& variant, std::size_t len,
            const Config& c, std::ostream& out) {
    check_format(c, {"text", "json"});
    const RotationParams p{ExactReal::parse(alpha), ExactReal::parse(beta),
                           variant == "ceil" ? RotationVariant::ceil : RotationVariant::floor};
    const BinaryWord w = rotation_sequence(p, len);
    if (c.format == "json") {
        out << Json{{"alpha", p.alpha.to_string()}, {"beta", p.beta.to_string()}, {"variant", variant}, {"word", w.str()}}
                   .dump()
            << "\n";
    } else {
        out << w.str() << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(std::size_t n, std::size_t sample, const Config& c, std::ostream& out) {
    check_format(c, {"text", "json", "csv"});
    auto words = enumerate_sturmian_words(n, c.bound, parse_slope_range(c.slope_range, SlopeRange::unit()));
    if (sample > 0 && sample < words.size()) {
        std::vector<BinaryWord> picked;
        std::mt19937_64 rng(c.seed);
        std::sample(words.begin(), words.end(), std::back_inserter(picked), sample, rng);
        words = std::move(picked);
    }
    if (c.format == "json") {
        out << Json{{"n", n}, {"count", words.size()}, {"words", to_json(words)}}.dump() << "\n";
    } else if (c.format == "csv") {
        out << "word\n";
        for (const auto& w : words) out << w.str() << "\n";
    } else {
        for (const auto& w : words) out << w.str() << "\n";
    }
    return kExitOk;
}

int cmd_count(std::size_t n, bool enumerate, const Config& c, std::ostream& out) {
    check_format(c, {"text", "json"});
    const BigInt formula = mignosi_count(n);
    std::optional<std::size_t> counted;
    if (enumerate) {
        counted = enumerate_sturmian_words(n, c.bound, parse_slope_range(c.slope_range, SlopeRange::unit())).size();
    }
    if (c.format == "json") {
        Json j{{"n", n}, {"count", formula.get_str()}};
        if (counted) j["enumerated"] = *counted;
        out << j.dump() << "\n";
    } else {
        out << formula.get_str() << "\n";
        if (counted) out << "enumerated: " << *counted << "\n";
    }
    if (c.assert_feasible && counted && BigInt(static_cast<unsigned long>(*counted)) != formula) {
        throw AssertionFailed("enumeration disagrees with the closed formula");
    }
    return kExitOk;
}

int cmd_partition(std::size_t n, const std::string& svg_file, bool labels, Config c, std::ostream& out) {
    check_format(c, {"text", "json", "svg"});
    if (c.bound == kDefaultEnumerationBound) c.bound = kDefaultPartitionBound;
    const auto cells = partition_p(n, c.bound);
    PartitionSvgOptions options;
    options.labels = labels;
    if (!svg_file.empty()) write_file(svg_file, partition_svg(cells, arrangement_segments(n), options));
    if (c.format == "json") {
        Json j{{"n", n}, {"count", cells.size()}, {"cells", Json::array()}};
        for (const auto& cell : cells) j["cells"].push_back(to_json(cell));
        out << j.dump() << "\n";
    } else if (c.format == "svg") {
        out << partition_svg(cells, arrangement_segments(n), options);
    } else {
        out << "cells: " << cells.size() << "\n";
        for (const auto& cell : cells) {
            out << word_to_bits(cell.word) << "  witness (" << to_string(cell.witness.alpha) << ", "
                << to_string(cell.witness.beta) << ")\n";
        }
    }
    return kExitOk;
}

int cmd_metric(const std::string& a_text, const std::string& b_text, const std::string& metric, const Config& c,
               std::ostream& out) {
    check_format(c, {"text", "json"});
    const auto a = parse_spec_argument(a_text);
    const auto b = parse_spec_argument(b_text);
    const MetricResult r = metric == "dR" ? d_rational(a, b, c.horizon) : d_standard(a, b, c.horizon);
    if (c.format == "json") {
        out << Json{{"metric", metric}, {"value", r.value.to_string()}, {"certificate", r.certificate.to_string()}}.dump()
            << "\n";
    } else {
        out << r.value.to_string();
        if (!r.certificate.full) out << " (" << r.certificate.to_string() << ")";
        out << "\n";
    }
    return kExitOk;
}

int cmd_los_finite(const FiniteHallway& h, const Config& c, std::ostream& out) {
    const bool ok = admits_line_of_sight(h, parse_slope_range(c.slope_range, SlopeRange::unrestricted()));
    std::optional<LineOfSight> witness;
    std::optional<Interval> slopes;
    std::optional<FeasiblePolygon> polygon;
    // Witnesses and slope intervals describe strict lines of sight.
    if (const FiniteHallway framed(h.lefts()); admits_line_of_sight(framed)) {
        witness = rational_line_of_sight(framed);
        if (h.n() > 0) slopes = slope_interval(framed);
    }
    if (h.n() > 0) polygon = feasible_polygon(h, h.unframed() ? FeasibilityMode::closed : FeasibilityMode::open);
    if (c.format == "json") {
        Json j{{"hallway", to_json(h)}, {"admits", ok}};
        j["witness"] = witness ? to_json(*witness) : Json(nullptr);
        j["slope_interval"] = slopes ? to_json(*slopes) : Json(nullptr);
        j["polygon"] = polygon ? to_json(*polygon) : Json(nullptr);
        if (const auto q = min_closed_denominator(unframe(h))) j["q_min_unframed"] = q->get_str();
        out << j.dump() << "\n";
    } else if (c.format == "svg") {
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\"><path d=\""
            << (polygon ? svg_path(*polygon, 400.0) : std::string()) << "\" fill=\"#9cf\" stroke=\"black\"/></svg>\n";
    } else {
        out << "admits line of sight: " << (ok ? "true" : "false") << "\n";
        if (witness) {
            out << "witness: slope " << witness->slope.to_string() << ", intercept " << witness->intercept.to_string()
                << "\n";
        }
        if (slopes) out << "slope interval: " << interval_text(*slopes) << "\n";
        if (polygon && !polygon->vertices().empty()) {
            out << "polygon:";
            for (const auto& v : polygon->vertices()) out << " (" << to_string(v.alpha) << ", " << to_string(v.beta) << ")";
            out << "\n";
        }
    }
    if (c.assert_feasible && !ok) throw AssertionFailed("hallway admits no line of sight");
    return kExitOk;
}

int cmd_los_infinite(const InfiniteHallwaySpec& s, const Config& c, std::ostream& out) {
    const VisibilityResult v = visibility(s);
    std::optional<InterceptSet> d;
    if (v.visible) d = intercept_set(s, c.horizon);
    if (c.format == "json") {
        Json j{{"spec", to_json(s)}, {"visible", v.visible}, {"certificate", v.certificate.to_string()}};
        j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
        if (d) {
            j["intercept_set"] = to_json(d->interval);
            j["intercept_certificate"] = d->certificate.to_string();
        }
        out << j.dump() << "\n";
    } else {
        out << "visible: " << (v.visible ? "true" : "false") << "\n";
        if (v.witness) {
            out << "slope: " << v.witness->slope.to_string() << "\n";
            out << "epsilon-line: intercept " << v.witness->intercept.to_string() << ", side "
                << to_string(*v.witness->side) << "\n";
        }
        if (d) {
            out << "intercept set: " << interval_text(d->interval) << " (" << d->certificate.to_string() << ")\n";
        }
    }
    if (c.assert_feasible && !v.visible) throw AssertionFailed("hallway is not visible");
    return kExitOk;
}

int cmd_los(const std::string& arg, const Config& c, std::ostream& out) {
    check_format(c, {"text", "json", "svg"});
    const std::string text = read_argument(arg);
    if (looks_like_json(text)) {
        const Json j = [&] {
            try {
                return Json::parse(text);
            } catch (const Json::exception& e) {
                throw ParseError(std::string("invalid JSON: ") + e.what());
            }
        }();
        if (j.is_object() && j.value("type", "") == "finite") return cmd_los_finite(finite_from_json(j), c, out);
        if (c.format == "svg") throw ParseError("svg output needs a finite hallway");
        return cmd_los_infinite(spec_from_json(j), c, out);
    }
    if (text == "limit" || text.rfind("family:", 0) == 0) {
        if (c.format == "svg") throw ParseError("svg output needs a finite hallway");
        return cmd_los_infinite(parse_spec_argument(text), c, out);
    }
    return cmd_los_finite(parse_lefts(text), c, out);
}

int cmd_semicontinuity(std::size_t max_n, const Config& c, std::ostream& out) {
    check_format(c, {"text", "csv", "json"});
    if (max_n == 0) throw ParseError("--max-n must be at least 1");
    const auto limit = discontinuity_limit();
    const bool v_limit = visibility(limit).visible;
    Json rows = Json::array();
    if (c.format == "csv") out << "n,d_S,d_R,V_a,V_b,q_min\n";
    if (c.format == "text") out << "n\td_S\td_R\tV_a\tV_b\tq_min\n";
    for (std::size_t n = 1; n <= max_n; ++n) {
        const auto h = discontinuity_family(n);
        const MetricResult ds = d_standard(h, limit, c.horizon);
        const MetricResult dr = d_rational(h, limit, c.horizon);
        const CommonSegment common = comm(h, limit, c.horizon);
        const auto q = min_closed_denominator(unframe(common.prefix));
        const std::string q_text = q ? q->get_str() : "none";
        const int va = visibility(h).visible ? 1 : 0;
        const int vb = v_limit ? 1 : 0;
        if (c.format == "json") {
            rows.push_back(Json{{"n", n},
                                {"d_S", ds.value.to_string()},
                                {"d_R", dr.value.to_string()},
                                {"V_a", va},
                                {"V_b", vb},
                                {"q_min", q_text}});
        } else {
            const char sep = c.format == "csv" ? ',' : '\t';
            out << n << sep << ds.value.to_string() << sep << dr.value.to_string() << sep << va << sep << vb << sep
                << q_text << "\n";
        }
    }
    if (c.format == "json") out << rows.dump() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lines of sight through hallways, Sturmian words and hallway metrics", "doorways"};
    app.require_subcommand(1);
    Config c;

    std::string word;
    auto* check = app.add_subcommand("check", "Decide whether a binary word is Sturmian and show a rational witness");
    check->add_option("word", word, "Binary word (may be empty)")->required();
    check->add_flag("--assert", c.assert_feasible, "Exit with code 2 when the word is not Sturmian");
    add_common(check, c, true, false, false);

    std::string alpha;
    std::string beta = "0";
    std::string variant = "floor";
    std::size_t len = 0;
    auto* gen = app.add_subcommand("gen", "Generate a rotation word");
    gen->add_option("--alpha", alpha, "Slope in [0, 1]")->required();
    gen->add_option("--beta", beta, "Intercept");
    gen->add_option("--variant", variant, "floor or ceil")->check(CLI::IsMember({"floor", "ceil"}));
    gen->add_option("--len", len, "Length")->required();
    add_common(gen, c, false, false, false);

    std::size_t n = 0;
    std::size_t sample = 0;
    auto* enumerate = app.add_subcommand("enumerate", "List the Sturmian words of length n");
    enumerate->add_option("n", n, "Word length")->required();
    enumerate->add_option("--sample", sample, "Print a random sample of this many words");
    enumerate->add_option("--seed", c.seed, "Seed for --sample");
    add_common(enumerate, c, true, false, true);

    bool by_enumeration = false;
    auto* count = app.add_subcommand("count", "Number of Sturmian words of length n");
    count->add_option("n", n, "Word length")->required();
    count->add_flag("--enumerate", by_enumeration, "Also count by exhaustive enumeration");
    count->add_flag("--assert", c.assert_feasible, "Exit with code 2 when the two counts differ");
    add_common(count, c, true, false, true);

    std::string svg_file;
    bool labels = false;
    auto* partition = app.add_subcommand("partition", "Cells of the slope-intercept partition for length n");
    partition->add_option("n", n, "Hallway length")->required();
    partition->add_option("--svg", svg_file, "Write an SVG drawing to this file");
    partition->add_flag("--labels", labels, "Label cells with their words in the SVG");
    add_common(partition, c, false, false, true);

    std::string spec_a;
    std::string spec_b;
    std::string metric = "dS";
    auto* metric_cmd = app.add_subcommand("metric", "Distance between two infinite hallways");
    metric_cmd->add_option("a", spec_a, "Spec as JSON, @file, family:N or limit")->required();
    metric_cmd->add_option("b", spec_b, "Spec as JSON, @file, family:N or limit")->required();
    metric_cmd->add_option("--metric", metric, "dS or dR")->check(CLI::IsMember({"dS", "dR"}));
    add_common(metric_cmd, c, false, true, false);

    std::string hallway;
    auto* los = app.add_subcommand("los", "Lines of sight through a finite hallway or an infinite spec");
    los->add_option("hallway", hallway, "Doorway positions like 0,0,1, finite or infinite JSON, @file")->required();
    los->add_flag("--assert", c.assert_feasible, "Exit with code 2 when there is no line of sight");
    add_common(los, c, true, true, false);

    std::size_t max_n = 10;
    auto* semi = app.add_subcommand("semicontinuity", "Distances and visibility of H(n) against its limit");
    semi->add_option("--max-n", max_n, "Largest n");
    add_common(semi, c, false, true, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) return cmd_check(word, c, out);
        if (*gen) return cmd_gen(alpha, beta, variant, len, c, out);
        if (*enumerate) return cmd_enumerate(n, sample, c, out);
        if (*count) return cmd_count(n, by_enumeration, c, out);
        if (*partition) return cmd_partition(n, svg_file, labels, c, out);
        if (*metric_cmd) return cmd_metric(spec_a, spec_b, metric, c, out);
        if (*los) return cmd_los(hallway, c, out);
        if (*semi) return cmd_semicontinuity(max_n, c, out);
    } catch (const AssertionFailed& e) {
        err << "assertion failed: " << e.what() << "\n";
        return kExitAsserted;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace doorways

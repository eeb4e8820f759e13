#include "doorways/io.hpp"

#include <iomanip>
#include <sstream>

namespace doorways {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::string string_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_string()) throw ParseError(std::string("field \"") + name + "\" must be a string");
    return v.get<std::string>();
}

std::vector<std::int64_t> int_array(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of integers");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("expected an integer, got " + v.dump());
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v;
    return os.str();
}

double sx(const Rational& alpha, double size, double margin) { return margin + alpha.get_d() * size; }
double sy(const Rational& beta, double size, double margin) { return margin + (1.0 - beta.get_d()) * size; }

}  // namespace

Json to_json(const Word& w) { return Json(w.diffs); }

Word word_from_json(const Json& j) { return Word{int_array(j)}; }

Json to_json(const FiniteHallway& h) {
    Json j{{"type", "finite"}, {"lefts", h.lefts()}};
    if (h.unframed()) j["unframed"] = true;
    return j;
}

FiniteHallway finite_from_json(const Json& j) {
    if (string_field(j, "type") != "finite") throw ParseError("expected type \"finite\"");
    auto lefts = int_array(field(j, "lefts"));
    if (lefts.empty()) throw ParseError("a hallway needs at least one doorway");
    bool unframed = false;
    if (j.contains("unframed")) {
        if (!j.at("unframed").is_boolean()) throw ParseError("field \"unframed\" must be a boolean");
        unframed = j.at("unframed").get<bool>();
    }
    return FiniteHallway(std::move(lefts), unframed);
}

Json to_json(const InfiniteHallwaySpec& s) {
    if (const auto* ep = s.as_periodic()) {
        return Json{{"type", "eventually_periodic"}, {"pre", ep->pre.diffs}, {"period", ep->period.diffs}};
    }
    const auto& r = *s.as_rotation();
    return Json{{"type", "rotation"},
                {"alpha", r.alpha.to_string()},
                {"beta", r.beta.to_string()},
                {"side", std::string(to_string(r.side))}};
}

InfiniteHallwaySpec spec_from_json(const Json& j) {
    const std::string type = string_field(j, "type");
    try {
        if (type == "eventually_periodic") {
            Word pre = j.contains("pre") ? word_from_json(j.at("pre")) : Word{};
            Word period = word_from_json(field(j, "period"));
            if (period.empty()) throw ParseError("period must be nonempty");
            return InfiniteHallwaySpec::eventually_periodic(std::move(pre), std::move(period));
        }
        if (type == "rotation") {
            const ExactReal alpha = ExactReal::parse(string_field(j, "alpha"));
            const ExactReal beta = ExactReal::parse(string_field(j, "beta"));
            const std::string side = j.contains("side") ? string_field(j, "side") : "plus";
            if (side != "plus" && side != "minus") throw ParseError("side must be \"plus\" or \"minus\"");
            return InfiniteHallwaySpec::rotation(alpha, beta, side == "plus" ? Side::plus : Side::minus);
        }
    } catch (const PreconditionViolated& e) {
        throw ParseError(e.what());
    } catch (const UnsupportedComparison& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown spec type \"" + type + "\"");
}

InfiniteHallwaySpec parse_spec(std::string_view text) { return spec_from_json(parse_text(text)); }

FiniteHallway parse_finite(std::string_view text) { return finite_from_json(parse_text(text)); }

Json to_json(const Point& p) { return Json{{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}}; }

Point point_from_json(const Json& j) {
    return Point{parse_rational(string_field(j, "alpha")), parse_rational(string_field(j, "beta"))};
}

Json to_json(const FeasiblePolygon& p) {
    Json vertices = Json::array();
    for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
    return Json{{"mode", p.mode() == FeasibilityMode::open ? "open" : "closed"}, {"vertices", vertices}};
}

FeasiblePolygon polygon_from_json(const Json& j) {
    const std::string mode = string_field(j, "mode");
    if (mode != "open" && mode != "closed") throw ParseError("mode must be \"open\" or \"closed\"");
    const Json& vs = field(j, "vertices");
    if (!vs.is_array()) throw ParseError("vertices must be an array");
    std::vector<Point> pts;
    for (const auto& v : vs) pts.push_back(point_from_json(v));
    return FeasiblePolygon(std::move(pts), mode == "open" ? FeasibilityMode::open : FeasibilityMode::closed);
}

Json to_json(const Interval& i) {
    if (i.empty) return Json{{"empty", true}};
    return Json{{"empty", false},
                {"lo", i.lo.to_string()},
                {"hi", i.hi.to_string()},
                {"lo_open", i.lo_open},
                {"hi_open", i.hi_open}};
}

Json to_json(const LineOfSight& l) {
    Json j{{"slope", l.slope.to_string()}, {"intercept", l.intercept.to_string()}};
    if (l.side) j["side"] = std::string(to_string(*l.side));
    return j;
}

Json to_json(const PPartitionCell& c) {
    return Json{{"n", c.n},
                {"word", word_to_bits(c.word)},
                {"witness", to_json(c.witness)},
                {"polygon", to_json(c.polygon)}};
}

Json to_json(const std::vector<BinaryWord>& words) {
    Json out = Json::array();
    for (const auto& w : words) out.push_back(w.str());
    return out;
}

std::string word_to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(w.diffs[i]);
    }
    return out;
}

std::string word_to_bits(const Word& w) {
    std::string out;
    for (std::int64_t c : w.diffs) {
        if (c == 0 || c == 1) {
            out += static_cast<char>('0' + c);
        } else {
            out += "[" + std::to_string(c) + "]";
        }
    }
    return out;
}

std::string svg_path(const FeasiblePolygon& p, double size, double margin) {
    std::string d;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        const auto& v = p.vertices()[i];
        d += (i == 0 ? "M" : " L") + fmt(sx(v.alpha, size, margin)) + " " + fmt(sy(v.beta, size, margin));
    }
    if (!d.empty()) d += " Z";
    return d;
}

std::string partition_svg(const std::vector<PPartitionCell>& cells, const std::vector<ArrangementSegment>& segments,
                          const PartitionSvgOptions& o) {
    const double total = o.size + 2 * o.margin;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(total) << "\" height=\"" << fmt(total)
       << "\" viewBox=\"0 0 " << fmt(total) << " " << fmt(total) << "\">\n";
    os << "<rect x=\"" << fmt(o.margin) << "\" y=\"" << fmt(o.margin) << "\" width=\"" << fmt(o.size)
       << "\" height=\"" << fmt(o.size) << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& c = cells[i];
        const int hue = static_cast<int>((i * 137) % 360);
        os << "<path d=\"" << svg_path(c.polygon, o.size, o.margin) << "\" fill=\""
           << (o.shade ? "hsl(" + std::to_string(hue) + ",60%,85%)" : std::string("none"))
           << "\" stroke=\"none\"><title>" << word_to_bits(c.word) << "</title></path>\n";
    }
    for (const auto& s : segments) {
        os << "<line x1=\"" << fmt(sx(s.from.alpha, o.size, o.margin)) << "\" y1=\""
           << fmt(sy(s.from.beta, o.size, o.margin)) << "\" x2=\"" << fmt(sx(s.to.alpha, o.size, o.margin))
           << "\" y2=\"" << fmt(sy(s.to.beta, o.size, o.margin)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    if (o.labels) {
        for (const auto& c : cells) {
            os << "<text x=\"" << fmt(sx(c.witness.alpha, o.size, o.margin)) << "\" y=\""
               << fmt(sy(c.witness.beta, o.size, o.margin))
               << "\" font-size=\"8\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << word_to_bits(c.word)
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace doorways

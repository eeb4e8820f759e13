#include "doorways/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "doorways/sturmian.hpp"

namespace doorways {

namespace {

// Index of the first letter where a and b differ. nullopt with a full
// certificate means a and b are the same hallway; with a bounded one, that
// they agree on the first `horizon` letters.
struct Disagreement {
    std::optional<std::size_t> letter;
    Certificate certificate;
};

Disagreement first_difference(const InfiniteHallwaySpec& a, const InfiniteHallwaySpec& b, std::size_t horizon) {
    if (same_hallway(a, b)) return {std::nullopt, Certificate::exact()};
    const auto pa = periodic_form(a);
    const auto pb = periodic_form(b);
    std::size_t limit = horizon;
    if (pa && pb) {
        // Two different eventually periodic hallways already differ within
        // the longer preperiod plus one common period.
        limit = std::max(pa->pre.size(), pb->pre.size()) + std::lcm(pa->period.size(), pb->period.size());
    }
    for (std::size_t i = 0; i < limit; ++i) {
        if (a.letter(i) != b.letter(i)) return {i, Certificate::exact()};
    }
    if (pa && pb) throw Error("internal: distinct periodic hallways agree over a full period");
    return {std::nullopt, Certificate::bounded(horizon)};
}

// Closed intercept bounds of the slope-k/m line through every doorway of an
// eventually periodic hallway; the offsets repeat after the preperiod.
struct PeriodicSight {
    Rational slope;
    Rational lo;
    Rational hi;
};

PeriodicSight periodic_sight(const EventuallyPeriodic& ep) {
    const Rational slope = make_rational(to_big(ep.period_sum()), to_big(static_cast<std::int64_t>(ep.period.size())));
    const auto spec = InfiniteHallwaySpec::eventually_periodic(ep.pre, ep.period);
    const FiniteHallway h = truncate(spec, ep.pre.size() + ep.period.size());
    PeriodicSight out{slope, Rational(0), Rational(1)};
    for (std::size_t i = 0; i < h.doorway_count(); ++i) {
        const Rational base(Rational(h.lefts()[i]) - slope * static_cast<long>(i));
        out.lo = std::max(out.lo, base);
        out.hi = std::min(out.hi, Rational(base + 1));
    }
    return out;
}

std::set<Word> prefix_words(const ExactReal& alpha, std::size_t k) {
    std::set<Word> out;
    for (const auto& c : partition_y(alpha, k).components()) {
        out.insert(phi(door_sequence_from_line(alpha, c.midpoint(), k)));
    }
    return out;
}

std::vector<Word> shared_words(const ExactReal& alpha, const ExactReal& gamma, std::size_t k) {
    const auto wa = prefix_words(alpha, k);
    const auto wg = prefix_words(gamma, k);
    std::vector<Word> out;
    std::set_intersection(wa.begin(), wa.end(), wg.begin(), wg.end(), std::back_inserter(out));
    return out;
}

MetricValue rational_value(const FiniteHallway& common) {
    if (!admits_line_of_sight(common)) return MetricValue::infinite();
    const auto q = min_closed_denominator(unframe(common));
    if (!q) throw Error("internal: a visible hallway has an empty unframed region");
    return MetricValue::reciprocal(*q);
}

}  // namespace

MetricValue MetricValue::reciprocal(BigInt q) {
    if (q < 1) throw PreconditionViolated("metric value 1/q needs q >= 1");
    return MetricValue(Kind::reciprocal, std::move(q));
}

const BigInt& MetricValue::denominator() const {
    if (kind_ != Kind::reciprocal) throw PreconditionViolated("metric value " + to_string() + " has no denominator");
    return q_;
}

std::optional<Rational> MetricValue::to_rational() const {
    switch (kind_) {
        case Kind::zero: return Rational(0);
        case Kind::reciprocal: return make_rational(BigInt(1), q_);
        case Kind::infinite: return std::nullopt;
    }
    return std::nullopt;
}

std::string MetricValue::to_string() const {
    switch (kind_) {
        case Kind::zero: return "0";
        case Kind::reciprocal: return q_ == 1 ? "1" : "1/" + q_.get_str();
        case Kind::infinite: return "inf";
    }
    return "?";
}

MetricValue MetricValue::parse(std::string_view text) {
    if (text == "0") return zero();
    if (text == "inf") return infinite();
    const Rational v = parse_rational(text);
    if (v <= 0 || v.get_num() != 1) throw ParseError("not a metric value: " + std::string(text));
    return reciprocal(v.get_den());
}

std::strong_ordering operator<=>(const MetricValue& x, const MetricValue& y) {
    if (x.kind_ != y.kind_) return static_cast<int>(x.kind_) <=> static_cast<int>(y.kind_);
    if (x.kind_ != MetricValue::Kind::reciprocal) return std::strong_ordering::equal;
    // Larger denominators are smaller values.
    const int c = cmp(y.q_, x.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

MetricResult d_standard(const InfiniteHallwaySpec& a, const InfiniteHallwaySpec& b, std::size_t horizon) {
    const auto diff = first_difference(a, b, horizon);
    if (diff.letter) {
        return {MetricValue::reciprocal(BigInt(static_cast<unsigned long>(*diff.letter + 1))), diff.certificate};
    }
    if (diff.certificate.full) return {MetricValue::zero(), diff.certificate};
    return {MetricValue::reciprocal(BigInt(static_cast<unsigned long>(horizon + 1))), diff.certificate};
}

CommonSegment comm(const InfiniteHallwaySpec& a, const InfiniteHallwaySpec& b, std::size_t horizon) {
    const auto diff = first_difference(a, b, horizon);
    if (!diff.letter && diff.certificate.full) return {true, FiniteHallway(), diff.certificate};
    // Letter j is d_{j+1} - d_j, so doorways 0..j agree.
    const std::size_t agree = diff.letter ? *diff.letter : horizon;
    return {false, truncate(a, agree), diff.certificate};
}

MetricResult d_rational(const InfiniteHallwaySpec& a, const InfiniteHallwaySpec& b, std::size_t horizon) {
    const CommonSegment c = comm(a, b, horizon);
    if (c.whole) return {MetricValue::zero(), c.certificate};
    return {rational_value(c.prefix), c.certificate};
}

VisibilityResult visibility(const InfiniteHallwaySpec& s) {
    if (const auto* r = s.as_rotation()) {
        return {true, LineOfSight{r->alpha, r->beta, r->side}, Certificate::exact()};
    }
    const PeriodicSight ps = periodic_sight(*s.as_periodic());
    // An interval of positive width has interior intercepts with no touches.
    // A single point touches a bottom and a top endpoint at once.
    if (ps.lo < ps.hi) {
        const Rational mid((ps.lo + ps.hi) / 2);
        return {true, LineOfSight{ExactReal(ps.slope), ExactReal(mid), Side::plus}, Certificate::exact()};
    }
    return {false, std::nullopt, Certificate::exact()};
}

ExactReal slope_of(const InfiniteHallwaySpec& s) {
    const VisibilityResult v = visibility(s);
    if (!v.visible) throw NotVisible("hallway admits no epsilon-line of sight");
    return v.witness->slope;
}

InterceptSet intercept_set(const InfiniteHallwaySpec& s, std::size_t horizon) {
    if (const auto ep = periodic_form(s)) {
        const PeriodicSight ps = periodic_sight(*ep);
        if (!(ps.lo < ps.hi)) throw NotVisible("hallway admits no epsilon-line of sight");
        return {Interval::make(ExactReal(ps.lo), ExactReal(ps.hi), false, false), Certificate::exact()};
    }
    const auto& r = *s.as_rotation();
    const FiniteHallway h = truncate(s, horizon);
    ExactReal lo = project(r.alpha, 0, ExactReal(h.lefts()[0]));
    ExactReal hi = lo + ExactReal(1);
    for (std::size_t i = 1; i < h.doorway_count(); ++i) {
        const ExactReal base = project(r.alpha, static_cast<std::int64_t>(i), ExactReal(h.lefts()[i]));
        if (lo < base) lo = base;
        const ExactReal top = base + ExactReal(1);
        if (top < hi) hi = top;
    }
    return {Interval::make(lo, hi, false, false), Certificate::bounded(horizon)};
}

MetricResult tilde_metric(BaseMetric base, const ExactReal& alpha, const ExactReal& gamma, std::size_t horizon) {
    for (const ExactReal* x : {&alpha, &gamma}) {
        if (*x < ExactReal(0) || *x > ExactReal(1)) {
            throw PreconditionViolated("slope must lie in [0, 1], got " + x->to_string());
        }
    }
    if (alpha == gamma) return {MetricValue::zero(), Certificate::exact()};

    // Prefix sets shrink under extension, so sharing a word of length k is
    // monotone in k. Gallop, then bisect for the longest shared length.
    auto shares = [&](std::size_t k) { return !shared_words(alpha, gamma, k).empty(); };
    std::size_t good = 0;
    std::optional<std::size_t> bad;
    for (std::size_t k = 1;; k *= 2) {
        const std::size_t probe = std::min(k, horizon);
        if (!shares(probe)) {
            bad = probe;
            break;
        }
        good = probe;
        if (probe == horizon) break;
    }
    Certificate cert = Certificate::exact();
    if (!bad) {
        cert = Certificate::bounded(horizon);
    } else {
        std::size_t hi = *bad;
        while (hi - good > 1) {
            const std::size_t mid = good + (hi - good) / 2;
            (shares(mid) ? good : hi) = mid;
        }
    }

    if (base == BaseMetric::standard) {
        return {MetricValue::reciprocal(BigInt(static_cast<unsigned long>(good + 1))), cert};
    }
    // Longer common prefixes only raise the smallest denominator, so the
    // infimum is attained by a longest shared prefix.
    std::optional<MetricValue> best;
    for (const Word& w : shared_words(alpha, gamma, good)) {
        MetricValue v = rational_value(phi_inv(w));
        if (!best || v < *best) best = std::move(v);
    }
    return {*best, cert};
}

InfiniteHallwaySpec discontinuity_family(std::size_t n) {
    if (n == 0) throw PreconditionViolated("discontinuity_family needs n >= 1");
    Word period;
    period.diffs.assign(n, 0);
    period.diffs.back() = 1;
    return InfiniteHallwaySpec::eventually_periodic(Word{{1}}, std::move(period));
}

InfiniteHallwaySpec discontinuity_limit() { return InfiniteHallwaySpec::eventually_periodic(Word{{1}}, Word{{0}}); }

}  // namespace doorways

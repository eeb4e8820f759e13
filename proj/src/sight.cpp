#include "doorways/sight.hpp"

#include <algorithm>

namespace doorways {

namespace {

// a*alpha + b*beta <= c
struct HalfPlane {
    Rational a;
    Rational b;
    Rational c;

    Rational excess(const Point& p) const { return a * p.alpha + b * p.beta - c; }
};

void drop_repeats(std::vector<Point>& v) {
    std::vector<Point> out;
    out.reserve(v.size());
    for (const auto& p : v) {
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    v = std::move(out);
}

// One Sutherland-Hodgman step against a closed half-plane. Works for
// degenerate inputs (a single point or a segment) as well.
std::vector<Point> clip(const std::vector<Point>& poly, const HalfPlane& hp) {
    std::vector<Point> out;
    const std::size_t m = poly.size();
    out.reserve(m + 2);
    for (std::size_t k = 0; k < m; ++k) {
        const Point& p = poly[k];
        const Point& q = poly[(k + 1) % m];
        const Rational fp = hp.excess(p);
        const Rational fq = hp.excess(q);
        if (fp <= 0) out.push_back(p);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
            const Rational t = fp / (fp - fq);
            out.push_back(Point{Rational(p.alpha + t * (q.alpha - p.alpha)), Rational(p.beta + t * (q.beta - p.beta))});
        }
    }
    drop_repeats(out);
    return out;
}

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.alpha - o.alpha) * (b.beta - o.beta) - (a.beta - o.beta) * (b.alpha - o.alpha);
}

SideSet classify(bool bottom, bool top) {
    if (bottom && top) return SideSet::none;
    if (bottom) return SideSet::plus;
    if (top) return SideSet::minus;
    return SideSet::both;
}

}  // namespace

Interval Interval::make(ExactReal lo, ExactReal hi, bool lo_open, bool hi_open) {
    const auto ord = compare(lo, hi);
    if (ord > 0 || (ord == 0 && (lo_open || hi_open))) return empty_set();
    return Interval{std::move(lo), std::move(hi), lo_open, hi_open, false};
}

bool Interval::contains(const ExactReal& x) const {
    if (empty) return false;
    const bool above = lo_open ? lo < x : lo <= x;
    const bool below = hi_open ? x < hi : x <= hi;
    return above && below;
}

ExactReal Interval::width() const { return empty ? ExactReal(0) : hi - lo; }

ExactReal Interval::midpoint() const {
    if (empty) throw PreconditionViolated("midpoint of an empty interval");
    return (lo + hi) / Rational(2);
}

std::string Interval::to_string() const {
    if (empty) return "empty";
    return std::string(lo_open ? "(" : "[") + lo.to_string() + ", " + hi.to_string() + (hi_open ? ")" : "]");
}

ExactReal project(const ExactReal& gamma, std::int64_t x, const ExactReal& y) {
    return y - gamma * ExactReal(static_cast<long>(x));
}

Interval intercept_interval(const FiniteHallway& h, const ExactReal& alpha, FeasibilityMode mode) {
    const auto& d = h.lefts();
    ExactReal lo = project(alpha, 0, ExactReal(static_cast<long>(d[0])));
    ExactReal hi = lo + ExactReal(1);
    for (std::size_t i = 1; i < d.size(); ++i) {
        const ExactReal bottom = project(alpha, static_cast<std::int64_t>(i), ExactReal(static_cast<long>(d[i])));
        if (bottom > lo) lo = bottom;
        const ExactReal top = bottom + ExactReal(1);
        if (top < hi) hi = top;
    }
    const bool open = mode == FeasibilityMode::open;
    return Interval::make(std::move(lo), std::move(hi), open, open);
}

FeasiblePolygon::FeasiblePolygon(std::vector<Point> vertices, FeasibilityMode mode)
    : vertices_(std::move(vertices)), mode_(mode) {}

Rational FeasiblePolygon::area() const {
    const std::size_t m = vertices_.size();
    if (m < 3) return Rational(0);
    Rational twice(0);
    for (std::size_t k = 0; k < m; ++k) {
        const Point& p = vertices_[k];
        const Point& q = vertices_[(k + 1) % m];
        twice += p.alpha * q.beta - q.alpha * p.beta;
    }
    return Rational(twice / 2);
}

bool FeasiblePolygon::empty() const {
    if (mode_ == FeasibilityMode::closed) return vertices_.empty();
    return area() == 0;
}

Point FeasiblePolygon::witness() const {
    if (vertices_.empty()) throw NoLineOfSight("empty feasible region has no witness");
    Rational a(0);
    Rational b(0);
    for (const auto& p : vertices_) {
        a += p.alpha;
        b += p.beta;
    }
    const Rational m(static_cast<long>(vertices_.size()));
    return Point{Rational(a / m), Rational(b / m)};
}

Rational FeasiblePolygon::min_alpha() const {
    if (vertices_.empty()) throw NoLineOfSight("empty feasible region");
    return std::min_element(vertices_.begin(), vertices_.end(),
                            [](const Point& x, const Point& y) { return x.alpha < y.alpha; })
        ->alpha;
}

Rational FeasiblePolygon::max_alpha() const {
    if (vertices_.empty()) throw NoLineOfSight("empty feasible region");
    return std::max_element(vertices_.begin(), vertices_.end(),
                            [](const Point& x, const Point& y) { return x.alpha < y.alpha; })
        ->alpha;
}

bool FeasiblePolygon::contains(const Point& p) const {
    const std::size_t m = vertices_.size();
    if (m == 0) return false;
    if (mode_ == FeasibilityMode::open) {
        if (area() == 0) return false;
        for (std::size_t k = 0; k < m; ++k) {
            if (cross(vertices_[k], vertices_[(k + 1) % m], p) <= 0) return false;
        }
        return true;
    }
    if (m == 1) return vertices_[0] == p;
    if (m == 2) {
        const Point& a = vertices_[0];
        const Point& b = vertices_[1];
        return cross(a, b, p) == 0 && std::min(a.alpha, b.alpha) <= p.alpha && p.alpha <= std::max(a.alpha, b.alpha) &&
               std::min(a.beta, b.beta) <= p.beta && p.beta <= std::max(a.beta, b.beta);
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (cross(vertices_[k], vertices_[(k + 1) % m], p) < 0) return false;
    }
    return true;
}

FeasiblePolygon feasible_polygon(const FiniteHallway& h, FeasibilityMode mode, const SlopeRange& range) {
    const auto& d = h.lefts();
    const std::size_t n = h.n();
    std::optional<Rational> lo = range.lo;
    std::optional<Rational> hi = range.hi;
    if (n >= 1) {
        // The last wall bounds the slope: d_n <= n*alpha + beta <= d_n + 1 with beta in [0, 1].
        const Rational nn(static_cast<long>(n));
        const Rational from_last_lo = Rational(static_cast<long>(d[n] - 1)) / nn;
        const Rational from_last_hi = Rational(static_cast<long>(d[n] + 1)) / nn;
        lo = lo ? std::max(*lo, from_last_lo) : from_last_lo;
        hi = hi ? std::min(*hi, from_last_hi) : from_last_hi;
    }
    if (!lo || !hi) throw PreconditionViolated("feasible region of a single doorway is unbounded in slope");
    if (*lo > *hi) return FeasiblePolygon({}, mode);

    std::vector<Point> poly{{*lo, Rational(0)}, {*hi, Rational(0)}, {*hi, Rational(1)}, {*lo, Rational(1)}};
    drop_repeats(poly);
    for (std::size_t i = 1; i <= n && !poly.empty(); ++i) {
        const Rational ii(static_cast<long>(i));
        const Rational di(static_cast<long>(d[i]));
        poly = clip(poly, HalfPlane{Rational(-ii), Rational(-1), Rational(-di)});
        if (!poly.empty()) poly = clip(poly, HalfPlane{ii, Rational(1), Rational(di + 1)});
    }
    return FeasiblePolygon(std::move(poly), mode);
}

bool admits_line_of_sight(const FiniteHallway& h, const SlopeRange& range) {
    const bool unbounded = !range.lo || !range.hi;
    if (h.n() == 0 && unbounded) return true;
    const FeasibilityMode mode = h.unframed() ? FeasibilityMode::closed : FeasibilityMode::open;
    return !feasible_polygon(h, mode, range).empty();
}

Interval slope_interval(const FiniteHallway& h) {
    if (h.n() == 0) throw PreconditionViolated("every slope sees through a single doorway");
    const FeasiblePolygon poly = feasible_polygon(h, FeasibilityMode::open);
    if (poly.empty()) throw NoLineOfSight("hallway admits no line of sight");
    return Interval::make(poly.min_alpha(), poly.max_alpha(), true, true);
}

LineOfSight rational_line_of_sight(const FiniteHallway& h) {
    if (h.n() == 0) return LineOfSight{ExactReal(0), ExactReal(Rational(1, 2)), std::nullopt};
    const Interval slopes = slope_interval(h);
    const Rational lo = *slopes.lo.as_rational();
    const Rational hi = *slopes.hi.as_rational();
    // Every slope strictly inside the projection has an open fiber, so the
    // first fraction found by increasing denominator is the answer.
    for (long q = 1;; ++q) {
        const BigInt p = floor_of(Rational(lo * q)) + 1;
        const Rational alpha = make_rational(p, BigInt(q));
        if (alpha < hi) {
            const Interval betas = intercept_interval(h, ExactReal(alpha), FeasibilityMode::open);
            return LineOfSight{ExactReal(alpha), betas.midpoint(), std::nullopt};
        }
    }
}

std::optional<BigInt> min_closed_denominator(const FiniteHallway& h) {
    if (h.n() == 0) return BigInt(1);
    const FeasiblePolygon poly = feasible_polygon(h, FeasibilityMode::closed);
    if (poly.empty()) return std::nullopt;
    const Rational lo = poly.min_alpha();
    const Rational hi = poly.max_alpha();
    for (long q = 1;; ++q) {
        const BigInt p = ceil_of(Rational(lo * q));
        if (make_rational(p, BigInt(q)) <= hi) return BigInt(q);
    }
}

std::string_view to_string(SideSet s) {
    switch (s) {
        case SideSet::none: return "none";
        case SideSet::plus: return "plus";
        case SideSet::minus: return "minus";
        case SideSet::both: return "both";
    }
    return "none";
}

bool includes(SideSet set, Side side) {
    return set == SideSet::both || (set == SideSet::plus && side == Side::plus) ||
           (set == SideSet::minus && side == Side::minus);
}

std::string Certificate::to_string() const { return full ? "full" : "bounded(" + std::to_string(horizon) + ")"; }

SideSet touch_sides(const FiniteHallway& h, const ExactReal& alpha, const ExactReal& beta) {
    bool bottom = false;
    bool top = false;
    const auto& d = h.lefts();
    for (std::size_t i = 0; i < d.size(); ++i) {
        const ExactReal v = alpha * ExactReal(static_cast<long>(i)) + beta;
        const ExactReal lo(static_cast<long>(d[i]));
        const ExactReal hi(static_cast<long>(d[i] + 1));
        const auto below = compare(v, lo);
        const auto above = compare(v, hi);
        if (below < 0 || above > 0) return SideSet::none;
        bottom = bottom || below == 0;
        top = top || above == 0;
    }
    return classify(bottom, top);
}

SideSet epsilon_line_of_sight(const InfiniteHallwaySpec& s, const ExactReal& alpha, const ExactReal& beta) {
    if (const auto ep = periodic_form(s)) {
        // Past the preperiod d_{i+m} = d_i + k. Unless alpha*m = k the
        // offsets alpha*i + beta - d_i drift without bound; when it holds
        // they repeat, so one preperiod plus one period decides everything.
        const auto m = static_cast<long>(ep->period.size());
        const Rational slope(ep->period_sum(), m);
        if (alpha != ExactReal(slope)) return SideSet::none;
        const auto spec = InfiniteHallwaySpec::eventually_periodic(ep->pre, ep->period);
        return touch_sides(truncate(spec, ep->pre.size() + ep->period.size()), alpha, beta);
    }
    const auto& r = *s.as_rotation();
    // Irrational slope: the fractional parts of i*alpha + beta are dense, so
    // only the effective intercept itself keeps every offset in [0, 1].
    if (alpha != r.alpha) return SideSet::none;
    const ExactReal b = effective_intercept(r);
    if (beta != b) return SideSet::none;
    if (!integer_touch_index(alpha, b)) return SideSet::both;
    return r.side == Side::plus ? SideSet::plus : SideSet::minus;
}

}  // namespace doorways

#include "doorways/hallway.hpp"

#include <algorithm>

#include "doorways/sight.hpp"

namespace doorways {

namespace {

std::int64_t rotation_doorway(const RotationGenerated& r, std::int64_t i) {
    const ExactReal x = r.alpha * ExactReal(static_cast<long>(i)) + r.beta;
    return r.side == Side::plus ? to_int64(x.floor()) : to_int64(x.ceil()) - 1;
}

void canonicalize(Word& pre, Word& period) {
    auto& p = period.diffs;
    const std::size_t m = p.size();
    for (std::size_t len = 1; len < m; ++len) {
        if (m % len != 0) continue;
        bool repeats = true;
        for (std::size_t i = len; i < m && repeats; ++i) repeats = p[i] == p[i % len];
        if (repeats) {
            p.resize(len);
            break;
        }
    }
    auto& q = pre.diffs;
    while (!q.empty() && q.back() == p.back()) {
        q.pop_back();
        std::rotate(p.begin(), p.end() - 1, p.end());
    }
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::plus ? "plus" : "minus"; }

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_) {
        if (c != '0' && c != '1') throw ParseError("binary word contains '" + std::string(1, c) + "'");
    }
}

Word BinaryWord::to_word() const {
    Word w;
    w.diffs.reserve(bits_.size());
    for (char c : bits_) w.diffs.push_back(c == '1' ? 1 : 0);
    return w;
}

FiniteHallway::FiniteHallway(std::vector<std::int64_t> lefts, bool unframed)
    : lefts_(std::move(lefts)), unframed_(unframed) {
    if (lefts_.empty()) throw PreconditionViolated("a hallway needs at least one doorway");
    const std::int64_t d0 = lefts_.front();
    for (auto& d : lefts_) d -= d0;
}

FiniteHallway FiniteHallway::prefix(std::size_t m) const {
    if (m > n()) throw PreconditionViolated("prefix longer than hallway");
    return FiniteHallway(std::vector<std::int64_t>(lefts_.begin(), lefts_.begin() + static_cast<std::ptrdiff_t>(m) + 1),
                         unframed_);
}

Word phi(const FiniteHallway& h) {
    Word w;
    const auto& d = h.lefts();
    w.diffs.reserve(h.n());
    for (std::size_t i = 0; i + 1 < d.size(); ++i) w.diffs.push_back(d[i + 1] - d[i]);
    return w;
}

FiniteHallway phi_inv(const Word& w) {
    std::vector<std::int64_t> lefts{0};
    lefts.reserve(w.size() + 1);
    for (std::int64_t step : w.diffs) lefts.push_back(lefts.back() + step);
    return FiniteHallway(std::move(lefts));
}

std::optional<std::pair<std::int64_t, BinaryWord>> psi(const Word& w) {
    if (w.empty()) return std::make_pair(std::int64_t{0}, BinaryWord());
    const auto [lo, hi] = std::minmax_element(w.diffs.begin(), w.diffs.end());
    if (*hi - *lo > 1) return std::nullopt;
    const std::int64_t a = *lo;
    std::string bits;
    bits.reserve(w.size());
    for (std::int64_t c : w.diffs) bits.push_back(c == a ? '0' : '1');
    return std::make_pair(a, BinaryWord(std::move(bits)));
}

FiniteHallway unframe(const FiniteHallway& h) { return FiniteHallway(h.lefts(), true); }

std::int64_t EventuallyPeriodic::period_sum() const {
    std::int64_t k = 0;
    for (std::int64_t c : period.diffs) k += c;
    return k;
}

InfiniteHallwaySpec InfiniteHallwaySpec::eventually_periodic(Word pre, Word period) {
    if (period.empty()) throw PreconditionViolated("period must be nonempty");
    canonicalize(pre, period);
    return InfiniteHallwaySpec(EventuallyPeriodic{std::move(pre), std::move(period)});
}

InfiniteHallwaySpec InfiniteHallwaySpec::rotation(ExactReal alpha, ExactReal beta, Side side) {
    if (alpha < ExactReal(0) || alpha > ExactReal(1)) {
        throw PreconditionViolated("rotation slope must lie in [0, 1], got " + alpha.to_string());
    }
    return InfiniteHallwaySpec(RotationGenerated{std::move(alpha), std::move(beta), side});
}

std::int64_t InfiniteHallwaySpec::letter(std::size_t i) const {
    if (const auto* ep = as_periodic()) {
        if (i < ep->pre.size()) return ep->pre.diffs[i];
        return ep->period.diffs[(i - ep->pre.size()) % ep->period.size()];
    }
    const auto& r = std::get<RotationGenerated>(value_);
    const auto j = static_cast<std::int64_t>(i);
    return rotation_doorway(r, j + 1) - rotation_doorway(r, j);
}

Word InfiniteHallwaySpec::prefix_word(std::size_t length) const { return phi(truncate(*this, length)); }

FiniteHallway truncate(const InfiniteHallwaySpec& s, std::size_t n) {
    std::vector<std::int64_t> lefts;
    lefts.reserve(n + 1);
    if (const auto* r = s.as_rotation()) {
        for (std::size_t i = 0; i <= n; ++i) lefts.push_back(rotation_doorway(*r, static_cast<std::int64_t>(i)));
    } else {
        lefts.push_back(0);
        for (std::size_t i = 0; i < n; ++i) lefts.push_back(lefts.back() + s.letter(i));
    }
    return FiniteHallway(std::move(lefts));
}

InfiniteHallwaySpec shift(const InfiniteHallwaySpec& s) {
    if (const auto* r = s.as_rotation()) {
        return InfiniteHallwaySpec::rotation(r->alpha, (r->alpha + r->beta).frac(), r->side);
    }
    EventuallyPeriodic ep = *s.as_periodic();
    if (!ep.pre.empty()) {
        ep.pre.diffs.erase(ep.pre.diffs.begin());
    } else {
        std::rotate(ep.period.diffs.begin(), ep.period.diffs.begin() + 1, ep.period.diffs.end());
    }
    return InfiniteHallwaySpec::eventually_periodic(std::move(ep.pre), std::move(ep.period));
}

Doorway prepend(const InfiniteHallwaySpec& s, const ExactReal& alpha, const ExactReal& beta, Side side) {
    // s starts at x = 1, so relative to s the line has intercept alpha + beta.
    if (!includes(epsilon_line_of_sight(s, alpha, alpha + beta), side)) {
        throw PreconditionViolated("the line (" + alpha.to_string() + ", " + beta.to_string() + ", " +
                                   std::string(to_string(side)) + ") is not a line of sight");
    }
    const std::int64_t z = side == Side::plus ? to_int64(beta.floor()) : to_int64(beta.ceil()) - 1;
    return Doorway{z, false};
}

InfiniteHallwaySpec extend_front(const InfiniteHallwaySpec& s, const Doorway& d0) {
    if (const auto* ep = s.as_periodic()) {
        Word pre;
        pre.diffs.reserve(ep->pre.size() + 1);
        pre.diffs.push_back(-d0.left);
        pre.diffs.insert(pre.diffs.end(), ep->pre.diffs.begin(), ep->pre.diffs.end());
        return InfiniteHallwaySpec::eventually_periodic(std::move(pre), ep->period);
    }
    const auto& r = *s.as_rotation();
    RotationGenerated front{r.alpha, r.beta - r.alpha, r.side};
    if (rotation_doorway(front, 0) - rotation_doorway(r, 0) != d0.left) {
        throw PreconditionViolated("doorway " + std::to_string(d0.left) +
                                   " cannot precede this rotation hallway as a rotation hallway");
    }
    return InfiniteHallwaySpec::rotation(front.alpha, front.beta, front.side);
}

std::optional<EventuallyPeriodic> periodic_form(const InfiniteHallwaySpec& s) {
    if (const auto* ep = s.as_periodic()) return *ep;
    const auto& r = *s.as_rotation();
    const Rational* q = r.alpha.as_rational();
    if (q == nullptr) return std::nullopt;
    // floor((i + q) p/q + beta) = floor(i p/q + beta) + p, so the letters
    // repeat with period q from the start.
    const auto period = static_cast<std::size_t>(to_int64(q->get_den()));
    auto spec = InfiniteHallwaySpec::eventually_periodic(Word{}, s.prefix_word(period));
    return *spec.as_periodic();
}

ExactReal effective_intercept(const RotationGenerated& r) {
    if (r.side == Side::plus) return r.beta.frac();
    return r.beta - ExactReal(Rational(r.beta.ceil())) + ExactReal(1);
}

std::optional<std::size_t> integer_touch_index(const ExactReal& alpha, const ExactReal& beta) {
    if (alpha.is_rational()) throw PreconditionViolated("integer_touch_index needs an irrational slope");
    if (beta.is_rational()) {
        if (beta.as_rational()->get_den() == 1) return 0;
        return std::nullopt;
    }
    if (beta.radicand() != alpha.radicand()) return std::nullopt;
    // i*alpha + beta is rational only when the sqrt(d) parts cancel.
    const Rational i = -beta.radical_coefficient() / alpha.radical_coefficient();
    if (i.get_den() != 1 || i < 0) return std::nullopt;
    const ExactReal x = alpha * ExactReal(i) + beta;
    if (x.as_rational()->get_den() != 1) return std::nullopt;
    return static_cast<std::size_t>(to_int64(i.get_num()));
}

bool same_hallway(const InfiniteHallwaySpec& a, const InfiniteHallwaySpec& b) {
    const auto pa = periodic_form(a);
    const auto pb = periodic_form(b);
    if (pa && pb) return *pa == *pb;
    if (pa || pb) return false;
    // Both aperiodic. Each is seen by exactly one epsilon-line, whose
    // intercept is the effective intercept; the side only matters when the
    // line meets a lattice point.
    const auto& ra = *a.as_rotation();
    const auto& rb = *b.as_rotation();
    if (ra.alpha != rb.alpha) return false;
    const ExactReal ba = effective_intercept(ra);
    if (ba != effective_intercept(rb)) return false;
    return ra.side == rb.side || !integer_touch_index(ra.alpha, ba).has_value();
}

}  // namespace doorways

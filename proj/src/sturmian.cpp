#include "doorways/sturmian.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

namespace doorways {

namespace {

void require_unit_slope(const ExactReal& alpha) {
    if (alpha < ExactReal(0) || alpha > ExactReal(1)) {
        throw PreconditionViolated("slope must lie in [0, 1], got " + alpha.to_string());
    }
}

}  // namespace

BinaryWord rotation_sequence(const RotationParams& p, std::size_t length) {
    require_unit_slope(p.alpha);
    auto level = [&](std::size_t i) {
        const ExactReal x = p.alpha * ExactReal(static_cast<long>(i)) + p.beta;
        return p.variant == RotationVariant::floor ? x.floor() : x.ceil();
    };
    std::string bits;
    bits.reserve(length);
    BigInt prev = level(0);
    for (std::size_t i = 0; i < length; ++i) {
        BigInt next = level(i + 1);
        bits.push_back(next == prev ? '0' : '1');
        prev = std::move(next);
    }
    return BinaryWord(std::move(bits));
}

std::size_t complexity(const BinaryWord& x, std::size_t m) {
    if (m > x.size()) {
        throw InvalidLength("factor length " + std::to_string(m) + " exceeds word length " + std::to_string(x.size()));
    }
    const std::string_view s = x.str();
    std::unordered_set<std::string_view> factors;
    for (std::size_t i = 0; i + m <= s.size(); ++i) factors.insert(s.substr(i, m));
    return factors.size();
}

bool is_sturmian_word(const BinaryWord& b) { return admits_line_of_sight(phi_inv(b.to_word())); }

std::vector<BinaryWord> enumerate_sturmian_words(std::size_t n, std::size_t bound, const SlopeRange& range) {
    if (n > bound) {
        throw ResourceLimit("enumeration length " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    }
    if (n >= 63) throw ResourceLimit("enumeration length too large");
    std::vector<BinaryWord> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    std::string bits(n, '0');
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t j = 0; j < n; ++j) bits[j] = ((mask >> (n - 1 - j)) & 1U) != 0 ? '1' : '0';
        BinaryWord w(bits);
        if (admits_line_of_sight(phi_inv(w.to_word()), range)) out.push_back(std::move(w));
    }
    return out;
}

std::uint64_t totient(std::uint64_t i) {
    if (i == 0) throw PreconditionViolated("totient is defined for i >= 1");
    std::uint64_t result = i;
    std::uint64_t rest = i;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        result -= result / p;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

BigInt mignosi_count(std::uint64_t n) {
    BigInt c(1);
    for (std::uint64_t i = 1; i <= n; ++i) c += BigInt(static_cast<unsigned long>(n + 1 - i)) * totient(i);
    return c;
}

std::vector<Interval> YPartition::components() const {
    std::vector<Interval> out;
    out.reserve(breakpoints.size() + 1);
    ExactReal left(0);
    for (const auto& b : breakpoints) {
        out.push_back(Interval::make(left, b, true, true));
        left = b;
    }
    out.push_back(Interval::make(left, ExactReal(1), true, true));
    return out;
}

YPartition partition_y(const ExactReal& alpha, std::size_t n) {
    require_unit_slope(alpha);
    YPartition y{alpha, n, {}};
    for (std::size_t i = 0; i <= n; ++i) {
        ExactReal f = (-(alpha * ExactReal(static_cast<long>(i)))).frac();
        if (f.sign() != 0) y.breakpoints.push_back(std::move(f));
    }
    std::sort(y.breakpoints.begin(), y.breakpoints.end());
    y.breakpoints.erase(std::unique(y.breakpoints.begin(), y.breakpoints.end()), y.breakpoints.end());
    return y;
}

FiniteHallway door_sequence_from_line(const ExactReal& alpha, const ExactReal& beta, std::size_t n) {
    std::vector<std::int64_t> lefts;
    lefts.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const ExactReal x = alpha * ExactReal(static_cast<long>(i)) + beta;
        if (const Rational* q = x.as_rational(); q != nullptr && q->get_den() == 1) {
            throw LatticeTouch("line (" + alpha.to_string() + ", " + beta.to_string() + ") meets the lattice at x = " +
                               std::to_string(i));
        }
        lefts.push_back(to_int64(x.floor()));
    }
    return FiniteHallway(std::move(lefts));
}

}  // namespace doorways

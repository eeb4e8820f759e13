#include <set>
#include <string>

#include "doctest.h"
#include "doorways/sturmian.hpp"
#include "oracles/generators.hpp"

using namespace doorways;

namespace {
using Lefts = std::vector<std::int64_t>;
const ExactReal kGolden = ExactReal::parse("(-1+sqrt(5))/2");

// Balanced-word oracle: a finite binary word is a factor of a Sturmian
// word exactly when any two factors of equal length differ by at most one
// in their number of ones.
bool balanced(const std::string& w) {
    for (std::size_t m = 1; m <= w.size(); ++m) {
        int lo = 1 << 30, hi = -1;
        for (std::size_t i = 0; i + m <= w.size(); ++i) {
            int ones = 0;
            for (std::size_t k = i; k < i + m; ++k) ones += w[k] == '1';
            lo = std::min(lo, ones);
            hi = std::max(hi, ones);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

std::size_t brute_complexity(const std::string& w, std::size_t m) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i + m <= w.size(); ++i) seen.insert(w.substr(i, m));
    return seen.size();
}

std::string bits(std::uint32_t mask, std::size_t n) {
    std::string s;
    for (std::size_t j = 0; j < n; ++j) s.push_back(((mask >> (n - 1 - j)) & 1U) != 0 ? '1' : '0');
    return s;
}
}  // namespace

TEST_CASE("rotation_sequence") {
    CHECK(rotation_sequence({ExactReal(0), ExactReal(0)}, 5).str() == "00000");
    CHECK(rotation_sequence({ExactReal(1), ExactReal(0)}, 4).str() == "1111");
    CHECK(rotation_sequence({kGolden, ExactReal(0)}, 8).str() == "01011010");
    // Ceilings differ from floors only where i*alpha + beta hits an integer.
    CHECK(rotation_sequence({ExactReal(Rational(1, 2)), ExactReal(0), RotationVariant::floor}, 4).str() == "0101");
    CHECK(rotation_sequence({ExactReal(Rational(1, 2)), ExactReal(0), RotationVariant::ceil}, 4).str() == "1010");
    CHECK(rotation_sequence({kGolden, ExactReal(0)}, 0).empty());
    CHECK_THROWS_AS((void)rotation_sequence({ExactReal(Rational(3, 2)), ExactReal(0)}, 3), PreconditionViolated);
}

TEST_CASE("complexity") {
    CHECK(complexity(BinaryWord("00000"), 2) == 1);
    CHECK(complexity(BinaryWord("0101"), 2) == 2);
    CHECK(complexity(rotation_sequence({kGolden, ExactReal(0)}, 50), 7) == 8);
    CHECK(complexity(BinaryWord("0101"), 0) == 1);
    CHECK_THROWS_AS((void)complexity(BinaryWord("01"), 3), InvalidLength);
}

TEST_CASE("is_sturmian_word") {
    CHECK(is_sturmian_word(BinaryWord("010010")));
    CHECK_FALSE(is_sturmian_word(BinaryWord("0011")));
    CHECK(is_sturmian_word(BinaryWord("")));
    CHECK(is_sturmian_word(BinaryWord("1111")));
    CHECK_FALSE(is_sturmian_word(BinaryWord("110100")));
}

TEST_CASE("enumerate_sturmian_words") {
    const auto one = enumerate_sturmian_words(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].str() == "0");
    CHECK(one[1].str() == "1");
    CHECK(enumerate_sturmian_words(2).size() == 4);
    CHECK(enumerate_sturmian_words(5).size() == 24);
    CHECK_THROWS_AS((void)enumerate_sturmian_words(17), ResourceLimit);
    CHECK_THROWS_AS((void)enumerate_sturmian_words(5, 4), ResourceLimit);
    // Slope window [1, 2): every word of the shifted alphabet is rejected
    // except those seen by a line of slope exactly 1 or steeper.
    CHECK(enumerate_sturmian_words(3, 16, SlopeRange{Rational(1), Rational(2)}).size() == 1);
}

TEST_CASE("totient and Mignosi count") {
    CHECK(totient(1) == 1);
    CHECK(totient(6) == 2);
    CHECK(totient(12) == 4);
    CHECK(totient(97) == 96);
    CHECK_THROWS_AS((void)totient(0), PreconditionViolated);
    CHECK(mignosi_count(1) == 2);
    CHECK(mignosi_count(2) == 4);
    CHECK(mignosi_count(5) == 24);
}

TEST_CASE("partition_y") {
    const auto a = partition_y(ExactReal(Rational(1, 2)), 2);
    CHECK(a.breakpoints == std::vector<ExactReal>{ExactReal(Rational(1, 2))});
    CHECK(a.component_count() == 2);
    CHECK(partition_y(ExactReal(0), 10).component_count() == 1);
    const auto c = partition_y(ExactReal(Rational(1, 3)), 5);
    CHECK(c.breakpoints == std::vector<ExactReal>{ExactReal(Rational(1, 3)), ExactReal(Rational(2, 3))});
    const auto comps = c.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == Interval::make(ExactReal(0), ExactReal(Rational(1, 3)), true, true));
    CHECK(comps[2] == Interval::make(ExactReal(Rational(2, 3)), ExactReal(1), true, true));
    CHECK(partition_y(kGolden, 4).component_count() == 5);
}

TEST_CASE("partition_p") {
    const auto p1 = partition_p(1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].word == Word{{0}});
    CHECK(p1[1].word == Word{{1}});
    CHECK(p1[0].polygon.area() == Rational(1, 2));
    CHECK(partition_p(2).size() == 4);
    CHECK(partition_p(5).size() == 24);
    CHECK_THROWS_AS((void)partition_p(13), ResourceLimit);
    CHECK(arrangement_segments(2).size() == 3);
}

TEST_CASE("door_sequence_from_line") {
    CHECK(door_sequence_from_line(ExactReal(Rational(1, 2)), ExactReal(Rational(1, 4)), 2).lefts() == Lefts{0, 0, 1});
    CHECK(door_sequence_from_line(ExactReal(0), ExactReal(Rational(1, 2)), 5).lefts() == Lefts(6, 0));
    CHECK_THROWS_AS((void)door_sequence_from_line(ExactReal(Rational(1, 2)), ExactReal(Rational(1, 2)), 2), LatticeTouch);
}

TEST_CASE("property: recognizer agrees with the balanced-word oracle") {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            const std::string w = bits(mask, n);
            CHECK(is_sturmian_word(BinaryWord(w)) == balanced(w));
        }
    }
}

TEST_CASE("property: enumeration, Mignosi count and the balanced oracle agree") {
    for (std::size_t n = 1; n <= 9; ++n) {
        const auto words = enumerate_sturmian_words(n);
        CHECK(BigInt(static_cast<unsigned long>(words.size())) == mignosi_count(n));
        std::size_t oracle_count = 0;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) oracle_count += balanced(bits(mask, n));
        CHECK(words.size() == oracle_count);
        for (std::size_t k = 1; k < words.size(); ++k) CHECK(words[k - 1] < words[k]);
        for (const auto& w : words) CHECK(is_sturmian_word(w));
    }
}

TEST_CASE("property: irrational rotations have complexity m + 1") {
    gen::Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        const ExactReal alpha = gen::unit_quadratic(rng);
        const ExactReal beta = gen::quadratic(rng, alpha.radicand().get_si());
        const BinaryWord x = rotation_sequence({alpha, beta}, 200);
        for (std::size_t m = 1; m <= 15; ++m) {
            CHECK(complexity(x, m) == m + 1);
            CHECK(brute_complexity(x.str(), m) == m + 1);
        }
    }
}

TEST_CASE("property: rational rotations are periodic") {
    gen::Rng rng(32);
    for (int t = 0; t < 200; ++t) {
        const Rational alpha = gen::unit_rational(rng, 12);
        const Rational beta = gen::rational(rng, 30, -3, 3);
        const auto q = alpha.get_den().get_ui();
        const auto variant = t % 2 == 0 ? RotationVariant::floor : RotationVariant::ceil;
        const std::string s = rotation_sequence({ExactReal(alpha), ExactReal(beta), variant}, 4 * q + 5).str();
        for (std::size_t i = 0; i + q < s.size(); ++i) CHECK(s[i] == s[i + q]);
        // The period is minimal: each shorter shift disagrees somewhere.
        for (std::size_t r = 1; r < q; ++r) {
            bool differs = false;
            for (std::size_t i = 0; i + r < s.size(); ++i) differs = differs || s[i] != s[i + r];
            CHECK(differs);
        }
    }
}

TEST_CASE("property: rotation hallways read back as rotation words") {
    gen::Rng rng(33);
    for (int t = 0; t < 200; ++t) {
        const ExactReal alpha = t % 2 == 0 ? ExactReal(gen::unit_rational(rng, 10)) : gen::unit_quadratic(rng);
        const ExactReal beta = t % 2 == 0 ? ExactReal(gen::rational(rng, 10, -2, 2)) : ExactReal(gen::rational(rng, 10, -2, 2));
        const auto spec = InfiniteHallwaySpec::rotation(alpha, beta, Side::plus);
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 30));
        CHECK(phi(truncate(spec, n)) == rotation_sequence({alpha, beta}, n).to_word());
    }
}

TEST_CASE("property: Y partition has at most n + 1 components") {
    gen::Rng rng(34);
    for (int t = 0; t < 110; ++t) {
        const ExactReal alpha = t < 100 ? ExactReal(gen::unit_rational(rng, 60)) : gen::unit_quadratic(rng);
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 0, 50));
        const auto y = partition_y(alpha, n);
        CHECK(y.component_count() <= n + 1);
        for (std::size_t k = 1; k < y.breakpoints.size(); ++k) CHECK(y.breakpoints[k - 1] < y.breakpoints[k]);
        // One hallway per component: the midpoint line decides the word.
        for (const auto& c : y.components()) CHECK_NOTHROW((void)door_sequence_from_line(alpha, c.midpoint(), n));
    }
}

TEST_CASE("property: partition cells match the enumeration") {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto cells = partition_p(n);
        const auto words = enumerate_sturmian_words(n);
        REQUIRE(cells.size() == words.size());
        Rational total(0);
        for (std::size_t k = 0; k < cells.size(); ++k) {
            const auto& c = cells[k];
            CHECK(c.word == words[k].to_word());
            CHECK(c.polygon.contains(c.witness));
            CHECK(phi(door_sequence_from_line(ExactReal(c.witness.alpha), ExactReal(c.witness.beta), n)) == c.word);
            total += c.polygon.area();
        }
        CHECK(total == Rational(1));
    }
}

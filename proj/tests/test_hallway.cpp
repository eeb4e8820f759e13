#include "doctest.h"
#include "doorways/hallway.hpp"
#include "doorways/sight.hpp"
#include "oracles/generators.hpp"

using namespace doorways;

namespace {
using Lefts = std::vector<std::int64_t>;
InfiniteHallwaySpec ep(std::vector<std::int64_t> pre, std::vector<std::int64_t> period) {
    return InfiniteHallwaySpec::eventually_periodic(Word{std::move(pre)}, Word{std::move(period)});
}
const ExactReal kGolden = ExactReal::parse("(-1+sqrt(5))/2");
}  // namespace

TEST_CASE("phi and phi_inv") {
    CHECK(phi(FiniteHallway({0, 0, 1})) == Word{{0, 1}});
    CHECK(phi(FiniteHallway({0})).empty());
    CHECK(phi(phi_inv(Word{{1, 1, 1}})) == Word{{1, 1, 1}});
    CHECK(phi_inv(Word{{0, 1}}).lefts() == Lefts{0, 0, 1});
    CHECK(phi_inv(Word{}).lefts() == Lefts{0});
    CHECK(phi_inv(Word{{2, -1}}).lefts() == Lefts{0, 2, 1});
}

TEST_CASE("finite hallways normalize to a first doorway at 0") {
    const FiniteHallway h({5, 5, 6});
    CHECK(h.lefts() == Lefts{0, 0, 1});
    CHECK(h.n() == 2);
    CHECK(h.prefix(1).lefts() == Lefts{0, 0});
    CHECK_THROWS_AS(FiniteHallway(Lefts{}), PreconditionViolated);
    CHECK_THROWS_AS((void)h.prefix(3), PreconditionViolated);
    CHECK(unframe(h).unframed());
    CHECK(unframe(h).doorway(2) == Doorway{1, true});
}

TEST_CASE("psi") {
    const auto a = psi(Word{{0, 1, 1, 0}});
    REQUIRE(a.has_value());
    CHECK(a->first == 0);
    CHECK(a->second.str() == "0110");
    const auto b = psi(Word{{3, 4, 3}});
    REQUIRE(b.has_value());
    CHECK(b->first == 3);
    CHECK(b->second.str() == "010");
    CHECK_FALSE(psi(Word{{0, 2}}).has_value());
    const auto c = psi(Word{{2, 2}});
    REQUIRE(c.has_value());
    CHECK(c->first == 2);
    CHECK(c->second.str() == "00");
    CHECK_THROWS_AS(BinaryWord("012"), ParseError);
}

TEST_CASE("truncate") {
    const auto r = InfiniteHallwaySpec::rotation(ExactReal(Rational(1, 2)), ExactReal(Rational(1, 4)), Side::plus);
    CHECK(truncate(r, 4).lefts() == Lefts{0, 0, 1, 1, 2});
    CHECK(truncate(ep({}, {1}), 3).lefts() == Lefts{0, 1, 2, 3});
    const auto flat = InfiniteHallwaySpec::rotation(ExactReal(0), ExactReal(Rational(1, 2)), Side::plus);
    CHECK(truncate(flat, 6).lefts() == Lefts(7, 0));
    const auto minus = InfiniteHallwaySpec::rotation(ExactReal(Rational(1, 2)), ExactReal(0), Side::minus);
    // ceil(i/2) - 1: -1, 0, 0, 1, 1
    CHECK(truncate(minus, 4).lefts() == Lefts{0, 1, 1, 2, 2});
    CHECK_THROWS_AS((void)InfiniteHallwaySpec::rotation(ExactReal(2), ExactReal(0), Side::plus), PreconditionViolated);
}

TEST_CASE("eventually periodic canonical form") {
    CHECK(ep({1}, {1}) == ep({}, {1}));
    CHECK(ep({}, {1, 0, 1, 0}) == ep({}, {1, 0}));
    CHECK(ep({0, 1}, {0, 1}) == ep({}, {0, 1}));
    CHECK(ep({1, 0}, {1}) == ep({1, 0}, {1}));
    CHECK(ep({2, 1}, {0, 1}) == ep({2}, {1, 0}));
    CHECK(*ep({2, 1}, {0, 1}).as_periodic() == EventuallyPeriodic{Word{{2}}, Word{{1, 0}}});
    CHECK_THROWS_AS((void)ep({1}, {}), PreconditionViolated);
}

TEST_CASE("shift") {
    CHECK(shift(ep({2}, {1, 0})) == ep({}, {1, 0}));
    CHECK(shift(ep({}, {1, 0})) == ep({}, {0, 1}));
    const auto r = InfiniteHallwaySpec::rotation(ExactReal(Rational(1, 2)), ExactReal(Rational(1, 4)), Side::plus);
    CHECK(shift(r) == InfiniteHallwaySpec::rotation(ExactReal(Rational(1, 2)), ExactReal(Rational(3, 4)), Side::plus));
}

TEST_CASE("prepend") {
    // s occupies x = 1, 2, ...; the line has height beta at x = 0.
    const auto flat = ep({}, {0});
    CHECK(prepend(flat, ExactReal(0), ExactReal(Rational(1, 4)), Side::plus).left == 0);
    CHECK(prepend(flat, ExactReal(0), ExactReal(0), Side::plus).left == 0);
    const auto stairs = ep({}, {1});
    // Height 1 + i at x = 1 + i touches only tops, so only the downward nudge works.
    CHECK(prepend(stairs, ExactReal(1), ExactReal(0), Side::minus).left == -1);
    CHECK_THROWS_AS((void)prepend(stairs, ExactReal(1), ExactReal(0), Side::plus), PreconditionViolated);
    CHECK_THROWS_AS((void)prepend(stairs, ExactReal(Rational(1, 2)), ExactReal(0), Side::plus), PreconditionViolated);
}

TEST_CASE("periodic form and same hallway") {
    const auto r = InfiniteHallwaySpec::rotation(ExactReal(Rational(1, 2)), ExactReal(Rational(1, 4)), Side::plus);
    REQUIRE(periodic_form(r).has_value());
    CHECK(*periodic_form(r) == EventuallyPeriodic{Word{}, Word{{0, 1}}});
    CHECK(same_hallway(r, ep({}, {0, 1})));
    CHECK_FALSE(same_hallway(r, ep({}, {1, 0})));
    const auto g1 = InfiniteHallwaySpec::rotation(kGolden, ExactReal(Rational(1, 3)), Side::plus);
    const auto g2 = InfiniteHallwaySpec::rotation(kGolden, ExactReal(Rational(4, 3)), Side::minus);
    CHECK_FALSE(periodic_form(g1).has_value());
    CHECK(same_hallway(g1, g2));
    const auto z_plus = InfiniteHallwaySpec::rotation(kGolden, ExactReal(0), Side::plus);
    const auto z_minus = InfiniteHallwaySpec::rotation(kGolden, ExactReal(1), Side::minus);
    CHECK_FALSE(same_hallway(z_plus, z_minus));
    CHECK(z_plus.prefix_word(1) != z_minus.prefix_word(1));
    CHECK_FALSE(same_hallway(g1, ep({}, {1, 0})));
}

TEST_CASE("integer touch index") {
    CHECK(integer_touch_index(kGolden, ExactReal(0)) == std::optional<std::size_t>(0));
    CHECK_FALSE(integer_touch_index(kGolden, ExactReal(Rational(1, 3))).has_value());
    // beta = 3 - 2*golden puts 2*golden + beta = 3.
    CHECK(integer_touch_index(kGolden, ExactReal(3) - ExactReal(2) * kGolden) == std::optional<std::size_t>(2));
    CHECK_THROWS_AS((void)integer_touch_index(ExactReal(Rational(1, 2)), ExactReal(0)), PreconditionViolated);
}

TEST_CASE("extend_front inverts shift") {
    const auto s = ep({2, 0}, {1, 0, 1});
    CHECK(extend_front(shift(s), Doorway{-2, false}) == s);
    const auto r = InfiniteHallwaySpec::rotation(kGolden, ExactReal(Rational(1, 3)), Side::plus);
    const auto back = extend_front(shift(r), Doorway{-r.letter(0), false});
    CHECK(same_hallway(back, r));
}

TEST_CASE("property: phi round trip") {
    gen::Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        const Word w = gen::word(rng, static_cast<std::size_t>(gen::uniform(rng, 0, 12)), -3, 3);
        CHECK(phi(phi_inv(w)) == w);
        const FiniteHallway h = phi_inv(w);
        CHECK(phi_inv(phi(h)) == h);
    }
}

TEST_CASE("property: truncate commutes with shift") {
    gen::Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        const ExactReal alpha = gen::unit_quadratic(rng);
        const auto s = t % 2 == 0 ? gen::periodic(rng, 4, 5, -2, 2)
                                  : InfiniteHallwaySpec::rotation(alpha, gen::quadratic(rng, alpha.radicand().get_si()),
                                                                  t % 4 == 1 ? Side::plus : Side::minus);
        const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 0, 15));
        auto lefts = truncate(s, n + 1).lefts();
        lefts.erase(lefts.begin());
        CHECK(truncate(shift(s), n) == FiniteHallway(lefts));
    }
}

TEST_CASE("property: prepending keeps the line of sight") {
    gen::Rng rng(13);
    for (int t = 0; t < 300; ++t) {
        const ExactReal alpha(gen::unit_rational(rng, 7));
        const Side side = t % 2 == 0 ? Side::plus : Side::minus;
        // Height of the line over the first doorway of s, at x = 1:
        // in [0, 1) for plus, (0, 1] for minus.
        ExactReal c(gen::unit_rational(rng, 21));
        if (side == Side::minus) c = ExactReal(1) - c;
        const auto s = InfiniteHallwaySpec::rotation(alpha, c, side);
        const ExactReal beta = c - alpha;
        const Doorway d0 = prepend(s, alpha, beta, side);
        const auto grown = extend_front(s, d0);
        // Relative to the new first doorway the line starts at beta - d0.
        CHECK(includes(epsilon_line_of_sight(grown, alpha, beta - ExactReal(d0.left)), side));
    }
}

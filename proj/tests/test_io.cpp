#include "doctest.h"
#include "doorways/io.hpp"
#include "oracles/generators.hpp"

using namespace doorways;

TEST_CASE("finite hallway JSON") {
    const FiniteHallway h({0, 0, 1});
    CHECK(to_json(h).dump() == R"({"lefts":[0,0,1],"type":"finite"})");
    CHECK(finite_from_json(to_json(h)) == h);
    const FiniteHallway u({0, 0, 2}, true);
    CHECK(to_json(u).at("unframed") == true);
    CHECK(finite_from_json(to_json(u)) == u);
    CHECK(parse_finite(R"({"type":"finite","lefts":[4,4,5]})") == h);
    CHECK_THROWS_AS((void)parse_finite(R"({"type":"finite","lefts":[]})"), ParseError);
    CHECK_THROWS_AS((void)parse_finite(R"({"type":"finite","lefts":[0,"x"]})"), ParseError);
    CHECK_THROWS_AS((void)parse_finite(R"({"type":"finite"})"), ParseError);
    CHECK_THROWS_AS((void)parse_finite(R"({"type":"finite","lefts":[0],"unframed":1})"), ParseError);
    CHECK_THROWS_AS((void)parse_finite("[0,1"), ParseError);
}

TEST_CASE("spec JSON") {
    const auto e = parse_spec(R"({"type":"eventually_periodic","pre":[2],"period":[1,0]})");
    REQUIRE(e.as_periodic() != nullptr);
    CHECK(e.as_periodic()->pre == Word{{2}});
    CHECK(parse_spec(R"({"type":"eventually_periodic","period":[1]})") ==
          InfiniteHallwaySpec::eventually_periodic({}, Word{{1}}));
    const auto r = parse_spec(R"({"type":"rotation","alpha":"(-1+1*sqrt(5))/2","beta":"1/3","side":"minus"})");
    REQUIRE(r.as_rotation() != nullptr);
    CHECK(r.as_rotation()->side == Side::minus);
    CHECK(r.as_rotation()->beta == ExactReal(Rational(1, 3)));
    CHECK(spec_from_json(to_json(r)) == r);
    CHECK_THROWS_AS((void)parse_spec(R"({"type":"eventually_periodic","period":[]})"), ParseError);
    CHECK_THROWS_AS((void)parse_spec(R"({"type":"rotation","alpha":"2","beta":"0"})"), ParseError);
    CHECK_THROWS_AS((void)parse_spec(R"({"type":"rotation","alpha":"1/2","beta":"0","side":"up"})"), ParseError);
    CHECK_THROWS_AS((void)parse_spec(R"({"type":"spiral"})"), ParseError);
    CHECK_THROWS_AS((void)parse_spec(R"({"type":"rotation","alpha":"pi","beta":"0"})"), ParseError);
}

TEST_CASE("geometry JSON") {
    const Point p{Rational(1, 2), Rational(-3, 4)};
    CHECK(to_json(p).dump() == R"({"alpha":"1/2","beta":"-3/4"})");
    CHECK(point_from_json(to_json(p)) == p);
    const auto poly = feasible_polygon(FiniteHallway({0, 0, 1}), FeasibilityMode::open);
    const auto back = polygon_from_json(to_json(poly));
    CHECK(back.vertices() == poly.vertices());
    CHECK(back.mode() == FeasibilityMode::open);
    CHECK(to_json(Interval::empty_set()).dump() == R"({"empty":true})");
    const auto i = to_json(Interval::make(ExactReal(0), ExactReal(Rational(1, 2)), true, false));
    CHECK(i.at("hi") == "1/2");
    CHECK(i.at("hi_open") == false);
    const LineOfSight l{ExactReal(1), ExactReal(Rational(1, 2)), Side::plus};
    CHECK(to_json(l).at("side") == "plus");
}

TEST_CASE("words and partition cells") {
    CHECK(word_to_string(Word{{1, 0, 2}}) == "1,0,2");
    CHECK(word_to_bits(Word{{1, 0, 1}}) == "101");
    CHECK(word_to_bits(Word{{1, 2, -1}}) == "1[2][-1]");
    const auto cells = partition_p(2);
    const Json j = to_json(cells.front());
    CHECK(j.at("n") == 2);
    CHECK(j.at("word") == "00");
    CHECK(j.at("polygon").at("mode") == "closed");
    CHECK(to_json(std::vector<BinaryWord>{BinaryWord("01"), BinaryWord("")}).dump() == R"(["01",""])");
}

TEST_CASE("svg output") {
    const FeasiblePolygon square({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(1)},
                                  {Rational(0), Rational(1)}},
                                 FeasibilityMode::closed);
    const std::string d = svg_path(square, 100.0);
    CHECK(d.rfind("M", 0) == 0);
    CHECK(d.find(" Z") != std::string::npos);
    // beta grows upward: the origin sits at the bottom-left corner.
    CHECK(d.rfind("M0.000 100.000 L100.000 100.000", 0) == 0);
    const auto cells = partition_p(3);
    PartitionSvgOptions o;
    o.labels = true;
    const std::string svg = partition_svg(cells, arrangement_segments(3), o);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t paths = 0;
    for (std::size_t pos = 0; (pos = svg.find("<path", pos)) != std::string::npos; ++pos) ++paths;
    CHECK(paths == cells.size());
    CHECK(svg.find("<text") != std::string::npos);
}

TEST_CASE("property: spec JSON round trip") {
    gen::Rng rng(51);
    for (int t = 0; t < 300; ++t) {
        const ExactReal alpha = gen::unit_quadratic(rng);
        const auto s = t % 2 == 0 ? gen::periodic(rng, 4, 5, -3, 3)
                                  : InfiniteHallwaySpec::rotation(alpha, gen::quadratic(rng, alpha.radicand().get_si()),
                                                                  t % 4 == 1 ? Side::plus : Side::minus);
        CHECK(parse_spec(to_json(s).dump()) == s);
        const FiniteHallway h = truncate(s, static_cast<std::size_t>(gen::uniform(rng, 0, 10)));
        CHECK(parse_finite(to_json(h).dump()) == h);
    }
}

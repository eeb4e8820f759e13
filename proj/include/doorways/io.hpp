#pragma once

// JSON encodings of hallways, specs, polygons and partition cells, and SVG
// rendering of feasible polygons and of the partition of slope-intercept
// space.
//
//   {"type":"finite","lefts":[0,0,1]}                     ("unframed":true optional)
//   {"type":"eventually_periodic","pre":[2],"period":[1,0]}
//   {"type":"rotation","alpha":"(-1+1*sqrt(5))/2","beta":"1/3","side":"plus"}

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "doorways/hallway.hpp"
#include "doorways/metrics.hpp"
#include "doorways/sight.hpp"
#include "doorways/sturmian.hpp"

namespace doorways {

using Json = nlohmann::json;

Json to_json(const Word& w);
Word word_from_json(const Json& j);

Json to_json(const FiniteHallway& h);
FiniteHallway finite_from_json(const Json& j);

Json to_json(const InfiniteHallwaySpec& s);
InfiniteHallwaySpec spec_from_json(const Json& j);
/// Parses JSON text; every failure surfaces as ParseError.
InfiniteHallwaySpec parse_spec(std::string_view text);
FiniteHallway parse_finite(std::string_view text);

Json to_json(const Point& p);
Point point_from_json(const Json& j);

Json to_json(const FeasiblePolygon& p);
FeasiblePolygon polygon_from_json(const Json& j);

Json to_json(const Interval& i);
Json to_json(const LineOfSight& l);
Json to_json(const PPartitionCell& c);
Json to_json(const std::vector<BinaryWord>& words);

/// Letters joined by commas, e.g. "1,0,2".
std::string word_to_string(const Word& w);
/// Letters 0 and 1 as a bit string; other letters are written in brackets.
std::string word_to_bits(const Word& w);

/// SVG path data for the polygon in a size x size viewport showing the unit
/// square, alpha to the right and beta upward.
std::string svg_path(const FeasiblePolygon& p, double size, double margin = 0.0);

struct PartitionSvgOptions {
    double size = 600.0;
    double margin = 20.0;
    bool shade = true;
    bool labels = false;
};

/// The partition of [0,1] x (0,1) into cells with their arrangement lines.
std::string partition_svg(const std::vector<PPartitionCell>& cells, const std::vector<ArrangementSegment>& segments,
                          const PartitionSvgOptions& options = {});

}  // namespace doorways

#pragma once

// Rotation (mechanical) words, factor complexity, and the geometric
// recognition and enumeration of Sturmian words through hallways.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "doorways/hallway.hpp"
#include "doorways/numeric.hpp"
#include "doorways/sight.hpp"

namespace doorways {

enum class RotationVariant { floor, ceil };

struct RotationParams {
    ExactReal alpha;  // in [0, 1]
    ExactReal beta;
    RotationVariant variant = RotationVariant::floor;
};

/// s_i = floor((i+1)alpha + beta) - floor(i alpha + beta), or the same with
/// ceilings, for i = 0 .. length-1.
BinaryWord rotation_sequence(const RotationParams& p, std::size_t length);

/// Number of distinct factors of x of length m. Throws InvalidLength when
/// m > |x|.
std::size_t complexity(const BinaryWord& x, std::size_t m);

/// True when the hallway whose word is b admits a line of sight (any slope).
bool is_sturmian_word(const BinaryWord& b);

inline constexpr std::size_t kDefaultEnumerationBound = 16;

/// Binary words of length n whose hallway admits a line of sight with slope
/// in `range` (default [0, 1)), in lexicographic order. Throws
/// ResourceLimit when n > bound.
std::vector<BinaryWord> enumerate_sturmian_words(std::size_t n, std::size_t bound = kDefaultEnumerationBound,
                                                 const SlopeRange& range = SlopeRange::unit());

/// Euler's totient. Requires i >= 1.
std::uint64_t totient(std::uint64_t i);

/// 1 + sum_{i=1}^{n} (n + 1 - i) phi(i): the number of Sturmian words of
/// length n.
BigInt mignosi_count(std::uint64_t n);

/// The intercepts in (0, 1) cut at the points -alpha*i mod 1, i = 0..n.
struct YPartition {
    ExactReal alpha;
    std::size_t n = 0;
    /// Sorted, distinct, all in (0, 1).
    std::vector<ExactReal> breakpoints;

    std::size_t component_count() const { return breakpoints.size() + 1; }
    /// The open components, left to right.
    std::vector<Interval> components() const;
};

/// Requires alpha in [0, 1].
YPartition partition_y(const ExactReal& alpha, std::size_t n);

/// The unique hallway of n + 1 doorways seen by l(alpha, beta):
/// d_i = floor(alpha*i + beta), normalized. Throws LatticeTouch when
/// alpha*i + beta is an integer for some i <= n.
FiniteHallway door_sequence_from_line(const ExactReal& alpha, const ExactReal& beta, std::size_t n);

/// One cell of the decomposition of [0,1] x (0,1) by the lines
/// y = -i*x + b. Every interior point of the cell is a line of sight for
/// the same hallway.
struct PPartitionCell {
    std::size_t n = 0;
    Word word;
    /// Closed-mode polygon of the cell closure, counter-clockwise.
    FeasiblePolygon polygon{{}, FeasibilityMode::open};
    /// Vertex centroid; strictly interior.
    Point witness;
};

inline constexpr std::size_t kDefaultPartitionBound = 12;

/// Cell decomposition of [0,1] x (0,1) by the arrangement of the lines
/// y = -i*x + b (1 <= b <= i <= n), built by an exact slab sweep. Cells are
/// ordered by their word. Throws ResourceLimit when n > bound.
std::vector<PPartitionCell> partition_p(std::size_t n, std::size_t bound = kDefaultPartitionBound);

/// Arrangement lines y = -slope*x + offset clipped to the unit square, as
/// segment endpoints.
struct ArrangementSegment {
    std::int64_t slope = 0;
    std::int64_t offset = 0;
    Point from;
    Point to;
};

std::vector<ArrangementSegment> arrangement_segments(std::size_t n);

}  // namespace doorways

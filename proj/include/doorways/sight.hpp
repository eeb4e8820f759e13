#pragma once

// Lines of sight through finite hallways and epsilon-lines of sight through
// infinite ones, decided with exact arithmetic.
//
// The line l(alpha, beta) = {(x, alpha*x + beta)} sees through a finite
// hallway when d_i < alpha*i + beta < d_i + 1 for every wall i. In the
// (alpha, beta) plane these constraints cut out a convex polygon with
// rational vertices; open mode uses the strict inequalities, closed mode
// (unframed doorways) the non-strict ones.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "doorways/hallway.hpp"
#include "doorways/numeric.hpp"

namespace doorways {

enum class FeasibilityMode { open, closed };

/// Interval of exact reals; may be empty.
struct Interval {
    ExactReal lo;
    ExactReal hi;
    bool lo_open = true;
    bool hi_open = true;
    bool empty = false;

    static Interval make(ExactReal lo, ExactReal hi, bool lo_open, bool hi_open);
    static Interval empty_set() { return Interval{ExactReal(), ExactReal(), true, true, true}; }

    bool contains(const ExactReal& x) const;
    /// hi - lo; zero for an empty interval.
    ExactReal width() const;
    ExactReal midpoint() const;
    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// y - gamma * x, the height at which the slope-gamma line through (x, y)
/// crosses the y axis.
ExactReal project(const ExactReal& gamma, std::int64_t x, const ExactReal& y);

/// Intercepts beta for which l(alpha, beta) passes every doorway of h:
/// the intersection over i of (d_i - alpha*i, d_i + 1 - alpha*i), open or
/// closed per mode.
Interval intercept_interval(const FiniteHallway& h, const ExactReal& alpha, FeasibilityMode mode);

struct Point {
    Rational alpha;
    Rational beta;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Optional bounds on the slope, applied as closed half-planes. In open
/// mode the endpoints do not matter: an open region meets [lo, hi) exactly
/// when it meets (lo, hi).
struct SlopeRange {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    static SlopeRange unrestricted() { return {}; }
    /// [0, 1), the range of slopes used for counting.
    static SlopeRange unit() { return {Rational(0), Rational(1)}; }
};

/// Convex polygon of feasible (alpha, beta) pairs. The stored vertices are
/// those of the closure, in counter-clockwise order without repeats.
class FeasiblePolygon {
  public:
    FeasiblePolygon(std::vector<Point> vertices, FeasibilityMode mode);

    const std::vector<Point>& vertices() const { return vertices_; }
    FeasibilityMode mode() const { return mode_; }

    /// Twice the signed area is never negative for stored polygons.
    Rational area() const;
    /// Open mode: no interior. Closed mode: no points at all.
    bool empty() const;
    /// A point of the region; strictly interior when the area is positive.
    Point witness() const;
    Rational min_alpha() const;
    Rational max_alpha() const;
    bool contains(const Point& p) const;

  private:
    std::vector<Point> vertices_;
    FeasibilityMode mode_;
};

/// Requires h.n() >= 1 unless a bounded slope range is given.
FeasiblePolygon feasible_polygon(const FiniteHallway& h, FeasibilityMode mode,
                                 const SlopeRange& range = SlopeRange::unrestricted());

/// Uses closed mode for unframed hallways and open mode otherwise.
bool admits_line_of_sight(const FiniteHallway& h, const SlopeRange& range = SlopeRange::unrestricted());

/// Projection of the open feasible region onto the slope axis. Throws
/// NoLineOfSight when h admits no line of sight and PreconditionViolated
/// for the single-doorway hallway, whose slopes are unbounded.
Interval slope_interval(const FiniteHallway& h);

struct LineOfSight {
    ExactReal slope;
    ExactReal intercept;
    /// Only set for epsilon-lines through infinite hallways.
    std::optional<Side> side;
};

/// The rational line of sight with the smallest slope denominator, then the
/// smallest numerator, with the intercept at the middle of the intercept
/// interval. The denominator never exceeds h.n() (for n >= 1). The
/// single-doorway hallway gets slope 0 and intercept 1/2. Throws
/// NoLineOfSight when none exists.
LineOfSight rational_line_of_sight(const FiniteHallway& h);

/// Smallest q such that some slope p/q admits a line through the closed
/// (unframed) doorways of h; nullopt when even the closed region is empty.
std::optional<BigInt> min_closed_denominator(const FiniteHallway& h);

enum class SideSet { none, plus, minus, both };

std::string_view to_string(SideSet s);
bool includes(SideSet set, Side side);

/// Whether an answer was decided exactly or only over a finite window.
struct Certificate {
    bool full = true;
    std::size_t horizon = 0;

    static Certificate exact() { return {true, 0}; }
    static Certificate bounded(std::size_t horizon) { return {false, horizon}; }
    std::string to_string() const;
};

/// Which epsilon-nudges of l(alpha, beta) see through s.
///
/// The line must pass every closed doorway, d_i <= alpha*i + beta <= d_i + 1.
/// A touch at a bottom endpoint needs the upward nudge (plus), a touch at a
/// top endpoint the downward one (minus); touches of both kinds rule the
/// line out, and no touches at all allow both nudges. Every finite
/// description is decided exactly.
SideSet epsilon_line_of_sight(const InfiniteHallwaySpec& s, const ExactReal& alpha, const ExactReal& beta);

/// Touch classification of l(alpha, beta) over every doorway of h, treated
/// as closed.
SideSet touch_sides(const FiniteHallway& h, const ExactReal& alpha, const ExactReal& beta);

}  // namespace doorways

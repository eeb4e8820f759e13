#pragma once

// Metrics on infinite hallways: the standard metric d_S (first
// disagreement), the rational metric d_R (smallest slope denominator seen
// through the unframed common prefix), the visibility function, the slope
// map and the metrics it induces on slopes.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "doorways/hallway.hpp"
#include "doorways/numeric.hpp"
#include "doorways/sight.hpp"

namespace doorways {

/// An element of {0} u {1/q : q >= 1} u {inf}.
class MetricValue {
  public:
    enum class Kind { zero, reciprocal, infinite };

    static MetricValue zero() { return MetricValue(Kind::zero, BigInt(0)); }
    /// 1/q; requires q >= 1.
    static MetricValue reciprocal(BigInt q);
    static MetricValue infinite() { return MetricValue(Kind::infinite, BigInt(0)); }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::zero; }
    bool is_infinite() const { return kind_ == Kind::infinite; }
    /// q for 1/q; throws PreconditionViolated otherwise.
    const BigInt& denominator() const;
    /// Exact value, or nullopt for inf.
    std::optional<Rational> to_rational() const;

    /// "0", "1/q" (or "1") and "inf".
    std::string to_string() const;
    static MetricValue parse(std::string_view text);

    friend bool operator==(const MetricValue&, const MetricValue&) = default;
    friend std::strong_ordering operator<=>(const MetricValue& x, const MetricValue& y);

  private:
    MetricValue(Kind kind, BigInt q) : kind_(kind), q_(std::move(q)) {}

    Kind kind_;
    BigInt q_;
};

struct MetricResult {
    MetricValue value;
    /// Bounded when the specs agreed on every letter up to the horizon; the
    /// value is then only an upper bound.
    Certificate certificate;
};

inline constexpr std::size_t kDefaultHorizon = 1000;

/// 1/k for the first doorway index k where the hallways disagree, 0 for the
/// same hallway. Exact whenever both specs are eventually periodic or the
/// disagreement shows up within the horizon.
MetricResult d_standard(const InfiniteHallwaySpec& a, const InfiniteHallwaySpec& b,
                        std::size_t horizon = kDefaultHorizon);

/// Longest common truncation: the doorways on which a and b agree.
struct CommonSegment {
    /// a and b are the same hallway; `prefix` is then unused.
    bool whole = false;
    FiniteHallway prefix;
    Certificate certificate;
};

CommonSegment comm(const InfiniteHallwaySpec& a, const InfiniteHallwaySpec& b, std::size_t horizon = kDefaultHorizon);

/// 0 for the same hallway; inf when the (framed) common prefix admits no
/// line of sight; otherwise 1/q for the smallest denominator q of a slope
/// seeing through the unframed common prefix.
MetricResult d_rational(const InfiniteHallwaySpec& a, const InfiniteHallwaySpec& b,
                        std::size_t horizon = kDefaultHorizon);

struct VisibilityResult {
    bool visible = false;
    /// An epsilon-line of sight when visible.
    std::optional<LineOfSight> witness;
    Certificate certificate;
};

/// Whether s admits an epsilon-line of sight. Decided exactly: eventually
/// periodic hallways over one preperiod plus one period, rotation hallways
/// by construction.
VisibilityResult visibility(const InfiniteHallwaySpec& s);

/// The unique slope of every epsilon-line of sight of s. Throws NotVisible.
ExactReal slope_of(const InfiniteHallwaySpec& s);

struct InterceptSet {
    Interval interval;
    Certificate certificate;
};

/// Intercepts gamma for which l(slope_of(s), gamma) passes every closed
/// doorway. Exact for eventually periodic hallways; for irrational slopes
/// the intersection over doorways 0..horizon, an outer bound. Throws
/// NotVisible.
InterceptSet intercept_set(const InfiniteHallwaySpec& s, std::size_t horizon = kDefaultHorizon);

enum class BaseMetric { standard, rational };

/// Induced distance between two slopes in [0, 1]: the infimum of the base
/// metric over pairs of hallways with those slopes. Pairs are searched
/// through the slope-alpha and slope-gamma prefixes of length up to the
/// horizon; when the prefixes still overlap there the result is an upper
/// bound with a bounded certificate.
MetricResult tilde_metric(BaseMetric base, const ExactReal& alpha, const ExactReal& gamma,
                          std::size_t horizon = kDefaultHorizon);

/// H(n): doorway 0 at 0, then a jump of one, then runs of n equal doorways
/// climbing by one. Slope 1/n. Requires n >= 1.
InfiniteHallwaySpec discontinuity_family(std::size_t n);

/// The limit of H(n): doorway 0 at 0, every later doorway at 1.
InfiniteHallwaySpec discontinuity_limit();

}  // namespace doorways

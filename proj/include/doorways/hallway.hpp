#pragma once

// Finite and finitely-described infinite hallways, and their words.
//
// A hallway is a stack of unit-spaced walls; wall i has one open doorway
// (d_i, d_i + 1) with integer d_i. Doorway positions are always normalized
// so that d_0 = 0. The word of a hallway is the list of consecutive
// differences d_{i+1} - d_i.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "doorways/numeric.hpp"

namespace doorways {

enum class Side { plus, minus };

std::string_view to_string(Side side);

struct Doorway {
    std::int64_t left = 0;
    /// The unframed form [left, left + 1].
    bool closed = false;

    friend bool operator==(const Doorway&, const Doorway&) = default;
};

/// Letters of a hallway word.
struct Word {
    std::vector<std::int64_t> diffs;

    std::size_t size() const { return diffs.size(); }
    bool empty() const { return diffs.empty(); }
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;
};

/// A word over {0, 1}, stored as a string of '0' and '1' characters.
class BinaryWord {
  public:
    BinaryWord() = default;
    /// Throws ParseError on characters other than '0' and '1'.
    explicit BinaryWord(std::string bits);

    const std::string& str() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }

    Word to_word() const;

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

  private:
    std::string bits_;
};

class FiniteHallway {
  public:
    /// The single-doorway hallway (0, 1).
    FiniteHallway() : lefts_{0} {}
    /// Normalizes so that the first doorway is (0, 1). Throws
    /// PreconditionViolated on an empty list.
    explicit FiniteHallway(std::vector<std::int64_t> lefts, bool unframed = false);

    /// n, the number of hallways between the n + 1 walls.
    std::size_t n() const { return lefts_.size() - 1; }
    std::size_t doorway_count() const { return lefts_.size(); }
    const std::vector<std::int64_t>& lefts() const { return lefts_; }
    bool unframed() const { return unframed_; }
    Doorway doorway(std::size_t i) const { return {lefts_.at(i), unframed_}; }

    /// First m + 1 doorways.
    FiniteHallway prefix(std::size_t m) const;

    friend bool operator==(const FiniteHallway&, const FiniteHallway&) = default;

  private:
    std::vector<std::int64_t> lefts_;
    bool unframed_ = false;
};

Word phi(const FiniteHallway& h);
FiniteHallway phi_inv(const Word& w);

/// (a, Psi_a(w)) when every letter of w lies in {a, a + 1}. For a constant
/// word a is the common letter.
std::optional<std::pair<std::int64_t, BinaryWord>> psi(const Word& w);

/// Closed-doorway copy of h.
FiniteHallway unframe(const FiniteHallway& h);

/// Letters pre[0], pre[1], ..., then period repeated forever.
struct EventuallyPeriodic {
    Word pre;
    Word period;

    std::int64_t period_sum() const;
    friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
};

/// Doorways d_i = floor(i*alpha + beta) (side plus) or
/// ceil(i*alpha + beta) - 1 (side minus), i >= 0, then normalized.
struct RotationGenerated {
    ExactReal alpha;
    ExactReal beta;
    Side side = Side::plus;

    friend bool operator==(const RotationGenerated&, const RotationGenerated&) = default;
};

/// An infinite hallway indexed by i >= 0, given by a finite description.
///
/// Eventually periodic specs are stored with their minimal period and
/// minimal preperiod. Rotation specs are stored as given; two different
/// descriptions can denote the same hallway (see same_hallway).
class InfiniteHallwaySpec {
  public:
    static InfiniteHallwaySpec eventually_periodic(Word pre, Word period);
    /// alpha must lie in [0, 1].
    static InfiniteHallwaySpec rotation(ExactReal alpha, ExactReal beta, Side side);

    bool is_periodic_form() const { return std::holds_alternative<EventuallyPeriodic>(value_); }
    const EventuallyPeriodic* as_periodic() const { return std::get_if<EventuallyPeriodic>(&value_); }
    const RotationGenerated* as_rotation() const { return std::get_if<RotationGenerated>(&value_); }

    /// d_{i+1} - d_i.
    std::int64_t letter(std::size_t i) const;
    /// First `length` letters.
    Word prefix_word(std::size_t length) const;

    friend bool operator==(const InfiniteHallwaySpec&, const InfiniteHallwaySpec&) = default;

  private:
    explicit InfiniteHallwaySpec(std::variant<EventuallyPeriodic, RotationGenerated> v) : value_(std::move(v)) {}

    std::variant<EventuallyPeriodic, RotationGenerated> value_;
};

/// Intercept in [0, 1) (side plus) or (0, 1] (side minus) that generates the
/// same normalized doorways as the rotation spec.
ExactReal effective_intercept(const RotationGenerated& r);

/// The eventually periodic form of s: s itself, or the purely periodic spec
/// generated by a rotation with rational slope p/q (period q). nullopt for
/// irrational rotations.
std::optional<EventuallyPeriodic> periodic_form(const InfiniteHallwaySpec& s);

/// Whether two specs denote the same infinite hallway. Decided exactly.
bool same_hallway(const InfiniteHallwaySpec& a, const InfiniteHallwaySpec& b);

/// Smallest i >= 0 with i*alpha + beta an integer, for irrational alpha
/// (at most one such i exists). Throws PreconditionViolated for rational
/// alpha.
std::optional<std::size_t> integer_touch_index(const ExactReal& alpha, const ExactReal& beta);

/// The hallway of the first n + 1 doorways.
FiniteHallway truncate(const InfiniteHallwaySpec& s, std::size_t n);

/// Drop the first letter.
InfiniteHallwaySpec shift(const InfiniteHallwaySpec& s);

/// Doorway to place in front of s so that the epsilon-line
/// (alpha, beta, side) still sees through. Here s occupies x = 1, 2, ...,
/// and the new doorway sits at x = 0 where the line has height beta.
/// Throws PreconditionViolated when the line is not a line of sight for s.
Doorway prepend(const InfiniteHallwaySpec& s, const ExactReal& alpha, const ExactReal& beta, Side side);

/// s with the doorway d0 placed in front of it (the inverse of shift).
InfiniteHallwaySpec extend_front(const InfiniteHallwaySpec& s, const Doorway& d0);

}  // namespace doorways

#pragma once

// Exact ordered arithmetic over the rationals and over real quadratic fields
// Q(sqrt(d)). Every comparison and floor is decided without rounding.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "doorways/error.hpp"

namespace doorways {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

/// Narrow a BigInt to int64, throwing ResourceLimit when it does not fit.
std::int64_t to_int64(const BigInt& v);

/// Rational in lowest terms from numerator and denominator (denominator != 0).
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);

/// The irrational number (a + b*sqrt(d)) / r.
///
/// Canonical form: r > 0, b != 0, d > 1 with every square factor found by
/// trial division moved into b, and gcd(a, b, r) = 1. Two canonical values
/// are equal exactly when their fields are equal.
class QuadraticIrrational {
  public:
    /// Returns nullopt when the value is rational (b == 0 or d a perfect
    /// square). Throws ParseError on r == 0 or d <= 0.
    static std::optional<QuadraticIrrational> make(BigInt a, BigInt b, BigInt d, BigInt r);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& d() const { return d_; }
    const BigInt& r() const { return r_; }

    /// a / r
    Rational rational_part() const;
    /// b / r, the coefficient of sqrt(d)
    Rational radical_coefficient() const;

    friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;

  private:
    QuadraticIrrational(BigInt a, BigInt b, BigInt d, BigInt r)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), r_(std::move(r)) {}

    BigInt a_;
    BigInt b_;
    BigInt d_;
    BigInt r_;
};

/// A rational or a real quadratic irrational.
///
/// Arithmetic is closed inside a single field Q(sqrt(d)); mixing two
/// different radicands in +, -, * or an ordering throws
/// UnsupportedComparison. Equality never throws: values over different
/// radicands are simply unequal.
class ExactReal {
  public:
    ExactReal() : value_(Rational(0)) {}
    ExactReal(const Rational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)
    ExactReal(long v) : value_(Rational(v)) {}   // NOLINT(google-explicit-constructor)
    ExactReal(int v) : value_(Rational(v)) {}    // NOLINT(google-explicit-constructor)
    ExactReal(const QuadraticIrrational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)

    /// (a + b*sqrt(d)) / r, collapsing to a rational when possible.
    static ExactReal quadratic(const BigInt& a, const BigInt& b, const BigInt& d, const BigInt& r);

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    const Rational* as_rational() const { return std::get_if<Rational>(&value_); }
    const QuadraticIrrational* as_quadratic() const { return std::get_if<QuadraticIrrational>(&value_); }

    /// Radicand of the field this value lives in; 1 for rationals.
    BigInt radicand() const;
    Rational rational_part() const;
    Rational radical_coefficient() const;

    int sign() const;
    BigInt floor() const;
    BigInt ceil() const;
    /// x - floor(x), in [0, 1).
    ExactReal frac() const;

    double to_double() const;

    /// "p/q" (or "p" for integers) and "(a+b*sqrt(d))/r".
    std::string to_string() const;
    static ExactReal parse(std::string_view text);

    ExactReal operator-() const;
    friend ExactReal operator+(const ExactReal& x, const ExactReal& y);
    friend ExactReal operator-(const ExactReal& x, const ExactReal& y);
    friend ExactReal operator*(const ExactReal& x, const ExactReal& y);
    /// Division by a nonzero rational.
    friend ExactReal operator/(const ExactReal& x, const Rational& y);

    ExactReal& operator+=(const ExactReal& y) { return *this = *this + y; }
    ExactReal& operator-=(const ExactReal& y) { return *this = *this - y; }

    friend bool operator==(const ExactReal& x, const ExactReal& y) { return x.value_ == y.value_; }
    friend std::strong_ordering operator<=>(const ExactReal& x, const ExactReal& y);

  private:
    std::variant<Rational, QuadraticIrrational> value_;
};

/// Exact three-way comparison. Throws UnsupportedComparison when both
/// operands are quadratic over different radicands.
std::strong_ordering compare(const ExactReal& x, const ExactReal& y);

inline BigInt floor(const ExactReal& x) { return x.floor(); }
inline BigInt ceil(const ExactReal& x) { return x.ceil(); }

inline const ExactReal& min(const ExactReal& x, const ExactReal& y) { return y < x ? y : x; }
inline const ExactReal& max(const ExactReal& x, const ExactReal& y) { return x < y ? y : x; }

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace doorways

#include "doorways/numeric.hpp"

#include <cmath>
#include <limits>
#include <regex>
#include <sstream>

namespace doorways {

namespace {

// Square factors p^2 with p below this bound are pulled out of a radicand.
// Radicands whose square part involves only larger primes are left as given.
constexpr unsigned long kSquareFreeTrialBound = 100000;

BigInt gcd(const BigInt& x, const BigInt& y) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

BigInt isqrt(const BigInt& x) {
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
    return s;
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Sign of a + b*sqrt(d) for b != 0 and d not a perfect square.
int sign_of_surd(const BigInt& a, const BigInt& b, const BigInt& d) {
    const int sa = sgn(a);
    const int sb = sgn(b);
    if (sa >= 0 && sb > 0) return 1;
    if (sa <= 0 && sb < 0) return -1;
    const BigInt a2 = a * a;
    const BigInt b2d = b * b * d;
    // a and b*sqrt(d) have opposite signs; the larger magnitude wins.
    if (sa > 0) return a2 > b2d ? 1 : -1;
    return b2d > a2 ? 1 : -1;
}

// Express x as (a + b*sqrt(d)) / r with the given radicand.
struct Surd {
    Rational rat;
    Rational rad;
};

Surd split(const ExactReal& x) { return {x.rational_part(), x.radical_coefficient()}; }

BigInt common_radicand(const ExactReal& x, const ExactReal& y) {
    const BigInt dx = x.radicand();
    const BigInt dy = y.radicand();
    if (dx == 1) return dy;
    if (dy == 1 || dx == dy) return dx;
    throw UnsupportedComparison("operands lie in different quadratic fields: sqrt(" + dx.get_str() +
                                ") and sqrt(" + dy.get_str() + ")");
}

ExactReal from_surd(const Rational& rat, const Rational& rad, const BigInt& d) {
    if (rad == 0 || d == 1) return ExactReal(Rational(rat));
    // rat = p1/q1, rad = p2/q2  ->  (p1*q2 + p2*q1*sqrt(d)) / (q1*q2)
    const BigInt r = rat.get_den() * rad.get_den();
    return ExactReal::quadratic(rat.get_num() * rad.get_den(), rad.get_num() * rat.get_den(), d, r);
}

std::string strip_spaces(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s.push_back(c);
    }
    return s;
}

}  // namespace

std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) throw ResourceLimit("integer " + v.get_str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v.get_si());
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ParseError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt floor_of(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }

BigInt ceil_of(const Rational& x) { return -floor_div(-x.get_num(), x.get_den()); }

std::optional<QuadraticIrrational> QuadraticIrrational::make(BigInt a, BigInt b, BigInt d, BigInt r) {
    if (r == 0) throw ParseError("zero denominator in quadratic irrational");
    if (d <= 0) throw ParseError("radicand must be positive");
    if (b == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) != 0) return std::nullopt;

    for (unsigned long p = 2; p < kSquareFreeTrialBound; ++p) {
        const BigInt p2 = BigInt(p) * p;
        if (p2 > d) break;
        while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t()) != 0) {
            d /= p2;
            b *= p;
        }
    }
    if (r < 0) {
        a = -a;
        b = -b;
        r = -r;
    }
    const BigInt g = gcd(gcd(a, b), r);
    if (g > 1) {
        a /= g;
        b /= g;
        r /= g;
    }
    return QuadraticIrrational(std::move(a), std::move(b), std::move(d), std::move(r));
}

Rational QuadraticIrrational::rational_part() const { return make_rational(a_, r_); }

Rational QuadraticIrrational::radical_coefficient() const { return make_rational(b_, r_); }

ExactReal ExactReal::quadratic(const BigInt& a, const BigInt& b, const BigInt& d, const BigInt& r) {
    if (auto q = QuadraticIrrational::make(a, b, d, r)) return ExactReal(*q);
    if (r == 0) throw ParseError("zero denominator");
    if (b == 0) return ExactReal(make_rational(a, r));
    return ExactReal(make_rational(a + b * isqrt(d), r));
}

BigInt ExactReal::radicand() const {
    if (const auto* q = as_quadratic()) return q->d();
    return BigInt(1);
}

Rational ExactReal::rational_part() const {
    if (const auto* q = as_quadratic()) return q->rational_part();
    return std::get<Rational>(value_);
}

Rational ExactReal::radical_coefficient() const {
    if (const auto* q = as_quadratic()) return q->radical_coefficient();
    return Rational(0);
}

int ExactReal::sign() const {
    if (const auto* q = as_quadratic()) return sign_of_surd(q->a(), q->b(), q->d());
    return sgn(std::get<Rational>(value_));
}

BigInt ExactReal::floor() const {
    const auto* q = as_quadratic();
    if (q == nullptr) return floor_of(std::get<Rational>(value_));
    // s < |b|*sqrt(d) < s + 1 with s = isqrt(b^2 d), strictly, since the
    // root is irrational. The value then lies in an open interval of width
    // 1/r between consecutive multiples of 1/r, which contains no integer.
    const BigInt s = isqrt(q->b() * q->b() * q->d());
    if (q->b() > 0) return floor_div(q->a() + s, q->r());
    return floor_div(q->a() - s - 1, q->r());
}

BigInt ExactReal::ceil() const {
    if (const auto* r = as_rational()) return ceil_of(*r);
    // Irrational values are never integers.
    return floor() + 1;
}

ExactReal ExactReal::frac() const { return *this - ExactReal(Rational(floor())); }

double ExactReal::to_double() const {
    if (const auto* r = as_rational()) return r->get_d();
    const auto* q = as_quadratic();
    return (q->a().get_d() + q->b().get_d() * std::sqrt(q->d().get_d())) / q->r().get_d();
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ExactReal::to_string() const {
    if (const auto* r = as_rational()) return doorways::to_string(*r);
    const auto* q = as_quadratic();
    std::ostringstream os;
    os << "(" << q->a().get_str() << (q->b() > 0 ? "+" : "-") << BigInt(abs(q->b())).get_str() << "*sqrt("
       << q->d().get_str() << "))/" << q->r().get_str();
    return os.str();
}

Rational parse_rational(std::string_view text) {
    static const std::regex fraction(R"(^([-+]?\d+)(?:/(\d+))?$)");
    static const std::regex decimal(R"(^([-+]?)(\d*)\.(\d+)$)");
    const std::string s = strip_spaces(text);
    std::smatch m;
    if (std::regex_match(s, m, fraction)) {
        const BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str(), 10);
        const BigInt den(m[2].matched ? m[2].str() : std::string("1"), 10);
        return make_rational(num, den);
    }
    if (std::regex_match(s, m, decimal)) {
        const std::string digits = m[2].str() + m[3].str();
        BigInt num(digits.empty() ? std::string("0") : digits, 10);
        if (m[1].str() == "-") num = -num;
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].length());
        return make_rational(num, den);
    }
    throw ParseError("not a rational number: '" + std::string(text) + "'");
}

ExactReal ExactReal::parse(std::string_view text) {
    // (a+b*sqrt(d))/r, (a-sqrt(d))/r, with the "/r" optional
    static const std::regex full(R"(^\(([-+]?\d+)([-+])(?:(\d+)\*)?sqrt\((\d+)\)\)(?:/(\d+))?$)");
    // b*sqrt(d)/r, -sqrt(d), ...
    static const std::regex bare(R"(^([-+]?)(?:(\d+)\*)?sqrt\((\d+)\)(?:/(\d+))?$)");
    const std::string s = strip_spaces(text);
    if (s.find("sqrt") == std::string::npos) return ExactReal(parse_rational(s));

    std::smatch m;
    BigInt a(0);
    BigInt b(1);
    BigInt d;
    BigInt r(1);
    bool negative = false;
    if (std::regex_match(s, m, full)) {
        a = BigInt(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str(), 10);
        negative = m[2].str() == "-";
        if (m[3].matched) b = BigInt(m[3].str(), 10);
        d = BigInt(m[4].str(), 10);
        if (m[5].matched) r = BigInt(m[5].str(), 10);
    } else if (std::regex_match(s, m, bare)) {
        negative = m[1].str() == "-";
        if (m[2].matched) b = BigInt(m[2].str(), 10);
        d = BigInt(m[3].str(), 10);
        if (m[4].matched) r = BigInt(m[4].str(), 10);
    } else {
        throw ParseError("not a quadratic irrational: '" + std::string(text) + "'");
    }
    if (negative) b = -b;
    if (r == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (d == 0) return ExactReal(make_rational(a, r));
    return quadratic(a, b, d, r);
}

ExactReal ExactReal::operator-() const {
    if (const auto* r = as_rational()) return ExactReal(Rational(-*r));
    const auto* q = as_quadratic();
    return quadratic(-q->a(), -q->b(), q->d(), q->r());
}

ExactReal operator+(const ExactReal& x, const ExactReal& y) {
    if (x.is_rational() && y.is_rational()) return ExactReal(Rational(*x.as_rational() + *y.as_rational()));
    const BigInt d = common_radicand(x, y);
    const Surd sx = split(x);
    const Surd sy = split(y);
    return from_surd(sx.rat + sy.rat, sx.rad + sy.rad, d);
}

ExactReal operator-(const ExactReal& x, const ExactReal& y) { return x + (-y); }

ExactReal operator*(const ExactReal& x, const ExactReal& y) {
    if (x.is_rational() && y.is_rational()) return ExactReal(Rational(*x.as_rational() * *y.as_rational()));
    const BigInt d = common_radicand(x, y);
    const Surd sx = split(x);
    const Surd sy = split(y);
    // (p + q sqrt d)(s + t sqrt d) = (ps + qt d) + (pt + qs) sqrt d
    const Rational rat = sx.rat * sy.rat + sx.rad * sy.rad * Rational(d);
    const Rational rad = sx.rat * sy.rad + sx.rad * sy.rat;
    return from_surd(rat, rad, d);
}

ExactReal operator/(const ExactReal& x, const Rational& y) {
    if (y == 0) throw PreconditionViolated("division by zero");
    const Rational inv = 1 / y;
    return x * ExactReal(inv);
}

std::strong_ordering compare(const ExactReal& x, const ExactReal& y) {
    if (x == y) return std::strong_ordering::equal;
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ExactReal& x, const ExactReal& y) { return compare(x, y); }

}  // namespace doorways

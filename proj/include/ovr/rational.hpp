#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ovr {

// Exact rational in lowest terms. GMP keeps mpq_class canonical after every
// arithmetic operation; values built from raw parts go through make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

// Accepts "p/q", "p" and a leading sign. Rejects decimals and q = 0.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when q = 1.
std::string format_rational(const Rational& x);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A rational or negative infinity. Negative infinity absorbs addition and
// compares below every finite value.
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(Rational v) : finite_(true), value_(std::move(v)) {}
    static ExtRational neg_infinity() { return ExtRational(); }

    bool is_finite() const { return finite_; }
    bool is_neg_infinity() const { return !finite_; }
    const Rational& value() const;

    ExtRational operator+(const ExtRational& o) const;
    ExtRational operator-(const Rational& o) const;

    bool operator==(const ExtRational& o) const;
    std::strong_ordering operator<=>(const ExtRational& o) const;

private:
    bool finite_ = false;
    Rational value_;
};

std::string format_ext(const ExtRational& x);

// Integer view of a rational with a fixed positive denominator. Inside the
// weight computation every quantity is a + b*theta with integral a, b, so with
// theta = p/q all values are n/q for an integral n. Arithmetic is checked and
// throws std::overflow_error instead of wrapping.
using Scaled = std::int64_t;
inline constexpr Scaled kScaledNegInf = INT64_MIN;

Scaled checked_add(Scaled a, Scaled b);
Scaled checked_sub(Scaled a, Scaled b);
Scaled checked_mul(Scaled a, Scaled b);

struct ThetaScale {
    Scaled p = 1;  // numerator of theta
    Scaled q = 1;  // denominator of theta, also the common denominator

    static ThetaScale from(const Rational& theta);
    Rational theta() const { return make_rational(p, q); }
    Rational to_rational(Scaled n) const;
    ExtRational to_ext(Scaled n) const;
    // Exact conversion; throws if x*q is not integral.
    Scaled from_rational(const Rational& x) const;
};

}  // namespace ovr

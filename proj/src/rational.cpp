#include "ovr/rational.hpp"

#include <cctype>

namespace ovr {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "' (expected p/q or integer)");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return make_rational(n, d);
}

std::string format_rational(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

const Rational& ExtRational::value() const {
    if (!finite_) throw std::logic_error("value() of negative infinity");
    return value_;
}

ExtRational ExtRational::operator+(const ExtRational& o) const {
    if (!finite_ || !o.finite_) return neg_infinity();
    return ExtRational(Rational(value_ + o.value_));
}

ExtRational ExtRational::operator-(const Rational& o) const {
    if (!finite_) return neg_infinity();
    return ExtRational(Rational(value_ - o));
}

bool ExtRational::operator==(const ExtRational& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || value_ == o.value_;
}

std::strong_ordering ExtRational::operator<=>(const ExtRational& o) const {
    if (!finite_ && !o.finite_) return std::strong_ordering::equal;
    if (!finite_) return std::strong_ordering::less;
    if (!o.finite_) return std::strong_ordering::greater;
    int c = cmp(value_, o.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string format_ext(const ExtRational& x) {
    return x.is_finite() ? format_rational(x.value()) : std::string("-inf");
}

Scaled checked_add(Scaled a, Scaled b) {
    Scaled r;
    if (a == kScaledNegInf || b == kScaledNegInf) return kScaledNegInf;
    if (__builtin_add_overflow(a, b, &r) || r == kScaledNegInf)
        throw std::overflow_error("scaled rational overflow in addition");
    return r;
}

Scaled checked_sub(Scaled a, Scaled b) {
    Scaled r;
    if (__builtin_sub_overflow(a, b, &r) || r == kScaledNegInf)
        throw std::overflow_error("scaled rational overflow in subtraction");
    return r;
}

Scaled checked_mul(Scaled a, Scaled b) {
    Scaled r;
    if (__builtin_mul_overflow(a, b, &r) || r == kScaledNegInf)
        throw std::overflow_error("scaled rational overflow in multiplication");
    return r;
}

ThetaScale ThetaScale::from(const Rational& theta) {
    if (sgn(theta) <= 0) throw std::invalid_argument("theta must be positive");
    if (!theta.get_num().fits_slong_p() || !theta.get_den().fits_slong_p())
        throw std::overflow_error("theta numerator/denominator exceed 64 bits");
    return ThetaScale{theta.get_num().get_si(), theta.get_den().get_si()};
}

Rational ThetaScale::to_rational(Scaled n) const {
    if (n == kScaledNegInf) throw std::logic_error("to_rational of negative infinity");
    return make_rational(n, q);
}

ExtRational ThetaScale::to_ext(Scaled n) const {
    if (n == kScaledNegInf) return ExtRational::neg_infinity();
    return ExtRational(to_rational(n));
}

Scaled ThetaScale::from_rational(const Rational& x) const {
    Rational y = x * Rational(q);
    if (y.get_den() != 1) throw std::invalid_argument("value is not a multiple of 1/q");
    if (!y.get_num().fits_slong_p()) throw std::overflow_error("scaled value exceeds 64 bits");
    return y.get_num().get_si();
}

}  // namespace ovr

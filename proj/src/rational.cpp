#include "curvecat/rational.hpp"

#include <limits>

#include "curvecat/errors.hpp"

namespace curvecat {

namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int narrow(__int128 v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw std::overflow_error("rational overflow");
    return static_cast<Int>(v);
}

}  // namespace

Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
}

Rational::Rational(Int numerator, Int denominator) {
    *this = from_wide(numerator, denominator);
}

Rational Rational::operator+(const Rational& o) const {
    return from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return from_wide(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw domain_error("rational division by zero");
    return from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace curvecat

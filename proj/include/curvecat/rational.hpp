#pragma once

#include <compare>
#include <string>

#include "curvecat/ints.hpp"

namespace curvecat {

// Exact rational number, always stored reduced with positive denominator.
// Intermediate products are computed in 128 bits so comparisons and
// arithmetic never round; results must fit back into 64 bits.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(Int numerator, Int denominator);

    Int numerator() const { return num_; }
    Int denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    std::string to_string() const;

private:
    static Rational from_wide(__int128 num, __int128 den);

    Int num_;
    Int den_;
};

}  // namespace curvecat

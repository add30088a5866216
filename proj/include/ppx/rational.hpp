#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "ppx/integer.hpp"

namespace ppx {

/// Reduced fraction with positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(Integer v) : num_(std::move(v)), den_(1) {}
    Rational(Integer num, Integer den);

    /// Parses "a" or "a/b".
    static Rational parse(std::string_view text);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    Rational inverse() const;
    Rational abs() const { return Rational(num_.abs(), den_); }

    /// "num/den", or "num" when the denominator is 1.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct NoReduce {};
    Rational(Integer num, Integer den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize();

    Integer num_;
    Integer den_;
};

Rational pow(const Rational& base, unsigned long exp);

} // namespace ppx

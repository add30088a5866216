#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "ppx/integer.hpp"
#include "ppx/rational.hpp"

namespace ppx {

/// Dense polynomial in q with integer coefficients, ascending degree.
///
/// Canonical form has no trailing zero coefficient; the zero polynomial has an
/// empty coefficient list and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(int c) : IntPoly(Integer(c)) {}
    IntPoly(Integer c);
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    /// c * q^k
    static IntPoly monomial(std::size_t k, Integer c = Integer(1));
    static IntPoly q() { return monomial(1); }

    const std::vector<Integer>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Coefficient of q^i, zero past the degree.
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    /// Leading coefficient; zero for the zero polynomial.
    Integer lc() const { return c_.empty() ? Integer(0) : c_.back(); }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    Integer content() const;
    /// Divides out the content and fixes the leading coefficient positive.
    IntPoly primitive_part() const;

    Rational eval(const Rational& x) const;
    Integer eval(const Integer& x) const;

    /// q^d * f(1/q); requires d >= degree().
    IntPoly reversed(std::size_t d) const;
    /// f(q^k)
    IntPoly substitute_power(std::size_t k) const;

    /// Human-readable form, e.g. "1 - q + q^2".
    std::string str() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const Integer& k);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& k) { return a *= k; }
    friend IntPoly operator*(const Integer& k, IntPoly a) { return a *= k; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

private:
    void trim();

    std::vector<Integer> c_;
};

IntPoly pow(const IntPoly& base, unsigned long exp);

/// Exact quotient a / b with integer coefficients; throws InexactDivision otherwise.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);
/// Divides every coefficient exactly by k; throws InexactDivision otherwise.
IntPoly poly_divexact(const IntPoly& a, const Integer& k);
bool poly_divides(const IntPoly& b, const IntPoly& a);

struct PolyDivRem {
    IntPoly quotient;
    IntPoly remainder;
};

/// Division with remainder by a divisor whose leading coefficient is +-1.
PolyDivRem poly_divrem_unit(const IntPoly& a, const IntPoly& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly poly_pseudo_rem(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient. Both zero is a domain error.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Φ_m(q), the m-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned long m);

} // namespace ppx

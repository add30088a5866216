#pragma once

#include <ostream>
#include <string>

#include "ppx/intpoly.hpp"
#include "ppx/rational.hpp"

namespace ppx {

/// Quotient num/den of integer polynomials in q.
///
/// Always reduced: gcd(num, den) is a unit in Z[q] (content included) and
/// den has a positive leading coefficient. Equality is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(IntPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(const Rational& r) : RatFunc(IntPoly(r.num()), IntPoly(r.den())) {}
    RatFunc(IntPoly num, IntPoly den);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == IntPoly(1); }
    RatFunc inverse() const;

    /// Value at a rational point; throws if the denominator vanishes there.
    Rational eval(const Rational& x) const;

    std::string str() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

private:
    struct Reduced {};
    RatFunc(IntPoly num, IntPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize();

    friend RatFunc pow(const RatFunc& base, unsigned long exp);

    IntPoly num_;
    IntPoly den_;
};

RatFunc pow(const RatFunc& base, unsigned long exp);

/// f(1/q), re-expressed over Z[q] and normalized.
RatFunc ratfunc_subst_inverse(const RatFunc& f);

} // namespace ppx

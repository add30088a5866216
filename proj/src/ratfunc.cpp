#include "ppx/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppx/errors.hpp"

namespace ppx {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize()
{
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        IntPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
    }
    Integer c = gcd(num_.content(), den_.content());
    if (den_.lc().sign() < 0) c = -c;
    if (!c.is_one()) {
        num_ = poly_divexact(num_, c);
        den_ = poly_divexact(den_, c);
    }
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& x) const
{
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("rational function has a pole at " + x.str());
    return num_.eval(x) / d;
}

std::string RatFunc::str() const
{
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (o.den_.is_constant() || den_.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    } else {
        IntPoly g = poly_gcd(den_, o.den_);
        IntPoly left = poly_divexact(o.den_, g);
        IntPoly right = poly_divexact(den_, g);
        num_ = num_ * left + o.num_ * right;
        den_ *= left;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    // Cross-cancel so the products are already nearly reduced.
    IntPoly g1 = o.den_.is_constant() ? IntPoly(1) : poly_gcd(num_, o.den_);
    IntPoly g2 = den_.is_constant() ? IntPoly(1) : poly_gcd(o.num_, den_);
    num_ = poly_divexact(num_, g1) * poly_divexact(o.num_, g2);
    den_ = poly_divexact(den_, g2) * poly_divexact(o.den_, g1);
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc pow(const RatFunc& base, unsigned long exp)
{
    // Powers of coprime polynomials stay coprime.
    return RatFunc(pow(base.num_, exp), pow(base.den_, exp), RatFunc::Reduced{});
}

RatFunc ratfunc_subst_inverse(const RatFunc& f)
{
    auto d = static_cast<std::size_t>(std::max({f.num().degree(), f.den().degree(), 0}));
    return RatFunc(f.num().reversed(d), f.den().reversed(d));
}

} // namespace ppx

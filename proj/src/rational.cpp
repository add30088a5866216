#include "ppx/rational.hpp"

#include <stdexcept>

namespace ppx {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rational::normalize()
{
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

Rational Rational::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(den_, num_);
}

std::string Rational::str() const
{
    if (den_.is_one()) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const { return Rational(-num_, den_, NoReduce{}); }

Rational& Rational::operator+=(const Rational& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

Rational pow(const Rational& base, unsigned long exp)
{
    // Powers of a reduced fraction stay reduced.
    Integer n = pow(base.num(), exp);
    Integer d = pow(base.den(), exp);
    return Rational(std::move(n), std::move(d));
}

} // namespace ppx

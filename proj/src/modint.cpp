#include "ppx/modint.hpp"

#include <stdexcept>

namespace ppx {

ModInt::ModInt(const Integer& value, Integer modulus) : p_(std::move(modulus))
{
    if (p_.sign() <= 0) throw std::invalid_argument("modulus must be positive");
    r_ = mod_floor(value, p_);
}

void ModInt::check_same(const ModInt& o) const
{
    if (p_ != o.p_) throw std::invalid_argument("residues with different moduli");
}

ModInt& ModInt::operator+=(const ModInt& o)
{
    check_same(o);
    r_ = mod_floor(r_ + o.r_, p_);
    return *this;
}

ModInt& ModInt::operator-=(const ModInt& o)
{
    check_same(o);
    r_ = mod_floor(r_ - o.r_, p_);
    return *this;
}

ModInt& ModInt::operator*=(const ModInt& o)
{
    check_same(o);
    r_ = mod_floor(r_ * o.r_, p_);
    return *this;
}

} // namespace ppx

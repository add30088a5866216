#pragma once

#include <ostream>
#include <string>

#include "ppx/integer.hpp"

namespace ppx {

/// Residue class modulo a positive integer p, stored as 0 <= residue < p.
class ModInt {
public:
    ModInt(const Integer& value, Integer modulus);

    const Integer& residue() const { return r_; }
    const Integer& modulus() const { return p_; }
    bool is_zero() const { return r_.is_zero(); }
    std::string str() const { return r_.str(); }

    ModInt operator-() const { return ModInt(-r_, p_); }
    ModInt& operator+=(const ModInt& o);
    ModInt& operator-=(const ModInt& o);
    ModInt& operator*=(const ModInt& o);

    friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
    friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
    friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }

    friend bool operator==(const ModInt&, const ModInt&) = default;
    friend std::ostream& operator<<(std::ostream& os, const ModInt& m) { return os << m.r_; }

private:
    void check_same(const ModInt& o) const;

    Integer r_;
    Integer p_;
};

} // namespace ppx

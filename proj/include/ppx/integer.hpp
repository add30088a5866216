#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ppx {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper over a GMP integer so that arithmetic always yields an
/// `Integer` (no expression templates leak into generic ring code).
class Integer {
public:
    Integer() = default;
    Integer(int v) : v_(v) {}
    Integer(long v) : v_(v) {}
    Integer(long long v) : v_(static_cast<long>(v)) {}
    Integer(unsigned long v) : v_(v) {}
    explicit Integer(mpz_class v) : v_(std::move(v)) {}
    explicit Integer(std::string_view decimal);

    const mpz_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return v_ == 1; }
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const;
    std::string str() const { return v_.get_str(); }

    Integer operator-() const { return Integer(mpz_class(-v_)); }
    Integer abs() const { return Integer(mpz_class(::abs(v_))); }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

private:
    mpz_class v_;
};

/// Truncating quotient and remainder (remainder has the sign of the dividend).
Integer tdiv(const Integer& a, const Integer& b);
Integer tmod(const Integer& a, const Integer& b);
/// Non-negative residue in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);
bool divides(const Integer& d, const Integer& a);
/// Throws InexactDivision unless b | a.
Integer divexact(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exp);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

} // namespace ppx

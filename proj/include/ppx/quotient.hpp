#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "ppx/intpoly.hpp"

namespace ppx {

/// Element of Z[q]/(modulus) for a monic modulus of degree >= 1.
///
/// Used for arithmetic at a primitive root of unity (modulus Φ_m) and for
/// truncation mod q^2.
class QuotientElem {
public:
    /// Reduces f modulo `modulus`; throws if the modulus is not monic of degree >= 1.
    QuotientElem(const IntPoly& f, IntPoly modulus);
    QuotientElem(const IntPoly& f, std::shared_ptr<const IntPoly> modulus);

    const IntPoly& rep() const { return rep_; }
    const IntPoly& modulus() const { return *mod_; }
    const std::shared_ptr<const IntPoly>& modulus_ptr() const { return mod_; }

    bool is_zero() const { return rep_.is_zero(); }
    QuotientElem with_value(const IntPoly& f) const { return QuotientElem(f, mod_); }

    /// Multiplicative inverse in Z[q]/(modulus), if one exists with integer coefficients.
    std::optional<QuotientElem> try_inverse() const;

    std::string str() const { return rep_.str(); }

    QuotientElem operator-() const;
    QuotientElem& operator+=(const QuotientElem& o);
    QuotientElem& operator-=(const QuotientElem& o);
    QuotientElem& operator*=(const QuotientElem& o);

    friend QuotientElem operator+(QuotientElem a, const QuotientElem& b) { return a += b; }
    friend QuotientElem operator-(QuotientElem a, const QuotientElem& b) { return a -= b; }
    friend QuotientElem operator*(QuotientElem a, const QuotientElem& b) { return a *= b; }

    friend bool operator==(const QuotientElem& a, const QuotientElem& b)
    {
        return a.rep_ == b.rep_ && (a.mod_ == b.mod_ || *a.mod_ == *b.mod_);
    }
    friend std::ostream& operator<<(std::ostream& os, const QuotientElem& e) { return os << e.str(); }

private:
    void check_same(const QuotientElem& o) const;

    IntPoly rep_;
    std::shared_ptr<const IntPoly> mod_;
};

/// Representative of f modulo a monic modulus.
QuotientElem quotient_reduce(const IntPoly& f, const IntPoly& modulus);

} // namespace ppx

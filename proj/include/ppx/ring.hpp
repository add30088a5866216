#pragma once

#include <concepts>
#include <optional>

#include "ppx/errors.hpp"
#include "ppx/integer.hpp"
#include "ppx/intpoly.hpp"
#include "ppx/modint.hpp"
#include "ppx/quotient.hpp"
#include "ppx/rational.hpp"
#include "ppx/ratfunc.hpp"

namespace ppx {

// Ring element customization points. Elements of parameterised rings
// (quotients, residues) carry their modulus, so zero and one are always
// produced "like" an existing element.

inline Integer zero_like(const Integer&) { return Integer(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline Integer from_integer_like(const Integer&, const Integer& k) { return k; }
inline std::optional<Integer> try_inverse(const Integer& a)
{
    if (a.abs().is_one()) return a;
    return std::nullopt;
}
inline Integer div_integer(const Integer& a, const Integer& k) { return divexact(a, k); }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_integer_like(const Rational&, const Integer& k) { return Rational(k); }
inline std::optional<Rational> try_inverse(const Rational& a)
{
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
}
inline Rational div_integer(const Rational& a, const Integer& k) { return a / Rational(k); }

inline IntPoly zero_like(const IntPoly&) { return IntPoly(); }
inline IntPoly one_like(const IntPoly&) { return IntPoly(1); }
inline IntPoly from_integer_like(const IntPoly&, const Integer& k) { return IntPoly(k); }
inline std::optional<IntPoly> try_inverse(const IntPoly& a)
{
    if (a.is_constant() && a.lc().abs().is_one()) return a;
    return std::nullopt;
}
inline IntPoly div_integer(const IntPoly& a, const Integer& k) { return poly_divexact(a, k); }

inline RatFunc zero_like(const RatFunc&) { return RatFunc(); }
inline RatFunc one_like(const RatFunc&) { return RatFunc(1); }
inline RatFunc from_integer_like(const RatFunc&, const Integer& k) { return RatFunc(IntPoly(k)); }
inline std::optional<RatFunc> try_inverse(const RatFunc& a)
{
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
}
inline RatFunc div_integer(const RatFunc& a, const Integer& k)
{
    return a * RatFunc(IntPoly(1), IntPoly(k));
}

inline QuotientElem zero_like(const QuotientElem& a) { return a.with_value(IntPoly()); }
inline QuotientElem one_like(const QuotientElem& a) { return a.with_value(IntPoly(1)); }
inline QuotientElem from_integer_like(const QuotientElem& a, const Integer& k) { return a.with_value(IntPoly(k)); }
inline std::optional<QuotientElem> try_inverse(const QuotientElem& a) { return a.try_inverse(); }
inline QuotientElem div_integer(const QuotientElem& a, const Integer& k)
{
    return a.with_value(poly_divexact(a.rep(), k));
}

inline ModInt zero_like(const ModInt& a) { return ModInt(Integer(0), a.modulus()); }
inline ModInt one_like(const ModInt& a) { return ModInt(Integer(1), a.modulus()); }
inline ModInt from_integer_like(const ModInt& a, const Integer& k) { return ModInt(k, a.modulus()); }
inline std::optional<ModInt> try_inverse(const ModInt& a)
{
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), a.residue().raw().get_mpz_t(), a.modulus().raw().get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return ModInt(Integer(std::move(inv)), a.modulus());
}
inline ModInt div_integer(const ModInt& a, const Integer& k)
{
    auto inv = try_inverse(ModInt(k, a.modulus()));
    if (!inv) throw InexactDivision("division by " + k.str() + " is not defined mod " + a.modulus().str());
    return a * *inv;
}

/// Commutative ring with identity, as required by series, expansions and matrices.
template <class R>
concept Ring = std::copyable<R> && std::equality_comparable<R> && requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { zero_like(a) } -> std::convertible_to<R>;
    { one_like(a) } -> std::convertible_to<R>;
    { from_integer_like(a, Integer(1)) } -> std::convertible_to<R>;
    { try_inverse(a) } -> std::convertible_to<std::optional<R>>;
    { div_integer(a, Integer(1)) } -> std::convertible_to<R>;
};

template <Ring R>
bool is_zero_elem(const R& a)
{
    return a == zero_like(a);
}

template <Ring R>
R pow_elem(const R& base, unsigned long exp)
{
    R result = one_like(base);
    R b = base;
    while (exp > 0) {
        if (exp & 1UL) result = result * b;
        exp >>= 1;
        if (exp > 0) b = b * b;
    }
    return result;
}

} // namespace ppx

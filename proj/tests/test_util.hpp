#pragma once

#include <random>
#include <vector>

#include "ppx/intpoly.hpp"
#include "ppx/rational.hpp"
#include "ppx/ratfunc.hpp"

namespace ppx::testing {

inline std::mt19937& rng()
{
    static std::mt19937 gen(20261015);
    return gen;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline IntPoly random_poly(int max_degree, long bound = 5)
{
    std::vector<Integer> c;
    int deg = static_cast<int>(uniform(0, max_degree));
    for (int i = 0; i <= deg; ++i) c.emplace_back(uniform(-bound, bound));
    return IntPoly(std::move(c));
}

inline IntPoly random_nonzero_poly(int max_degree, long bound = 5)
{
    IntPoly p;
    while (p.is_zero()) p = random_poly(max_degree, bound);
    return p;
}

inline Rational random_rational(long bound = 9)
{
    return Rational(Integer(uniform(-bound, bound)), Integer(uniform(1, bound)));
}

inline RatFunc random_ratfunc(int max_degree = 3)
{
    return RatFunc(random_poly(max_degree), random_nonzero_poly(max_degree));
}

/// [k] computed directly as (q^k - 1)/(q - 1) coefficients: k ones.
inline IntPoly q_integer(unsigned long k)
{
    return IntPoly(std::vector<Integer>(k, Integer(1)));
}

} // namespace ppx::testing

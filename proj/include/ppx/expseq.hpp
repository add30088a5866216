#pragma once

#include <vector>

#include "ppx/integer.hpp"
#include "ppx/rational.hpp"
#include "ppx/report.hpp"
#include "ppx/series.hpp"

// Classical (q = 1) sequences attached to the expansion
//   exp(x) = prod_{n>=1} (1 + e_n x^n).
//
// All sequence functions return terms n = 1..N at indices 0..N-1.

namespace ppx {

/// exp(x) truncated at order N: coefficients 1/n!.
TruncatedSeries<Rational> exp_series(unsigned long N);

/// e_1 = 1, e_n = sum_{d|n, d>1} (-1)^d e_{n/d}^d / d.
std::vector<Rational> e_seq(unsigned long N);
/// c_n = n! e_n; throws TheoremViolation if some c_n is not an integer.
std::vector<Integer> c_seq(unsigned long N);
/// Factors of exp(-x): a_n = (-1)^n e_n, cross-checked against a direct
/// expansion of exp(-x).
std::vector<Rational> a_seq(unsigned long N);
/// u_n = prod_{k<=n} gcd(k, n), checked against prod_{d|n} d^phi(n/d).
std::vector<Integer> u_seq(unsigned long N);
/// Numerators r_n = u_n e_n by their own divisor recursion, with the
/// divisibility d * u_{n/d}^d | u_n asserted at every step.
std::vector<Integer> r_seq(unsigned long N);

/// All classical sequences up to N, built once.
struct ExpTable {
    unsigned long N = 0;
    std::vector<Rational> e;
    std::vector<Integer> c;
    std::vector<Rational> a;
    std::vector<Integer> u;
    std::vector<Integer> r;

    static ExpTable build(unsigned long N);
};

/// 0 < a_n < 2/n and (-1)^n e_n > 0 for 2 <= n <= N.
Report check_kolberg(unsigned long N);
/// |c_n| <= (n-1)! for odd n, c_n >= (n-1)! for even n, 2 <= n <= N.
Report check_borwein_lou(unsigned long N);
/// d * u_{n/d}^d | u_n for every divisor d > 1 of n <= N.
Report check_divisibility(unsigned long N);
/// Prime closed forms for e_p, c_p, u_p, r_p, r_{p^2}, u_{pq}, r_{pq} (odd primes) up to N.
Report check_closed_forms(unsigned long N);
/// Integrality of c_n, r_n and r_n n! = c_n u_n for n <= N.
Report check_integrality(unsigned long N);

/// gcd(u_n, |r_n|).
Integer gcd_u_r(unsigned long n);

} // namespace ppx

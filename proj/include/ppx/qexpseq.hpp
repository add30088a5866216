#pragma once

#include <vector>

#include "ppx/intpoly.hpp"
#include "ppx/quotient.hpp"
#include "ppx/ratfunc.hpp"
#include "ppx/report.hpp"
#include "ppx/series.hpp"

// q-analogs of the classical sequences, attached to
//   exp_q(x) = sum x^n/[n]!        = prod (1 + e_n(q) x^n)
//   Exp_q(x) = sum q^C(n,2) x^n/[n]! = prod (1 + E_n(q) x^n)
//
// As in expseq.hpp, sequence functions return terms n = 1..N at indices 0..N-1.

namespace ppx {

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
IntPoly qint(unsigned long n);
/// [n]! = [1][2]...[n]; [0]! = 1.
IntPoly qfact(unsigned long n);
/// Gaussian binomial [n]! / ([k]! [n-k]!), by exact division; zero for k > n.
IntPoly qbinom(unsigned long n, unsigned long k);

TruncatedSeries<RatFunc> exp_q_series(unsigned long N);
TruncatedSeries<RatFunc> big_exp_q_series(unsigned long N);

/// e_n(q) = sum_{d|n,d>1} (-1)^d e_{n/d}(q)^d / d + (1-q)^(n-1) / (n[n]).
std::vector<RatFunc> eq_seq(unsigned long N);
/// E_n(q): same recursion with (q-1)^(n-1) in the correction term.
std::vector<RatFunc> big_eq_seq(unsigned long N);
/// u_n(q) = prod_{j<=n} gcd([j], [n]), checked against prod_{d|n} [d]^phi(n/d)
/// and against u_n at q = 1.
std::vector<IntPoly> u_q_seq(unsigned long N);
/// r_n(q) by its divisor recursion, evaluated in Q(q) and then required to
/// be an integer polynomial with (-1)^n r_n(q) monic for n > 1.
std::vector<IntPoly> r_q_seq(unsigned long N);
/// c_n(q) = [n]! e_n(q), required to be an integer polynomial with c_n(1) = c_n
/// and r_n(q) [n]! = c_n(q) u_n(q).
std::vector<IntPoly> c_q_seq(unsigned long N);

struct QExpTable {
    unsigned long N = 0;
    std::vector<RatFunc> e;
    std::vector<RatFunc> E;
    std::vector<IntPoly> u;
    std::vector<IntPoly> r;
    std::vector<IntPoly> c;

    static QExpTable build(unsigned long N);
};

/// (-[p] + (1-q)^(p-1)) / p for an odd prime p, compared with r_p(q).
IntPoly r_p_closed(unsigned long p);

/// Factors g_n(q) of exp_q(x) over Z[q]/(q^2), n = 1..N.
std::vector<QuotientElem> mod_q2_expansion(unsigned long N);
/// The closed form of the mod-q^2 factors: g_1 = 1, g_{2^k} = 1 - 2^(k-1) q,
/// other even g_n = 0, odd g_n = -q.
IntPoly mod_q2_closed_form(unsigned long n);

/// Recursions for e_n(q), E_n(q) against direct expansion of exp_q, Exp_q.
Report check_q_oracle(unsigned long N);
/// e_n(q) = E_n(q) = e_n(1/q) for odd 3 <= n <= N.
Report check_odd_symmetry(unsigned long N);
/// exp_q(-x) Exp_q(x) = 1 + O(x^(N+1)), and its q = 1 specialization.
Report check_reciprocal_identity(unsigned long N);
/// Integrality and leading coefficient of r_n(q), plus the r_p(q) closed form.
Report check_thm42(unsigned long N);
/// Mod-q^2 expansion against its closed form and against e_n(q) reduced mod q^2.
Report check_thm45(unsigned long N);
/// Coefficients of log exp_q(x) against (1-q)^(n-1)/(n[n]).
Report check_log_coefficients(unsigned long N);
/// q -> 1 recovers u_n, r_n, c_n, e_n (n <= N1); q -> 0 gives the dyadic pattern (n <= N0).
Report check_q_degenerations(unsigned long N1, unsigned long N0);

} // namespace ppx

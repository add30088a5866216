#include "ppx/qexpseq.hpp"

#include <stdexcept>
#include <string>

#include "ppx/arith.hpp"
#include "ppx/errors.hpp"
#include "ppx/expseq.hpp"
#include "ppx/ppe.hpp"

namespace ppx {

namespace {

void require_positive(unsigned long N)
{
    if (N < 1) throw std::invalid_argument("sequence length must be at least 1");
}

std::string n_param(unsigned long n) { return "n=" + std::to_string(n); }

// sum_{d|n,d>1} (-1)^d f_{n/d}^d / d + correction
std::vector<RatFunc> divisor_recursion(unsigned long N, const IntPoly& base)
{
    require_positive(N);
    std::vector<RatFunc> e;
    e.reserve(N);
    e.emplace_back(1);
    for (unsigned long n = 2; n <= N; ++n) {
        RatFunc sum = RatFunc(pow(base, n - 1), IntPoly(Integer(n)) * qint(n));
        for (unsigned long d : divisors(n)) {
            if (d == 1) continue;
            RatFunc term = pow(e[n / d - 1], d) * RatFunc(IntPoly(1), IntPoly(Integer(d)));
            sum += (d % 2 == 0) ? term : -term;
        }
        e.push_back(std::move(sum));
    }
    return e;
}

const IntPoly& one_minus_q()
{
    static const IntPoly p{1, -1};
    return p;
}

const IntPoly& q_minus_one()
{
    static const IntPoly p{-1, 1};
    return p;
}

} // namespace

IntPoly qint(unsigned long n)
{
    return IntPoly(std::vector<Integer>(n, Integer(1)));
}

IntPoly qfact(unsigned long n)
{
    IntPoly f(1);
    for (unsigned long k = 2; k <= n; ++k) f *= qint(k);
    return f;
}

IntPoly qbinom(unsigned long n, unsigned long k)
{
    if (k > n) return {};
    try {
        return poly_divexact(qfact(n), qfact(k) * qfact(n - k));
    } catch (const InexactDivision&) {
        throw TheoremViolation("Gaussian binomial [" + std::to_string(n) + " choose " + std::to_string(k) +
                               "] is not a polynomial");
    }
}

TruncatedSeries<RatFunc> exp_q_series(unsigned long N)
{
    return TruncatedSeries<RatFunc>::generate(N, [](std::size_t n) { return RatFunc(IntPoly(1), qfact(n)); });
}

TruncatedSeries<RatFunc> big_exp_q_series(unsigned long N)
{
    return TruncatedSeries<RatFunc>::generate(
        N, [](std::size_t n) { return RatFunc(IntPoly::monomial(n == 0 ? 0 : n * (n - 1) / 2), qfact(n)); });
}

std::vector<RatFunc> eq_seq(unsigned long N) { return divisor_recursion(N, one_minus_q()); }

std::vector<RatFunc> big_eq_seq(unsigned long N) { return divisor_recursion(N, q_minus_one()); }

std::vector<IntPoly> u_q_seq(unsigned long N)
{
    auto u_classical = u_seq(N);
    std::vector<IntPoly> u;
    u.reserve(N);
    for (unsigned long n = 1; n <= N; ++n) {
        const IntPoly qn = qint(n);
        IntPoly by_gcd(1);
        for (unsigned long j = 1; j <= n; ++j) by_gcd *= poly_gcd(qint(j), qn);
        IntPoly by_phi(1);
        for (unsigned long d : divisors(n)) by_phi *= pow(qint(d), euler_phi(n / d));
        if (by_gcd != by_phi) {
            throw TheoremViolation("u_" + std::to_string(n) + "(q): gcd product " + by_gcd.str() +
                                   " differs from totient product " + by_phi.str());
        }
        if (by_gcd.eval(Integer(1)) != u_classical[n - 1]) {
            throw TheoremViolation("u_" + std::to_string(n) + "(1) != u_" + std::to_string(n));
        }
        u.push_back(std::move(by_gcd));
    }
    return u;
}

std::vector<IntPoly> r_q_seq(unsigned long N)
{
    auto u = u_q_seq(N);
    std::vector<IntPoly> r;
    r.reserve(N);
    r.emplace_back(1);
    for (unsigned long n = 2; n <= N; ++n) {
        const IntPoly& un = u[n - 1];
        RatFunc sum(pow(one_minus_q(), n - 1) * un, IntPoly(Integer(n)) * qint(n));
        for (unsigned long d : divisors(n)) {
            if (d == 1) continue;
            RatFunc ratio(un, IntPoly(Integer(d)) * pow(u[n / d - 1], d));
            RatFunc term = ratio * RatFunc(pow(r[n / d - 1], d));
            sum += (d % 2 == 0) ? term : -term;
        }
        if (!sum.is_polynomial()) {
            throw TheoremViolation("r_" + std::to_string(n) + "(q) = " + sum.str() +
                                   " is not a polynomial with integer coefficients");
        }
        IntPoly rn = sum.num();
        Integer lead = n % 2 == 0 ? rn.lc() : -rn.lc();
        if (!lead.is_one()) {
            throw TheoremViolation("(-1)^n r_" + std::to_string(n) + "(q) has leading coefficient " + lead.str());
        }
        r.push_back(std::move(rn));
    }
    return r;
}

std::vector<IntPoly> c_q_seq(unsigned long N)
{
    auto e = eq_seq(N);
    auto u = u_q_seq(N);
    auto r = r_q_seq(N);
    auto c_classical = c_seq(N);
    std::vector<IntPoly> c;
    c.reserve(N);
    for (unsigned long n = 1; n <= N; ++n) {
        const IntPoly fact = qfact(n);
        RatFunc v = e[n - 1] * RatFunc(fact);
        if (!v.is_polynomial()) {
            throw TheoremViolation("c_" + std::to_string(n) + "(q) = " + v.str() +
                                   " is not a polynomial with integer coefficients");
        }
        IntPoly cn = v.num();
        if (cn.eval(Integer(1)) != c_classical[n - 1]) {
            throw TheoremViolation("c_" + std::to_string(n) + "(1) != c_" + std::to_string(n));
        }
        if (r[n - 1] * fact != cn * u[n - 1]) {
            throw TheoremViolation("r_n(q) [n]! != c_n(q) u_n(q) at n=" + std::to_string(n));
        }
        c.push_back(std::move(cn));
    }
    return c;
}

QExpTable QExpTable::build(unsigned long N)
{
    QExpTable t;
    t.N = N;
    t.e = eq_seq(N);
    t.E = big_eq_seq(N);
    t.u = u_q_seq(N);
    t.r = r_q_seq(N);
    t.c = c_q_seq(N);
    for (unsigned long n = 1; n <= N; ++n) {
        if (t.e[n - 1] != RatFunc(t.r[n - 1], t.u[n - 1])) {
            throw TheoremViolation("e_" + std::to_string(n) + "(q) != r_n(q)/u_n(q)");
        }
    }
    return t;
}

IntPoly r_p_closed(unsigned long p)
{
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("r_p_closed needs an odd prime, got " + std::to_string(p));
    IntPoly numer = pow(one_minus_q(), p - 1) - qint(p);
    IntPoly closed;
    try {
        closed = poly_divexact(numer, Integer(static_cast<long>(p)));
    } catch (const InexactDivision&) {
        throw TheoremViolation("(-[p] + (1-q)^(p-1)) is not divisible by p=" + std::to_string(p));
    }
    auto r = r_q_seq(p);
    if (r[p - 1] != closed) {
        throw TheoremViolation("r_" + std::to_string(p) + "(q) = " + r[p - 1].str() + " but closed form gives " +
                               closed.str());
    }
    return closed;
}

std::vector<QuotientElem> mod_q2_expansion(unsigned long N)
{
    require_positive(N);
    auto mod = std::make_shared<const IntPoly>(IntPoly::monomial(2));
    std::vector<QuotientElem> coeffs;
    coeffs.reserve(N + 1);
    for (unsigned long n = 0; n <= N; ++n) {
        auto inv = QuotientElem(qfact(n), mod).try_inverse();
        if (!inv) throw TheoremViolation("[n]! is not a unit mod q^2");
        coeffs.push_back(*inv);
    }
    auto expansion = ppe_expand(TruncatedSeries<QuotientElem>(N, std::move(coeffs)));
    return expansion.factors();
}

IntPoly mod_q2_closed_form(unsigned long n)
{
    if (n == 1) return IntPoly(1);
    if (is_power_of_two(n)) {
        // n = 2^k: 1 - 2^(k-1) q
        return IntPoly{1, -static_cast<long>(n / 2)};
    }
    if (n % 2 == 0) return {};
    return IntPoly{0, -1};
}

Report check_q_oracle(unsigned long N)
{
    Report rep{"thm41", {}};
    auto e = eq_seq(N);
    auto E = big_eq_seq(N);
    auto oracle_e = ppe_expand(exp_q_series(N));
    auto oracle_E = ppe_expand(big_exp_q_series(N));
    for (unsigned long n = 1; n <= N; ++n) {
        rep.expect_equal("e_n(q)", n_param(n), oracle_e.factor(n).str(), e[n - 1].str());
        rep.expect_equal("E_n(q)", n_param(n), oracle_E.factor(n).str(), E[n - 1].str());
    }
    return rep;
}

Report check_odd_symmetry(unsigned long N)
{
    if (N < 3) throw std::invalid_argument("odd symmetry check needs N >= 3");
    Report rep{"odd-symmetry", {}};
    auto e = eq_seq(N);
    auto E = big_eq_seq(N);
    for (unsigned long n = 3; n <= N; n += 2) {
        rep.expect_equal("e_n_eq_E_n", n_param(n), e[n - 1].str(), E[n - 1].str());
        rep.expect_equal("e_n_inverse_q", n_param(n), e[n - 1].str(), ratfunc_subst_inverse(e[n - 1]).str());
    }
    return rep;
}

Report check_reciprocal_identity(unsigned long N)
{
    Report rep{"eq18", {}};
    auto product = series_negate_argument(exp_q_series(N)) * big_exp_q_series(N);
    for (unsigned long n = 0; n <= N; ++n) {
        rep.expect_equal("exp_q(-x)Exp_q(x)", n_param(n), n == 0 ? "1" : "0", product[n].str());
    }
    auto classical = series_negate_argument(exp_series(N)) * exp_series(N);
    for (unsigned long n = 0; n <= N; ++n) {
        rep.expect_equal("exp(-x)exp(x)", n_param(n), n == 0 ? "1" : "0", classical[n].str());
    }
    auto inverse = series_inv(series_negate_argument(exp_q_series(N)));
    auto direct = big_exp_q_series(N);
    for (unsigned long n = 0; n <= N; ++n) {
        rep.expect_equal("1/exp_q(-x)", n_param(n), direct[n].str(), inverse[n].str());
    }
    return rep;
}

Report check_thm42(unsigned long N)
{
    Report rep{"thm42", {}};
    std::vector<IntPoly> r;
    try {
        r = r_q_seq(N);
    } catch (const TheoremViolation& ex) {
        rep.add("r_n(q)_recursion", "N=" + std::to_string(N), false, "integer polynomials", ex.what());
        return rep;
    }
    auto e = eq_seq(N);
    auto u = u_q_seq(N);
    for (unsigned long n = 2; n <= N; ++n) {
        const IntPoly& rn = r[n - 1];
        Integer lead = n % 2 == 0 ? rn.lc() : -rn.lc();
        rep.expect_equal("monic_sign", n_param(n), "1", lead.str());
        rep.expect_equal("e_n_eq_r_over_u", n_param(n), e[n - 1].str(), RatFunc(rn, u[n - 1]).str());
    }
    try {
        auto c = c_q_seq(N);
        for (unsigned long n = 1; n <= N; ++n) rep.add("c_n(q)_integral", n_param(n), true, "integer polynomial", c[n - 1].str());
    } catch (const TheoremViolation& ex) {
        rep.add("c_n(q)_integral", "N=" + std::to_string(N), false, "integer polynomials", ex.what());
    }
    for (unsigned long p = 3; p <= N; ++p) {
        if (!is_prime(p)) continue;
        try {
            IntPoly closed = r_p_closed(p);
            rep.expect_equal("r_p_closed", "p=" + std::to_string(p), closed.str(), r[p - 1].str());
        } catch (const TheoremViolation& ex) {
            rep.add("r_p_closed", "p=" + std::to_string(p), false, "closed form", ex.what());
        }
    }
    return rep;
}

Report check_thm45(unsigned long N)
{
    Report rep{"thm45", {}};
    auto g = mod_q2_expansion(N);
    for (unsigned long n = 1; n <= N; ++n) {
        rep.expect_equal("g_n_closed_form", n_param(n), mod_q2_closed_form(n).str(), g[n - 1].str());
    }
    {
        auto e = eq_seq(N);
        auto mod = g.front().modulus_ptr();
        for (unsigned long n = 1; n <= N; ++n) {
            auto den_inv = QuotientElem(e[n - 1].den(), mod).try_inverse();
            if (!den_inv) {
                rep.add("e_n(q)_mod_q2", n_param(n), false, "invertible denominator", e[n - 1].den().str());
                continue;
            }
            QuotientElem reduced = QuotientElem(e[n - 1].num(), mod) * *den_inv;
            rep.expect_equal("e_n(q)_mod_q2", n_param(n), g[n - 1].str(), reduced.str());
        }
    }
    return rep;
}

Report check_log_coefficients(unsigned long N)
{
    Report rep{"eq21", {}};
    auto lg = series_log(exp_q_series(N));
    rep.expect_equal("constant_term", n_param(0), "0", lg[0].str());
    for (unsigned long n = 1; n <= N; ++n) {
        RatFunc expected(pow(one_minus_q(), n - 1), IntPoly(Integer(n)) * qint(n));
        rep.expect_equal("log_exp_q_coeff", n_param(n), expected.str(), lg[n].str());
    }
    return rep;
}

Report check_q_degenerations(unsigned long N1, unsigned long N0)
{
    Report rep{"degenerations", {}};
    {
        auto t = QExpTable::build(N1);
        auto classical = ExpTable::build(N1);
        const Rational one(1);
        for (unsigned long n = 1; n <= N1; ++n) {
            auto p = n_param(n);
            rep.expect_equal("u_n(1)", p, classical.u[n - 1].str(), t.u[n - 1].eval(Integer(1)).str());
            rep.expect_equal("r_n(1)", p, classical.r[n - 1].str(), t.r[n - 1].eval(Integer(1)).str());
            rep.expect_equal("c_n(1)", p, classical.c[n - 1].str(), t.c[n - 1].eval(Integer(1)).str());
            rep.expect_equal("e_n(1)", p, classical.e[n - 1].str(), t.e[n - 1].eval(one).str());
            rep.expect_equal("E_n(1)", p, classical.e[n - 1].str(), t.E[n - 1].eval(one).str());
        }
    }
    {
        auto e = eq_seq(N0);
        auto r = r_q_seq(N0);
        const Rational zero(0);
        for (unsigned long n = 1; n <= N0; ++n) {
            std::string dyadic = is_power_of_two(n) ? "1" : "0";
            rep.expect_equal("e_n(0)", n_param(n), dyadic, e[n - 1].eval(zero).str());
            rep.expect_equal("r_n(0)", n_param(n), dyadic, r[n - 1].coeff(0).str());
        }
    }
    return rep;
}

} // namespace ppx

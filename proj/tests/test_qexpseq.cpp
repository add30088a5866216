#include <doctest.h>

#include "ppx/arith.hpp"
#include "ppx/expseq.hpp"
#include "ppx/ppe.hpp"
#include "ppx/qexpseq.hpp"

using namespace ppx;

namespace {

const IntPoly q1 = IntPoly::q();

IntPoly br(unsigned long n) { return qint(n); }

} // namespace

TEST_SUITE("qexpseq")
{
    TEST_CASE("q-integers, factorials and Gaussian binomials")
    {
        CHECK(qint(1) == IntPoly(1));
        CHECK(qint(4) == IntPoly({1, 1, 1, 1}));
        CHECK(qfact(3) == IntPoly({1, 2, 2, 1}));
        CHECK(qbinom(4, 2) == IntPoly({1, 1, 2, 1, 1}));
        CHECK(qbinom(5, 0) == IntPoly(1));
        CHECK(qbinom(5, 5) == IntPoly(1));
        for (unsigned long n = 0; n <= 10; ++n) {
            for (unsigned long k = 0; k <= n; ++k) {
                CHECK(qbinom(n, k).eval(Integer(1)) == binomial(n, k));
                CHECK(qbinom(n, k) == qbinom(n, n - k));
            }
        }
    }

    TEST_CASE("e_n(q) first terms")
    {
        auto e = eq_seq(7);
        CHECK(e[0] == RatFunc(1));
        CHECK(e[1] == RatFunc(IntPoly(1), IntPoly({1, 1})));
        CHECK(e[2] == RatFunc(-q1, br(3)));
        CHECK(e[3] == RatFunc(IntPoly({1, 0, 1, 1}), br(2) * br(4)));
        CHECK(e[4] == RatFunc(-q1 * IntPoly({1, -1, 1}), br(5)));
        CHECK(e[5] == RatFunc(pow(q1, 2) * IntPoly({1, 3, 2, 2, 2, 2, 1}), pow(br(2), 2) * br(3) * br(6)));
        CHECK(e[6] == RatFunc(-q1 * pow(IntPoly({1, -1, 1}), 2), br(7)));
    }

    TEST_CASE("E_n(q) first terms")
    {
        auto E = big_eq_seq(7);
        CHECK(E[0] == RatFunc(1));
        CHECK(E[1] == RatFunc(q1, IntPoly({1, 1})));
        CHECK(E[2] == RatFunc(-q1, br(3)));
        CHECK(E[3] == RatFunc(q1 * IntPoly({1, 1, 0, 1}), br(2) * br(4)));
        CHECK(E[4] == RatFunc(-q1 * IntPoly({1, -1, 1}), br(5)));
        CHECK(E[5] == RatFunc(q1 * IntPoly({1, 2, 2, 2, 2, 3, 1}), pow(br(2), 2) * br(3) * br(6)));
        CHECK(E[6] == RatFunc(-q1 * pow(IntPoly({1, -1, 1}), 2), br(7)));
    }

    TEST_CASE("r_n(q) first terms")
    {
        auto r = r_q_seq(7);
        CHECK(r[0] == IntPoly(1));
        CHECK(r[1] == IntPoly(1));
        CHECK(r[2] == -q1);
        CHECK(r[3] == IntPoly({1, 0, 1, 1}));
        CHECK(r[4] == -q1 * IntPoly({1, -1, 1}));
        CHECK(r[5] == pow(q1, 2) * IntPoly({1, 3, 2, 2, 2, 2, 1}));
        CHECK(r[6] == -q1 * pow(IntPoly({1, -1, 1}), 2));
    }

    TEST_CASE("oracle: recursion equals direct expansion")
    {
        const unsigned long N = 14;
        auto e = eq_seq(N);
        auto E = big_eq_seq(N);
        auto de = ppe_expand(exp_q_series(N));
        auto dE = ppe_expand(big_exp_q_series(N));
        for (unsigned long n = 1; n <= N; ++n) {
            CHECK(de.factor(n) == e[n - 1]);
            CHECK(dE.factor(n) == E[n - 1]);
        }
        CHECK(check_q_oracle(N).passed());
    }

    TEST_CASE("odd n share e_n(q) = E_n(q)")
    {
        auto e = eq_seq(15);
        auto E = big_eq_seq(15);
        for (unsigned long n = 1; n <= 15; n += 2) CHECK(e[n - 1] == E[n - 1]);
        CHECK(e[1] != E[1]);
        CHECK(check_odd_symmetry(15).passed());
    }

    TEST_CASE("integrality and leading coefficients")
    {
        auto t = QExpTable::build(14);
        for (unsigned long n = 1; n <= 14; ++n) {
            CAPTURE(n);
            CHECK(RatFunc(t.r[n - 1], t.u[n - 1]) == t.e[n - 1]);
            CHECK(RatFunc(t.c[n - 1], qfact(n)) == t.e[n - 1]);
            if (n > 1) CHECK(t.r[n - 1].lc() == Integer(n % 2 == 0 ? 1 : -1));
        }
        CHECK(check_thm42(14).passed());
    }

    TEST_CASE("r_p(q) closed form for odd primes")
    {
        auto r = r_q_seq(13);
        for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
            CAPTURE(p);
            CHECK(r_p_closed(p) == r[p - 1]);
        }
    }

    TEST_CASE("r_n(0) is 1 on powers of two and 0 elsewhere")
    {
        auto r = r_q_seq(16);
        for (unsigned long n = 1; n <= 16; ++n) {
            CAPTURE(n);
            CHECK(r[n - 1].coeff(0) == Integer(is_power_of_two(n) ? 1 : 0));
        }
    }

    TEST_CASE("q -> 1 recovers the classical sequences")
    {
        auto t = QExpTable::build(14);
        auto c = ExpTable::build(14);
        for (unsigned long n = 1; n <= 14; ++n) {
            CAPTURE(n);
            CHECK(t.u[n - 1].eval(Integer(1)) == c.u[n - 1]);
            CHECK(t.r[n - 1].eval(Integer(1)) == c.r[n - 1]);
            CHECK(t.c[n - 1].eval(Integer(1)) == c.c[n - 1]);
            CHECK(t.e[n - 1].eval(Rational(1)) == c.e[n - 1]);
        }
        CHECK(check_q_degenerations(16, 16).passed());
    }

    TEST_CASE("expansion modulo q^2")
    {
        CHECK(mod_q2_closed_form(1) == IntPoly(1));
        CHECK(mod_q2_closed_form(2) == IntPoly({1, -1}));
        CHECK(mod_q2_closed_form(8) == IntPoly({1, -4}));
        CHECK(mod_q2_closed_form(16) == IntPoly({1, -8}));
        CHECK(mod_q2_closed_form(6) == IntPoly(0));
        CHECK(mod_q2_closed_form(9) == -q1);
        auto g = mod_q2_expansion(32);
        REQUIRE(g.size() == 32);
        for (unsigned long n = 1; n <= 32; ++n) {
            CAPTURE(n);
            CHECK(g[n - 1].rep() == mod_q2_closed_form(n));
        }
        CHECK(check_thm45(32).passed());
    }

    TEST_CASE("product identity and log coefficients")
    {
        CHECK(check_reciprocal_identity(10).passed());
        CHECK(check_log_coefficients(12).passed());
    }
}

#include <doctest.h>

#include <numeric>

#include "ppx/errors.hpp"
#include "ppx/intpoly.hpp"
#include "ppx/modint.hpp"
#include "ppx/quotient.hpp"
#include "ppx/rational.hpp"
#include "ppx/ratfunc.hpp"
#include "test_util.hpp"

using namespace ppx;
using ppx::testing::q_integer;

TEST_SUITE("ring_core")
{
    TEST_CASE("integer arithmetic does not overflow")
    {
        Integer f = factorial(30);
        CHECK(f.str() == "265252859812191058636308480000000");
        CHECK((f * f - f * f).is_zero());
        CHECK(Integer("-0").sign() == 0);
        CHECK(Integer("-0") == Integer(0));
        CHECK_THROWS_AS(Integer("12a"), std::invalid_argument);
        CHECK(divexact(Integer(91), Integer(7)) == Integer(13));
        CHECK_THROWS_AS(divexact(Integer(91), Integer(6)), InexactDivision);
        CHECK(mod_floor(Integer(-24), Integer(5)) == Integer(1));
    }

    TEST_CASE("rational canonical form")
    {
        Rational r(Integer(6), Integer(-4));
        CHECK(r.num() == Integer(-3));
        CHECK(r.den() == Integer(2));
        CHECK(Rational(Integer(0), Integer(-7)).den() == Integer(1));
        CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
        CHECK(Rational::parse("13/72") == Rational(Integer(13), Integer(72)));
        CHECK(Rational::parse("-5") == Rational(-5));
        CHECK(Rational(Integer(1), Integer(3)) < Rational(Integer(1), Integer(2)));
        CHECK(pow(Rational(Integer(-2), Integer(3)), 3).str() == "-8/27");
    }

    TEST_CASE("rational results are always reduced")
    {
        for (int trial = 0; trial < 500; ++trial) {
            Rational a = ppx::testing::random_rational();
            Rational b = ppx::testing::random_rational();
            for (const Rational& r : {a + b, a - b, a * b}) {
                CHECK(r.den().sign() > 0);
                CHECK(gcd(r.num(), r.den()).is_one());
            }
            // Structural equality agrees with cross-multiplication.
            CHECK(((a + b) == (b + a)));
            CHECK((a * b - b * a).is_zero());
        }
    }

    TEST_CASE("poly_gcd examples")
    {
        CHECK(poly_gcd(q_integer(4), q_integer(6)) == q_integer(2));
        IntPoly f{-2, -4};
        CHECK(poly_gcd(f, IntPoly()) == IntPoly{1, 2});
        CHECK(poly_gcd(IntPoly(), f) == IntPoly{1, 2});
        CHECK(poly_gcd(IntPoly{1, 1}, IntPoly{1, 0, -1}) == IntPoly{1, 1});
        CHECK_THROWS_AS(poly_gcd(IntPoly(), IntPoly()), std::domain_error);
    }

    TEST_CASE("gcd([j],[n]) = [gcd(j,n)] for j, n <= 30")
    {
        // q^g - 1 divides q^j - 1 and q^n - 1 exactly when g | j and g | n.
        for (unsigned long j = 1; j <= 30; ++j) {
            for (unsigned long n = 1; n <= 30; ++n) {
                CHECK(poly_gcd(q_integer(j), q_integer(n)) == q_integer(std::gcd(j, n)));
            }
        }
    }

    TEST_CASE("poly_gcd of random products recovers the common factor")
    {
        for (int trial = 0; trial < 200; ++trial) {
            IntPoly common = ppx::testing::random_nonzero_poly(3).primitive_part();
            IntPoly a = ppx::testing::random_nonzero_poly(3) * common;
            IntPoly b = ppx::testing::random_nonzero_poly(3) * common;
            IntPoly g = poly_gcd(a, b);
            CHECK(poly_divides(g, a));
            CHECK(poly_divides(g, b));
            CHECK(poly_divides(common, g));
            CHECK(g.lc().sign() > 0);
            CHECK(g.content().is_one());
        }
    }

    TEST_CASE("poly_divexact examples")
    {
        CHECK(poly_divexact(IntPoly{1, 0, 0, -1}, IntPoly{1, -1}) == IntPoly{1, 1, 1});
        CHECK(poly_divexact(IntPoly{0, 1, 1}, IntPoly{1, 1}) == IntPoly{0, 1});
        CHECK_THROWS_AS(poly_divexact(IntPoly{1, 0, 1}, IntPoly{1, 1}), InexactDivision);
        CHECK_THROWS_AS(poly_divexact(IntPoly{1, 2}, IntPoly{0, 2}), InexactDivision);
        CHECK_THROWS_AS(poly_divexact(IntPoly{1}, IntPoly()), std::domain_error);
    }

    TEST_CASE("poly_divexact(a*b, b) = a")
    {
        for (int trial = 0; trial < 300; ++trial) {
            IntPoly a = ppx::testing::random_poly(6);
            IntPoly b = ppx::testing::random_nonzero_poly(4);
            CHECK(poly_divexact(a * b, b) == a);
        }
    }

    TEST_CASE("cyclotomic polynomials")
    {
        CHECK(cyclotomic(1) == IntPoly{-1, 1});
        CHECK(cyclotomic(2) == IntPoly{1, 1});
        CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
        CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
        for (unsigned long m = 1; m <= 30; ++m) {
            IntPoly product(1);
            for (unsigned long d = 1; d <= m; ++d) {
                if (m % d == 0) product *= cyclotomic(d);
            }
            CHECK(product == IntPoly::monomial(m) - IntPoly(1));
            CHECK(cyclotomic(m).lc().is_one());
        }
        CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
    }

    TEST_CASE("ratfunc_subst_inverse")
    {
        CHECK(ratfunc_subst_inverse(RatFunc(IntPoly{0, 1}, IntPoly{1, 1})) == RatFunc(IntPoly(1), IntPoly{1, 1}));
        CHECK(ratfunc_subst_inverse(RatFunc(1)) == RatFunc(1));
        RatFunc e3(IntPoly{0, -1}, q_integer(3));
        CHECK(ratfunc_subst_inverse(e3) == e3);
        CHECK(ratfunc_subst_inverse(RatFunc(IntPoly::monomial(2))) == RatFunc(IntPoly(1), IntPoly::monomial(2)));
        CHECK(ratfunc_subst_inverse(RatFunc()) == RatFunc());
    }

    TEST_CASE("ratfunc_subst_inverse is an involution")
    {
        for (int trial = 0; trial < 200; ++trial) {
            RatFunc f = ppx::testing::random_ratfunc();
            CHECK(ratfunc_subst_inverse(ratfunc_subst_inverse(f)) == f);
        }
    }

    TEST_CASE("ratfunc normal form")
    {
        RatFunc f(IntPoly{2, 2}, IntPoly{-4, 0, 4});  // 2(1+q) / (4(q-1)(q+1))
        CHECK(f.num() == IntPoly(1));
        CHECK(f.den() == IntPoly{-2, 2});
        CHECK(RatFunc(IntPoly{0, 3}, IntPoly(-6)) == RatFunc(IntPoly{0, -1}, IntPoly(2)));
        CHECK_THROWS_AS(RatFunc(IntPoly(1), IntPoly()), std::domain_error);
        for (int trial = 0; trial < 200; ++trial) {
            RatFunc a = ppx::testing::random_ratfunc();
            RatFunc b = ppx::testing::random_ratfunc();
            RatFunc s = a + b;
            CHECK(s.den().lc().sign() > 0);
            if (!s.is_zero()) CHECK(poly_gcd(s.num(), s.den()).is_constant());
            CHECK(gcd(s.num().content(), s.den().content()).is_one());
            CHECK(s - b == a);
            if (!b.is_zero()) CHECK((a * b) / b == a);
        }
    }

    TEST_CASE("poly_eval_rational")
    {
        CHECK(q_integer(3).eval(Rational(1)) == Rational(3));
        IntPoly u6 = pow(q_integer(2), 2) * q_integer(3) * q_integer(6);
        CHECK(u6.eval(Rational(1)) == Rational(72));
        CHECK(IntPoly{1, -1, 1}.eval(Rational(-1)) == Rational(3));
        CHECK(IntPoly{1, 1}.eval(Rational(Integer(1), Integer(2))) == Rational(Integer(3), Integer(2)));
        CHECK(IntPoly().eval(Rational(5)) == Rational(0));
    }

    TEST_CASE("quotient_reduce")
    {
        CHECK(quotient_reduce(IntPoly{0, -1, -1}, cyclotomic(2)).is_zero());
        CHECK(quotient_reduce(IntPoly::monomial(3), IntPoly::monomial(2)).is_zero());
        CHECK(quotient_reduce(IntPoly{1, 3}, IntPoly{1, 1}).rep() == IntPoly(-2));
        CHECK_THROWS_AS(quotient_reduce(IntPoly{1, 3}, IntPoly{1, 2}), std::invalid_argument);
        CHECK_THROWS_AS(quotient_reduce(IntPoly{1, 3}, IntPoly(1)), std::invalid_argument);
    }

    TEST_CASE("quotient ring arithmetic matches evaluation at a root")
    {
        // Z[q]/(q+1) is Z via q -> -1.
        const IntPoly phi2 = cyclotomic(2);
        for (int trial = 0; trial < 100; ++trial) {
            IntPoly a = ppx::testing::random_poly(6);
            IntPoly b = ppx::testing::random_poly(6);
            QuotientElem x = quotient_reduce(a, phi2);
            QuotientElem y = quotient_reduce(b, phi2);
            CHECK((x * y).rep() == IntPoly((a * b).eval(Integer(-1))));
            CHECK((x + y).rep() == IntPoly((a + b).eval(Integer(-1))));
        }
    }

    TEST_CASE("quotient inverses")
    {
        auto inv = quotient_reduce(IntPoly{1, 1}, IntPoly::monomial(2)).try_inverse();
        REQUIRE(inv.has_value());
        CHECK(inv->rep() == IntPoly{1, -1});

        QuotientElem two_at_zeta3 = quotient_reduce(IntPoly{1, 1}, cyclotomic(3));
        auto inv3 = two_at_zeta3.try_inverse();
        REQUIRE(inv3.has_value());
        CHECK((two_at_zeta3 * *inv3).rep() == IntPoly(1));

        CHECK_FALSE(quotient_reduce(IntPoly(2), cyclotomic(3)).try_inverse().has_value());
        CHECK_FALSE(quotient_reduce(IntPoly{1, 1}, cyclotomic(2)).try_inverse().has_value());
    }

    TEST_CASE("modint")
    {
        ModInt a(Integer(-24), Integer(5));
        CHECK(a.residue() == Integer(1));
        CHECK((a * ModInt(Integer(3), Integer(5))).residue() == Integer(3));
        CHECK_THROWS_AS(ModInt(Integer(1), Integer(0)), std::invalid_argument);
        CHECK_THROWS_AS(a + ModInt(Integer(1), Integer(7)), std::invalid_argument);
    }
}

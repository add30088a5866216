#include <doctest.h>

#include "ppx/arith.hpp"
#include "ppx/expseq.hpp"
#include "ppx/ppe.hpp"
#include "ppx/qexpseq.hpp"
#include "test_util.hpp"

using namespace ppx;
using QS = TruncatedSeries<Rational>;

namespace {

Rational frac(long a, long b) { return Rational(Integer(a), Integer(b)); }

} // namespace

TEST_SUITE("ppe")
{
    TEST_CASE("geometric series expands into dyadic factors")
    {
        auto g = ppe_expand(QS::generate(8, [](std::size_t) { return Rational(1); }));
        for (std::size_t n = 1; n <= 8; ++n) {
            CHECK(g.factor(n) == Rational(is_power_of_two(n) ? 1 : 0));
        }
    }

    TEST_CASE("exp expands into the tabulated factors")
    {
        auto g = ppe_expand(exp_series(8));
        const std::vector<Rational> expected = {Rational(1), frac(1, 2), frac(-1, 3), frac(3, 8),
                                                frac(-1, 5), frac(13, 72), frac(-1, 7), frac(27, 128)};
        CHECK(g.factors() == expected);
    }

    TEST_CASE("1 + x is its own expansion")
    {
        for (std::size_t order : {1u, 4u, 9u}) {
            std::vector<Rational> c(order + 1, Rational(0));
            c[0] = Rational(1);
            c[1] = Rational(1);
            auto g = ppe_expand(QS(order, c));
            CHECK(g.factor(1) == Rational(1));
            for (std::size_t n = 2; n <= order; ++n) CHECK(g.factor(n).is_zero());
        }
    }

    TEST_CASE("ppe_expand requires constant term 1")
    {
        CHECK_THROWS_AS(ppe_expand(QS::constant(3, Rational(2))), std::domain_error);
    }

    TEST_CASE("ppe_contract examples")
    {
        std::vector<Rational> g(8, Rational(0));
        for (std::size_t k : {1u, 2u, 4u, 8u}) g[k - 1] = Rational(1);
        CHECK(ppe_contract(ProductExpansion<Rational>(g, Rational(1))) ==
              QS::generate(8, [](std::size_t) { return Rational(1); }));

        ProductExpansion<Rational> zero(std::vector<Rational>(5, Rational(0)), Rational(1));
        CHECK(ppe_contract(zero) == QS::constant(5, Rational(1)));

        auto eq = exp_q_series(7);
        CHECK(ppe_contract(ppe_expand(eq)) == eq);
    }

    TEST_CASE("round trip over Rational and RatFunc")
    {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t order = static_cast<std::size_t>(ppx::testing::uniform(0, 10));
            auto f = QS::generate(order, [](std::size_t n) {
                return n == 0 ? Rational(1) : ppx::testing::random_rational();
            });
            CHECK(ppe_contract(ppe_expand(f)) == f);
        }
        for (int trial = 0; trial < 6; ++trial) {
            std::size_t order = static_cast<std::size_t>(ppx::testing::uniform(0, 10));
            auto f = TruncatedSeries<RatFunc>::generate(order, [](std::size_t n) {
                return n == 0 ? RatFunc(1) : ppx::testing::random_ratfunc(2);
            });
            CHECK(ppe_contract(ppe_expand(f)) == f);
        }
    }

    TEST_CASE("perturbing one factor changes exactly from its own degree on")
    {
        auto p = ppe_expand(exp_series(9));
        auto base = ppe_contract(p);
        for (std::size_t k = 1; k <= 9; ++k) {
            auto g = p.factors();
            g[k - 1] += Rational(1);
            auto moved = ppe_contract(ProductExpansion<Rational>(g, Rational(1)));
            for (std::size_t n = 0; n < k; ++n) CHECK(moved[n] == base[n]);
            CHECK(moved[k] != base[k]);
        }
    }

    TEST_CASE("expansion works over rings without division")
    {
        // Over Z/7 and Z[q]/(q^2), no division is ever needed.
        const Integer seven(7);
        auto f = TruncatedSeries<ModInt>::generate(10, [&](std::size_t n) { return ModInt(Integer(static_cast<long>(n * n + 1)), seven); });
        CHECK(ppe_contract(ppe_expand(f)) == f);

        auto mod = std::make_shared<const IntPoly>(IntPoly::monomial(2));
        auto h = TruncatedSeries<QuotientElem>::generate(10, [&](std::size_t n) {
            return QuotientElem(IntPoly{1, static_cast<long>(n)}, mod);
        });
        CHECK(ppe_contract(ppe_expand(h)) == h);
    }

    TEST_CASE("expansions agree with the closed recursions")
    {
        auto ex = ppe_expand(exp_series(24));
        auto e = e_seq(24);
        for (std::size_t n = 1; n <= 24; ++n) CHECK(ex.factor(n) == e[n - 1]);

        auto eq = ppe_expand(exp_q_series(10));
        auto big = ppe_expand(big_exp_q_series(10));
        auto e_q = eq_seq(10);
        auto big_e_q = big_eq_seq(10);
        for (std::size_t n = 1; n <= 10; ++n) {
            CHECK(eq.factor(n) == e_q[n - 1]);
            CHECK(big.factor(n) == big_e_q[n - 1]);
        }
    }
}

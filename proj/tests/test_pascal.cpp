#include <doctest.h>

#include "ppx/expseq.hpp"
#include "ppx/pascal.hpp"
#include "ppx/qexpseq.hpp"

using namespace ppx;

namespace {

IntMatrix rows(std::vector<std::vector<long>> r)
{
    const std::size_t n = r.size();
    return IntMatrix::generate(n, Integer(0), [&](std::size_t i, std::size_t j) { return Integer(r[i][j]); });
}

IntMatrix product_of_factors(std::size_t n, const std::vector<Integer>& c)
{
    IntMatrix acc = IntMatrix::identity(n, Integer(1));
    for (std::size_t k = 1; k < n; ++k) {
        acc = acc * (IntMatrix::identity(n, Integer(1)) + c[k - 1] * h_nk(n, k));
    }
    return acc;
}

} // namespace

TEST_SUITE("pascal")
{
    TEST_CASE("P_4 and its factorization")
    {
        CHECK(pascal_matrix(4) == rows({{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}}));
        auto c = factor_pascal(4);
        CHECK(c == std::vector<Integer>{Integer(1), Integer(1), Integer(-2)});
        CHECK(product_of_factors(4, c) == pascal_matrix(4));
    }

    TEST_CASE("factorization recovers c_n")
    {
        auto c = c_seq(11);
        for (std::size_t n = 2; n <= 12; ++n) {
            auto f = factor_pascal(n);
            CHECK(f == std::vector<Integer>(c.begin(), c.begin() + static_cast<long>(n - 1)));
            CHECK(product_of_factors(n, f) == pascal_matrix(n));
        }
    }

    TEST_CASE("H_n generates the divided powers")
    {
        const std::size_t n = 7;
        auto h = h_matrix(n);
        CHECK(h(3, 2) == Integer(3));
        CHECK(h(3, 1) == Integer(0));
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(matrix_pow(h, k, Integer(1)) == factorial(k) * h_nk(n, k));
        }
        CHECK(matrix_pow(h, n, Integer(1)).is_zero());
        // H_{k-1} H_1 = k H_k.
        for (std::size_t k = 2; k < n; ++k) {
            CHECK(h_nk(n, k - 1) * h_nk(n, 1) == Integer(static_cast<long>(k)) * h_nk(n, k));
        }
        IntMatrix sum(n, Integer(0));
        for (std::size_t k = 0; k < n; ++k) sum = sum + h_nk(n, k);
        CHECK(sum == pascal_matrix(n));
    }

    TEST_CASE("unit lower inverse of P_n has alternating signs")
    {
        auto inv = unit_lower_inverse(pascal_matrix(6));
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                Integer expected = binomial(i, j);
                if ((i - j) % 2 == 1) expected = -expected;
                CHECK(inv(i, j) == expected);
            }
        }
        CHECK_THROWS_AS(unit_lower_inverse(h_matrix(3)), NotInvertible);
    }

    TEST_CASE("doubled Pascal matrix")
    {
        auto p = pascal_m(6, 2);
        CHECK(p == rows({{1, 0, 0, 0, 0, 0},
                         {0, 1, 0, 0, 0, 0},
                         {1, 0, 1, 0, 0, 0},
                         {0, 1, 0, 1, 0, 0},
                         {1, 0, 2, 0, 1, 0},
                         {0, 1, 0, 2, 0, 1}}));
        CHECK(pascal_m(5, 1) == pascal_matrix(5));
        auto c = factor_pascal_m(9, 2);
        CHECK(c == std::vector<Integer>{Integer(1), Integer(1), Integer(-2), Integer(9)});
        CHECK(check_pascal_m(10, 3).passed());
    }

    TEST_CASE("q-Pascal matrix")
    {
        auto p = q_pascal(4);
        CHECK(p(2, 1) == IntPoly({1, 1}));
        CHECK(p(3, 1) == IntPoly({1, 1, 1}));
        CHECK(p(3, 0) == IntPoly(1));
        CHECK(p(1, 2).is_zero());
        CHECK(q_h(4)(3, 2) == IntPoly({1, 1, 1}));
        auto cq = c_q_seq(7);
        CHECK(factor_q_pascal(8) == cq);
        CHECK(p.map([](const IntPoly& f) { return f.eval(Integer(1)); }) == pascal_matrix(4));
        CHECK(check_q_pascal(12).passed());
    }

    TEST_CASE("c_n(q) at roots of unity")
    {
        for (std::size_t m : {2u, 3u}) {
            auto phi = cyclotomic(m);
            auto cq = c_q_seq(12);
            auto c = c_seq(12);
            for (std::size_t n = m; n <= 12; ++n) {
                CAPTURE(m);
                CAPTURE(n);
                IntPoly reduced = quotient_reduce(cq[n - 1], phi).rep();
                if (n % m == 0) {
                    CHECK(reduced == IntPoly(c[n / m - 1]));
                } else {
                    CHECK(reduced.is_zero());
                }
            }
            CHECK(theorem_4_3_check(12, m).passed());
        }
    }

    TEST_CASE("matrix identities in Z[q]/Phi_m")
    {
        for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{6, 2}, {8, 2}, {9, 3}}) {
            CAPTURE(n);
            CAPTURE(m);
            auto r28 = check_eq28(n, m);
            auto r26 = check_eq26(n, m);
            CHECK(!r28.checks.empty());
            CHECK(!r26.checks.empty());
            CHECK(r28.passed());
            CHECK(r26.passed());
        }
    }

    TEST_CASE("Carlitz congruences")
    {
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            auto r = carlitz_check(p, 20);
            CHECK(!r.checks.empty());
            CHECK(r.passed());
        }
        auto c = c_seq(20);
        CHECK(mod_floor(c[6], Integer(3)) == Integer(0));
        CHECK(mod_floor(c[8] - c[2], Integer(3)) == Integer(0));
    }

    TEST_CASE("check_pascal passes")
    {
        auto r = check_pascal(12);
        CHECK(!r.checks.empty());
        CHECK(r.passed());
    }
}

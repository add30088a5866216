#include <doctest.h>

#include "ppx/arith.hpp"
#include "ppx/expseq.hpp"
#include "ppx/ppe.hpp"

using namespace ppx;

namespace {

Rational frac(long a, long b) { return Rational(Integer(a), Integer(b)); }

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST_SUITE("expseq")
{
    TEST_CASE("golden first terms")
    {
        const std::vector<Rational> e = {Rational(1), frac(1, 2), frac(-1, 3), frac(3, 8),
                                         frac(-1, 5), frac(13, 72), frac(-1, 7), frac(27, 128)};
        CHECK(e_seq(8) == e);
        CHECK(c_seq(8) == ints({1, 1, -2, 9, -24, 130, -720, 8505}));
        CHECK(u_seq(8) == ints({1, 2, 3, 8, 5, 72, 7, 128}));
        CHECK(r_seq(8) == ints({1, 1, -1, 3, -1, 13, -1, 27}));
        CHECK(e_seq(1) == std::vector<Rational>{Rational(1)});
    }

    TEST_CASE("Borwein-Lou spot values")
    {
        auto c = c_seq(9);
        CHECK(c[8] == Integer(-35840));
        CHECK(c[8].abs() < factorial(8));
        CHECK(c[3] == Integer(9));
        CHECK(c[5] == Integer(130));
    }

    TEST_CASE("a_n for exp(-x)")
    {
        auto a = a_seq(6);
        CHECK(a[0] == Rational(-1));
        CHECK(a[1] == frac(1, 2));
        CHECK(a[2] == frac(1, 3));
        auto direct = ppe_expand(series_negate_argument(exp_series(30)));
        auto a30 = a_seq(30);
        for (std::size_t n = 1; n <= 30; ++n) CHECK(direct.factor(n) == a30[n - 1]);
    }

    TEST_CASE("gcd(u_12, r_12) = 3")
    {
        CHECK(gcd_u_r(12) == Integer(3));
        CHECK(gcd_u_r(7) == Integer(1));
    }

    TEST_CASE("prime closed forms")
    {
        auto table = ExpTable::build(64);
        for (unsigned long p = 3; p <= 64; ++p) {
            if (!is_prime(p)) continue;
            CAPTURE(p);
            CHECK(table.e[p - 1] == Rational(Integer(-1), Integer(static_cast<long>(p))));
            CHECK(table.c[p - 1] == -factorial(p - 1));
            CHECK(table.r[p - 1] == Integer(-1));
            if (p * p <= 64) {
                CHECK(table.r[p * p - 1] == Integer(1) - pow(Integer(static_cast<long>(p)), p - 1));
            }
        }
        // r_15 with p = 3, q = 5: 3^4 + 5^2 - 3^4 5^2.
        CHECK(table.r[14] == Integer(81 + 25 - 81 * 25));
        CHECK(table.r[14] == Integer(-1919));
        CHECK(table.u[14] == Integer(243 * 125));
    }

    TEST_CASE("u_n has both product forms")
    {
        auto u = u_seq(40);
        for (unsigned long n = 1; n <= 40; ++n) {
            Integer direct(1);
            for (unsigned long k = 1; k <= n; ++k) direct *= Integer(static_cast<long>(gcd_ul(k, n)));
            CHECK(u[n - 1] == direct);
        }
    }

    TEST_CASE("relations between the tables")
    {
        auto t = ExpTable::build(40);
        for (unsigned long n = 1; n <= 40; ++n) {
            CAPTURE(n);
            const Integer nf = factorial(n);
            CHECK(t.e[n - 1] == Rational(t.c[n - 1], nf));
            CHECK(t.e[n - 1] == Rational(t.r[n - 1], t.u[n - 1]));
            CHECK(t.r[n - 1] * nf == t.c[n - 1] * t.u[n - 1]);
        }
    }

    TEST_CASE("suite checks pass at full scale")
    {
        CHECK(check_kolberg(64).passed());
        CHECK(check_borwein_lou(64).passed());
        CHECK(check_divisibility(64).passed());
        CHECK(check_closed_forms(64).passed());
        CHECK(check_integrality(64).passed());
    }

    TEST_CASE("suite checks are not vacuous")
    {
        CHECK(check_kolberg(20).checks.size() >= 19);
        CHECK(check_borwein_lou(20).checks.size() >= 19);
        CHECK(!check_divisibility(12).checks.empty());
        CHECK(!check_closed_forms(25).checks.empty());
    }
}

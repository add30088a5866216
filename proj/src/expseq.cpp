#include "ppx/expseq.hpp"

#include <stdexcept>
#include <string>

#include "ppx/arith.hpp"
#include "ppx/errors.hpp"
#include "ppx/ppe.hpp"

namespace ppx {

namespace {

void require_positive(unsigned long N)
{
    if (N < 1) throw std::invalid_argument("sequence length must be at least 1");
}

std::string n_param(unsigned long n) { return "n=" + std::to_string(n); }

} // namespace

TruncatedSeries<Rational> exp_series(unsigned long N)
{
    return TruncatedSeries<Rational>::generate(N, [](std::size_t n) { return Rational(Integer(1), factorial(n)); });
}

std::vector<Rational> e_seq(unsigned long N)
{
    require_positive(N);
    std::vector<Rational> e;
    e.reserve(N);
    e.emplace_back(1);
    for (unsigned long n = 2; n <= N; ++n) {
        Rational sum;
        for (unsigned long d : divisors(n)) {
            if (d == 1) continue;
            Rational term = pow(e[n / d - 1], d) / Rational(static_cast<long>(d));
            sum += (d % 2 == 0) ? term : -term;
        }
        e.push_back(std::move(sum));
    }
    return e;
}

std::vector<Integer> c_seq(unsigned long N)
{
    auto e = e_seq(N);
    std::vector<Integer> c;
    c.reserve(N);
    for (unsigned long n = 1; n <= N; ++n) {
        Rational v = e[n - 1] * Rational(factorial(n));
        if (!v.is_integer()) {
            throw TheoremViolation("c_" + std::to_string(n) + " = " + v.str() + " is not an integer");
        }
        c.push_back(v.num());
    }
    return c;
}

std::vector<Rational> a_seq(unsigned long N)
{
    auto e = e_seq(N);
    std::vector<Rational> a;
    a.reserve(N);
    for (unsigned long n = 1; n <= N; ++n) a.push_back(n % 2 == 0 ? e[n - 1] : -e[n - 1]);

    auto direct = ppe_expand(series_negate_argument(exp_series(N)));
    for (unsigned long n = 1; n <= N; ++n) {
        if (direct.factor(n) != a[n - 1]) {
            throw TheoremViolation("a_" + std::to_string(n) + ": sign rule gives " + a[n - 1].str() +
                                   " but expanding exp(-x) gives " + direct.factor(n).str());
        }
    }
    return a;
}

std::vector<Integer> u_seq(unsigned long N)
{
    require_positive(N);
    std::vector<Integer> u;
    u.reserve(N);
    for (unsigned long n = 1; n <= N; ++n) {
        Integer by_gcd(1);
        for (unsigned long k = 1; k <= n; ++k) by_gcd *= Integer(gcd_ul(k, n));
        Integer by_phi(1);
        for (unsigned long d : divisors(n)) by_phi *= pow(Integer(d), euler_phi(n / d));
        if (by_gcd != by_phi) {
            throw TheoremViolation("u_" + std::to_string(n) + ": gcd product " + by_gcd.str() +
                                   " differs from totient product " + by_phi.str());
        }
        u.push_back(std::move(by_gcd));
    }
    return u;
}

std::vector<Integer> r_seq(unsigned long N)
{
    auto u = u_seq(N);
    auto c = c_seq(N);
    std::vector<Integer> r;
    r.reserve(N);
    r.emplace_back(1);
    for (unsigned long n = 2; n <= N; ++n) {
        Integer sum(0);
        for (unsigned long d : divisors(n)) {
            if (d == 1) continue;
            Integer denom = Integer(d) * pow(u[n / d - 1], d);
            if (!divides(denom, u[n - 1])) {
                throw TheoremViolation("divisibility fails: " + std::to_string(d) + "*u_" + std::to_string(n / d) +
                                       "^" + std::to_string(d) + " does not divide u_" + std::to_string(n));
            }
            Integer term = divexact(u[n - 1], denom) * pow(r[n / d - 1], d);
            sum += (d % 2 == 0) ? term : -term;
        }
        if (sum * factorial(n) != c[n - 1] * u[n - 1]) {
            throw TheoremViolation("r_" + std::to_string(n) + " * n! != c_n * u_n");
        }
        r.push_back(std::move(sum));
    }
    return r;
}

ExpTable ExpTable::build(unsigned long N)
{
    ExpTable t;
    t.N = N;
    t.e = e_seq(N);
    t.c = c_seq(N);
    t.a = a_seq(N);
    t.u = u_seq(N);
    t.r = r_seq(N);
    return t;
}

Report check_kolberg(unsigned long N)
{
    if (N < 2) throw std::invalid_argument("kolberg check needs N >= 2");
    Report rep{"kolberg", {}};
    auto a = a_seq(N);
    auto e = e_seq(N);
    for (unsigned long n = 2; n <= N; ++n) {
        const Rational& an = a[n - 1];
        Rational bound(Integer(2), Integer(static_cast<long>(n)));
        bool ok = an.sign() > 0 && an < bound;
        rep.add("a_n_bounds", n_param(n), ok, "0 < a_n < " + bound.str(), an.str());
        Rational signed_e = (n % 2 == 0) ? e[n - 1] : -e[n - 1];
        rep.add("sign_law", n_param(n), signed_e.sign() > 0, "(-1)^n e_n > 0", signed_e.str());
    }
    return rep;
}

Report check_borwein_lou(unsigned long N)
{
    if (N < 2) throw std::invalid_argument("borwein-lou check needs N >= 2");
    Report rep{"borwein-lou", {}};
    auto c = c_seq(N);
    for (unsigned long n = 2; n <= N; ++n) {
        Integer bound = factorial(n - 1);
        const Integer& cn = c[n - 1];
        if (n % 2 == 1) {
            rep.add("odd_upper", n_param(n), cn.abs() <= bound, "|c_n| <= " + bound.str(), cn.str());
        } else {
            rep.add("even_lower", n_param(n), cn >= bound, "c_n >= " + bound.str(), cn.str());
        }
    }
    return rep;
}

Report check_divisibility(unsigned long N)
{
    Report rep{"divisibility", {}};
    auto u = u_seq(N);
    for (unsigned long n = 2; n <= N; ++n) {
        for (unsigned long d : divisors(n)) {
            if (d == 1) continue;
            Integer denom = Integer(d) * pow(u[n / d - 1], d);
            rep.add("d_u_pow_divides_u", n_param(n) + ",d=" + std::to_string(d), divides(denom, u[n - 1]),
                    denom.str() + " | " + u[n - 1].str(), divides(denom, u[n - 1]) ? "divides" : "does not divide");
        }
    }
    return rep;
}

Report check_closed_forms(unsigned long N)
{
    Report rep{"closed-forms", {}};
    auto t = ExpTable::build(N);
    std::vector<unsigned long> odd_primes;
    for (unsigned long p = 3; p <= N; ++p) {
        if (is_prime(p)) odd_primes.push_back(p);
    }
    for (unsigned long p : odd_primes) {
        auto pl = static_cast<long>(p);
        std::string par = "p=" + std::to_string(p);
        rep.expect_equal("e_p", par, Rational(Integer(-1), Integer(pl)).str(), t.e[p - 1].str());
        rep.expect_equal("c_p", par, (-factorial(p - 1)).str(), t.c[p - 1].str());
        rep.expect_equal("u_p", par, std::to_string(p), t.u[p - 1].str());
        rep.expect_equal("r_p", par, "-1", t.r[p - 1].str());
        if (p * p <= N) {
            Integer expected = Integer(1) - pow(Integer(pl), p - 1);
            rep.expect_equal("r_p2", par, expected.str(), t.r[p * p - 1].str());
        }
    }
    for (std::size_t i = 0; i < odd_primes.size(); ++i) {
        for (std::size_t j = i + 1; j < odd_primes.size(); ++j) {
            unsigned long p = odd_primes[i];
            unsigned long q = odd_primes[j];
            if (p * q > N) break;
            std::string par = "p=" + std::to_string(p) + ",q=" + std::to_string(q);
            Integer P(static_cast<long>(p));
            Integer Q(static_cast<long>(q));
            rep.expect_equal("u_pq", par, (pow(P, q) * pow(Q, p)).str(), t.u[p * q - 1].str());
            Integer a = pow(P, q - 1);
            Integer b = pow(Q, p - 1);
            rep.expect_equal("r_pq", par, (a + b - a * b).str(), t.r[p * q - 1].str());
        }
    }
    return rep;
}

Report check_integrality(unsigned long N)
{
    Report rep{"integrality", {}};
    auto e = e_seq(N);
    auto u = u_seq(N);
    for (unsigned long n = 1; n <= N; ++n) {
        Rational c = e[n - 1] * Rational(factorial(n));
        Rational r = e[n - 1] * Rational(u[n - 1]);
        rep.add("c_n_integer", n_param(n), c.is_integer(), "integer", c.str());
        rep.add("r_n_integer", n_param(n), r.is_integer(), "integer", r.str());
    }
    try {
        auto c = c_seq(N);
        auto r = r_seq(N);
        for (unsigned long n = 1; n <= N; ++n) {
            Integer lhs = r[n - 1] * factorial(n);
            Integer rhs = c[n - 1] * u[n - 1];
            rep.add("r_n_fact_eq_c_n_u_n", n_param(n), lhs == rhs, rhs.str(), lhs.str());
        }
    } catch (const TheoremViolation& ex) {
        rep.add("recursions", "N=" + std::to_string(N), false, "consistent", ex.what());
    }
    return rep;
}

Integer gcd_u_r(unsigned long n)
{
    auto u = u_seq(n);
    auto r = r_seq(n);
    return gcd(u[n - 1], r[n - 1].abs());
}

} // namespace ppx

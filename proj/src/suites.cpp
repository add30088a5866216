#include "ppx/suites.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "ppx/arith.hpp"
#include "ppx/errors.hpp"
#include "ppx/expseq.hpp"
#include "ppx/pascal.hpp"
#include "ppx/ppe.hpp"
#include "ppx/qexpseq.hpp"

namespace ppx {

namespace {

struct Resolved {
    unsigned long max_n;
    std::optional<unsigned long> m;
    std::optional<unsigned long> p;
};

const std::vector<std::pair<unsigned long, unsigned long>> kRootOfUnityPairs = {{6, 2}, {8, 2}, {9, 3}};

template <Ring R>
void roundtrip_one(Report& rep, const std::string& id, const TruncatedSeries<R>& f)
{
    bool ok = ppe_contract(ppe_expand(f)) == f;
    rep.add(id, "N=" + std::to_string(f.order()), ok, "contract(expand(f)) = f", ok ? "equal" : "differ");
}

template <class T, Ring R>
void compare_factors(Report& rep, const std::string& id, const std::vector<T>& recursion, const ProductExpansion<R>& oracle)
{
    for (std::size_t n = 1; n <= recursion.size(); ++n) {
        rep.expect_equal(id, "n=" + std::to_string(n), oracle.factor(n).str(), recursion[n - 1].str());
    }
}

Report roundtrip_suite(unsigned long N)
{
    Report rep{"roundtrip", {}};
    const auto geometric = TruncatedSeries<Rational>::generate(N, [](std::size_t) { return Rational(1); });
    const auto ex = exp_series(N);
    const auto ex_neg = series_negate_argument(ex);
    const auto eq = exp_q_series(N);
    const auto big_eq = big_exp_q_series(N);

    roundtrip_one(rep, "geometric", geometric);
    roundtrip_one(rep, "exp", ex);
    roundtrip_one(rep, "exp(-x)", ex_neg);
    roundtrip_one(rep, "exp_q", eq);
    roundtrip_one(rep, "Exp_q", big_eq);

    auto geo = ppe_expand(geometric);
    for (unsigned long n = 1; n <= N; ++n) {
        rep.expect_equal("geometric_dyadic", "n=" + std::to_string(n), is_power_of_two(n) ? "1" : "0",
                         geo.factor(n).str());
    }
    compare_factors(rep, "e_n", e_seq(N), ppe_expand(ex));
    compare_factors(rep, "a_n", a_seq(N), ppe_expand(ex_neg));
    compare_factors(rep, "e_n(q)", eq_seq(N), ppe_expand(eq));
    compare_factors(rep, "E_n(q)", big_eq_seq(N), ppe_expand(big_eq));
    return rep;
}

Report merged(const std::string& suite, const std::vector<Report>& parts)
{
    Report rep{suite, {}};
    for (const auto& p : parts) rep.merge(p);
    return rep;
}

using Runner = std::function<Report(const Resolved&)>;

struct SuiteDef {
    SuiteInfo info;
    unsigned long default_max_n;
    Runner run;
};

void require_prime(unsigned long p)
{
    if (!is_prime(p)) throw SuiteUsageError("--p must be prime, got " + std::to_string(p));
}

void require_m(unsigned long m)
{
    if (m < 2 || m > kMaxM) {
        throw SuiteUsageError("--m must be in [2, " + std::to_string(kMaxM) + "], got " + std::to_string(m));
    }
}

Report run_root_of_unity(const Resolved& r, bool explicit_n, Report (*check)(std::size_t, std::size_t),
                         const std::string& suite)
{
    std::vector<Report> parts;
    if (!r.m && !explicit_n) {
        for (auto [n, m] : kRootOfUnityPairs) parts.push_back(check(n, m));
    } else {
        unsigned long m = r.m.value_or(2);
        require_m(m);
        unsigned long n = explicit_n ? r.max_n : 3 * m;
        if (n < m) throw SuiteUsageError("--max-n must be at least m");
        parts.push_back(check(n, m));
    }
    return merged(suite, parts);
}

const std::vector<SuiteDef>& definitions()
{
    static const std::vector<SuiteDef> defs = [] {
        std::vector<SuiteDef> d;
        d.push_back({{"roundtrip", SuiteScale::QPolynomial, "expansion/contraction round trip and oracle agreement"},
                     14, [](const Resolved& r) { return roundtrip_suite(r.max_n); }});
        d.push_back({{"kolberg", SuiteScale::Integer, "0 < a_n < 2/n and the sign law"}, 64,
                     [](const Resolved& r) {
                         if (r.max_n < 2) throw SuiteUsageError("kolberg needs --max-n >= 2");
                         return check_kolberg(r.max_n);
                     }});
        d.push_back({{"borwein-lou", SuiteScale::Integer, "parity inequalities for c_n against (n-1)!"}, 64,
                     [](const Resolved& r) {
                         if (r.max_n < 2) throw SuiteUsageError("borwein-lou needs --max-n >= 2");
                         return check_borwein_lou(r.max_n);
                     }});
        d.push_back({{"divisibility", SuiteScale::Integer, "d u_{n/d}^d | u_n and integrality of c_n, r_n"}, 64,
                     [](const Resolved& r) {
                         return merged("divisibility", {check_divisibility(r.max_n), check_integrality(r.max_n)});
                     }});
        d.push_back({{"closed-forms", SuiteScale::Integer, "prime closed forms for e_p, c_p, r_p, r_p^2, r_pq"}, 64,
                     [](const Resolved& r) { return check_closed_forms(r.max_n); }});
        d.push_back({{"thm41", SuiteScale::QPolynomial, "e_n(q), E_n(q) recursions and odd-index symmetry"}, 14,
                     [](const Resolved& r) {
                         std::vector<Report> parts{check_q_oracle(r.max_n)};
                         if (r.max_n >= 3) parts.push_back(check_odd_symmetry(r.max_n));
                         return merged("thm41", parts);
                     }});
        d.push_back({{"thm42", SuiteScale::QPolynomial, "integrality and leading coefficient of r_n(q)"}, 14,
                     [](const Resolved& r) { return check_thm42(r.max_n); }});
        d.push_back({{"thm43", SuiteScale::QPolynomial, "c_n(q) at primitive m-th roots of unity"}, 12,
                     [](const Resolved& r) {
                         std::vector<unsigned long> ms = r.m ? std::vector<unsigned long>{*r.m}
                                                             : std::vector<unsigned long>{2, 3};
                         std::vector<Report> parts;
                         for (unsigned long m : ms) {
                             require_m(m);
                             if (r.max_n < m) throw SuiteUsageError("thm43 needs --max-n >= m");
                             parts.push_back(theorem_4_3_check(r.max_n, m));
                         }
                         return merged("thm43", parts);
                     }});
        d.push_back({{"cor44", SuiteScale::Integer, "congruences of c_n modulo primes"}, 20,
                     [](const Resolved& r) {
                         std::vector<unsigned long> ps = r.p ? std::vector<unsigned long>{*r.p}
                                                             : std::vector<unsigned long>{2, 3, 5};
                         std::vector<Report> parts;
                         for (unsigned long p : ps) {
                             require_prime(p);
                             if (r.max_n <= p) throw SuiteUsageError("cor44 needs --max-n > p");
                             parts.push_back(carlitz_check(p, r.max_n));
                         }
                         return merged("cor44", parts);
                     }});
        d.push_back({{"thm45", SuiteScale::Integer, "expansion of exp_q(x) over Z[q]/(q^2)"}, 32,
                     [](const Resolved& r) { return check_thm45(r.max_n); }});
        d.push_back({{"eq18", SuiteScale::QPolynomial, "exp_q(-x) Exp_q(x) = 1"}, 10,
                     [](const Resolved& r) { return check_reciprocal_identity(r.max_n); }});
        d.push_back({{"eq21", SuiteScale::QPolynomial, "coefficients of log exp_q(x)"}, 12,
                     [](const Resolved& r) { return check_log_coefficients(r.max_n); }});
        d.push_back({{"eq26", SuiteScale::Matrix, "Pascal matrix at a root of unity vs the m-fold exponential"}, 0,
                     nullptr});
        d.push_back({{"eq28", SuiteScale::Matrix, "truncated divided-power sum at a root of unity"}, 0, nullptr});
        d.push_back({{"pascal", SuiteScale::Matrix, "P_n = exp(H_n) and its unipotent factorization"}, 12,
                     [](const Resolved& r) { return check_pascal(r.max_n); }});
        d.push_back({{"qpascal", SuiteScale::Matrix, "q-Pascal matrix identities and factorization"}, 12,
                     [](const Resolved& r) { return check_q_pascal(r.max_n); }});
        d.push_back({{"pascal-m", SuiteScale::Matrix, "m-fold Pascal matrices"}, 10,
                     [](const Resolved& r) {
                         if (r.m) {
                             if (*r.m < 1 || *r.m > kMaxM) {
                                 throw SuiteUsageError("--m must be in [1, " + std::to_string(kMaxM) + "]");
                             }
                             Report rep = check_pascal_m(r.max_n, *r.m);
                             // check_pascal_m covers 1..m; keep only the requested m.
                             std::erase_if(rep.checks, [&](const Check& c) {
                                 return c.params.find(",m=" + std::to_string(*r.m)) == std::string::npos;
                             });
                             return rep;
                         }
                         return check_pascal_m(r.max_n, kMaxM);
                     }});
        d.push_back({{"degenerations", SuiteScale::QPolynomial, "q -> 1 and q -> 0 specializations"}, 16,
                     [](const Resolved& r) { return check_q_degenerations(std::min(r.max_n, 14UL), r.max_n); }});
        return d;
    }();
    return defs;
}

const SuiteDef* find_def(const std::string& name)
{
    for (const auto& d : definitions()) {
        if (d.info.name == name) return &d;
    }
    return nullptr;
}

} // namespace

const std::vector<SuiteInfo>& suite_catalog()
{
    static const std::vector<SuiteInfo> catalog = [] {
        std::vector<SuiteInfo> c;
        for (const auto& d : definitions()) c.push_back(d.info);
        return c;
    }();
    return catalog;
}

const SuiteInfo* find_suite(const std::string& name)
{
    const SuiteDef* d = find_def(name);
    return d ? &d->info : nullptr;
}

unsigned long default_cap(SuiteScale scale)
{
    switch (scale) {
    case SuiteScale::Integer: return 64;
    case SuiteScale::QPolynomial: return 20;
    case SuiteScale::Matrix: return 12;
    }
    return 0;
}

unsigned long effective_cap(SuiteScale scale, std::optional<unsigned long> override_cap)
{
    return override_cap.value_or(default_cap(scale));
}

Report run_suite(const std::string& name, const SuiteParams& params, std::optional<unsigned long> cap)
{
    const SuiteDef* def = find_def(name);
    if (!def) throw SuiteUsageError("unknown suite: " + name);

    const unsigned long limit = effective_cap(def->info.scale, cap);
    if (params.max_n) {
        if (*params.max_n < 1) throw SuiteUsageError("--max-n must be at least 1");
        if (*params.max_n > limit) {
            throw SuiteUsageError("--max-n " + std::to_string(*params.max_n) + " exceeds the cap " +
                                  std::to_string(limit) + " for suite " + name);
        }
    }
    if (params.p && params.m) throw SuiteUsageError("--m and --p cannot be combined");
    if (params.p && name != "cor44") throw SuiteUsageError("--p only applies to cor44");
    if (params.m && name != "thm43" && name != "eq26" && name != "eq28" && name != "pascal-m") {
        throw SuiteUsageError("--m does not apply to suite " + name);
    }

    Resolved r{params.max_n.value_or(std::min(def->default_max_n, limit)), params.m, params.p};
    try {
        if (name == "eq26") return run_root_of_unity(r, params.max_n.has_value(), check_eq26, "eq26");
        if (name == "eq28") return run_root_of_unity(r, params.max_n.has_value(), check_eq28, "eq28");
        return def->run(r);
    } catch (const TheoremViolation& ex) {
        Report rep{name, {}};
        rep.add("theorem_violation", "max_n=" + std::to_string(r.max_n), false, "no violation", ex.what());
        return rep;
    }
}

Report run_all_suites(std::optional<unsigned long> cap)
{
    std::vector<std::future<Report>> jobs;
    for (const auto& info : suite_catalog()) {
        jobs.push_back(std::async(std::launch::async, [name = info.name, cap] { return run_suite(name, {}, cap); }));
    }
    Report all{"all", {}};
    for (auto& j : jobs) all.merge(j.get());
    return all;
}

} // namespace ppx

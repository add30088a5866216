#include "ppx/pascal.hpp"

#include <stdexcept>
#include <string>

#include "ppx/arith.hpp"
#include "ppx/errors.hpp"
#include "ppx/expseq.hpp"
#include "ppx/modint.hpp"
#include "ppx/qexpseq.hpp"
#include "ppx/ratfunc.hpp"

namespace ppx {

namespace {

std::string nm_param(std::size_t n, std::size_t m) { return "n=" + std::to_string(n) + ",m=" + std::to_string(m); }

std::string nk_param(std::size_t n, std::size_t k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

std::string pass_fail(bool ok) { return ok ? "equal" : "differ"; }

IntMatrix divide_entries(const IntMatrix& m, const Integer& k)
{
    return m.map([&](const Integer& x) { return divexact(x, k); });
}

IntMatrix identity(std::size_t n) { return IntMatrix::identity(n, Integer(1)); }

// c_1..c_{count} from the classical recursion, tolerating count == 0.
std::vector<Integer> c_prefix(std::size_t count) { return count == 0 ? std::vector<Integer>{} : c_seq(count); }

std::vector<IntPoly> cq_prefix(std::size_t count) { return count == 0 ? std::vector<IntPoly>{} : c_q_seq(count); }

void record(Report& rep, const std::string& id, const std::string& params, bool ok)
{
    rep.add(id, params, ok, "equal", pass_fail(ok));
}

} // namespace

IntMatrix pascal_matrix(std::size_t n)
{
    return IntMatrix::generate(n, Integer(0), [](std::size_t i, std::size_t j) { return binomial(i, j); });
}

IntMatrix h_matrix(std::size_t n)
{
    return IntMatrix::generate(n, Integer(0), [](std::size_t i, std::size_t j) {
        return i == j + 1 ? Integer(static_cast<long>(i)) : Integer(0);
    });
}

IntMatrix h_nk(std::size_t n, std::size_t k)
{
    return IntMatrix::generate(n, Integer(0), [k](std::size_t i, std::size_t j) {
        return i == j + k ? binomial(i, k) : Integer(0);
    });
}

std::vector<Integer> factor_pascal(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("factor_pascal needs n >= 2");
    IntMatrix partial = identity(n);
    std::vector<Integer> c;
    c.reserve(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        Integer ck = Integer(1) - partial(k, 0);
        partial = partial * (identity(n) + ck * h_nk(n, k));
        c.push_back(std::move(ck));
    }
    if (partial != pascal_matrix(n)) {
        throw TheoremViolation("product of factors does not reproduce P_" + std::to_string(n));
    }
    auto expected = c_seq(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        if (c[k - 1] != expected[k - 1]) {
            throw TheoremViolation("factor coefficient c_" + std::to_string(k) + " = " + c[k - 1].str() +
                                   " disagrees with the sequence value " + expected[k - 1].str());
        }
    }
    return c;
}

IntMatrix h_m_nk(std::size_t n, std::size_t m, std::size_t k)
{
    if (m == 0) throw std::invalid_argument("m must be positive");
    return IntMatrix::generate(n, Integer(0), [m, k](std::size_t i, std::size_t j) {
        return i == j + m * k ? binomial(i / m, k) : Integer(0);
    });
}

IntMatrix pascal_m(std::size_t n, std::size_t m)
{
    if (m == 0) throw std::invalid_argument("m must be positive");
    IntMatrix sum(n, Integer(0));
    for (std::size_t k = 0; m * k < n; ++k) sum = sum + h_m_nk(n, m, k);
    return sum;
}

std::vector<Integer> factor_pascal_m(std::size_t n, std::size_t m)
{
    if (m == 0) throw std::invalid_argument("m must be positive");
    if (n <= m) throw std::invalid_argument("factor_pascal_m needs n > m");
    const std::size_t kmax = (n - 1) / m;
    IntMatrix partial = identity(n);
    std::vector<Integer> c;
    c.reserve(kmax);
    for (std::size_t k = 1; k <= kmax; ++k) {
        // Entry (mk, 0) of H^{(m)}_{n,k} is 1 and of P^{(m)}_n is C(k, k) = 1.
        Integer ck = Integer(1) - partial(m * k, 0);
        partial = partial * (identity(n) + ck * h_m_nk(n, m, k));
        c.push_back(std::move(ck));
    }
    if (partial != pascal_m(n, m)) {
        throw TheoremViolation("product of factors does not reproduce P^(" + std::to_string(m) + ")_" +
                               std::to_string(n));
    }
    auto expected = c_prefix(kmax);
    if (c != expected) throw TheoremViolation("m-fold factor coefficients disagree with the sequence c_n");
    return c;
}

PolyMatrix q_pascal(std::size_t n)
{
    return PolyMatrix::generate(n, IntPoly(), [](std::size_t i, std::size_t j) { return qbinom(i, j); });
}

PolyMatrix q_h(std::size_t n)
{
    return PolyMatrix::generate(n, IntPoly(), [](std::size_t i, std::size_t j) {
        return i == j + 1 ? qint(i) : IntPoly();
    });
}

PolyMatrix q_h_nk(std::size_t n, std::size_t k)
{
    return PolyMatrix::generate(n, IntPoly(), [k](std::size_t i, std::size_t j) {
        return i == j + k ? qbinom(i, k) : IntPoly();
    });
}

std::vector<IntPoly> factor_q_pascal(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("factor_q_pascal needs n >= 2");
    const PolyMatrix id = PolyMatrix::identity(n, IntPoly(1));
    PolyMatrix partial = id;
    std::vector<IntPoly> c;
    c.reserve(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        IntPoly ck = IntPoly(1) - partial(k, 0);
        partial = partial * (id + ck * q_h_nk(n, k));
        c.push_back(std::move(ck));
    }
    if (partial != q_pascal(n)) {
        throw TheoremViolation("product of q-factors does not reproduce P_" + std::to_string(n) + "(q)");
    }
    auto expected = c_q_seq(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        if (c[k - 1] != expected[k - 1]) {
            throw TheoremViolation("factor coefficient c_" + std::to_string(k) + "(q) = " + c[k - 1].str() +
                                   " disagrees with the sequence value " + expected[k - 1].str());
        }
    }
    return c;
}

QuotientMatrix at_root_of_unity(const PolyMatrix& m, const std::shared_ptr<const IntPoly>& phi)
{
    return m.map([&](const IntPoly& p) { return QuotientElem(p, phi); });
}

Report check_pascal(std::size_t max_n)
{
    Report rep{"pascal", {}};
    std::vector<Integer> previous;
    for (std::size_t n = 2; n <= max_n; ++n) {
        const IntMatrix h = h_matrix(n);
        const IntMatrix p = pascal_matrix(n);
        IntMatrix power = identity(n);
        IntMatrix divided_sum(n, Integer(0));
        IntMatrix hk_sum(n, Integer(0));
        for (std::size_t k = 0; k < n; ++k) {
            IntMatrix divided = divide_entries(power, factorial(k));
            record(rep, "H^k/k!=H_nk", nk_param(n, k), divided == h_nk(n, k));
            divided_sum = divided_sum + divided;
            hk_sum = hk_sum + h_nk(n, k);
            power = power * h;
        }
        record(rep, "H^n=0", nk_param(n, n), power.is_zero());
        record(rep, "exp(H)=P", "n=" + std::to_string(n), divided_sum == p && hk_sum == p);

        try {
            auto c = factor_pascal(n);
            bool prefix = previous.empty() || std::equal(previous.begin(), previous.end(), c.begin());
            record(rep, "factor_prefix", "n=" + std::to_string(n), prefix);
            std::string rendered;
            for (const auto& x : c) rendered += (rendered.empty() ? "" : ",") + x.str();
            rep.add("factor", "n=" + std::to_string(n), true, "product reproduces P_n", rendered);
            previous = std::move(c);
        } catch (const TheoremViolation& ex) {
            rep.add("factor", "n=" + std::to_string(n), false, "product reproduces P_n", ex.what());
        }
    }
    return rep;
}

Report check_pascal_m(std::size_t max_n, std::size_t max_m)
{
    Report rep{"pascal-m", {}};
    for (std::size_t m = 1; m <= max_m; ++m) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            const auto par = nm_param(n, m);
            const IntMatrix h1 = h_m_nk(n, m, 1);
            const IntMatrix p = pascal_m(n, m);
            for (std::size_t k = 1; k <= n; ++k) {
                bool ok = h_m_nk(n, m, k - 1) * h1 == Integer(static_cast<long>(k)) * h_m_nk(n, m, k);
                record(rep, "H_{k-1}H_1=kH_k", par + ",k=" + std::to_string(k), ok);
            }
            IntMatrix power = identity(n);
            IntMatrix exp_sum(n, Integer(0));
            for (std::size_t k = 0; k <= n; ++k) {
                IntMatrix divided = divide_entries(power, factorial(k));
                record(rep, "H^k/k!=H_k", par + ",k=" + std::to_string(k), divided == h_m_nk(n, m, k));
                exp_sum = exp_sum + divided;
                power = power * h1;
            }
            record(rep, "exp(H)=P", par, exp_sum == p);
            record(rep, "nilpotent", par, power.is_zero());

            const std::size_t kmax = (n - 1) / m;
            auto c = c_prefix(kmax);
            IntMatrix product = identity(n);
            for (std::size_t k = 1; k <= kmax; ++k) product = product * (identity(n) + c[k - 1] * h_m_nk(n, m, k));
            record(rep, "prod(I+c_kH_k)=P", par, product == p);
            if (m == 1) record(rep, "m=1_is_pascal", par, p == pascal_matrix(n));
        }
    }
    return rep;
}

Report check_q_pascal(std::size_t max_n)
{
    Report rep{"qpascal", {}};
    for (std::size_t n = 2; n <= max_n; ++n) {
        const auto npar = "n=" + std::to_string(n);
        const PolyMatrix h = q_h(n);
        const PolyMatrix p = q_pascal(n);
        PolyMatrix power = PolyMatrix::identity(n, IntPoly(1));
        PolyMatrix sum(n, IntPoly());
        for (std::size_t k = 0; k < n; ++k) {
            const PolyMatrix hk = q_h_nk(n, k);
            record(rep, "H^k=[k]!H_nk", nk_param(n, k), power == qfact(k) * hk);
            sum = sum + hk;
            power = power * h;
        }
        record(rep, "H^n=0", npar, power.is_zero());
        record(rep, "exp_q(H)=P", npar, sum == p);
        record(rep, "P(1)=pascal", npar,
                        p.map([](const IntPoly& x) { return x.eval(Integer(1)); }) == pascal_matrix(n));

        // Product over e_k(q) H^k(q) in Q(q).
        auto e = eq_seq(n - 1);
        const auto to_rf = [](const IntPoly& x) { return RatFunc(x); };
        const SquareMatrix<RatFunc> id_rf = SquareMatrix<RatFunc>::identity(n, RatFunc(1));
        SquareMatrix<RatFunc> prod = id_rf;
        SquareMatrix<RatFunc> hpow = id_rf;
        const auto h_rf = h.map(to_rf);
        for (std::size_t k = 1; k < n; ++k) {
            hpow = hpow * h_rf;
            prod = prod * (id_rf + e[k - 1] * hpow);
        }
        record(rep, "prod(I+e_kH^k)=P", npar, prod == p.map(to_rf));

        try {
            auto c = factor_q_pascal(n);
            std::string rendered;
            for (const auto& x : c) rendered += (rendered.empty() ? "" : "; ") + x.str();
            rep.add("factor", npar, true, "product reproduces P_n(q)", rendered);
        } catch (const TheoremViolation& ex) {
            rep.add("factor", npar, false, "product reproduces P_n(q)", ex.what());
        }
    }
    return rep;
}

Report theorem_4_3_check(std::size_t max_n, std::size_t m)
{
    if (m < 2 || max_n < m) throw std::invalid_argument("root-of-unity check needs max_n >= m >= 2");
    Report rep{"thm43", {}};
    const IntPoly phi = cyclotomic(m);
    auto cq = c_q_seq(max_n);
    auto c = c_seq(max_n);
    for (std::size_t n = m; n <= max_n; ++n) {
        QuotientElem residue = quotient_reduce(cq[n - 1], phi);
        std::string expected = n % m == 0 ? c[n / m - 1].str() : "0";
        rep.expect_equal("c_n(zeta_m)", nm_param(n, m), expected, residue.str());
    }
    return rep;
}

Report check_eq28(std::size_t n, std::size_t m)
{
    if (m < 2 || n < m) throw std::invalid_argument("root-of-unity check needs n >= m >= 2");
    Report rep{"eq28", {}};
    const auto par = nm_param(n, m);
    auto phi = std::make_shared<const IntPoly>(cyclotomic(m));
    const QuotientElem one(IntPoly(1), phi);
    const QuotientMatrix id = QuotientMatrix::identity(n, one);
    const QuotientMatrix h = at_root_of_unity(q_h(n), phi);

    QuotientMatrix power = id;
    QuotientMatrix s(n, zero_like(one));
    for (std::size_t j = 0; j < m; ++j) {
        const QuotientMatrix hj = at_root_of_unity(q_h_nk(n, j), phi);
        record(rep, "[j]!H_nj=H^j", par + ",j=" + std::to_string(j),
                             QuotientElem(qfact(j), phi) * hj == power);
        s = s + hj;
        power = power * h;
    }
    record(rep, "H^m=0", par, power.is_zero());

    auto cq = cq_prefix(m - 1);
    QuotientMatrix product = id;
    for (std::size_t j = 1; j < m; ++j) {
        product = product * (id + QuotientElem(cq[j - 1], phi) * at_root_of_unity(q_h_nk(n, j), phi));
    }
    record(rep, "S=prod_{j<m}", par, product == s);
    return rep;
}

Report check_eq26(std::size_t n, std::size_t m)
{
    if (m < 2 || n < m) throw std::invalid_argument("root-of-unity check needs n >= m >= 2");
    Report rep{"eq26", {}};
    const auto par = nm_param(n, m);
    auto phi = std::make_shared<const IntPoly>(cyclotomic(m));
    const QuotientElem one(IntPoly(1), phi);
    const QuotientMatrix id = QuotientMatrix::identity(n, one);
    const auto embed = [&](const IntMatrix& x) {
        return x.map([&](const Integer& v) { return QuotientElem(IntPoly(v), phi); });
    };

    QuotientMatrix s(n, zero_like(one));
    for (std::size_t j = 0; j < m; ++j) s = s + at_root_of_unity(q_h_nk(n, j), phi);

    QuotientMatrix block_sum(n, zero_like(one));
    for (std::size_t k = 0; k * m < n; ++k) {
        const QuotientMatrix hkm = at_root_of_unity(q_h_nk(n, k * m), phi);
        record(rep, "H_{n,km}(zeta)=H^(m)_{n,k}", par + ",k=" + std::to_string(k),
                             hkm == embed(h_m_nk(n, m, k)));
        block_sum = block_sum + hkm;
    }
    const QuotientMatrix p_zeta = at_root_of_unity(q_pascal(n), phi);
    record(rep, "P(zeta)=S*sum_k H_{n,km}", par, s * block_sum == p_zeta);

    QuotientMatrix lhs = id;
    try {
        lhs = unit_lower_inverse(s) * p_zeta;
    } catch (const NotInvertible& ex) {
        rep.add("S_invertible", par, false, "unit lower triangular", ex.what());
        return rep;
    }
    record(rep, "S^-1 P(zeta)=exp(H^(m))", par, lhs == embed(pascal_m(n, m)));

    auto c = c_prefix((n - 1) / m);
    QuotientMatrix product = id;
    for (std::size_t k = 1; k * m < n; ++k) {
        product = product * (id + QuotientElem(IntPoly(c[k - 1]), phi) * at_root_of_unity(q_h_nk(n, k * m), phi));
    }
    record(rep, "S^-1 P(zeta)=prod(I+c_k H_{n,km})", par, lhs == product);

    auto cq = cq_prefix(n - 1);
    QuotientMatrix tail = id;
    for (std::size_t j = m; j < n; ++j) {
        tail = tail * (id + QuotientElem(cq[j - 1], phi) * at_root_of_unity(q_h_nk(n, j), phi));
    }
    record(rep, "S^-1 P(zeta)=prod_{j>=m}", par, lhs == tail);
    return rep;
}

Report root_of_unity_matrix_check(std::size_t n, std::size_t m)
{
    Report rep{"root-of-unity", {}};
    rep.merge(check_eq28(n, m));
    rep.merge(check_eq26(n, m));
    return rep;
}

Report carlitz_check(unsigned long p, unsigned long max_n)
{
    if (!is_prime(p)) throw std::invalid_argument("carlitz check needs a prime, got " + std::to_string(p));
    if (max_n <= p) throw std::invalid_argument("carlitz check needs max_n > p");
    Report rep{"cor44", {}};
    const Integer P(static_cast<long>(p));
    auto c = c_seq(max_n);
    for (unsigned long n = p + 1; n <= max_n; ++n) {
        const auto par = "p=" + std::to_string(p) + ",n=" + std::to_string(n);
        ModInt residue(c[n - 1], P);
        if (n % p != 0) {
            rep.expect_equal("c_n=0_mod_p", par, "0", residue.str());
        } else {
            rep.expect_equal("c_pk=c_k_mod_p", par, ModInt(c[n / p - 1], P).str(), residue.str());
        }
    }
    return rep;
}

} // namespace ppx

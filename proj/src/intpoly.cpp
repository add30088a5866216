#include "ppx/intpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ppx/errors.hpp"

namespace ppx {

IntPoly::IntPoly(Integer c)
{
    if (!c.is_zero()) c_.push_back(std::move(c));
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(std::size_t k, Integer c)
{
    if (c.is_zero()) return {};
    std::vector<Integer> v(k + 1, Integer(0));
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Integer IntPoly::content() const
{
    Integer g(0);
    for (const auto& a : c_) {
        g = gcd(g, a);
        if (g.is_one()) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const
{
    if (is_zero()) return {};
    Integer g = content();
    if (lc().sign() < 0) g = -g;
    if (g.is_one()) return *this;
    return poly_divexact(*this, g);
}

Rational IntPoly::eval(const Rational& x) const
{
    // Horner over a common denominator: sum c_i n^i d^(deg-i), then divide by d^deg.
    if (is_zero()) return Rational(0);
    const Integer& n = x.num();
    const Integer& d = x.den();
    Integer acc = c_.back();
    Integer dpow(1);
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        dpow *= d;
        acc = acc * n + c_[i] * dpow;
    }
    return Rational(acc, dpow);
}

Integer IntPoly::eval(const Integer& x) const
{
    Integer acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::reversed(std::size_t d) const
{
    if (is_zero()) return {};
    if (static_cast<int>(d) < degree()) throw std::invalid_argument("reversed: d below degree");
    std::vector<Integer> v(d + 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[d - i] = c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::substitute_power(std::size_t k) const
{
    if (k == 0) return IntPoly(eval(Integer(1)));
    if (is_zero()) return {};
    std::vector<Integer> v((c_.size() - 1) * k + 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return IntPoly(std::move(v));
}

std::string IntPoly::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Integer& a = c_[i];
        if (a.is_zero()) continue;
        Integer mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << "*";
        os << "q";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        mpz_srcptr ai = a.c_[i].raw().get_mpz_t();
        if (mpz_sgn(ai) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(acc[i + j].get_mpz_t(), ai, b.c_[j].raw().get_mpz_t());
        }
    }
    std::vector<Integer> out;
    out.reserve(acc.size());
    for (auto& v : acc) out.emplace_back(std::move(v));
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& k)
{
    if (k.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= k;
    return *this;
}

IntPoly pow(const IntPoly& base, unsigned long exp)
{
    IntPoly result(1);
    IntPoly b = base;
    while (exp > 0) {
        if (exp & 1UL) result *= b;
        exp >>= 1;
        if (exp > 0) b *= b;
    }
    return result;
}

namespace {

// Long division; when `exact` the quotient must have integer coefficients and
// the remainder must vanish.
PolyDivRem long_divide(const IntPoly& a, const IntPoly& b, bool exact)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const int db = b.degree();
    std::vector<Integer> rem = a.coeffs();
    if (a.degree() < db) {
        if (exact && !a.is_zero()) throw InexactDivision("polynomial division is not exact");
        return {IntPoly(), a};
    }
    const Integer& lead = b.coeffs().back();
    std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - db + 1), Integer(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Integer& top = rem[static_cast<std::size_t>(k + db)];
        if (top.is_zero()) continue;
        if (!divides(lead, top)) throw InexactDivision("polynomial division is not exact");
        Integer t = divexact(top, lead);
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
        }
        quo[static_cast<std::size_t>(k)] = std::move(t);
    }
    IntPoly r(std::move(rem));
    if (exact && !r.is_zero()) throw InexactDivision("polynomial division is not exact");
    return {IntPoly(std::move(quo)), std::move(r)};
}

} // namespace

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) { return long_divide(a, b, true).quotient; }

IntPoly poly_divexact(const IntPoly& a, const Integer& k)
{
    if (k.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Integer> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) v.push_back(divexact(c, k));
    return IntPoly(std::move(v));
}

bool poly_divides(const IntPoly& b, const IntPoly& a)
{
    try {
        long_divide(a, b, true);
        return true;
    } catch (const InexactDivision&) {
        return false;
    }
}

PolyDivRem poly_divrem_unit(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero() || !b.lc().abs().is_one()) {
        throw std::invalid_argument("divisor must have leading coefficient +-1");
    }
    return long_divide(a, b, false);
}

IntPoly poly_pseudo_rem(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    const int db = b.degree();
    const Integer& lead = b.lc();
    std::vector<Integer> r = a.coeffs();
    for (int k = a.degree(); k >= db; --k) {
        Integer top = r[static_cast<std::size_t>(k)];
        for (auto& c : r) c *= lead;
        if (top.is_zero()) continue;
        for (int j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(k - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return IntPoly(std::move(r));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    if (y.is_constant()) return IntPoly(1);
    if (poly_divides(y, x)) return y;
    // Primitive remainder sequence.
    while (!y.is_zero()) {
        IntPoly r = poly_pseudo_rem(x, y);
        x = std::move(y);
        y = r.primitive_part();
        if (y.is_constant() && !y.is_zero()) return IntPoly(1);
    }
    return x.primitive_part();
}

IntPoly cyclotomic(unsigned long m)
{
    if (m == 0) throw std::invalid_argument("cyclotomic index must be positive");
    static std::mutex mu;
    static std::map<unsigned long, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    IntPoly p = IntPoly::monomial(m) - IntPoly(1);
    for (unsigned long d = 1; d < m; ++d) {
        if (m % d == 0) p = poly_divexact(p, cyclotomic(d));
    }
    std::lock_guard lock(mu);
    cache.emplace(m, p);
    return p;
}

} // namespace ppx

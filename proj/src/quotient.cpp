#include "ppx/quotient.hpp"

#include <stdexcept>
#include <vector>

#include "ppx/rational.hpp"

namespace ppx {

namespace {

std::shared_ptr<const IntPoly> checked_modulus(IntPoly m)
{
    if (m.degree() < 1 || !m.lc().is_one()) {
        throw std::invalid_argument("quotient modulus must be monic of degree >= 1, got " + m.str());
    }
    return std::make_shared<const IntPoly>(std::move(m));
}

} // namespace

QuotientElem::QuotientElem(const IntPoly& f, IntPoly modulus)
    : QuotientElem(f, checked_modulus(std::move(modulus)))
{
}

QuotientElem::QuotientElem(const IntPoly& f, std::shared_ptr<const IntPoly> modulus) : mod_(std::move(modulus))
{
    if (!mod_) throw std::invalid_argument("null quotient modulus");
    rep_ = f.degree() < mod_->degree() ? f : poly_divrem_unit(f, *mod_).remainder;
}

void QuotientElem::check_same(const QuotientElem& o) const
{
    if (mod_ != o.mod_ && *mod_ != *o.mod_) {
        throw std::invalid_argument("quotient elements have different moduli");
    }
}

QuotientElem QuotientElem::operator-() const { return QuotientElem(-rep_, mod_); }

QuotientElem& QuotientElem::operator+=(const QuotientElem& o)
{
    check_same(o);
    rep_ += o.rep_;
    return *this;
}

QuotientElem& QuotientElem::operator-=(const QuotientElem& o)
{
    check_same(o);
    rep_ -= o.rep_;
    return *this;
}

QuotientElem& QuotientElem::operator*=(const QuotientElem& o)
{
    check_same(o);
    IntPoly prod = rep_ * o.rep_;
    rep_ = prod.degree() < mod_->degree() ? std::move(prod) : poly_divrem_unit(prod, *mod_).remainder;
    return *this;
}

std::optional<QuotientElem> QuotientElem::try_inverse() const
{
    // Solve (rep * s) mod modulus = 1 as a linear system over Q in the basis
    // 1, q, ..., q^(d-1); keep the solution only if it is integral.
    const auto d = static_cast<std::size_t>(mod_->degree());
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
    IntPoly column = rep_;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) a[i][j] = Rational(column.coeff(i));
        column = QuotientElem(column * IntPoly::q(), mod_).rep_;
    }
    a[0][d] = Rational(1);

    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && a[pivot][col].is_zero()) ++pivot;
        if (pivot == d) return std::nullopt;
        std::swap(a[pivot], a[col]);
        Rational inv = a[col][col].inverse();
        for (std::size_t k = col; k <= d; ++k) a[col][k] *= inv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (std::size_t k = col; k <= d; ++k) a[i][k] -= f * a[col][k];
        }
    }
    std::vector<Integer> s;
    s.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (!a[i][d].is_integer()) return std::nullopt;
        s.push_back(a[i][d].num());
    }
    return QuotientElem(IntPoly(std::move(s)), mod_);
}

QuotientElem quotient_reduce(const IntPoly& f, const IntPoly& modulus) { return QuotientElem(f, modulus); }

} // namespace ppx

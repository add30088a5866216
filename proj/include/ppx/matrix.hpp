#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "ppx/ring.hpp"

namespace ppx {

/// Dense n x n matrix over R, row-major, indices 0..n-1.
template <Ring R>
class SquareMatrix {
public:
    /// n x n matrix filled with `fill`.
    SquareMatrix(std::size_t n, const R& fill) : n_(n), a_(n * n, fill) {}

    static SquareMatrix identity(std::size_t n, const R& one)
    {
        SquareMatrix m(n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    /// Entry (i, j) = f(i, j).
    static SquareMatrix generate(std::size_t n, const R& zero, const std::function<R(std::size_t, std::size_t)>& f)
    {
        SquareMatrix m(n, zero);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = f(i, j);
        return m;
    }

    std::size_t size() const { return n_; }
    R& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const R& at(std::size_t i, std::size_t j) const
    {
        if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
        return a_[i * n_ + j];
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!is_zero_elem(x)) return false;
        return true;
    }

    bool is_lower_unitriangular() const
    {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i; j < n_; ++j) {
                const R& x = (*this)(i, j);
                if (i == j ? x != one_like(x) : !is_zero_elem(x)) return false;
            }
        }
        return true;
    }

    /// Entrywise image under f.
    template <class F>
    auto map(F&& f) const
    {
        using S = std::decay_t<decltype(f(a_.front()))>;
        std::vector<S> out;
        out.reserve(a_.size());
        for (const auto& x : a_) out.push_back(f(x));
        return SquareMatrix<S>(n_, std::move(out));
    }

    SquareMatrix(std::size_t n, std::vector<R> entries) : n_(n), a_(std::move(entries))
    {
        if (a_.size() != n * n) throw std::invalid_argument("matrix entry count does not match dimension");
    }

    friend SquareMatrix operator+(const SquareMatrix& x, const SquareMatrix& y)
    {
        check_dims(x, y);
        SquareMatrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
        return r;
    }

    friend SquareMatrix operator-(const SquareMatrix& x, const SquareMatrix& y)
    {
        check_dims(x, y);
        SquareMatrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
        return r;
    }

    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y)
    {
        check_dims(x, y);
        const std::size_t n = x.n_;
        if (n == 0) return x;
        const R zero = zero_like(x.a_.front());
        SquareMatrix r(n, zero);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const R& xik = x(i, k);
                if (xik == zero) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const R& ykj = y(k, j);
                    if (ykj == zero) continue;
                    r(i, j) = r(i, j) + xik * ykj;
                }
            }
        }
        return r;
    }

    /// Every entry multiplied by the scalar s.
    friend SquareMatrix operator*(const R& s, const SquareMatrix& x)
    {
        SquareMatrix r = x;
        for (auto& e : r.a_) e = s * e;
        return r;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    static void check_dims(const SquareMatrix& x, const SquareMatrix& y)
    {
        if (x.n_ != y.n_) {
            throw std::invalid_argument("matrix dimensions differ: " + std::to_string(x.n_) + " vs " +
                                        std::to_string(y.n_));
        }
    }

    std::size_t n_;
    std::vector<R> a_;
};

template <Ring R>
SquareMatrix<R> matrix_pow(const SquareMatrix<R>& m, unsigned long k, const R& one)
{
    SquareMatrix<R> result = SquareMatrix<R>::identity(m.size(), one);
    for (unsigned long i = 0; i < k; ++i) result = result * m;
    return result;
}

/// Inverse of a unit lower triangular matrix by forward substitution; needs
/// no division in R.
template <Ring R>
SquareMatrix<R> unit_lower_inverse(const SquareMatrix<R>& m)
{
    if (!m.is_lower_unitriangular()) throw NotInvertible("matrix is not unit lower triangular");
    const std::size_t n = m.size();
    if (n == 0) return m;
    const R one = one_like(m(0, 0));
    SquareMatrix<R> inv = SquareMatrix<R>::identity(n, one);
    // Column j of the inverse solves m x = e_j.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j + 1; i < n; ++i) {
            R acc = zero_like(one);
            for (std::size_t k = j; k < i; ++k) acc = acc + m(i, k) * inv(k, j);
            inv(i, j) = -acc;
        }
    }
    return inv;
}

} // namespace ppx

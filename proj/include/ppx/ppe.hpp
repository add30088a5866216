#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ppx/series.hpp"

namespace ppx {

/// Factors g_1..g_N of the truncated product prod_{k=1}^N (1 + g_k x^k).
template <Ring R>
class ProductExpansion {
public:
    /// `factors[k-1]` is g_k; `unit` supplies the ring's identity for empty products.
    ProductExpansion(std::vector<R> factors, R unit) : g_(std::move(factors)), unit_(std::move(unit)) {}

    std::size_t order() const { return g_.size(); }
    /// g_k, 1-based.
    const R& factor(std::size_t k) const { return g_.at(k - 1); }
    const std::vector<R>& factors() const { return g_; }
    const R& unit() const { return unit_; }

    friend bool operator==(const ProductExpansion&, const ProductExpansion&) = default;

private:
    std::vector<R> g_;
    R unit_;
};

namespace detail {

// b <- b * (1 + g x^n), in place, truncated at b's order.
template <Ring R>
void multiply_factor(std::vector<R>& b, std::size_t n, const R& g)
{
    if (is_zero_elem(g)) return;
    for (std::size_t k = b.size(); k-- > n;) b[k] = b[k] + g * b[k - n];
}

} // namespace detail

/// The unique g_1..g_N with prod (1 + g_k x^k) = f up to x^N. Needs f_0 = 1;
/// no division is performed, so any commutative ring works.
template <Ring R>
ProductExpansion<R> ppe_expand(const TruncatedSeries<R>& f)
{
    const R one = one_like(f[0]);
    if (f[0] != one) throw std::domain_error("ppe_expand requires constant term 1");
    const std::size_t order = f.order();
    std::vector<R> partial(order + 1, zero_like(one));
    partial[0] = one;
    std::vector<R> g;
    g.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        R gn = f[n] - partial[n];
        detail::multiply_factor(partial, n, gn);
        g.push_back(std::move(gn));
    }
    return ProductExpansion<R>(std::move(g), one);
}

/// prod_{k=1}^N (1 + g_k x^k) truncated at N.
template <Ring R>
TruncatedSeries<R> ppe_contract(const ProductExpansion<R>& p)
{
    const std::size_t order = p.order();
    std::vector<R> b(order + 1, zero_like(p.unit()));
    b[0] = p.unit();
    for (std::size_t k = 1; k <= order; ++k) detail::multiply_factor(b, k, p.factor(k));
    return TruncatedSeries<R>(order, std::move(b));
}

} // namespace ppx

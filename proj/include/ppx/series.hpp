#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ppx/ring.hpp"

namespace ppx {

/// Power series a_0 + a_1 x + ... + a_N x^N over R, truncated at order N.
///
/// The order is fixed at construction; binary operations require equal orders.
template <Ring R>
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t order, std::vector<R> coeffs) : order_(order), c_(std::move(coeffs))
    {
        if (c_.size() != order_ + 1) {
            throw std::invalid_argument("series of order " + std::to_string(order_) + " needs " +
                                        std::to_string(order_ + 1) + " coefficients, got " +
                                        std::to_string(c_.size()));
        }
    }

    /// The constant series `value`.
    static TruncatedSeries constant(std::size_t order, const R& value)
    {
        std::vector<R> c(order + 1, zero_like(value));
        c[0] = value;
        return TruncatedSeries(order, std::move(c));
    }

    /// Coefficients produced by `coeff(n)` for n = 0..order.
    static TruncatedSeries generate(std::size_t order, const std::function<R(std::size_t)>& coeff)
    {
        std::vector<R> c;
        c.reserve(order + 1);
        for (std::size_t n = 0; n <= order; ++n) c.push_back(coeff(n));
        return TruncatedSeries(order, std::move(c));
    }

    std::size_t order() const { return order_; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](std::size_t n) const { return c_.at(n); }

    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g)
    {
        check_orders(f, g);
        std::vector<R> c = f.c_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + g.c_[i];
        return TruncatedSeries(f.order_, std::move(c));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g)
    {
        check_orders(f, g);
        std::vector<R> c = f.c_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] - g.c_[i];
        return TruncatedSeries(f.order_, std::move(c));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g)
    {
        check_orders(f, g);
        const R zero = zero_like(f.c_[0]);
        std::vector<R> c(f.c_.size(), zero);
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i] == zero) continue;
            for (std::size_t j = 0; i + j < c.size(); ++j) {
                if (g.c_[j] == zero) continue;
                c[i + j] = c[i + j] + f.c_[i] * g.c_[j];
            }
        }
        return TruncatedSeries(f.order_, std::move(c));
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static void check_orders(const TruncatedSeries& f, const TruncatedSeries& g)
    {
        if (f.order_ != g.order_) {
            throw OrderMismatch("series orders differ: " + std::to_string(f.order_) + " vs " +
                                std::to_string(g.order_));
        }
    }

    std::size_t order_;
    std::vector<R> c_;
};

template <Ring R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g)
{
    return f * g;
}

/// Multiplicative inverse; the constant term must be a unit of R.
template <Ring R>
TruncatedSeries<R> series_inv(const TruncatedSeries<R>& f)
{
    auto inv0 = try_inverse(f[0]);
    if (!inv0) throw NotInvertible("series constant term is not a unit");
    const std::size_t order = f.order();
    std::vector<R> g;
    g.reserve(order + 1);
    g.push_back(*inv0);
    for (std::size_t n = 1; n <= order; ++n) {
        R acc = zero_like(f[0]);
        for (std::size_t k = 1; k <= n; ++k) acc = acc + f[k] * g[n - k];
        g.push_back(-(*inv0 * acc));
    }
    return TruncatedSeries<R>(order, std::move(g));
}

/// log f = sum_{d>=1} (-1)^(d-1) (f-1)^d / d, truncated. Requires f_0 = 1 and
/// exact division by 1..N in R.
template <Ring R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& f)
{
    const R one = one_like(f[0]);
    if (f[0] != one) throw std::domain_error("series_log requires constant term 1");
    const std::size_t order = f.order();
    const auto h = f - TruncatedSeries<R>::constant(order, one);
    auto result = TruncatedSeries<R>::constant(order, zero_like(one));
    auto power = h;
    for (std::size_t d = 1; d <= order; ++d) {
        std::vector<R> term;
        term.reserve(order + 1);
        for (std::size_t n = 0; n <= order; ++n) {
            R t = div_integer(power[n], Integer(static_cast<long>(d)));
            term.push_back(d % 2 == 1 ? t : -t);
        }
        result = result + TruncatedSeries<R>(order, std::move(term));
        if (d < order) power = power * h;
    }
    return result;
}

/// f(-x): coefficient n is multiplied by (-1)^n.
template <Ring R>
TruncatedSeries<R> series_negate_argument(const TruncatedSeries<R>& f)
{
    std::vector<R> c = f.coeffs();
    for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
    return TruncatedSeries<R>(f.order(), std::move(c));
}

} // namespace ppx

#ifndef CUSP_SERIES_HPP
#define CUSP_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <cusp/ring.hpp>

namespace cusp
{

// Truncated power series c_0 + c_1 q + ... + c_M q^M over an exact ring.
// M is the truncation order: coefficients of q^m for m > M are unknown, not
// zero, and no operation ever reports more precision than its inputs carry.
template <ExactRing R>
class Series
{
public:
    using ring_type = R;

    Series() : Series(0) {}

    // The zero series known through q^order.
    explicit Series(int order) : order_(check_order(order)), coeffs_(static_cast<std::size_t>(order) + 1) {}

    // Missing trailing coefficients are zero; surplus ones are an error.
    Series(std::vector<R> coeffs, int order) : order_(check_order(order)), coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() > static_cast<std::size_t>(order) + 1) {
            throw std::invalid_argument("Series: more coefficients than the truncation order allows");
        }
        coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    // The series q.
    static Series variable(int order)
    {
        Series s(order);
        if (order >= 1) {
            s.coeffs_[1] = R(1);
        }
        return s;
    }

    static Series constant(R c, int order)
    {
        Series s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    int order() const noexcept
    {
        return order_;
    }
    const std::vector<R> &coeffs() const noexcept
    {
        return coeffs_;
    }

    const R &operator[](int k) const
    {
        if (k < 0 || k > order_) {
            throw std::out_of_range("Series: coefficient " + std::to_string(k) + " beyond truncation order " +
                                    std::to_string(order_));
        }
        return coeffs_[static_cast<std::size_t>(k)];
    }

    void set(int k, R value)
    {
        if (k < 0 || k > order_) {
            throw std::out_of_range("Series: cannot set coefficient " + std::to_string(k) + " beyond order " +
                                    std::to_string(order_));
        }
        coeffs_[static_cast<std::size_t>(k)] = std::move(value);
    }

    Series truncated(int new_order) const
    {
        if (new_order > order_) {
            throw std::invalid_argument("Series: cannot extend truncation order " + std::to_string(order_) + " to " +
                                        std::to_string(new_order));
        }
        return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
    }

    Series operator-() const
    {
        Series r(order_);
        for (int k = 0; k <= order_; ++k) {
            r.coeffs_[k] = -coeffs_[k];
        }
        return r;
    }

    friend Series operator+(const Series &a, const Series &b)
    {
        const int n = std::min(a.order_, b.order_);
        Series r(n);
        for (int k = 0; k <= n; ++k) {
            r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        }
        return r;
    }
    friend Series operator-(const Series &a, const Series &b)
    {
        const int n = std::min(a.order_, b.order_);
        Series r(n);
        for (int k = 0; k <= n; ++k) {
            r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        }
        return r;
    }
    friend Series operator*(const Series &a, const Series &b)
    {
        const int n = std::min(a.order_, b.order_);
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (is_zero(a.coeffs_[i])) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                if (!is_zero(b.coeffs_[j])) {
                    r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return r;
    }
    friend Series operator*(const R &c, const Series &s)
    {
        Series r(s.order_);
        if (is_zero(c)) {
            return r;
        }
        for (int k = 0; k <= s.order_; ++k) {
            if (!is_zero(s.coeffs_[k])) {
                r.coeffs_[k] = c * s.coeffs_[k];
            }
        }
        return r;
    }

    friend bool operator==(const Series &, const Series &) = default;

    friend std::ostream &operator<<(std::ostream &os, const Series &s)
    {
        os << "[";
        for (int k = 0; k <= s.order_; ++k) {
            os << (k ? ", " : "") << render(s.coeffs_[k]);
        }
        return os << "] + O(q^" << s.order_ + 1 << ")";
    }

private:
    static int check_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("Series: negative truncation order");
        }
        return order;
    }

    int order_;
    std::vector<R> coeffs_;
};

// 1/s. Requires a unit constant term; keeps the truncation order.
template <ExactRing R>
Series<R> reciprocal(const Series<R> &s)
{
    R inv0;
    try {
        inv0 = inverse(s[0]);
    } catch (const std::domain_error &) {
        throw std::domain_error("reciprocal: constant term is not a unit");
    }
    const int n = s.order();
    std::vector<R> r(static_cast<std::size_t>(n) + 1);
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        R acc;
        for (int i = 1; i <= k; ++i) {
            if (!is_zero(s[i]) && !is_zero(r[k - i])) {
                acc += s[i] * r[k - i];
            }
        }
        r[k] = -(inv0 * acc);
    }
    return Series<R>(std::move(r), n);
}

// d/dq. The result is known one order less than the input.
template <ExactRing R>
Series<R> derivative(const Series<R> &s)
{
    if (s.order() < 1) {
        throw std::invalid_argument("derivative: order-0 series carries no derivative information");
    }
    const int n = s.order() - 1;
    std::vector<R> r(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        r[k] = R(k + 1) * s[k + 1];
    }
    return Series<R>(std::move(r), n);
}

// log(s) for s with constant term 1, computed as the integral of s'/s.
template <ExactRing R>
Series<R> log_series(const Series<R> &s)
{
    if (s[0] != R(1)) {
        throw std::domain_error("log_series: constant term must be 1");
    }
    const int n = s.order();
    if (n == 0) {
        return Series<R>(0);
    }
    const Series<R> ratio = derivative(s) * reciprocal(s.truncated(n - 1));
    std::vector<R> r(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        r[k] = R(Rational(1, k)) * ratio[k - 1];
    }
    return Series<R>(std::move(r), n);
}

// outer(inner(q)). The inner series must have zero constant term.
template <ExactRing R>
Series<R> compose(const Series<R> &outer, const Series<R> &inner)
{
    if (!is_zero(inner[0])) {
        throw std::domain_error("compose: inner series must have zero constant term");
    }
    const int n = std::min(outer.order(), inner.order());
    const Series<R> in = inner.truncated(n);
    Series<R> acc = Series<R>::constant(outer[n], n);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * in;
        Series<R> shifted = acc;
        shifted.set(0, acc[0] + outer[k]);
        acc = std::move(shifted);
    }
    return acc;
}

// Compositional inverse g with f(g(q)) = g(f(q)) = q through the truncation
// order. Lagrange inversion: g_k = [z^(k-1)] (z/f(z))^k / k.
template <ExactRing R>
Series<R> revert(const Series<R> &f)
{
    if (f.order() < 1) {
        throw std::invalid_argument("revert: series must be known at least through q^1");
    }
    if (!is_zero(f[0])) {
        throw std::domain_error("revert: constant term must be zero");
    }
    const int n = f.order();
    std::vector<R> shifted(f.coeffs().begin() + 1, f.coeffs().end());
    Series<R> h;
    try {
        h = reciprocal(Series<R>(std::move(shifted), n - 1));
    } catch (const std::domain_error &) {
        throw std::domain_error("revert: linear coefficient is not a unit");
    }
    std::vector<R> g(static_cast<std::size_t>(n) + 1);
    Series<R> power = h;
    for (int k = 1; k <= n; ++k) {
        g[k] = R(Rational(1, k)) * power[k - 1];
        if (k < n) {
            power = power * h;
        }
    }
    return Series<R>(std::move(g), n);
}

// Schwarzian derivative in the normalisation {f,q} = 2 (f''/f')' - (f''/f')^2,
// i.e. twice the classical one. A series known through q^M determines {f,q}
// only through q^(M-3).
template <ExactRing R>
Series<R> schwarzian(const Series<R> &f)
{
    if (f.order() < 3) {
        throw std::invalid_argument("schwarzian: need the series through at least q^3");
    }
    const Series<R> d1 = derivative(f);
    const Series<R> d2 = derivative(d1);
    Series<R> inv;
    try {
        inv = reciprocal(d1.truncated(d2.order()));
    } catch (const std::domain_error &) {
        throw std::domain_error("schwarzian: f'(0) is not a unit");
    }
    const Series<R> r = d2 * inv;
    const Series<R> dr = derivative(r);
    return R(2) * dr - r * r;
}

} // namespace cusp

#endif

// Reference computations that share no code with the library.
#ifndef CUSP_TESTS_ORACLES_HPP
#define CUSP_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle
{

inline std::uint64_t sigma3_brute(std::uint64_t m)
{
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= m; ++d) {
        if (m % d == 0) {
            s += d * d * d;
        }
    }
    return s;
}

using ZSeries = std::vector<mpz_class>;
using QSeries = std::vector<mpq_class>;

inline ZSeries zmul(const ZSeries &a, const ZSeries &b, std::size_t n)
{
    ZSeries r(n + 1, 0);
    for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
        for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// lambda = theta_2^4 / theta_3^4 expanded in p = exp(i pi tau) through p^n,
// using theta_2 = 2 p^(1/4) sum_{k>=0} p^(k(k+1)) and theta_3 = 1 + 2 sum p^(k^2).
inline ZSeries lambda_nome(std::size_t n)
{
    ZSeries a(n + 1, 0);
    ZSeries t3(n + 1, 0);
    for (std::size_t k = 0; k * (k + 1) <= n; ++k) {
        a[k * (k + 1)] += 1;
    }
    t3[0] = 1;
    for (std::size_t k = 1; k * k <= n; ++k) {
        t3[k * k] += 2;
    }
    ZSeries a2 = zmul(a, a, n);
    ZSeries a4 = zmul(a2, a2, n);
    ZSeries t2 = zmul(t3, t3, n);
    ZSeries t4 = zmul(t2, t2, n);
    // t4 has constant term 1, so its inverse has integer coefficients.
    ZSeries inv(n + 1, 0);
    inv[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_class acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            acc += t4[i] * inv[k - i];
        }
        inv[k] = -acc;
    }
    ZSeries quot = zmul(a4, inv, n);
    ZSeries out(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        out[k] = 16 * quot[k - 1];
    }
    return out;
}

inline QSeries qmul(const QSeries &a, const QSeries &b, std::size_t n)
{
    QSeries r(n + 1, 0);
    for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
        for (std::size_t j = 0; i + j <= n && j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// f(g) by summing powers of g.
inline QSeries qcompose(const QSeries &f, const QSeries &g, std::size_t n)
{
    QSeries r(n + 1, 0);
    QSeries power(n + 1, 0);
    power[0] = 1;
    for (std::size_t k = 0; k <= n && k < f.size(); ++k) {
        for (std::size_t i = 0; i <= n; ++i) {
            r[i] += f[k] * power[i];
        }
        power = qmul(power, g, n);
    }
    return r;
}

// Compositional inverse of f = q + ... by the fixed-point iteration
// g <- g - (f(g) - q), which gains one correct coefficient per step.
inline QSeries revert_fixed_point(const QSeries &f, std::size_t n)
{
    QSeries g(n + 1, 0);
    if (n >= 1) {
        g[1] = 1;
    }
    for (std::size_t step = 0; step <= n; ++step) {
        QSeries fg = qcompose(f, g, n);
        for (std::size_t i = 0; i <= n; ++i) {
            const mpq_class target = i == 1 ? 1 : 0;
            g[i] -= fg[i] - target;
        }
    }
    return g;
}

// |PSL_2(Z/N)| for N >= 2 by enumerating matrices mod N with determinant 1.
inline long psl2_order_brute(int n)
{
    long count = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                for (int d = 0; d < n; ++d) {
                    if (((a * d - b * c) % n + n) % n == 1 % n) {
                        ++count;
                    }
                }
            }
        }
    }
    return n == 2 ? count : count / 2;
}

} // namespace oracle

#endif

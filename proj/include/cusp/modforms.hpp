#ifndef CUSP_MODFORMS_HPP
#define CUSP_MODFORMS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <cusp/rational.hpp>
#include <cusp/series.hpp>

namespace cusp
{

// Sum of the cubes of the positive divisors of m.
inline std::uint64_t sigma3(std::uint64_t m)
{
    if (m == 0) {
        throw std::domain_error("sigma3: argument must be positive");
    }
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) {
            continue;
        }
        const std::uint64_t e = m / d;
        total += d * d * d;
        if (e != d) {
            total += e * e * e;
        }
    }
    return total;
}

// E4 = 1 + 240 sum sigma3(m) q^m through q^order.
inline Series<Rational> e4_series(int order)
{
    if (order < 0) {
        throw std::invalid_argument("e4_series: negative order");
    }
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(1);
    for (int m = 1; m <= order; ++m) {
        c[m] = Rational(240) * Rational(sigma3(static_cast<std::uint64_t>(m)));
    }
    return Series<Rational>(std::move(c), order);
}

struct GroupInvariants {
    int level = 0;
    long index = 0;
    long cusps = 0;
    long genus = 0;

    friend bool operator==(const GroupInvariants &, const GroupInvariants &) = default;
};

// 1 + m/12 - nu2/4 - nu3/3 - nu_inf/2, returned exactly.
inline Rational genus_subgroup(long index, long nu2, long nu3, long nu_inf)
{
    if (index < 1 || nu2 < 0 || nu3 < 0 || nu_inf < 0) {
        throw std::invalid_argument("genus_subgroup: index must be positive and counts non-negative");
    }
    return Rational(1) + Rational(index, 12) - Rational(nu2, 4) - Rational(nu3, 3) - Rational(nu_inf, 2);
}

namespace detail
{
inline std::vector<long> prime_divisors(long n)
{
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        ps.push_back(n);
    }
    return ps;
}

// N^2 prod_{p | N} (1 - p^-2)
inline Rational level_factor(int n)
{
    Rational r = Rational(static_cast<long>(n) * n);
    for (long p : prime_divisors(n)) {
        r *= Rational(p * p - 1, p * p);
    }
    return r;
}
} // namespace detail

// Genus of Gamma(N), N >= 3, from the closed form 1 + (N-6)/24 * N^2 prod(1 - p^-2).
inline Rational congruence_genus_closed_form(int n)
{
    if (n < 3) {
        throw std::invalid_argument("congruence_genus_closed_form: level must be at least 3");
    }
    return Rational(1) + Rational(n - 6, 24) * detail::level_factor(n);
}

inline GroupInvariants group_invariants(int n)
{
    if (n < 2) {
        throw std::invalid_argument("group_invariants: level must be at least 2, got " + std::to_string(n));
    }
    GroupInvariants g;
    g.level = n;
    if (n == 2) {
        g.index = 6;
    } else {
        const Rational idx = Rational(n, 2) * detail::level_factor(n);
        g.index = idx.numerator().get_si();
    }
    g.cusps = g.index / n;
    const Rational genus = genus_subgroup(g.index, 0, 0, g.cusps);
    if (!genus.is_integer() || genus.sign() < 0) {
        throw std::logic_error("group_invariants: non-integral genus " + genus.to_string());
    }
    g.genus = genus.numerator().get_si();
    return g;
}

} // namespace cusp

#endif

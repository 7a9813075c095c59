#ifndef CUSP_TRANSPORT_HPP
#define CUSP_TRANSPORT_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include <cusp/gauss_rational.hpp>
#include <cusp/hauptmodul.hpp>
#include <cusp/metric.hpp>
#include <cusp/projective.hpp>
#include <cusp/series.hpp>

namespace cusp
{

namespace detail
{
inline void check_distinct(const ProjPoint &a1, const ProjPoint &a2, const ProjPoint &a3)
{
    if (a1 == a2 || a1 == a3 || a2 == a3) {
        throw std::invalid_argument("transport: punctures must be pairwise distinct, got " + a1.to_string() + ", " +
                                    a2.to_string() + ", " + a3.to_string());
    }
}

inline void check_finite_cusp(const ProjPoint &a1)
{
    if (a1.is_infinite()) {
        throw std::invalid_argument("transport: the cusp a1 must be a finite point");
    }
}
} // namespace detail

// The map with M(0) = a1, M(1) = a2, M(inf) = a3.
inline Moebius moebius_from_triple(const ProjPoint &a1, const ProjPoint &a2, const ProjPoint &a3)
{
    detail::check_distinct(a1, a2, a3);
    const GaussRational &x1 = a1.z0(), &y1 = a1.z1();
    const GaussRational &x2 = a2.z0(), &y2 = a2.z1();
    const GaussRational &x3 = a3.z0(), &y3 = a3.z1();
    const GaussRational u = x2 * y1 - x1 * y2;
    const GaussRational v = x3 * y2 - x2 * y3;
    return {u * x3, v * x1, u * y3, v * y1};
}

struct TripleParams {
    GaussRational A;
    GaussRational bfrak;
};

// First coefficient A and normalized second coefficient B of the covering map
// at the cusp a1, obtained by moving the punctures 0, 1, inf of the lambda
// function to a1, a2, a3.
inline TripleParams params_from_triple(const ProjPoint &a1, const ProjPoint &a2, const ProjPoint &a3)
{
    detail::check_finite_cusp(a1);
    const Moebius m = moebius_from_triple(a1, a2, a3);
    const GaussRational d2 = m.d() * m.d();
    return {GaussRational(16) * m.det() / d2, GaussRational(-8) - GaussRational(16) * m.c() / m.d()};
}

// The lambda function's expansion 16 q - 128 q^2 + ... in q = exp(i pi tau).
inline Series<GaussRational> lambda_series(int order)
{
    if (order < 3) {
        throw std::invalid_argument("lambda_series: order must be at least 3");
    }
    return GaussRational(16) * solve_congruence<GaussRational>(2, order, GaussRational(-8)).normalized;
}

// M(lambda) as a series in q, constant term a1.
inline Series<GaussRational> covering_series(const ProjPoint &a1, const ProjPoint &a2, const ProjPoint &a3, int order)
{
    detail::check_finite_cusp(a1);
    const Moebius m = moebius_from_triple(a1, a2, a3);
    const Series<GaussRational> lam = lambda_series(order);
    const Series<GaussRational> num = m.a() * lam + Series<GaussRational>::constant(m.b(), order);
    const Series<GaussRational> den = m.c() * lam + Series<GaussRational>::constant(m.d(), order);
    return num * reciprocal(den);
}

struct CuspMetric {
    TripleParams params;
    MetricExpansion<GaussRational> expansion;
};

// Metric at the cusp a1 in the coordinate F = (f - a1)/A; the density is
// |T| / (|A| |F| |log|F||).
inline CuspMetric metric_at_cusp(const ProjPoint &a1, const ProjPoint &a2, const ProjPoint &a3, int degree)
{
    const TripleParams p = params_from_triple(a1, a2, a3);
    const Series<GaussRational> f = covering_series(a1, a2, a3, std::max(degree + 1, 3));
    const Series<GaussRational> fhat = inverse(p.A) * (f - Series<GaussRational>::constant(f[0], f.order()));
    return {p, inside_modulus(fhat, degree)};
}

} // namespace cusp

#endif

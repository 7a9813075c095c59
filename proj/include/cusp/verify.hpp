#ifndef CUSP_VERIFY_HPP
#define CUSP_VERIFY_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <cusp/gauss_rational.hpp>
#include <cusp/hauptmodul.hpp>
#include <cusp/metric.hpp>
#include <cusp/modforms.hpp>
#include <cusp/numeric.hpp>
#include <cusp/series.hpp>

namespace cusp
{

struct Residual {
    std::string name;
    std::optional<Complex> tau;
    std::optional<Complex> f;
    int order = 0;
    Real value;
    Real tolerance;
    bool pass = false;
};

inline Residual make_residual(std::string name, std::optional<Complex> tau, std::optional<Complex> f, int order,
                              Real value, Real tolerance)
{
    const bool pass = value <= tolerance;
    return {std::move(name), std::move(tau), std::move(f), order, std::move(value), std::move(tolerance), pass};
}

namespace detail
{
inline void check_upper_half_plane(const Complex &tau, const char *where)
{
    if (tau.imag() <= 0) {
        throw std::domain_error(std::string(where) + ": tau must lie in the upper half plane");
    }
}
} // namespace detail

// exp(2 pi i tau / N). The real part of tau is reduced modulo N first, so
// tau and tau + N give the same bits whenever that reduction is exact.
inline Complex nome(int level, const Complex &tau)
{
    detail::check_upper_half_plane(tau, "nome");
    if (level < 1) {
        throw std::invalid_argument("nome: level must be positive");
    }
    const Real n(level);
    Real x = fmod(tau.real(), n);
    if (x < 0) {
        x += n;
    }
    const Real theta = 2 * pi() * x / n;
    const Real r = exp(-2 * pi() * tau.imag() / n);
    return {r * cos(theta), r * sin(theta)};
}

// sum c_m q^m by Horner's rule; coefficients are converted exactly at call time.
inline Complex eval_at(const Series<GaussRational> &s, const Complex &q)
{
    Complex acc(0);
    for (int m = s.order(); m >= 0; --m) {
        acc = acc * q + to_complex(s[m]);
    }
    return acc;
}

inline Complex eval_series(const Series<GaussRational> &s, int level, const Complex &tau)
{
    return eval_at(s, nome(level, tau));
}

// lambda(tau) = theta_2^4 / theta_3^4 with p = exp(i pi tau), written as
// 16 p (sum_{n>=0} p^(n(n+1)))^4 / theta_3^4.
inline Complex theta_lambda_oracle(const Complex &tau)
{
    detail::check_upper_half_plane(tau, "theta_lambda_oracle");
    const Complex p = exp(Complex(0, pi()) * tau);
    const Real eps = std::numeric_limits<Real>::epsilon() * Real(1e-5);
    Complex t2(1);
    Complex t3(1);
    for (long n = 1;; ++n) {
        const Complex a = pow(p, n * (n + 1));
        const Complex b = pow(p, n * n);
        t2 += a;
        t3 += 2 * b;
        if (abs(b) < eps) {
            break;
        }
    }
    const Complex t2sq = t2 * t2;
    const Complex t3sq = t3 * t3;
    return 16 * p * t2sq * t2sq / (t3sq * t3sq);
}

// Default coefficients (A, B) for level N: the lambda function for N = 2, and
// A = 1, B = 0 otherwise.
inline std::pair<GaussRational, GaussRational> default_params(int level)
{
    if (level == 2) {
        return {GaussRational(16), GaussRational(-128)};
    }
    return {GaussRational(1), GaussRational(0)};
}

inline Series<GaussRational> numeric_normalized(int level, int order, const GaussRational &A, const GaussRational &B)
{
    if (A.is_zero()) {
        throw std::domain_error("A must be nonzero");
    }
    return solve_congruence<GaussRational>(level, order, B / A).normalized;
}

// |(N^2/4pi^2) {f,tau} - E4(tau)| where {f,tau} = (4pi^2/N^2)(1 - q^2 {f,q})
// and {f,q} is evaluated from numerically summed q-derivatives of f.
inline Residual check_e4_identity(int level, const Complex &tau, int order, const GaussRational &bfrak,
                                  const Real &tolerance = Real("1e-8"))
{
    detail::check_upper_half_plane(tau, "check_e4_identity");
    if (tau.imag() < 1) {
        throw std::domain_error("check_e4_identity: need Im tau >= 1");
    }
    const Series<GaussRational> f = solve_congruence<GaussRational>(level, order, bfrak).normalized;
    const Series<GaussRational> d1 = derivative(f);
    const Series<GaussRational> d2 = derivative(d1);
    const Series<GaussRational> d3 = derivative(d2);
    const Complex q = nome(level, tau);
    const Complex f1 = eval_at(d1, q);
    const Complex f2 = eval_at(d2, q);
    const Complex f3 = eval_at(d3, q);
    const Complex ratio = f2 / f1;
    const Complex schw = 2 * f3 / f1 - 3 * ratio * ratio;
    const Complex kappa_schw_tau = Complex(1) - q * q * schw;

    const Series<Rational> e4 = e4_series(order);
    const Complex q1 = nome(1, tau);
    Complex e4v(0);
    for (int m = order; m >= 0; --m) {
        e4v = e4v * q1 + Complex(to_real(e4[m]));
    }
    return make_residual("e4_identity_N" + std::to_string(level), tau, std::nullopt, order, abs(kappa_schw_tau - e4v),
                         tolerance);
}

inline Residual check_e4_identity(int level, const Complex &tau, int order, const Real &tolerance = Real("1e-8"))
{
    const auto [A, B] = default_params(level);
    return check_e4_identity(level, tau, order, B / A, tolerance);
}

// |rho(f(tau)) |f'(tau)| Im tau - 1| with rho from the degree-limited metric
// expansion and f, f' summed from the series.
inline Residual check_pullback(int level, const GaussRational &A, const GaussRational &B, const Complex &tau,
                               int series_order, int degree, const Real &tolerance)
{
    detail::check_upper_half_plane(tau, "check_pullback");
    const Series<GaussRational> fhat = numeric_normalized(level, std::max(series_order, degree + 1), A, B);
    const MetricExpansion<GaussRational> T =
        degree == 0 ? MetricExpansion<GaussRational>::one(0) : inside_modulus(fhat, degree);
    const Series<GaussRational> f = A * fhat.truncated(series_order);
    const Complex q = nome(level, tau);
    const Complex fv = eval_at(f, q);
    const Complex fq = eval_at(derivative(f), q);
    const Complex ftau = Complex(0, 2 * pi() / level) * q * fq;
    const Real rho = density_eval(T, A, fv);
    const Real value = abs(rho * abs(ftau) * tau.imag() - 1);
    return make_residual("pullback_N" + std::to_string(level) + "_deg" + std::to_string(degree), tau, fv, series_order,
                         value, tolerance);
}

// |K + 1| with K = -(Laplacian log rho) / rho^2 from a five-point stencil of
// step h around f0. Degree 0 is the cusp model T = 1.
inline Residual check_curvature(int level, const GaussRational &A, const GaussRational &B, const Complex &f0,
                                const Real &h, int degree, const Real &tolerance)
{
    if (h <= 0) {
        throw std::invalid_argument("check_curvature: step must be positive");
    }
    MetricExpansion<GaussRational> T = MetricExpansion<GaussRational>::one(0);
    if (degree > 0) {
        T = inside_modulus(numeric_normalized(level, degree + 1 < 3 ? 3 : degree + 1, A, B), degree);
    }
    auto log_rho = [&](const Complex &f) {
        try {
            return log(density_eval(T, A, f));
        } catch (const std::domain_error &) {
            throw std::domain_error("check_curvature: stencil leaves the cusp neighbourhood |f/A| < 1");
        }
    };
    const Real u0 = log_rho(f0);
    const Real lap = (log_rho(f0 + Complex(h, 0)) + log_rho(f0 - Complex(h, 0)) + log_rho(f0 + Complex(0, h)) +
                      log_rho(f0 - Complex(0, h)) - 4 * u0) /
                     (h * h);
    const Real rho0 = exp(u0);
    const Real K = -lap / (rho0 * rho0);
    return make_residual("curvature_N" + std::to_string(level) + "_deg" + std::to_string(degree), std::nullopt, f0,
                         degree, abs(K + 1), tolerance);
}

// |sum of the solved level-2 series at tau - theta oracle|.
inline Residual check_oracle(const Complex &tau, int order, const Real &tolerance = Real("1e-10"))
{
    const Series<GaussRational> lam = GaussRational(16) * numeric_normalized(2, order, 16, -128);
    return make_residual("theta_oracle", tau, std::nullopt, order,
                         abs(eval_series(lam, 2, tau) - theta_lambda_oracle(tau)), tolerance);
}

} // namespace cusp

#endif

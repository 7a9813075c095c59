#ifndef CUSP_METRIC_HPP
#define CUSP_METRIC_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <cusp/gauss_rational.hpp>
#include <cusp/numeric.hpp>
#include <cusp/poly_bb.hpp>
#include <cusp/ring.hpp>
#include <cusp/series.hpp>

namespace cusp
{

// Exponents of F^s * conj(F)^t * L^j, where F is the normalized coordinate
// and L = 1/log|F|.
struct MetricKey {
    int s = 0;
    int t = 0;
    int j = 0;

    int degree() const noexcept
    {
        return s + t;
    }

    // Output order: by degree, then by L power, then by descending F power.
    friend std::strong_ordering operator<=>(const MetricKey &x, const MetricKey &y)
    {
        return std::make_tuple(x.degree(), x.j, -x.s) <=> std::make_tuple(y.degree(), y.j, -y.s);
    }
    friend bool operator==(const MetricKey &, const MetricKey &) = default;
};

template <ExactRing R>
struct MetricTerm {
    MetricKey key;
    R coeff;
};

// Polynomial in F, conj(F) and L truncated at total F-degree max_degree.
template <ExactRing R>
class MetricExpansion
{
public:
    using ring_type = R;

    MetricExpansion() = default;
    explicit MetricExpansion(int max_degree) : max_degree_(max_degree)
    {
        if (max_degree < 0) {
            throw std::invalid_argument("MetricExpansion: negative degree");
        }
    }

    static MetricExpansion one(int max_degree)
    {
        MetricExpansion e(max_degree);
        e.add({0, 0, 0}, R(1));
        return e;
    }

    int max_degree() const noexcept
    {
        return max_degree_;
    }

    const std::map<MetricKey, R> &terms() const noexcept
    {
        return terms_;
    }

    std::vector<MetricTerm<R>> term_list() const
    {
        std::vector<MetricTerm<R>> out;
        for (const auto &[k, c] : terms_) {
            out.push_back({k, c});
        }
        return out;
    }

    R coeff(int s, int t, int j) const
    {
        const auto it = terms_.find(MetricKey{s, t, j});
        return it == terms_.end() ? R{} : it->second;
    }

    void add(const MetricKey &k, const R &c)
    {
        if (k.s < 0 || k.t < 0 || k.j < 0) {
            throw std::invalid_argument("MetricExpansion: negative exponent");
        }
        if (k.degree() > max_degree_ || is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    MetricExpansion truncated(int degree) const
    {
        MetricExpansion r(std::min(degree, max_degree_));
        for (const auto &[k, c] : terms_) {
            r.add(k, c);
        }
        return r;
    }

    // Swaps F and conj(F) and conjugates coefficients.
    MetricExpansion conj() const
    {
        MetricExpansion r(max_degree_);
        for (const auto &[k, c] : terms_) {
            r.add({k.t, k.s, k.j}, cusp::conj(c));
        }
        return r;
    }

    bool is_self_conjugate() const
    {
        return conj() == *this;
    }

    friend MetricExpansion operator+(const MetricExpansion &a, const MetricExpansion &b)
    {
        MetricExpansion r = a.truncated(std::min(a.max_degree_, b.max_degree_));
        for (const auto &[k, c] : b.terms_) {
            r.add(k, c);
        }
        return r;
    }

    friend MetricExpansion operator*(const MetricExpansion &a, const MetricExpansion &b)
    {
        MetricExpansion r(std::min(a.max_degree_, b.max_degree_));
        for (const auto &[ka, ca] : a.terms_) {
            for (const auto &[kb, cb] : b.terms_) {
                r.add({ka.s + kb.s, ka.t + kb.t, ka.j + kb.j}, ca * cb);
            }
        }
        return r;
    }

    friend MetricExpansion operator*(const R &c, const MetricExpansion &a)
    {
        MetricExpansion r(a.max_degree_);
        for (const auto &[k, v] : a.terms_) {
            r.add(k, c * v);
        }
        return r;
    }

    friend bool operator==(const MetricExpansion &, const MetricExpansion &) = default;

private:
    int max_degree_ = 0;
    std::map<MetricKey, R> terms_;
};

// The real factor log|F| / log|q(F)| = 1 / (1 + L X), X = Re log(q(F)/F),
// expanded as a geometric series in L X. The input is the inverse series
// q(F) = F + ... known through F^(degree+1).
template <ExactRing R>
MetricExpansion<R> log_ratio_series(const Series<R> &inverse_series, int degree)
{
    if (inverse_series.order() < degree + 1) {
        throw std::invalid_argument("log_ratio_series: need the inverse series through degree + 1");
    }
    std::vector<R> hc(inverse_series.coeffs().begin() + 1, inverse_series.coeffs().begin() + degree + 2);
    const Series<R> ell = log_series(Series<R>(std::move(hc), degree));

    // -L X = -L (ell(F) + conj(ell)(conj F)) / 2
    MetricExpansion<R> minus_lx(degree);
    const R half = R(Rational(-1, 2));
    for (int m = 1; m <= degree; ++m) {
        minus_lx.add({m, 0, 1}, half * ell[m]);
        minus_lx.add({0, m, 1}, half * conj(ell[m]));
    }
    MetricExpansion<R> sum = MetricExpansion<R>::one(degree);
    MetricExpansion<R> power = MetricExpansion<R>::one(degree);
    for (int l = 1; l <= degree; ++l) {
        power = power * minus_lx;
        sum = sum + power;
    }
    return sum;
}

// T(F, conj F, L) with |ds| = |T| / (|A| |F| |log|F||) |df|, F = f/A, from
// the normalized series fhat = f/A = q + B q^2 + ... known through degree + 1.
template <ExactRing R>
MetricExpansion<R> inside_modulus(const Series<R> &fhat, int degree)
{
    if (degree < 1) {
        throw std::invalid_argument("inside_modulus: degree must be at least 1");
    }
    if (fhat.order() < degree + 1) {
        throw std::invalid_argument("inside_modulus: degree " + std::to_string(degree) +
                                    " needs the series through q^" + std::to_string(degree + 1) + ", have q^" +
                                    std::to_string(fhat.order()));
    }
    const Series<R> g = revert(fhat.truncated(degree + 1));
    std::vector<R> hc(g.coeffs().begin() + 1, g.coeffs().end());
    const Series<R> ell = log_series(Series<R>(std::move(hc), degree));

    // F q'(F) / q(F) = 1 + F ell'(F)
    MetricExpansion<R> d(degree);
    d.add({0, 0, 0}, R(1));
    for (int m = 1; m <= degree; ++m) {
        d.add({m, 0, 0}, R(m) * ell[m]);
    }
    return d * log_ratio_series(g, degree);
}

inline MetricExpansion<GaussRational> specialize(const MetricExpansion<PolyBB> &e, const GaussRational &bfrak)
{
    MetricExpansion<GaussRational> r(e.max_degree());
    for (const auto &[k, c] : e.terms()) {
        r.add(k, c.evaluate(bfrak, bfrak.conj()));
    }
    return r;
}

// Coefficients with respect to f and conj(f) instead of F = f/A. L is
// unchanged (still 1/log|f/A|).
inline MetricExpansion<GaussRational> rescale_to_f(const MetricExpansion<GaussRational> &e, const GaussRational &A)
{
    if (A.is_zero()) {
        throw std::domain_error("rescale_to_f: A must be nonzero");
    }
    const GaussRational inv = inverse(A);
    const GaussRational inv_bar = inv.conj();
    MetricExpansion<GaussRational> r(e.max_degree());
    for (const auto &[k, c] : e.terms()) {
        GaussRational v = c;
        for (int i = 0; i < k.s; ++i) {
            v *= inv;
        }
        for (int i = 0; i < k.t; ++i) {
            v *= inv_bar;
        }
        r.add(k, v);
    }
    return r;
}

// Value of T at F with L = 1/log|F|, using terms of degree <= cap.
inline Complex evaluate_expansion(const MetricExpansion<GaussRational> &e, const Complex &F, int cap)
{
    const Real logabs = log(abs(F));
    const Real L = 1 / logabs;
    const Complex Fb = conj(F);
    Complex acc(0);
    for (const auto &[k, c] : e.terms()) {
        if (k.degree() > cap) {
            continue;
        }
        acc += to_complex(c) * pow(F, k.s) * pow(Fb, k.t) * pow(L, k.j);
    }
    return acc;
}

// rho(f) with |ds| = rho(f) |df|, using terms of degree <= cap (all by default).
inline Real density_eval(const MetricExpansion<GaussRational> &e, const GaussRational &A, const Complex &f,
                         std::optional<int> cap = std::nullopt)
{
    if (A.is_zero()) {
        throw std::domain_error("density_eval: A must be nonzero");
    }
    const Complex Ac = to_complex(A);
    const Complex F = f / Ac;
    const Real r = abs(F);
    if (r == 0 || r >= 1) {
        throw std::domain_error("density_eval: |f/A| must lie in (0, 1), got " + r.str(8));
    }
    const Complex T = evaluate_expansion(e, F, cap.value_or(e.max_degree()));
    return abs(T) / (abs(Ac) * r * abs(log(r)));
}

} // namespace cusp

#endif

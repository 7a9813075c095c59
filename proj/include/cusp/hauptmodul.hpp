#ifndef CUSP_HAUPTMODUL_HPP
#define CUSP_HAUPTMODUL_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <cusp/gauss_rational.hpp>
#include <cusp/modforms.hpp>
#include <cusp/poly_bb.hpp>
#include <cusp/projective.hpp>
#include <cusp/ring.hpp>
#include <cusp/series.hpp>

namespace cusp
{

// Normalized covering map f/A = q + B q^2 + sum C_m q^m. In the congruence
// case the coefficients are polynomials in the free symbol B.
template <ExactRing R>
struct HauptmodulExpansion {
    std::optional<int> level;
    Series<R> normalized;
};

// Target value of [q^m]{f,q} for Gamma(N): -240 sigma3(l) when m = lN - 2.
template <ExactRing R>
R congruence_target(int level, int m)
{
    if ((m + 2) % level != 0) {
        return R{};
    }
    const auto l = static_cast<std::uint64_t>((m + 2) / level);
    return R(Rational(-240) * Rational(sigma3(l)));
}

// [q^m]{f,q} minus its Gamma(N) target, for a partial series known through
// q^(m+3).
template <ExactRing R>
R congruence_step_residual(const Series<R> &partial, int m, int level)
{
    const Series<R> s = schwarzian(partial.truncated(m + 3));
    return s[m] - congruence_target<R>(level, m);
}

namespace detail
{
inline void check_level(int level)
{
    if (level < 2 || level > 5) {
        throw std::invalid_argument("solve_congruence: level must be 2, 3, 4 or 5, got " + std::to_string(level));
    }
}

// Given residual(0) and residual(1) of a map that is affine in the unknown,
// returns its root. The slope must be a unit of the ring.
template <ExactRing R>
R solve_affine(const R &r0, const R &r1, const std::string &where)
{
    const R slope = r1 - r0;
    R inv;
    try {
        inv = inverse(slope);
    } catch (const std::domain_error &) {
        throw std::domain_error(where + ": linear coefficient " + render(slope) + " is not a nonzero constant");
    }
    return -(r0 * inv);
}
} // namespace detail

// Solves C_3..C_order so that {f,q} matches E4 for Gamma(N). R = PolyBB with
// bfrak = B gives the symbolic solution; a numeric ring gives it at one point.
template <ExactRing R>
HauptmodulExpansion<R> solve_congruence(int level, int order, const R &bfrak)
{
    detail::check_level(level);
    if (order < 3) {
        throw std::invalid_argument("solve_congruence: order must be at least 3");
    }
    Series<R> f(order);
    f.set(1, R(1));
    f.set(2, bfrak);
    for (int k = 3; k <= order; ++k) {
        const int m = k - 3;
        Series<R> trial = f.truncated(k);
        trial.set(k, R{});
        const R r0 = congruence_step_residual(trial, m, level);
        trial.set(k, R(1));
        const R r1 = congruence_step_residual(trial, m, level);
        f.set(k, detail::solve_affine(r0, r1, "solve_congruence step " + std::to_string(k)));
    }
    return {level, std::move(f)};
}

inline HauptmodulExpansion<PolyBB> solve_congruence(int level, int order)
{
    return solve_congruence<PolyBB>(level, order, PolyBB::B());
}

// A q + B q^2 + sum A C_m(B/A) q^m.
inline Series<GaussRational> specialize(const HauptmodulExpansion<PolyBB> &h, const GaussRational &A,
                                        const GaussRational &B)
{
    if (A.is_zero()) {
        throw std::domain_error("specialize: A must be nonzero");
    }
    const GaussRational bfrak = B / A;
    const Series<PolyBB> &s = h.normalized;
    std::vector<GaussRational> c(static_cast<std::size_t>(s.order()) + 1);
    for (int m = 0; m <= s.order(); ++m) {
        c[m] = A * s[m].evaluate(bfrak, bfrak.conj());
    }
    return Series<GaussRational>(std::move(c), s.order());
}

// Normalized series with B specialized but A left out.
inline Series<GaussRational> specialize_normalized(const Series<PolyBB> &s, const GaussRational &bfrak)
{
    std::vector<GaussRational> c(static_cast<std::size_t>(s.order()) + 1);
    for (int m = 0; m <= s.order(); ++m) {
        c[m] = s[m].evaluate(bfrak, bfrak.conj());
    }
    return Series<GaussRational>(std::move(c), s.order());
}

// Punctures other than the cusp at 0, with the ratio 2 beta_j / alpha_j for
// each finite one (in order). A puncture at infinity carries no ratio.
struct AccessoryData {
    std::vector<ProjPoint> punctures;
    std::vector<GaussRational> ratios;

    std::vector<GaussRational> finite_punctures() const
    {
        std::vector<GaussRational> out;
        for (const ProjPoint &p : punctures) {
            if (!p.is_infinite()) {
                out.push_back(p.value());
            }
        }
        return out;
    }

    void validate() const
    {
        for (std::size_t i = 0; i < punctures.size(); ++i) {
            if (punctures[i] == ProjPoint(0)) {
                throw std::invalid_argument("AccessoryData: puncture " + punctures[i].to_string() +
                                            " coincides with the cusp at 0");
            }
            for (std::size_t j = i + 1; j < punctures.size(); ++j) {
                if (punctures[i] == punctures[j]) {
                    throw std::invalid_argument("AccessoryData: repeated puncture " + punctures[i].to_string());
                }
            }
        }
        if (ratios.size() != finite_punctures().size()) {
            throw std::invalid_argument("AccessoryData: expected " + std::to_string(finite_punctures().size()) +
                                        " ratios, got " + std::to_string(ratios.size()));
        }
    }
};

// (19 B^2 - A^2 sum_j (1/a_j^2 - r_j/a_j)) / 16, with B the normalized
// second coefficient. Infinite punctures contribute nothing.
inline GaussRational c3_closed_form(const GaussRational &A, const GaussRational &bfrak, const AccessoryData &data)
{
    data.validate();
    const auto finite = data.finite_punctures();
    GaussRational sum;
    for (std::size_t j = 0; j < finite.size(); ++j) {
        const GaussRational inv = inverse(finite[j]);
        sum += inv * inv - data.ratios[j] * inv;
    }
    return (GaussRational(19) * bfrak * bfrak - A * A * sum) / GaussRational(16);
}

namespace detail
{
// Both sides of the accessory relation multiplied by q^2, for f = A fhat with
// cusp at 0. Returns the left side and, separately, the pieces of the right
// side: the part without ratios, the coefficient series of r0, and one
// coefficient series per finite puncture.
struct AccessorySides {
    Series<GaussRational> lhs;
    Series<GaussRational> fixed;
    Series<GaussRational> cusp_term;
    std::vector<Series<GaussRational>> puncture_terms;
};

inline AccessorySides accessory_sides(const Series<GaussRational> &fhat, const GaussRational &A,
                                      const std::vector<GaussRational> &finite)
{
    const int order = fhat.order();
    const Series<GaussRational> one = Series<GaussRational>::constant(1, order - 1);
    const Series<GaussRational> q2 = Series<GaussRational>::variable(order - 1) * Series<GaussRational>::variable(order - 1);

    const Series<GaussRational> S = schwarzian(fhat);
    Series<GaussRational> q2S(order - 1);
    for (int e = 2; e <= order - 1; ++e) {
        q2S.set(e, S[e - 2]);
    }
    const Series<GaussRational> d = derivative(fhat);
    const Series<GaussRational> inv_d = reciprocal(d);
    AccessorySides out{.lhs = inverse(A * A) * ((one - q2S) * inv_d * inv_d),
                       .fixed = Series<GaussRational>(order - 1),
                       .cusp_term = Series<GaussRational>(order - 1),
                       .puncture_terms = {}};

    std::vector<GaussRational> uc(fhat.coeffs().begin() + 1, fhat.coeffs().end());
    const Series<GaussRational> inv_u = reciprocal(Series<GaussRational>(std::move(uc), order - 1));
    out.fixed = inverse(A * A) * (inv_u * inv_u);
    Series<GaussRational> shifted(order - 1);
    for (int e = 1; e <= order - 1; ++e) {
        shifted.set(e, inv_u[e - 1]);
    }
    out.cusp_term = inverse(A) * shifted;

    const Series<GaussRational> f = A * fhat.truncated(order - 1);
    for (const GaussRational &a : finite) {
        const Series<GaussRational> g = reciprocal(f - Series<GaussRational>::constant(a, order - 1));
        const Series<GaussRational> q2g = q2 * g;
        out.fixed = out.fixed + q2g * g;
        out.puncture_terms.push_back(q2g);
    }
    return out;
}

inline Series<GaussRational> accessory_residual(const Series<GaussRational> &fhat, const GaussRational &A,
                                                const GaussRational &r0, const AccessoryData &data)
{
    const auto finite = data.finite_punctures();
    const AccessorySides s = accessory_sides(fhat, A, finite);
    Series<GaussRational> rhs = s.fixed + r0 * s.cusp_term;
    for (std::size_t j = 0; j < finite.size(); ++j) {
        rhs = rhs + data.ratios[j] * s.puncture_terms[j];
    }
    return s.lhs - rhs;
}
} // namespace detail

// Normalized series fhat = q + B q^2 + sum C_m q^m determined by the accessory
// relation for the given punctures and ratios.
inline Series<GaussRational> solve_accessory_normalized(const AccessoryData &data, const GaussRational &A,
                                                        const GaussRational &bfrak, int order)
{
    data.validate();
    if (A.is_zero()) {
        throw std::domain_error("solve_accessory: A must be nonzero");
    }
    if (order < 3) {
        throw std::invalid_argument("solve_accessory: order must be at least 3");
    }
    Series<GaussRational> f(order);
    f.set(1, 1);
    f.set(2, bfrak);

    // The cusp ratio follows from the q^1 match, which does not involve C_3.
    GaussRational r0;
    {
        const Series<GaussRational> probe = f.truncated(3);
        const GaussRational e0 = detail::accessory_residual(probe, A, 0, data)[1];
        const GaussRational e1 = detail::accessory_residual(probe, A, 1, data)[1];
        r0 = detail::solve_affine(e0, e1, "solve_accessory cusp ratio");
    }

    for (int k = 3; k <= order; ++k) {
        Series<GaussRational> trial = f.truncated(k);
        trial.set(k, 0);
        const GaussRational e0 = detail::accessory_residual(trial, A, r0, data)[k - 1];
        trial.set(k, 1);
        const GaussRational e1 = detail::accessory_residual(trial, A, r0, data)[k - 1];
        try {
            f.set(k, detail::solve_affine(e0, e1, "solve_accessory"));
        } catch (const std::domain_error &) {
            throw std::domain_error("solve_accessory: singular linear step at order " + std::to_string(k));
        }
    }
    return f;
}

// A * fhat, i.e. the covering map itself with the cusp at 0.
inline Series<GaussRational> solve_accessory(const AccessoryData &data, const GaussRational &A,
                                             const GaussRational &bfrak, int order)
{
    return A * solve_accessory_normalized(data, A, bfrak, order);
}

namespace detail
{
// Exact Gaussian elimination on an overdetermined system rows * x = rhs.
// Throws unless the system has full column rank and is consistent.
inline std::vector<GaussRational> solve_exact(std::vector<std::vector<GaussRational>> rows, std::vector<GaussRational> rhs,
                                              std::size_t unknowns, const std::string &where)
{
    const std::size_t n_rows = rows.size();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < unknowns && pivot_row < n_rows; ++col) {
        std::size_t p = pivot_row;
        while (p < n_rows && rows[p][col].is_zero()) {
            ++p;
        }
        if (p == n_rows) {
            continue;
        }
        std::swap(rows[p], rows[pivot_row]);
        std::swap(rhs[p], rhs[pivot_row]);
        const GaussRational inv = inverse(rows[pivot_row][col]);
        for (std::size_t c = col; c < unknowns; ++c) {
            rows[pivot_row][c] *= inv;
        }
        rhs[pivot_row] *= inv;
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) {
                continue;
            }
            const GaussRational factor = rows[r][col];
            for (std::size_t c = col; c < unknowns; ++c) {
                rows[r][c] -= factor * rows[pivot_row][c];
            }
            rhs[r] -= factor * rhs[pivot_row];
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    if (pivot_cols.size() < unknowns) {
        throw std::domain_error(where + ": singular system (rank " + std::to_string(pivot_cols.size()) + " < " +
                                std::to_string(unknowns) + ")");
    }
    for (std::size_t r = pivot_row; r < n_rows; ++r) {
        if (!rhs[r].is_zero()) {
            throw std::domain_error(where + ": singular system (punctures inconsistent with the series)");
        }
    }
    std::vector<GaussRational> x(unknowns);
    for (std::size_t i = 0; i < unknowns; ++i) {
        x[pivot_cols[i]] = rhs[i];
    }
    return x;
}
} // namespace detail

// Recovers the ratios 2 beta_j / alpha_j of a covering series f with cusp at 0
// (f(0) = 0) and the given other punctures, by matching every available
// coefficient of the accessory relation.
inline AccessoryData accessory_from_series(const Series<GaussRational> &f, const std::vector<ProjPoint> &punctures)
{
    AccessoryData data{punctures, {}};
    data.ratios.resize(data.finite_punctures().size());
    data.validate();
    const std::size_t n_finite = data.ratios.size();
    if (f.order() < static_cast<int>(punctures.size()) + 2 || f.order() < 3) {
        throw std::invalid_argument("accessory_from_series: series order must be at least the puncture count plus 2");
    }
    if (!f[0].is_zero()) {
        throw std::domain_error("accessory_from_series: series must vanish at the cusp (constant term 0)");
    }
    if (f[1].is_zero()) {
        throw std::domain_error("accessory_from_series: linear coefficient must be nonzero");
    }
    const GaussRational A = f[1];
    const Series<GaussRational> fhat = inverse(A) * f;
    const auto finite = data.finite_punctures();
    const detail::AccessorySides s = detail::accessory_sides(fhat, A, finite);
    const Series<GaussRational> target = s.lhs - s.fixed;

    const std::size_t unknowns = n_finite + 1;
    std::vector<std::vector<GaussRational>> rows;
    std::vector<GaussRational> rhs;
    for (int e = 0; e <= target.order(); ++e) {
        std::vector<GaussRational> row(unknowns);
        row[0] = s.cusp_term[e];
        for (std::size_t j = 0; j < n_finite; ++j) {
            row[j + 1] = s.puncture_terms[j][e];
        }
        rows.push_back(std::move(row));
        rhs.push_back(target[e]);
    }
    const auto x = detail::solve_exact(std::move(rows), std::move(rhs), unknowns, "accessory_from_series");
    for (std::size_t j = 0; j < n_finite; ++j) {
        data.ratios[j] = x[j + 1];
    }
    return data;
}

} // namespace cusp

#endif

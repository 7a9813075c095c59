#include <gtest/gtest.h>

#include <cusp/hauptmodul.hpp>
#include <cusp/transport.hpp>

#include "test_util.hpp"

using cusp::GaussRational;
using cusp::Moebius;
using cusp::ProjPoint;
using cusp::Rational;
using cusp::Series;
using GS = Series<GaussRational>;

namespace
{
const ProjPoint inf = ProjPoint::infinity();

struct Triple {
    ProjPoint a1, a2, a3;
};

// Pairwise distinct, a1 finite; a2 or a3 may be infinite.
Triple random_triple(bool allow_infinity = true)
{
    for (;;) {
        Triple t{testutil::random_point(false), testutil::random_point(allow_infinity), testutil::random_point(allow_infinity)};
        if (!(t.a1 == t.a2) && !(t.a1 == t.a3) && !(t.a2 == t.a3)) {
            return t;
        }
    }
}
} // namespace

TEST(Moebius, IdentityTriple)
{
    const Moebius m = cusp::moebius_from_triple(0, 1, inf);
    EXPECT_TRUE(m.same_map(Moebius()));
}

TEST(Moebius, SendsZeroOneInfinity)
{
    for (int k = 0; k < 50; ++k) {
        const ProjPoint a1 = testutil::random_point(), a2 = testutil::random_point(), a3 = testutil::random_point();
        if (a1 == a2 || a1 == a3 || a2 == a3) {
            --k;
            continue;
        }
        const Moebius m = cusp::moebius_from_triple(a1, a2, a3);
        EXPECT_EQ(m(ProjPoint(0)), a1);
        EXPECT_EQ(m(ProjPoint(1)), a2);
        EXPECT_EQ(m(inf), a3);
    }
}

TEST(Moebius, ProjectiveActionMatchesAffine)
{
    for (int k = 0; k < 50; ++k) {
        const Triple t = random_triple();
        const Moebius m = cusp::moebius_from_triple(t.a1, t.a2, t.a3);
        const GaussRational z = testutil::random_gauss(5);
        const GaussRational den = m.c() * z + m.d();
        if (den.is_zero()) {
            continue;
        }
        EXPECT_EQ(m(ProjPoint(z)).value(), (m.a() * z + m.b()) / den);
        EXPECT_TRUE((m * m.inverse()).same_map(Moebius()));
    }
}

TEST(Moebius, DerivativeAtZero)
{
    for (int k = 0; k < 30; ++k) {
        const Triple t = random_triple(false);
        const Moebius m = cusp::moebius_from_triple(t.a1, t.a2, t.a3);
        const GaussRational a1 = t.a1.value(), a2 = t.a2.value(), a3 = t.a3.value();
        EXPECT_EQ(m.det() / (m.d() * m.d()), (a2 - a1) * (a1 - a3) / (a2 - a3));
    }
}

TEST(Moebius, CoincidentPointsRejected)
{
    EXPECT_THROW(cusp::moebius_from_triple(1, 1, 2), std::invalid_argument);
    EXPECT_THROW(cusp::moebius_from_triple(0, inf, inf), std::invalid_argument);
    EXPECT_THROW(cusp::params_from_triple(2, 3, 2), std::invalid_argument);
    EXPECT_THROW(cusp::params_from_triple(inf, 0, 1), std::invalid_argument);
}

TEST(Params, Examples)
{
    const auto p = cusp::params_from_triple(0, 1, inf);
    EXPECT_EQ(p.A, GaussRational(16));
    EXPECT_EQ(p.bfrak, GaussRational(-8));
    EXPECT_EQ(cusp::params_from_triple(0, 1, -1).bfrak, GaussRational(0));
    EXPECT_EQ(cusp::params_from_triple(0, -1, 1).bfrak, GaussRational(0));
}

TEST(Params, FiniteTripleFormulas)
{
    for (int k = 0; k < 30; ++k) {
        const Triple t = random_triple(false);
        const GaussRational a1 = t.a1.value(), a2 = t.a2.value(), a3 = t.a3.value();
        const auto p = cusp::params_from_triple(t.a1, t.a2, t.a3);
        EXPECT_EQ(p.A, GaussRational(16) * (a1 - a3) * (a2 - a1) / (a2 - a3));
        EXPECT_EQ(p.bfrak, GaussRational(8) * (GaussRational(2) * (a2 - a1) / (a2 - a3) - GaussRational(1)));
    }
}

TEST(Covering, LambdaTriple)
{
    const GS f = cusp::covering_series(0, 1, inf, 6);
    const std::vector<long> expected{0, 16, -128, 704, -3072, 11488, -38400};
    for (int m = 0; m <= 6; ++m) {
        EXPECT_EQ(f[m], GaussRational(expected[static_cast<std::size_t>(m)]));
    }
}

TEST(Covering, ConstantLinearAndQuadraticTerms)
{
    for (int k = 0; k < 30; ++k) {
        const Triple t = random_triple();
        const GS f = cusp::covering_series(t.a1, t.a2, t.a3, 5);
        const auto p = cusp::params_from_triple(t.a1, t.a2, t.a3);
        EXPECT_EQ(f[0], t.a1.value());
        EXPECT_EQ(f[1], p.A);
        EXPECT_EQ(f[2], p.A * p.bfrak);
        if (!t.a3.is_infinite() && !t.a2.is_infinite()) {
            const GaussRational a1 = t.a1.value(), a2 = t.a2.value(), a3 = t.a3.value();
            const GaussRational u = (a2 - a1) / (a2 - a3);
            EXPECT_EQ(f[2], GaussRational(128) * (a1 - a3) * (GaussRational(2) * u * u - u));
        }
    }
}

TEST(Covering, NormalizedSeriesSolvesLevelTwoRecurrence)
{
    const auto sym = cusp::solve_congruence(2, 8).normalized;
    for (int k = 0; k < 10; ++k) {
        const Triple t = random_triple();
        const GS f = cusp::covering_series(t.a1, t.a2, t.a3, 8);
        const auto p = cusp::params_from_triple(t.a1, t.a2, t.a3);
        const GS fhat = cusp::inverse(p.A) * (f - GS::constant(f[0], 8));
        EXPECT_EQ(fhat, cusp::specialize_normalized(sym, p.bfrak));
    }
}

TEST(Covering, AvoidsOtherPuncturesNearCusp)
{
    for (int k = 0; k < 10; ++k) {
        const Triple t = random_triple(false);
        const GS f = cusp::covering_series(t.a1, t.a2, t.a3, 10);
        const auto p = cusp::params_from_triple(t.a1, t.a2, t.a3);
        // Keep |A q| small relative to the puncture separation.
        const double sep = std::min(std::sqrt((t.a2.value() - t.a1.value()).norm().to_double()),
                                    std::sqrt((t.a3.value() - t.a1.value()).norm().to_double()));
        const double r = 0.05 * sep / std::sqrt(p.A.norm().to_double());
        for (int j = 0; j < 16; ++j) {
            const double th = 2 * M_PI * j / 16;
            std::complex<double> q(r * std::cos(th), r * std::sin(th)), acc(0);
            for (int m = f.order(); m >= 0; --m) {
                acc = acc * q + std::complex<double>(f[m].re().to_double(), f[m].im().to_double());
            }
            EXPECT_GT(std::abs(acc - std::complex<double>(t.a2.value().re().to_double(), t.a2.value().im().to_double())), 0.5 * sep);
            EXPECT_GT(std::abs(acc - std::complex<double>(t.a3.value().re().to_double(), t.a3.value().im().to_double())), 0.5 * sep);
        }
    }
}

TEST(CuspMetric, LambdaDegreeOne)
{
    const auto cm = cusp::metric_at_cusp(0, 1, inf, 1);
    EXPECT_EQ(cm.params.A, GaussRational(16));
    EXPECT_EQ(cm.expansion.coeff(1, 0, 0), GaussRational(8));
    EXPECT_EQ(cm.expansion.coeff(1, 0, 1), GaussRational(-4));
    EXPECT_EQ(cm.expansion.coeff(0, 1, 1), GaussRational(-4));
}

TEST(CuspMetric, DegreeOneBracket)
{
    for (int k = 0; k < 20; ++k) {
        const Triple t = random_triple(false);
        const auto cm = cusp::metric_at_cusp(t.a1, t.a2, t.a3, 2);
        const GaussRational a1 = t.a1.value(), a2 = t.a2.value(), a3 = t.a3.value();
        const GaussRational bracket = GaussRational(2) * (a2 - a1) / (a2 - a3) - GaussRational(1);
        EXPECT_EQ(cm.expansion.coeff(1, 0, 0), GaussRational(-8) * bracket);
        EXPECT_EQ(cm.expansion.coeff(1, 0, 1), GaussRational(4) * bracket);
        // 1/|A| is the prefactor |a2 - a3| / (16 |a1 - a3| |a2 - a1|); compare squares.
        const Rational inv_abs_a_sq = (a2 - a3).norm() / (Rational(256) * (a1 - a3).norm() * (a2 - a1).norm());
        EXPECT_EQ(cusp::inverse(cm.params.A.norm()), inv_abs_a_sq);
    }
}

TEST(CuspMetric, SymmetricTripleHasNoDegreeOneTerms)
{
    const auto cm = cusp::metric_at_cusp(0, 1, -1, 3);
    EXPECT_TRUE(cm.params.bfrak.is_zero());
    for (const auto &[k, c] : cm.expansion.terms()) {
        EXPECT_NE(k.degree(), 1);
    }
}

TEST(CuspMetric, MatchesSymbolicLevelTwoMetric)
{
    const auto sym = cusp::inside_modulus(cusp::solve_congruence(2, 5).normalized, 4);
    for (int k = 0; k < 5; ++k) {
        const Triple t = random_triple();
        const auto cm = cusp::metric_at_cusp(t.a1, t.a2, t.a3, 4);
        EXPECT_EQ(cm.expansion, cusp::specialize(sym, cm.params.bfrak));
    }
}

TEST(Transport, AccessoryRoundTrip)
{
    for (int k = 0; k < 10; ++k) {
        const Triple t = random_triple();
        const GS f = cusp::covering_series(t.a1, t.a2, t.a3, 8);
        const GaussRational a1 = t.a1.value();
        auto shift = [&](const ProjPoint &p) { return p.is_infinite() ? p : ProjPoint(p.value() - a1); };
        const std::vector<ProjPoint> punctures{shift(t.a2), shift(t.a3)};
        const auto data = cusp::accessory_from_series(f - GS::constant(a1, 8), punctures);
        const auto p = cusp::params_from_triple(t.a1, t.a2, t.a3);
        EXPECT_EQ(cusp::c3_closed_form(p.A, p.bfrak, data), f[3] / p.A);
        EXPECT_EQ(cusp::solve_accessory(data, p.A, p.bfrak, 8), f - GS::constant(a1, 8));
    }
}

TEST(ProjPoint, ParseAndEquality)
{
    EXPECT_TRUE(ProjPoint::parse("inf").is_infinite());
    EXPECT_EQ(ProjPoint::parse("1/2,3"), ProjPoint(GaussRational(Rational(1, 2), 3)));
    EXPECT_EQ(ProjPoint(GaussRational(2), GaussRational(4)), ProjPoint(GaussRational(Rational(1, 2))));
    EXPECT_THROW(ProjPoint(GaussRational(0), GaussRational(0)), std::invalid_argument);
    EXPECT_THROW(inf.value(), std::domain_error);
}

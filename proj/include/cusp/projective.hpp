#ifndef CUSP_PROJECTIVE_HPP
#define CUSP_PROJECTIVE_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <cusp/gauss_rational.hpp>

namespace cusp
{

// Point [z0 : z1] of the complex projective line over Q(i). Finite points are
// [z : 1]; infinity is [1 : 0].
class ProjPoint
{
public:
    ProjPoint() : z0_(0), z1_(1) {}
    ProjPoint(GaussRational z) : z0_(std::move(z)), z1_(1) {} // NOLINT(google-explicit-constructor)
    template <std::integral I>
    ProjPoint(I n) : ProjPoint(GaussRational(n)) // NOLINT(google-explicit-constructor)
    {
    }
    ProjPoint(GaussRational z0, GaussRational z1) : z0_(std::move(z0)), z1_(std::move(z1))
    {
        if (z0_.is_zero() && z1_.is_zero()) {
            throw std::invalid_argument("ProjPoint: [0:0] is not a point");
        }
    }

    static ProjPoint infinity()
    {
        return {GaussRational(1), GaussRational(0)};
    }

    // "inf" or anything GaussRational::parse accepts.
    static ProjPoint parse(std::string_view text)
    {
        if (text == "inf" || text == "oo" || text == "infinity") {
            return infinity();
        }
        return {GaussRational::parse(text)};
    }

    const GaussRational &z0() const noexcept
    {
        return z0_;
    }
    const GaussRational &z1() const noexcept
    {
        return z1_;
    }

    bool is_infinite() const noexcept
    {
        return z1_.is_zero();
    }

    GaussRational value() const
    {
        if (is_infinite()) {
            throw std::domain_error("ProjPoint: the point at infinity has no affine value");
        }
        return z0_ / z1_;
    }

    std::string to_string() const
    {
        return is_infinite() ? std::string("inf") : value().to_string();
    }

    friend bool operator==(const ProjPoint &a, const ProjPoint &b)
    {
        return a.z0_ * b.z1_ == a.z1_ * b.z0_;
    }

    friend std::ostream &operator<<(std::ostream &os, const ProjPoint &p)
    {
        return os << p.to_string();
    }

private:
    GaussRational z0_;
    GaussRational z1_;
};

// z -> (a z + b) / (c z + d) acting on the projective line.
class Moebius
{
public:
    Moebius() : a_(1), b_(0), c_(0), d_(1) {}
    Moebius(GaussRational a, GaussRational b, GaussRational c, GaussRational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
        if (det().is_zero()) {
            throw std::invalid_argument("Moebius: singular matrix");
        }
    }

    const GaussRational &a() const noexcept
    {
        return a_;
    }
    const GaussRational &b() const noexcept
    {
        return b_;
    }
    const GaussRational &c() const noexcept
    {
        return c_;
    }
    const GaussRational &d() const noexcept
    {
        return d_;
    }

    GaussRational det() const
    {
        return a_ * d_ - b_ * c_;
    }

    ProjPoint operator()(const ProjPoint &p) const
    {
        return {a_ * p.z0() + b_ * p.z1(), c_ * p.z0() + d_ * p.z1()};
    }

    Moebius operator*(const Moebius &o) const
    {
        return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
    }

    Moebius inverse() const
    {
        return {d_, -b_, -c_, a_};
    }

    // Equality as maps: matrices agree up to a nonzero scalar.
    bool same_map(const Moebius &o) const
    {
        return a_ * o.b_ == b_ * o.a_ && a_ * o.c_ == c_ * o.a_ && a_ * o.d_ == d_ * o.a_ && b_ * o.c_ == c_ * o.b_ &&
               b_ * o.d_ == d_ * o.b_ && c_ * o.d_ == d_ * o.c_;
    }

private:
    GaussRational a_, b_, c_, d_;
};

} // namespace cusp

#endif

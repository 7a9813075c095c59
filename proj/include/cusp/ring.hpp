#ifndef CUSP_RING_HPP
#define CUSP_RING_HPP

#include <concepts>
#include <string>
#include <string_view>

#include <cusp/gauss_rational.hpp>
#include <cusp/poly_bb.hpp>
#include <cusp/rational.hpp>

namespace cusp
{

// Commutative ring with exact arithmetic, a conjugation, and a unit test via
// inverse() (which throws std::domain_error for non-units).
template <typename R>
concept ExactRing = std::regular<R> && requires(const R &a, const R &b, const Rational &q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { R(q) };
    { R(1) };
    { is_zero(a) } -> std::convertible_to<bool>;
    { conj(a) } -> std::convertible_to<R>;
    { inverse(a) } -> std::convertible_to<R>;
    { render(a) } -> std::convertible_to<std::string>;
};

template <typename R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static constexpr std::string_view name = "Q";
    static Rational parse(std::string_view s)
    {
        return Rational::parse(s);
    }
};

template <>
struct ring_traits<GaussRational> {
    static constexpr std::string_view name = "Qi";
    static GaussRational parse(std::string_view s)
    {
        return GaussRational::parse(s);
    }
};

template <>
struct ring_traits<PolyBB> {
    static constexpr std::string_view name = "QBBbar";
    static PolyBB parse(std::string_view s)
    {
        return PolyBB::parse(s);
    }
};

static_assert(ExactRing<Rational>);
static_assert(ExactRing<GaussRational>);
static_assert(ExactRing<PolyBB>);

} // namespace cusp

#endif

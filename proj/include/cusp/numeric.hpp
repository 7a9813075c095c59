#ifndef CUSP_NUMERIC_HPP
#define CUSP_NUMERIC_HPP

#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cusp/gauss_rational.hpp>
#include <cusp/rational.hpp>

namespace cusp
{

// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

inline Real pi()
{
    return boost::math::constants::pi<Real>();
}

inline Real to_real(const Rational &x)
{
    if (x.is_integer()) {
        return Real(x.numerator().get_str());
    }
    return Real(x.numerator().get_str()) / Real(x.denominator().get_str());
}

inline Complex to_complex(const GaussRational &z)
{
    return Complex(to_real(z.re()), to_real(z.im()));
}

} // namespace cusp

#endif

#ifndef CUSP_GAUSS_RATIONAL_HPP
#define CUSP_GAUSS_RATIONAL_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <cusp/rational.hpp>

namespace cusp
{

// Complex number with exact rational real and imaginary parts, i.e. an
// element of Q(i).
class GaussRational
{
public:
    GaussRational() = default;

    template <std::integral I>
    GaussRational(I n) : re_(n) // NOLINT(google-explicit-constructor)
    {
    }
    GaussRational(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i()
    {
        return {Rational(0), Rational(1)};
    }

    // Accepted forms: "a", "b*i", "a+b*i", "a-b*i", "i", "-i", and the CLI pair
    // form "a,b". a and b are exact rationals as understood by Rational::parse.
    static GaussRational parse(std::string_view text)
    {
        if (text.empty()) {
            throw std::invalid_argument("GaussRational: empty input");
        }
        if (const auto comma = text.find(','); comma != std::string_view::npos) {
            return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
        }
        if (text.back() != 'i') {
            return Rational::parse(text);
        }
        // Imaginary part present. Split at the last sign that is not leading.
        std::size_t split = std::string_view::npos;
        for (std::size_t k = text.size(); k-- > 1;) {
            if (text[k] == '+' || text[k] == '-') {
                split = k;
                break;
            }
        }
        std::string_view re_part = split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
        std::string_view im_part = split == std::string_view::npos ? text : text.substr(split);
        bool negative = false;
        if (!im_part.empty() && (im_part.front() == '+' || im_part.front() == '-')) {
            negative = im_part.front() == '-';
            im_part.remove_prefix(1);
        }
        im_part.remove_suffix(1); // the 'i'
        Rational im(1);
        if (!im_part.empty()) {
            if (im_part.back() != '*') {
                throw std::invalid_argument("GaussRational: cannot parse '" + std::string(text) + "'");
            }
            im_part.remove_suffix(1);
            im = Rational::parse(im_part);
            if (im.sign() < 0 && (negative || !re_part.empty())) {
                throw std::invalid_argument("GaussRational: cannot parse '" + std::string(text) + "'");
            }
        }
        if (negative) {
            im = -im;
        }
        Rational re = re_part.empty() ? Rational(0) : Rational::parse(re_part);
        return {std::move(re), std::move(im)};
    }

    const Rational &re() const noexcept
    {
        return re_;
    }
    const Rational &im() const noexcept
    {
        return im_;
    }

    bool is_zero() const noexcept
    {
        return re_.is_zero() && im_.is_zero();
    }
    bool is_real() const noexcept
    {
        return im_.is_zero();
    }

    GaussRational conj() const
    {
        return {re_, -im_};
    }
    Rational norm() const
    {
        return re_ * re_ + im_ * im_;
    }

    std::string to_string() const
    {
        if (im_.is_zero()) {
            return re_.to_string();
        }
        if (re_.is_zero()) {
            return im_.to_string() + "*i";
        }
        const std::string sign = im_.sign() < 0 ? "-" : "+";
        return re_.to_string() + sign + abs(im_).to_string() + "*i";
    }

    GaussRational operator-() const
    {
        return {-re_, -im_};
    }

    GaussRational &operator+=(const GaussRational &o)
    {
        re_ += o.re_;
        if (!o.im_.is_zero()) {
            im_ += o.im_;
        }
        return *this;
    }
    GaussRational &operator-=(const GaussRational &o)
    {
        re_ -= o.re_;
        if (!o.im_.is_zero()) {
            im_ -= o.im_;
        }
        return *this;
    }
    GaussRational &operator*=(const GaussRational &o)
    {
        // Real operands are the overwhelmingly common case (Q[B] coefficients).
        if (im_.is_zero() && o.im_.is_zero()) {
            re_ *= o.re_;
            return *this;
        }
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussRational &operator/=(const GaussRational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("GaussRational: division by zero");
        }
        if (o.im_.is_zero()) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        const Rational n = o.norm();
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational &b)
    {
        a += b;
        return a;
    }
    friend GaussRational operator-(GaussRational a, const GaussRational &b)
    {
        a -= b;
        return a;
    }
    friend GaussRational operator*(GaussRational a, const GaussRational &b)
    {
        a *= b;
        return a;
    }
    friend GaussRational operator/(GaussRational a, const GaussRational &b)
    {
        a /= b;
        return a;
    }

    friend bool operator==(const GaussRational &, const GaussRational &) = default;

    friend std::ostream &operator<<(std::ostream &os, const GaussRational &z)
    {
        return os << z.to_string();
    }

private:
    Rational re_;
    Rational im_;
};

inline bool is_zero(const GaussRational &x)
{
    return x.is_zero();
}

inline GaussRational conj(const GaussRational &x)
{
    return x.conj();
}

inline GaussRational inverse(const GaussRational &x)
{
    if (x.is_zero()) {
        throw std::domain_error("GaussRational: inverse of zero");
    }
    return GaussRational(1) / x;
}

inline std::string render(const GaussRational &x)
{
    return x.to_string();
}

} // namespace cusp

#endif

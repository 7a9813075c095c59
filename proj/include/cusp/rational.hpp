#ifndef CUSP_RATIONAL_HPP
#define CUSP_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace cusp
{

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. Thin value wrapper around GMP's mpq_class so that generic code
// never sees gmpxx expression templates.
class Rational
{
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<I>) {
            value_ = mpq_class(mpz_class(static_cast<long>(n)));
        } else {
            value_ = mpq_class(mpz_class(static_cast<unsigned long>(n)));
        }
    }

    template <std::integral I, std::integral J>
    Rational(I num, J den)
    {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        value_.canonicalize();
    }

    explicit Rational(mpq_class v) : value_(std::move(v))
    {
        value_.canonicalize();
    }

    Rational(const mpz_class &num, const mpz_class &den)
    {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    // Accepts "p" or "p/q" with an optional leading '-'. Anything else throws.
    static Rational parse(std::string_view text)
    {
        auto digits = [](std::string_view s) {
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && body.front() == '-') {
            negative = true;
            body.remove_prefix(1);
        }
        const auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
        if (!digits(num) || !digits(den)) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        }
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (negative) {
            n = -n;
        }
        return Rational(n, d);
    }

    const mpq_class &raw() const noexcept
    {
        return value_;
    }
    mpz_class numerator() const
    {
        return value_.get_num();
    }
    mpz_class denominator() const
    {
        return value_.get_den();
    }

    bool is_zero() const noexcept
    {
        return sgn(value_) == 0;
    }
    bool is_integer() const
    {
        return value_.get_den() == 1;
    }
    int sign() const noexcept
    {
        return sgn(value_);
    }

    // "p/q", with "/q" omitted when q = 1; the sign lives on the numerator.
    std::string to_string() const
    {
        if (value_.get_den() == 1) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    double to_double() const
    {
        return value_.get_d();
    }

    Rational operator-() const
    {
        return Rational(mpq_class(-value_), raw_tag{});
    }

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        a += b;
        return a;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        a -= b;
        return a;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        a *= b;
        return a;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        a /= b;
        return a;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.to_string();
    }

private:
    struct raw_tag {
    };
    // Result of an operation that already yields canonical form.
    Rational(mpq_class v, raw_tag) : value_(std::move(v)) {}

    mpq_class value_{0};
};

inline bool is_zero(const Rational &x)
{
    return x.is_zero();
}

inline Rational conj(const Rational &x)
{
    return x;
}

inline Rational inverse(const Rational &x)
{
    if (x.is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    return Rational(1) / x;
}

inline std::string render(const Rational &x)
{
    return x.to_string();
}

inline Rational abs(const Rational &x)
{
    return x.sign() < 0 ? -x : x;
}

} // namespace cusp

#endif

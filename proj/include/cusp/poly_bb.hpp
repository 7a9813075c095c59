#ifndef CUSP_POLY_BB_HPP
#define CUSP_POLY_BB_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <cusp/gauss_rational.hpp>

namespace cusp
{

// Exponent pair (deg in B, deg in Bb) of a monomial B^b * Bb^c.
struct Monomial {
    std::uint32_t b = 0;
    std::uint32_t bbar = 0;

    std::uint32_t total() const noexcept
    {
        return b + bbar;
    }
    friend bool operator==(const Monomial &, const Monomial &) = default;
};

// Rendering order: higher total degree first, then higher B degree.
struct MonomialOrder {
    bool operator()(const Monomial &x, const Monomial &y) const noexcept
    {
        if (x.total() != y.total()) {
            return x.total() > y.total();
        }
        return x.b > y.b;
    }
};

// Sparse polynomial in Q(i)[B, Bb]. B stands for the ratio of the second to
// the first q-expansion coefficient; Bb is its complex conjugate, treated as
// an independent variable until evaluation.
class PolyBB
{
public:
    using term_map = std::map<Monomial, GaussRational, MonomialOrder>;

    PolyBB() = default;

    template <std::integral I>
    PolyBB(I n) : PolyBB(GaussRational(n)) // NOLINT(google-explicit-constructor)
    {
    }
    PolyBB(const Rational &c) : PolyBB(GaussRational(c)) {} // NOLINT(google-explicit-constructor)
    PolyBB(const GaussRational &c) // NOLINT(google-explicit-constructor)
    {
        if (!c.is_zero()) {
            terms_.emplace(Monomial{}, c);
        }
    }

    static PolyBB monomial(GaussRational c, std::uint32_t b, std::uint32_t bbar)
    {
        PolyBB p;
        if (!c.is_zero()) {
            p.terms_.emplace(Monomial{b, bbar}, std::move(c));
        }
        return p;
    }
    static PolyBB B()
    {
        return monomial(1, 1, 0);
    }
    static PolyBB Bb()
    {
        return monomial(1, 0, 1);
    }

    const term_map &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    bool is_constant() const noexcept
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
    }
    GaussRational constant_term() const
    {
        const auto it = terms_.find(Monomial{});
        return it == terms_.end() ? GaussRational{} : it->second;
    }
    GaussRational coeff(std::uint32_t b, std::uint32_t bbar) const
    {
        const auto it = terms_.find(Monomial{b, bbar});
        return it == terms_.end() ? GaussRational{} : it->second;
    }

    // Degrees are -1 for the zero polynomial.
    int degree_b() const noexcept
    {
        int d = -1;
        for (const auto &[m, c] : terms_) {
            d = std::max(d, static_cast<int>(m.b));
        }
        return d;
    }
    int degree_bbar() const noexcept
    {
        int d = -1;
        for (const auto &[m, c] : terms_) {
            d = std::max(d, static_cast<int>(m.bbar));
        }
        return d;
    }
    int total_degree() const noexcept
    {
        return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total());
    }

    // Swaps B <-> Bb and conjugates every coefficient.
    PolyBB conj() const
    {
        PolyBB r;
        for (const auto &[m, c] : terms_) {
            r.terms_.emplace(Monomial{m.bbar, m.b}, c.conj());
        }
        return r;
    }

    // Substitutes B = b and Bb = bbar. The pair must be conjugate.
    GaussRational evaluate(const GaussRational &b, const GaussRational &bbar) const
    {
        if (bbar != b.conj()) {
            throw std::invalid_argument("PolyBB: evaluation point is not a conjugate pair");
        }
        return evaluate(b);
    }
    GaussRational evaluate(const GaussRational &b) const
    {
        const GaussRational bbar = b.conj();
        std::vector<GaussRational> pb{GaussRational(1)};
        std::vector<GaussRational> pbb{GaussRational(1)};
        auto power = [](std::vector<GaussRational> &cache, const GaussRational &x, std::uint32_t k) -> const GaussRational & {
            while (cache.size() <= k) {
                cache.push_back(cache.back() * x);
            }
            return cache[k];
        };
        GaussRational acc;
        for (const auto &[m, c] : terms_) {
            acc += c * power(pb, b, m.b) * power(pbb, bbar, m.bbar);
        }
        return acc;
    }

    std::string to_string() const;
    static PolyBB parse(std::string_view text);

    PolyBB operator-() const
    {
        PolyBB r = *this;
        for (auto &[m, c] : r.terms_) {
            c = -c;
        }
        return r;
    }

    PolyBB &operator+=(const PolyBB &o)
    {
        for (const auto &[m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }
    PolyBB &operator-=(const PolyBB &o)
    {
        for (const auto &[m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }
    PolyBB &operator*=(const PolyBB &o)
    {
        *this = *this * o;
        return *this;
    }
    // Exact division, defined only for unit (nonzero constant) divisors.
    PolyBB &operator/=(const PolyBB &o)
    {
        if (!o.is_constant() || o.is_zero()) {
            throw std::domain_error("PolyBB: division requires a nonzero constant divisor");
        }
        const GaussRational inv = GaussRational(1) / o.constant_term();
        for (auto &[m, c] : terms_) {
            c *= inv;
        }
        return *this;
    }

    friend PolyBB operator+(PolyBB a, const PolyBB &b)
    {
        a += b;
        return a;
    }
    friend PolyBB operator-(PolyBB a, const PolyBB &b)
    {
        a -= b;
        return a;
    }
    friend PolyBB operator*(const PolyBB &a, const PolyBB &b)
    {
        PolyBB r;
        if (a.is_zero() || b.is_zero()) {
            return r;
        }
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                r.add_term(Monomial{ma.b + mb.b, ma.bbar + mb.bbar}, ca * cb);
            }
        }
        return r;
    }
    friend PolyBB operator/(PolyBB a, const PolyBB &b)
    {
        a /= b;
        return a;
    }

    friend bool operator==(const PolyBB &a, const PolyBB &b)
    {
        return a.terms_ == b.terms_;
    }

    friend std::ostream &operator<<(std::ostream &os, const PolyBB &p)
    {
        return os << p.to_string();
    }

private:
    void add_term(const Monomial &m, const GaussRational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    term_map terms_;
};

namespace detail
{

inline std::string render_monomial(const Monomial &m)
{
    std::string s;
    auto factor = [&s](const char *name, std::uint32_t e) {
        if (e == 0) {
            return;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += name;
        if (e > 1) {
            s += "^" + std::to_string(e);
        }
    };
    factor("B", m.b);
    factor("Bb", m.bbar);
    return s;
}

inline std::uint32_t parse_exponent(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("PolyBB: missing exponent");
    }
    std::uint32_t e = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("PolyBB: bad exponent '" + std::string(text) + "'");
        }
        e = e * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return e;
}

// Splits at top-level occurrences of `sep` (outside parentheses).
inline std::vector<std::string_view> split_top(std::string_view text, std::string_view sep)
{
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '(') {
            ++depth;
        } else if (text[k] == ')') {
            --depth;
        } else if (depth == 0 && text.substr(k, sep.size()) == sep) {
            out.push_back(text.substr(start, k - start));
            start = k + sep.size();
            k = start - 1;
        }
    }
    out.push_back(text.substr(start));
    return out;
}

inline PolyBB parse_term(std::string_view term)
{
    bool negative = false;
    if (!term.empty() && term.front() == '-' && term.size() > 1 && (term[1] == 'B' || term[1] == '(')) {
        negative = true;
        term.remove_prefix(1);
    }
    PolyBB acc(1);
    for (std::string_view f : split_top(term, "*")) {
        if (f.empty()) {
            throw std::invalid_argument("PolyBB: empty factor in '" + std::string(term) + "'");
        }
        if (f.front() == '(') {
            if (f.back() != ')') {
                throw std::invalid_argument("PolyBB: unbalanced parenthesis in '" + std::string(f) + "'");
            }
            acc *= PolyBB(GaussRational::parse(f.substr(1, f.size() - 2)));
        } else if (f.front() == 'B') {
            const auto caret = f.find('^');
            const std::string_view name = f.substr(0, caret);
            const std::uint32_t e = caret == std::string_view::npos ? 1 : parse_exponent(f.substr(caret + 1));
            if (name == "B") {
                acc *= PolyBB::monomial(1, e, 0);
            } else if (name == "Bb") {
                acc *= PolyBB::monomial(1, 0, e);
            } else {
                throw std::invalid_argument("PolyBB: unknown variable '" + std::string(name) + "'");
            }
        } else if (f == "i") {
            acc *= PolyBB(GaussRational::i());
        } else {
            acc *= PolyBB(GaussRational::parse(f));
        }
    }
    return negative ? -acc : acc;
}

} // namespace detail

// Terms joined by " + " / " - "; coefficient 1 is omitted, e.g. "B^4 - 60*B^2 + 462".
// Non-real coefficients are parenthesised: "(1+2*i)*B*Bb".
inline std::string PolyBB::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        std::string piece;
        bool negative = false;
        if (m == Monomial{}) {
            if (c.is_real()) {
                negative = c.re().sign() < 0;
                piece = abs(c.re()).to_string();
            } else {
                piece = "(" + c.to_string() + ")";
            }
        } else {
            const std::string mono = detail::render_monomial(m);
            if (c.is_real()) {
                negative = c.re().sign() < 0;
                const Rational mag = abs(c.re());
                piece = mag == Rational(1) ? mono : mag.to_string() + "*" + mono;
            } else {
                piece = "(" + c.to_string() + ")*" + mono;
            }
        }
        if (first) {
            out = negative ? "-" + piece : piece;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

inline PolyBB PolyBB::parse(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("PolyBB: empty input");
    }
    PolyBB acc;
    for (std::string_view plus : detail::split_top(text, " + ")) {
        bool negate_next = false;
        for (std::string_view piece : detail::split_top(plus, " - ")) {
            if (piece.empty()) {
                throw std::invalid_argument("PolyBB: cannot parse '" + std::string(text) + "'");
            }
            PolyBB t = detail::parse_term(piece);
            acc += negate_next ? -t : t;
            negate_next = true;
        }
    }
    return acc;
}

inline bool is_zero(const PolyBB &p)
{
    return p.is_zero();
}

inline PolyBB conj(const PolyBB &p)
{
    return p.conj();
}

inline PolyBB inverse(const PolyBB &p)
{
    if (!p.is_constant() || p.is_zero()) {
        throw std::domain_error("PolyBB: only nonzero constants are units");
    }
    return PolyBB(GaussRational(1) / p.constant_term());
}

inline std::string render(const PolyBB &p)
{
    return p.to_string();
}

} // namespace cusp

#endif

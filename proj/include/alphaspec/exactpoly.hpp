#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace alphaspec::exactpoly {

// Expression templates off so that mixed Rational/RationalPoly arithmetic resolves.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Variable universe. `r` stands for the square root of radicand() and is
/// kept at exponent 0 or 1.
enum class Var : std::size_t { x, n, s, t, k, alpha, r };

inline constexpr std::size_t var_count = 7;

using Exponents = std::array<std::uint16_t, var_count>;

inline const char* var_name(Var v)
{
    static constexpr std::array<const char*, var_count> names{"x", "n", "s", "t", "k", "alpha", "r"};
    return names[static_cast<std::size_t>(v)];
}

class RationalPoly;
const RationalPoly& radicand();

/// Multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored; products reduce r^2 to radicand().
class RationalPoly
{
public:
    using TermMap = std::map<Exponents, Rational>;

    RationalPoly() = default;
    RationalPoly(int c) : RationalPoly(Rational(c)) {}
    RationalPoly(long long c) : RationalPoly(Rational(c)) {}
    RationalPoly(const Rational& c)
    {
        if (c != 0)
            terms_.emplace(Exponents{}, c);
    }

    static RationalPoly var(Var v)
    {
        Exponents e{};
        e[static_cast<std::size_t>(v)] = 1;
        return monomial(1, e);
    }

    static RationalPoly monomial(const Rational& c, const Exponents& e)
    {
        RationalPoly p;
        if (c != 0)
            p.terms_.emplace(e, c);
        p.reduce();
        return p;
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Highest exponent of `v` in any term.
    int degree(Var v) const
    {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max<int>(d, e[static_cast<std::size_t>(v)]);
        return d;
    }

    RationalPoly operator-() const
    {
        RationalPoly out = *this;
        for (auto& [e, c] : out.terms_)
            c = -c;
        return out;
    }

    RationalPoly& operator+=(const RationalPoly& other)
    {
        for (const auto& [e, c] : other.terms_)
            accumulate(terms_, e, c);
        return *this;
    }

    RationalPoly& operator-=(const RationalPoly& other) { return *this += -other; }

    RationalPoly& operator*=(const RationalPoly& other)
    {
        *this = *this * other;
        return *this;
    }

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b)
    {
        RationalPoly out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e{};
                for (std::size_t i = 0; i < var_count; ++i)
                    e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
                accumulate(out.terms_, e, ca * cb);
            }
        }
        out.reduce();
        return out;
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.terms_ == b.terms_; }

    RationalPoly pow(unsigned exponent) const
    {
        RationalPoly result(1);
        RationalPoly base = *this;
        while (exponent != 0) {
            if (exponent & 1U)
                result *= base;
            exponent >>= 1U;
            if (exponent != 0)
                base *= base;
        }
        return result;
    }

    /// Replaces every occurrence of `v` by `value`.
    RationalPoly substitute(Var v, const RationalPoly& value) const
    {
        const auto idx = static_cast<std::size_t>(v);
        std::map<unsigned, RationalPoly> powers;
        RationalPoly out;
        for (const auto& [e, c] : terms_) {
            Exponents rest = e;
            const unsigned d = rest[idx];
            rest[idx] = 0;
            auto it = powers.find(d);
            if (it == powers.end())
                it = powers.emplace(d, value.pow(d)).first;
            out += monomial(c, rest) * it->second;
        }
        return out;
    }

    RationalPoly substitute(Var v, const Rational& value) const { return substitute(v, RationalPoly(value)); }

    /// Monomials in a stable printable form, e.g. "-3/2*x^2*n".
    std::vector<std::string> monomial_strings() const
    {
        std::vector<std::string> out;
        for (const auto& [e, c] : terms_) {
            std::string term = c.str();
            for (std::size_t i = 0; i < var_count; ++i) {
                if (e[i] == 0)
                    continue;
                term += "*";
                term += var_name(static_cast<Var>(i));
                if (e[i] > 1)
                    term += "^" + std::to_string(e[i]);
            }
            out.push_back(std::move(term));
        }
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& term : monomial_strings()) {
            if (!out.empty())
                out += " + ";
            out += term;
        }
        return out;
    }

private:
    static void accumulate(TermMap& terms, const Exponents& e, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    void reduce()
    {
        constexpr auto r = static_cast<std::size_t>(Var::r);
        bool needs = false;
        for (const auto& [e, c] : terms_)
            needs = needs || e[r] > 1;
        if (!needs)
            return;
        TermMap kept;
        std::vector<std::pair<Exponents, Rational>> raised;
        for (auto& [e, c] : terms_) {
            if (e[r] > 1)
                raised.emplace_back(e, c);
            else
                accumulate(kept, e, c);
        }
        terms_ = std::move(kept);
        for (auto& [e, c] : raised) {
            const unsigned squares = e[r] / 2U;
            e[r] = static_cast<std::uint16_t>(e[r] % 2U);
            *this += monomial(c, e) * radicand().pow(squares);
        }
    }

    TermMap terms_;
};

/// (n - k - 2 + 2αn)^2 + 4(n^2 - k^2) - 4α(3n + k - 2)(n - k), the square of r.
inline const RationalPoly& radicand()
{
    static const RationalPoly value = [] {
        const auto n = RationalPoly::var(Var::n);
        const auto k = RationalPoly::var(Var::k);
        const auto a = RationalPoly::var(Var::alpha);
        const RationalPoly b = n - k - 2 + 2 * a * n;
        return b * b + 4 * (n * n - k * k) - 4 * a * (3 * n + k - 2) * (n - k);
    }();
    return value;
}

} // namespace alphaspec::exactpoly

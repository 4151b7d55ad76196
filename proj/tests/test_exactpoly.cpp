#include <alphaspec/exactpoly.hpp>
#include <alphaspec/formulas.hpp>
#include <alphaspec/identities.hpp>

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

using namespace alphaspec::exactpoly;
namespace F = alphaspec::formulas;

namespace {

RationalPoly random_poly(std::mt19937_64& rng, bool with_r)
{
    RationalPoly p;
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i) {
        Exponents e{};
        for (std::size_t v = 0; v < var_count; ++v)
            e[v] = static_cast<std::uint16_t>(rng() % 3);
        if (!with_r)
            e[static_cast<std::size_t>(Var::r)] = 0;
        const long long num = static_cast<long long>(rng() % 19) - 9;
        const long long den = 1 + static_cast<long long>(rng() % 5);
        p += RationalPoly::monomial(Rational(num, den), e);
    }
    return p;
}

// Numeric value with r replaced by the square root of the radicand.
double evaluate(const RationalPoly& p, double x, double n, double s, double t, double k, double a)
{
    const double r = std::sqrt(F::g2_radicand(n, k, a));
    const std::array<double, var_count> values{x, n, s, t, k, a, r};
    double total = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double term = static_cast<double>(c);
        for (std::size_t v = 0; v < var_count; ++v)
            term *= std::pow(values[v], e[v]);
        total += term;
    }
    return total;
}

bool mentions(const IdentityReport& report, const std::string& needle)
{
    return std::any_of(report.residual_terms.begin(), report.residual_terms.end(),
                       [&](const std::string& term) { return term.find(needle) != std::string::npos; });
}

} // namespace

TEST_CASE("basic arithmetic")
{
    const auto x = RationalPoly::var(Var::x);
    const auto n = RationalPoly::var(Var::n);
    CHECK((x + n) * (x - n) == x * x - n * n);
    CHECK((x - x).is_zero());
    CHECK(RationalPoly(0).is_zero());
    CHECK((x + 1).pow(3) == x * x * x + 3 * x * x + 3 * x + 1);
    CHECK((Rational(1, 2) * x + Rational(1, 2) * x) == x);
    CHECK((x * n).degree(Var::x) == 1);
    CHECK(((Rational(3, 2) * x).pow(2)).to_string() == "9/4*x^2");
}

TEST_CASE("r squared reduces to the radicand")
{
    const auto r = RationalPoly::var(Var::r);
    const auto n = RationalPoly::var(Var::n);
    const auto k = RationalPoly::var(Var::k);
    const auto a = RationalPoly::var(Var::alpha);
    const auto b = n - k - 2 + 2 * a * n;
    const auto expected = b * b + 4 * (n * n - k * k) - 4 * a * (3 * n + k - 2) * (n - k);
    CHECK(r * r == expected);
    CHECK(r.pow(3) == expected * r);
    CHECK((r * r).degree(Var::r) == 0);
    CHECK(r.pow(5).degree(Var::r) == 1);
}

TEST_CASE("substitution")
{
    const auto f2_at_zero = symbolic_f2().substitute(Var::alpha, Rational(0));
    const auto x = RationalPoly::var(Var::x);
    const auto n = RationalPoly::var(Var::n);
    const auto k = RationalPoly::var(Var::k);
    CHECK(f2_at_zero == x * x - (Rational(1, 2) * (n - k) - 1) * x + Rational(1, 4) * (k * k - n * n));
    CHECK(f2_at_zero.degree(Var::alpha) == 0);
    const auto f1_point = symbolic_f1()
                              .substitute(Var::n, Rational(8))
                              .substitute(Var::s, Rational(1))
                              .substitute(Var::k, Rational(2))
                              .substitute(Var::alpha, Rational(0));
    CHECK(f1_point == x.pow(3) - 4 * x * x - 7 * x + 8);
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 150; ++trial) {
        const bool with_r = trial % 2 == 0;
        const auto p = random_poly(rng, with_r);
        const auto q = random_poly(rng, with_r);
        const auto w = random_poly(rng, with_r);
        CHECK((p * q) * w == p * (q * w));
        CHECK(p * (q + w) == p * q + p * w);
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
        CHECK((p - p).is_zero());
        CHECK(p * RationalPoly(1) == p);
    }
}

TEST_CASE("reduction does not depend on multiplication order")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<RationalPoly> factors;
        for (int i = 0; i < 4; ++i)
            factors.push_back(random_poly(rng, true));
        RationalPoly left(1);
        for (const auto& f : factors)
            left *= f;
        RationalPoly right(1);
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            right = *it * right;
        const auto paired = (factors[0] * factors[2]) * (factors[3] * factors[1]);
        CHECK(left == right);
        CHECK(left == paired);
        CHECK(left.degree(Var::r) <= 1);
    }
}

TEST_CASE("symbolic forms evaluate like the numeric ones")
{
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double k = 2 + std::floor(6 * unit(rng));
        const double n = k + 2 * (1 + std::floor(8 * unit(rng)));
        const double s = 1 + std::floor((n - k) / 2 * unit(rng));
        const double a = 0.5 * unit(rng);
        const double x = 20 * unit(rng);
        auto close = [](double u, double v) { return std::abs(u - v) < 1e-7 * std::max(1.0, std::abs(v)); };
        CHECK(close(evaluate(symbolic_f1(), x, n, s, 0, k, a), F::f1(x, n, s, k, a)));
        CHECK(close(evaluate(symbolic_f2(), x, n, s, 0, k, a), F::f2(x, n, k, a)));
        CHECK(close(evaluate(symbolic_h(), x, n, s, 0, k, a), F::h(x, n, s, k, a)));
        CHECK(close(evaluate(symbolic_delta1(), x, n, 0, s, k, a), F::delta1(n, s, k, a)));
        CHECK(close(evaluate(symbolic_delta2(), x, n, 0, s, k, a), F::delta2(n, s, k, a)));
        CHECK(close(evaluate(symbolic_delta0(), x, n, 0, s, k, a), static_cast<double>(F::delta0(static_cast<int>(n), static_cast<int>(s), static_cast<int>(k)))));
    }
}

TEST_CASE("the three identities hold exactly")
{
    const auto first = verify_f1_f2_h_identity();
    CHECK(first.pass);
    CHECK(first.residual_terms.empty());
    CHECK(verify_quotient_charpolys().pass);
    CHECK(verify_delta1_delta0_link().pass);
    CHECK(verify_delta1_is_h_at_half_radius().pass);
    CHECK(verify_delta2_is_squared_gap().pass);
    for (const auto& report : verify_all())
        CHECK(report.pass);
}

TEST_CASE("identity at the point (8, 1, 2, 0)")
{
    const auto x = RationalPoly::var(Var::x);
    const auto s = RationalPoly::var(Var::s);
    const auto n = RationalPoly::var(Var::n);
    const auto k = RationalPoly::var(Var::k);
    const auto a = RationalPoly::var(Var::alpha);
    const auto residual = symbolic_f1() - (x - Rational(1, 2) * (n - k - 2 * (1 - a) * s)) * symbolic_f2() -
                          Rational(1, 8) * (n - 2 * s - k) * symbolic_h();
    const auto at_point = residual.substitute(Var::n, Rational(8))
                              .substitute(Var::s, Rational(1))
                              .substitute(Var::k, Rational(2))
                              .substitute(Var::alpha, Rational(0));
    CHECK(at_point.is_zero());
}

TEST_CASE("perturbations are reported")
{
    const auto x = RationalPoly::var(Var::x);
    const auto s = RationalPoly::var(Var::s);
    const auto n = RationalPoly::var(Var::n);
    const auto a = RationalPoly::var(Var::alpha);

    // Changing one f1 coefficient by one leaves exactly that monomial.
    const auto bumped = verify_f1_f2_h_identity(x * x * s);
    CHECK(!bumped.pass);
    REQUIRE(bumped.residual_terms.size() == 1);
    CHECK(bumped.residual_terms[0] == "1*x^2*s");

    const auto entry = verify_quotient_charpolys(RationalPoly(1));
    CHECK(!entry.pass);
    CHECK(mentions(entry, "[3x3]"));
    CHECK(!mentions(entry, "[2x2]"));

    const auto link = verify_delta1_delta0_link(n * n * a);
    CHECK(!link.pass);
    CHECK(mentions(link, "n^2*alpha"));
}

TEST_CASE("the two-block quotient as printed does not give f2")
{
    // Top-left entry with (n+k)/2 - 1 in place of (n-k)/2 - 1.
    using namespace symbols;
    auto printed = symbolic_quotient2();
    printed[0][0] = a() * (n() - 1) + (1 - a()) * (Rational(1, 2) * (n() + k()) - 1);
    CHECK(!(characteristic_polynomial(printed) == symbolic_f2()));
    CHECK(characteristic_polynomial(symbolic_quotient2()) == symbolic_f2());
}

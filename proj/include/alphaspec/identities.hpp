#pragma once

#include <alphaspec/exactpoly.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

// Symbolic forms of the closed-form objects and the exact identities that tie
// them together. Each verify_* returns a report; a failing report lists the
// monomials that survive in the residual.

namespace alphaspec::exactpoly {

struct IdentityReport
{
    std::string name;
    bool pass = false;
    std::vector<std::string> residual_terms;
};

using PolyMatrix = std::vector<std::vector<RationalPoly>>;

namespace symbols {

inline RationalPoly x() { return RationalPoly::var(Var::x); }
inline RationalPoly n() { return RationalPoly::var(Var::n); }
inline RationalPoly k() { return RationalPoly::var(Var::k); }
inline RationalPoly a() { return RationalPoly::var(Var::alpha); }
inline RationalPoly r() { return RationalPoly::var(Var::r); }

} // namespace symbols

/// f1(x, n, s, k, α); `size` picks the variable playing the role of s.
inline RationalPoly symbolic_f1(Var size = Var::s)
{
    using namespace symbols;
    const auto X = x(), N = n(), K = k(), A = a();
    const auto S = RationalPoly::var(size);
    return X.pow(3) + (K - N + S + 1 - A * (N + S)) * X.pow(2) +
           (N * S * A.pow(2) + (N.pow(2) - K * N - 2 * S) * A + K - N + 2 * S - K * S - S.pow(2)) * X +
           (-K.pow(2) * S + 2 * K * N * S - 4 * K * S.pow(2) + K * S - N.pow(2) * S + 2 * N * S.pow(2) - N * S -
            3 * S.pow(3) + 3 * S.pow(2)) *
               A.pow(2) +
           (3 * N * S - 3 * K * S + 7 * K * S.pow(2) + 2 * K.pow(2) * S - 2 * N * S.pow(2) - 6 * S.pow(2) +
            5 * S.pow(3) - 2 * K * N * S) *
               A +
           K * S - N * S - 3 * K * S.pow(2) - K.pow(2) * S + N * S.pow(2) + 2 * S.pow(2) - 2 * S.pow(3) + K * N * S;
}

inline RationalPoly symbolic_f2()
{
    using namespace symbols;
    const auto X = x(), N = n(), K = k(), A = a();
    const Rational half(1, 2), quarter(1, 4), three_quarters(3, 4);
    return X.pow(2) - (half * (N - K) - 1 + A * N) * X +
           (-quarter * K.pow(2) - half * K * N + half * K + three_quarters * N.pow(2) - half * N) * A +
           quarter * (K.pow(2) - N.pow(2));
}

inline RationalPoly symbolic_h(Var size = Var::s)
{
    using namespace symbols;
    const auto X = x(), N = n(), K = k(), A = a();
    const auto S = RationalPoly::var(size);
    return (4 * K + 4 * S - 4 - 2 * A * (N + K - 2)) * X - (12 * A - 8) * (1 - A) * S.pow(2) -
           ((2 * N - 10 * K + 12) * A.pow(2) + (18 * K + 2 * N - 24) * A - 8 * K + 8) * S -
           (N - K) * ((1 - A) * (N + K) - 2 * A * (N - 1));
}

/// Δ1 with the square root written as r.
inline RationalPoly symbolic_delta1()
{
    using namespace symbols;
    const auto N = n(), K = k(), A = a();
    const auto T = RationalPoly::var(Var::t);
    const Rational half(1, 2), five_halves(5, 2);
    return (K + T - 1 - half * A * (N + K) + A) * r() +
           (12 * T.pow(2) + (10 * K - 2 * N - 12) * T + 2 * N - K * N - N.pow(2)) * A.pow(2) +
           ((24 - 18 * K) * T - 20 * T.pow(2) - half * K.pow(2) + 2 * K + five_halves * N.pow(2) - 2 * N - 2) * A +
           K.pow(2) - N.pow(2) + (K + T - 1) * (N + 8 * T - K - 2);
}

inline RationalPoly symbolic_delta2()
{
    using namespace symbols;
    const auto N = n(), K = k(), A = a();
    const auto T = RationalPoly::var(Var::t);
    return (A - 1) * N.pow(2) + (4 * T * A.pow(2) + (2 - 14 * T - 2 * K) * A + 4 * K + 12 * T - 4) * N -
           4 * T.pow(2) * A.pow(2) + (K.pow(2) + 6 * K * T - 2 * K + 16 * T.pow(2) - 4 * T) * A - 3 * K.pow(2) -
           12 * K * T + 4 * K - 16 * T.pow(2) + 8 * T;
}

inline RationalPoly symbolic_delta0()
{
    using namespace symbols;
    const auto N = n(), K = k();
    const auto T = RationalPoly::var(Var::t);
    const auto d = N.pow(2) - K.pow(2);
    const auto c = K + T - 1;
    return d.pow(2) - 2 * d * c * (N + K + 10 * T - 4) + 16 * T * c.pow(2) * (N + 4 * T - K - 2);
}

/// (n - k - 2 + 2αn + r) / 4, the larger root of f2.
inline RationalPoly symbolic_rho_half()
{
    using namespace symbols;
    return Rational(1, 4) * (n() - k() - 2 + 2 * a() * n() + r());
}

/// Quotient of A_α over {joint clique, big clique, independent set}.
inline PolyMatrix symbolic_quotient3()
{
    using namespace symbols;
    const auto N = n(), K = k(), A = a();
    const auto S = RationalPoly::var(Var::s);
    return {
        {A * (N - 1) + (1 - A) * (S - 1), (1 - A) * (N - 2 * S - K + 1), (1 - A) * (S + K - 1)},
        {(1 - A) * S, A * (N - S - K) + (1 - A) * (N - 2 * S - K), RationalPoly{}},
        {(1 - A) * S, RationalPoly{}, A * S},
    };
}

/// Quotient of A_α over {clique of size (n-k)/2, independent set of size (n+k)/2}.
inline PolyMatrix symbolic_quotient2()
{
    using namespace symbols;
    const auto N = n(), K = k(), A = a();
    const Rational half(1, 2);
    return {
        {A * (N - 1) + (1 - A) * (half * (N - K) - 1), (1 - A) * half * (N + K)},
        {(1 - A) * half * (N - K), A * half * (N - K)},
    };
}

/// det(xI - M) by cofactor expansion, for square M of order 1 to 3.
inline RationalPoly characteristic_polynomial(const PolyMatrix& m)
{
    const auto X = symbols::x();
    const std::size_t r = m.size();
    PolyMatrix shifted = m;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            shifted[i][j] = (i == j ? X : RationalPoly{}) - m[i][j];
    const auto& b = shifted;
    if (r == 1)
        return b[0][0];
    if (r == 2)
        return b[0][0] * b[1][1] - b[0][1] * b[1][0];
    if (r == 3)
        return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
               b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    throw std::invalid_argument("characteristic_polynomial supports orders 1 to 3");
}

inline IdentityReport report(std::string name, const RationalPoly& residual)
{
    constexpr std::size_t max_listed = 24;
    IdentityReport out{std::move(name), residual.is_zero(), {}};
    auto terms = residual.monomial_strings();
    if (terms.size() > max_listed)
        terms.resize(max_listed);
    out.residual_terms = std::move(terms);
    return out;
}

/// f1 - (x - (n - k - 2(1-α)s)/2)·f2 - ((n - 2s - k)/8)·h == 0.
/// `f1_perturbation` is added to f1 (sensitivity hook).
inline IdentityReport verify_f1_f2_h_identity(const RationalPoly& f1_perturbation = {})
{
    using namespace symbols;
    const auto S = RationalPoly::var(Var::s);
    const auto f1 = symbolic_f1() + f1_perturbation;
    const auto factor = x() - Rational(1, 2) * (n() - k() - 2 * (1 - a()) * S);
    const auto residual = f1 - factor * symbolic_f2() - Rational(1, 8) * (n() - 2 * S - k()) * symbolic_h();
    return report("f1_f2_h_identity", residual);
}

/// det(xI - M3) == f1 and det(xI - M2) == f2. `m3_entry_perturbation` is
/// added to entry (0, 1) of the three-block quotient.
inline IdentityReport verify_quotient_charpolys(const RationalPoly& m3_entry_perturbation = {})
{
    auto m3 = symbolic_quotient3();
    m3[0][1] += m3_entry_perturbation;
    const auto residual3 = characteristic_polynomial(m3) - symbolic_f1();
    const auto residual2 = characteristic_polynomial(symbolic_quotient2()) - symbolic_f2();
    auto out = report("quotient_charpolys", residual3);
    for (auto& term : out.residual_terms)
        term = "[3x3] " + term;
    auto second = report("", residual2);
    out.pass = out.pass && second.pass;
    for (auto& term : second.residual_terms)
        out.residual_terms.push_back("[2x2] " + term);
    return out;
}

/// At α = 0, Δ1 = (k+t-1)r - A with A = n^2 - k^2 - (k+t-1)(n+8t-k-2), and
/// Δ1 times its image under r -> -r, which is -((k+t-1)r + A), equals
/// Δ(n, t, k). The product reduces r^2 exactly.
inline IdentityReport verify_delta1_delta0_link(const RationalPoly& delta0_perturbation = {})
{
    using namespace symbols;
    const auto T = RationalPoly::var(Var::t);
    const auto at_zero = symbolic_delta1().substitute(Var::alpha, Rational(0));
    const auto expected_form = (k() + T - 1) * r() - (n().pow(2) - k().pow(2) - (k() + T - 1) * (n() + 8 * T - k() - 2));
    const auto conjugate = at_zero.substitute(Var::r, -r());
    const auto product = (at_zero * conjugate).substitute(Var::alpha, Rational(0));
    auto out = report("delta1_delta0_link", product - symbolic_delta0() + delta0_perturbation);
    auto form = report("", at_zero - expected_form);
    out.pass = out.pass && form.pass;
    for (auto& term : form.residual_terms)
        out.residual_terms.push_back("[form] " + term);
    return out;
}

/// Δ1 = h(ρ_half, n, t, k, α).
inline IdentityReport verify_delta1_is_h_at_half_radius()
{
    const auto h_at = symbolic_h(Var::t).substitute(Var::x, symbolic_rho_half());
    return report("delta1_is_h_at_half_radius", h_at - symbolic_delta1());
}

/// 4·Δ2 = r^2 - (4c - b)^2 with c = n - (2-α)t - k and b = n - k - 2 + 2αn,
/// so Δ2 >= 0 iff r >= 4c - b whenever 4c - b >= 0.
inline IdentityReport verify_delta2_is_squared_gap()
{
    using namespace symbols;
    const auto T = RationalPoly::var(Var::t);
    const auto c = n() - (2 - a()) * T - k();
    const auto b = n() - k() - 2 + 2 * a() * n();
    const auto gap = 4 * c - b;
    return report("delta2_is_squared_gap", 4 * symbolic_delta2() - (r() * r() - gap * gap));
}

/// The three certifications exposed by the CLI.
inline std::vector<IdentityReport> verify_all(const RationalPoly& perturbation = {})
{
    return {verify_f1_f2_h_identity(perturbation), verify_quotient_charpolys(perturbation),
            verify_delta1_delta0_link(perturbation)};
}

} // namespace alphaspec::exactpoly

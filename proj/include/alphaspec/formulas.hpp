#pragma once

#include <alphaspec/detail/roots.hpp>
#include <alphaspec/errors.hpp>
#include <alphaspec/graph.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

// Closed-form evaluators for the two extremal families: the characteristic
// polynomials of their equitable quotients (f1 for the three-block family,
// f2 for the complete split graph), the linear remainder h linking them, and
// the sign tests Δ1, Δ2 and Δ that decide which family has the larger
// A_α-spectral radius. Coefficients are written exactly as the identities in
// exactpoly.hpp certify them.

namespace alphaspec {

/// (n, t, k, α) with k >= 2, n >= k + 2, n = k (mod 2), 1 <= t <= (n-k)/2,
/// 0 <= α <= 1/2.
struct ScenarioParams
{
    int n = 0;
    int t = 0;
    int k = 0;
    double alpha = 0.0;
};

/// Every violated side condition, each named on its own.
inline std::vector<std::string> violations(const ScenarioParams& p)
{
    std::vector<std::string> out;
    if (p.k < 2)
        out.push_back("k >= 2 violated (k = " + std::to_string(p.k) + ")");
    if (p.n < p.k + 2)
        out.push_back("n >= k + 2 violated (n = " + std::to_string(p.n) + ", k = " + std::to_string(p.k) + ")");
    if (((p.n - p.k) % 2) != 0)
        out.push_back("parity violated: n = " + std::to_string(p.n) + " is not congruent to k = " + std::to_string(p.k) +
                      " (mod 2)");
    if (p.t < 1)
        out.push_back("t >= 1 violated (t = " + std::to_string(p.t) + ")");
    if (2 * p.t > p.n - p.k)
        out.push_back("t <= (n-k)/2 violated (t = " + std::to_string(p.t) + ", (n-k)/2 = " +
                      std::to_string((p.n - p.k) / 2) + ")");
    if (!(p.alpha >= 0.0 && p.alpha <= 0.5)) {
        std::ostringstream os;
        os << "0 <= alpha <= 1/2 violated (alpha = " << p.alpha << ")";
        out.push_back(os.str());
    }
    return out;
}

namespace formulas {

/// det(xI - M) for the three-block quotient of K_s ∨ (K_{n+1-2s-k} ∪ co-K_{s+k-1}).
inline double f1(double x, double n, double s, double k, double a)
{
    const double x2 = (k - n + s + 1 - a * (n + s));
    const double x1 = n * s * a * a + (n * n - k * n - 2 * s) * a + k - n + 2 * s - k * s - s * s;
    const double c2 = -k * k * s + 2 * k * n * s - 4 * k * s * s + k * s - n * n * s + 2 * n * s * s - n * s -
                      3 * s * s * s + 3 * s * s;
    const double c1 = 3 * n * s - 3 * k * s + 7 * k * s * s + 2 * k * k * s - 2 * n * s * s - 6 * s * s + 5 * s * s * s -
                      2 * k * n * s;
    const double c0 = k * s - n * s - 3 * k * s * s - k * k * s + n * s * s + 2 * s * s - 2 * s * s * s + k * n * s;
    return ((x + x2) * x + x1) * x + c2 * a * a + c1 * a + c0;
}

/// det(xI - M) for the two-block quotient of K_{(n-k)/2} ∨ co-K_{(n+k)/2}.
inline double f2(double x, double n, double k, double a)
{
    return x * x - ((n - k) / 2 - 1 + a * n) * x + (-k * k / 4 - k * n / 2 + k / 2 + 3 * n * n / 4 - n / 2) * a +
           (k * k - n * n) / 4;
}

inline double g2_radicand(double n, double k, double a)
{
    const double b = n - k - 2 + 2 * a * n;
    return b * b + 4 * (n * n - k * k) - 4 * a * (3 * n + k - 2) * (n - k);
}

inline double g2(double n, double k, double a)
{
    const double radicand = g2_radicand(n, k, a);
    if (radicand < 0.0) {
        std::ostringstream os;
        os << "negative radicand " << radicand << " in g2 at n = " << n << ", k = " << k << ", alpha = " << a;
        throw DomainError(os.str());
    }
    return std::sqrt(radicand);
}

/// ρ_α(K_{(n-k)/2} ∨ co-K_{(n+k)/2}), the larger root of f2.
inline double rho_half_closed(double n, double k, double a) { return (n - k - 2 + 2 * a * n + g2(n, k, a)) / 4; }

/// ρ_α of the three-block family: the largest root of f1, which lies strictly
/// between n - s - k (the radius of the clique K_{n-s-k+1} it contains) and n.
inline double rho_family(int n, int s, int k, double a)
{
    FamilySpec{n, s, k}.validate();
    if (!(a >= 0.0 && a < 1.0))
        throw ParameterError("rho_family needs alpha in [0, 1)");
    const detail::RootBracket bracket{static_cast<double>(n - s - k), static_cast<double>(n)};
    return detail::bisect([&](double x) { return f1(x, n, s, k, a); }, bracket);
}

/// Linear remainder: f1 - (x - (n-k-2(1-α)s)/2)·f2 = ((n-2s-k)/8)·h.
inline double h(double x, double n, double s, double k, double a)
{
    return (4 * k + 4 * s - 4 - 2 * a * (n + k - 2)) * x - (12 * a - 8) * (1 - a) * s * s -
           ((2 * n - 10 * k + 12) * a * a + (18 * k + 2 * n - 24) * a - 8 * k + 8) * s -
           (n - k) * ((1 - a) * (n + k) - 2 * a * (n - 1));
}

/// h evaluated at the split-graph radius; its sign orders the two families.
inline double delta1(double n, double t, double k, double a)
{
    const double radical_coeff = k + t - 1 - (a / 2) * (n + k) + a;
    return radical_coeff * g2(n, k, a) + (12 * t * t + (10 * k - 2 * n - 12) * t + 2 * n - k * n - n * n) * a * a +
           ((24 - 18 * k) * t - 20 * t * t - k * k / 2 + 2 * k + 2.5 * n * n - 2 * n - 2) * a + k * k - n * n +
           (k + t - 1) * (n + 8 * t - k - 2);
}

/// Non-negative exactly when ρ_half >= n - (2-α)t - k.
inline double delta2(double n, double t, double k, double a)
{
    return (a - 1) * n * n + (4 * t * a * a + (2 - 14 * t - 2 * k) * a + 4 * k + 12 * t - 4) * n - 4 * t * t * a * a +
           (k * k + 6 * k * t - 2 * k + 16 * t * t - 4 * t) * a - 3 * k * k - 12 * k * t + 4 * k - 16 * t * t + 8 * t;
}

/// Exact integer discriminant for α = 0; sign(Δ1(n,t,k,0)) = -sign(Δ).
inline std::int64_t delta0(std::int64_t n, std::int64_t t, std::int64_t k)
{
    using wide = boost::multiprecision::checked_int128_t;
    const wide N = n, T = t, K = k;
    const wide d = N * N - K * K;
    const wide c = K + T - 1;
    const wide value = d * d - 2 * d * c * (N + K + 10 * T - 4) + 16 * T * c * c * (N + 4 * T - K - 2);
    if (value > wide(INT64_MAX) || value < wide(INT64_MIN))
        throw ParameterError("delta0 overflows 64-bit range");
    return static_cast<std::int64_t>(value);
}

} // namespace formulas
} // namespace alphaspec

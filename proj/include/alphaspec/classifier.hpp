#pragma once

#include <alphaspec/errors.hpp>
#include <alphaspec/formulas.hpp>
#include <alphaspec/graph.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace alphaspec {

/// Which extremal graph attains the maximum A_α-spectral radius.
///  - ExtremalT: K_t ∨ (K_{n+1-2t-k} ∪ co-K_{t+k-1})
///  - Half: K_{(n-k)/2} ∨ co-K_{(n+k)/2}
///  - Tie: both (or they coincide)
///  - UndeterminedByTheorem: the sign pattern of Δ1, Δ2 is not covered; the
///    resolved field then carries the outcome of a direct comparison.
enum class Verdict { ExtremalT, Half, Tie, UndeterminedByTheorem };

inline std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::ExtremalT:
        return "ExtremalT";
    case Verdict::Half:
        return "Half";
    case Verdict::Tie:
        return "Tie";
    case Verdict::UndeterminedByTheorem:
        return "UndeterminedByTheorem";
    }
    return "?";
}

struct ClassificationResult
{
    Verdict verdict = Verdict::UndeterminedByTheorem;
    Verdict resolved = Verdict::UndeterminedByTheorem;
    double delta1 = 0.0;
    double delta2 = 0.0;
    std::optional<std::int64_t> delta0;
    double rho_t = 0.0;
    double rho_half = 0.0;
    FamilySpec family_t;
    std::string note;
    bool coincident = false;
};

/// Comparisons between two radii use this symmetric tolerance.
inline constexpr double rho_tolerance = 1e-9;

inline ScenarioParams validate(const ScenarioParams& params)
{
    auto v = violations(params);
    if (!v.empty()) {
        std::string message = "invalid parameters:";
        for (const auto& item : v)
            message += " " + item + ";";
        throw ParameterError(message, std::move(v));
    }
    return params;
}

namespace detail {

inline Verdict compare_radii(double rho_t, double rho_half)
{
    if (rho_t - rho_half > rho_tolerance)
        return Verdict::ExtremalT;
    if (rho_half - rho_t > rho_tolerance)
        return Verdict::Half;
    return Verdict::Tie;
}

inline int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }

/// Exact sign of Δ1 at α = 0. There Δ1 = c·r - A with c = k+t-1 > 0, so Δ1 > 0
/// whenever A < 0; otherwise c·r + A > 0 and Δ1·(c·r + A) = -Δ fixes the sign.
inline int alpha0_delta1_sign(int n, int t, int k, std::int64_t delta0)
{
    const std::int64_t c = k + t - 1;
    const std::int64_t a = std::int64_t{n} * n - std::int64_t{k} * k - c * (n + 8 * std::int64_t{t} - k - 2);
    if (a < 0)
        return 1;
    return -sign_of(delta0);
}

/// Δ2 at α = 0, an integer.
inline std::int64_t alpha0_delta2(int n, int t, int k)
{
    const std::int64_t N = n, T = t, K = k;
    return -N * N + (4 * K + 12 * T - 4) * N - 3 * K * K - 12 * K * T + 4 * K - 16 * T * T + 8 * T;
}

inline ClassificationResult evaluate(const ScenarioParams& p)
{
    ClassificationResult r;
    r.family_t = {p.n, p.t, p.k};
    r.rho_t = formulas::rho_family(p.n, p.t, p.k, p.alpha);
    r.rho_half = formulas::rho_half_closed(p.n, p.k, p.alpha);
    r.delta1 = formulas::delta1(p.n, p.t, p.k, p.alpha);
    r.delta2 = formulas::delta2(p.n, p.t, p.k, p.alpha);
    if (p.alpha == 0.0)
        r.delta0 = formulas::delta0(p.n, p.t, p.k);
    r.coincident = 2 * p.t == p.n - p.k;
    return r;
}

inline void mark_coincident(ClassificationResult& r)
{
    r.verdict = r.resolved = Verdict::Tie;
    r.note = "t = (n-k)/2: the two extremal families are the same graph";
}

} // namespace detail

/// Three-way decision on the signs of Δ1 and Δ2. Δ1 is treated as zero inside
/// a band of 1e-9·n^2. At α = 0 both signs are computed exactly in integers.
inline ClassificationResult classify(const ScenarioParams& params)
{
    const auto p = validate(params);
    auto r = detail::evaluate(p);
    if (r.coincident) {
        detail::mark_coincident(r);
        return r;
    }

    const double eps = 1e-9 * static_cast<double>(p.n) * static_cast<double>(p.n);
    int sign1 = r.delta1 < -eps ? -1 : (r.delta1 > eps ? 1 : 0);
    bool delta2_ok = r.delta2 >= -eps;
    if (r.delta0) {
        sign1 = detail::alpha0_delta1_sign(p.n, p.t, p.k, *r.delta0);
        delta2_ok = detail::alpha0_delta2(p.n, p.t, p.k) >= 0;
        r.note = "signs of delta1 and delta2 computed exactly";
    }

    if (sign1 < 0)
        r.verdict = Verdict::ExtremalT;
    else if (sign1 == 0 && delta2_ok)
        r.verdict = Verdict::Tie;
    else if (sign1 > 0 && delta2_ok)
        r.verdict = Verdict::Half;
    else
        r.verdict = Verdict::UndeterminedByTheorem;

    if (r.verdict == Verdict::UndeterminedByTheorem) {
        r.resolved = detail::compare_radii(r.rho_t, r.rho_half);
        r.note = "delta2 < 0 is outside the three-way criterion; verdict resolved by direct comparison of radii (" +
                 to_string(r.resolved) + ")";
    } else {
        r.resolved = r.verdict;
    }
    return r;
}

/// α = 0 decision from the exact integer Δ(n, t, k). Δ > 0 gives ExtremalT only
/// when A = n^2 - k^2 - (k+t-1)(n+8t-k-2) >= 0; for A < 0 (first at n = 30,
/// t = 13, k = 2) Δ1 is positive regardless of Δ and the note says so.
inline ClassificationResult classify_alpha0(int n, int t, int k)
{
    auto r = classify({n, t, k, 0.0});
    if (r.coincident)
        return r;
    const std::int64_t delta = *r.delta0;
    const std::int64_t c = k + t - 1;
    const std::int64_t a = std::int64_t{n} * n - std::int64_t{k} * k - c * (n + 8 * std::int64_t{t} - k - 2);
    if (a < 0 && delta > 0)
        r.note = "delta0 = " + std::to_string(delta) + " > 0 but A = " + std::to_string(a) +
                 " < 0, so delta1 > 0; " + r.note;
    else if (r.verdict != Verdict::UndeterminedByTheorem)
        r.note = "decided by the sign of delta0 = " + std::to_string(delta);
    return r;
}

/// Radius above which a connected graph on n vertices must have a perfect
/// matching, with the graph that attains it.
struct MatchingThreshold
{
    double rho = 0.0;
    bool half = false;
    FamilySpec family;

    Graph graph() const { return half ? half_family(family.n, 2) : extremal_family(family); }
    std::string label() const
    {
        return half ? "K_" + std::to_string((family.n - 2) / 2) + " v co-K_" + std::to_string((family.n + 2) / 2)
                    : "K_1 v (K_" + std::to_string(family.n - 3) + " u co-K_2)";
    }
};

/// α = 0: K_1 ∨ (K_{n-3} ∪ co-K_2) for n >= 8, the split graph for n = 4, 6.
/// α = 1/2: the same with the switch at n >= 10.
inline MatchingThreshold perfect_matching_threshold(int n, double alpha)
{
    if (n < 4 || (n % 2) != 0)
        throw ParameterError("perfect matching threshold needs an even n >= 4, got " + std::to_string(n));
    if (alpha != 0.0 && alpha != 0.5)
        throw ParameterError("perfect matching threshold is defined for alpha = 0 and alpha = 1/2 only");
    const int switch_at = alpha == 0.0 ? 8 : 10;
    MatchingThreshold out;
    out.family = {n, 1, 2};
    out.half = n < switch_at;
    out.rho = out.half ? formulas::rho_half_closed(n, 2, alpha) : formulas::rho_family(n, 1, 2, alpha);
    return out;
}

struct SweepRow
{
    int n = 0;
    ClassificationResult result;
};

/// Classification for every valid n in [n_lo, n_hi]; parity and range are
/// filtered automatically.
inline std::vector<SweepRow> sweep(int t, int k, double alpha, int n_lo, int n_hi)
{
    std::vector<SweepRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (!violations({n, t, k, alpha}).empty())
            continue;
        rows.push_back({n, classify({n, t, k, alpha})});
    }
    if (rows.empty())
        throw ParameterError("no valid n in range " + std::to_string(n_lo) + ".." + std::to_string(n_hi) +
                             " for t = " + std::to_string(t) + ", k = " + std::to_string(k));
    return rows;
}

inline nlohmann::json classification_json(const ClassificationResult& r)
{
    nlohmann::json j{{"verdict", to_string(r.verdict)},
                     {"resolved", to_string(r.resolved)},
                     {"delta1", r.delta1},
                     {"delta2", r.delta2},
                     {"rho_t", r.rho_t},
                     {"rho_half", r.rho_half},
                     {"family_t", {{"n", r.family_t.n}, {"s", r.family_t.s}, {"k", r.family_t.k}}},
                     {"note", r.note}};
    if (r.delta0)
        j["delta0"] = *r.delta0;
    return j;
}

} // namespace alphaspec

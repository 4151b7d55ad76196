#pragma once

#include <alphaspec/errors.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace alphaspec::detail {

/// Closed interval on which the target function changes sign.
struct RootBracket
{
    double lo = 0.0;
    double hi = 0.0;
};

inline constexpr int bisection_iterations = 200;

/// Bisection on a certified bracket; stops when the midpoint can no longer
/// split the interval or after 200 halvings.
template <typename F>
double bisect(F&& f, RootBracket bracket)
{
    double lo = bracket.lo;
    double hi = bracket.hi;
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if (!(lo < hi) || (flo > 0.0) == (fhi > 0.0))
        throw NumericError("bracket does not enclose a sign change", 0.5 * (lo + hi));
    for (int it = 0; it < bisection_iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double fmid = f(mid);
        if (fmid == 0.0)
            return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Horner evaluation; `coeffs[i]` multiplies x^i.
inline double evaluate(std::span<const double> coeffs, double x)
{
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

inline std::vector<double> derivative(std::span<const double> coeffs)
{
    std::vector<double> out;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        out.push_back(static_cast<double>(i) * coeffs[i]);
    return out;
}

/// Real roots in [lo, hi], ascending. Critical points (roots of the
/// derivative, found recursively) split [lo, hi] into monotone pieces, each
/// holding at most one root.
inline std::vector<double> real_roots(std::span<const double> coeffs, double lo, double hi)
{
    std::vector<double> trimmed(coeffs.begin(), coeffs.end());
    while (!trimmed.empty() && trimmed.back() == 0.0)
        trimmed.pop_back();
    if (trimmed.size() <= 1)
        return {};
    if (trimmed.size() == 2) {
        const double root = -trimmed[0] / trimmed[1];
        if (root >= lo && root <= hi)
            return {root};
        return {};
    }

    std::vector<double> breaks{lo};
    for (double c : real_roots(derivative(trimmed), lo, hi))
        if (c > breaks.back())
            breaks.push_back(c);
    if (hi > breaks.back())
        breaks.push_back(hi);

    auto p = [&](double x) { return evaluate(trimmed, x); };
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i];
        const double b = breaks[i + 1];
        const double pa = p(a);
        const double pb = p(b);
        std::optional<double> root;
        if (pa == 0.0)
            root = a;
        else if (pb == 0.0)
            root = b;
        else if ((pa > 0.0) != (pb > 0.0))
            root = bisect(p, {a, b});
        if (root && (roots.empty() || *root > roots.back()))
            roots.push_back(*root);
    }
    return roots;
}

/// Largest real root in [lo, hi]; NumericError if there is none.
inline double largest_real_root(std::span<const double> coeffs, double lo, double hi)
{
    const auto roots = real_roots(coeffs, lo, hi);
    if (roots.empty())
        throw NumericError("no real root in the search interval", hi);
    return roots.back();
}

} // namespace alphaspec::detail

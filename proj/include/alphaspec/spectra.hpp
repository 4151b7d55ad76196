#pragma once

#include <alphaspec/errors.hpp>
#include <alphaspec/graph.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace alphaspec {

/// Dense real symmetric matrix, row-major. Writes go through `set`, which
/// keeps both triangles equal.
class SymmetricMatrix
{
public:
    explicit SymmetricMatrix(int order)
        : order_(order), entries_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0)
    {
        if (order < 1)
            throw ParameterError("matrix order must be positive");
    }

    int order() const noexcept { return order_; }

    double operator()(int i, int j) const noexcept { return entries_[index(i, j)]; }

    void set(int i, int j, double value) noexcept
    {
        entries_[index(i, j)] = value;
        entries_[index(j, i)] = value;
    }

    double frobenius_norm() const noexcept
    {
        double sum = 0.0;
        for (double v : entries_)
            sum += v * v;
        return std::sqrt(sum);
    }

    double max_abs_entry() const noexcept
    {
        double best = 0.0;
        for (double v : entries_)
            best = std::max(best, std::abs(v));
        return best;
    }

    double trace() const noexcept
    {
        double sum = 0.0;
        for (int i = 0; i < order_; ++i)
            sum += (*this)(i, i);
        return sum;
    }

    double row_sum(int i) const noexcept
    {
        double sum = 0.0;
        for (int j = 0; j < order_; ++j)
            sum += (*this)(i, j);
        return sum;
    }

private:
    std::size_t index(int i, int j) const noexcept
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
    }

    int order_;
    std::vector<double> entries_;
};

struct SpectralResult
{
    double radius = 0.0;
    std::vector<double> vector;
    int iterations = 0;
};

/// Eigenvalues in non-increasing order with matching unit eigenvectors.
struct EigenDecomposition
{
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
    int sweeps = 0;
};

inline void check_alpha(double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ParameterError("alpha must lie in [0, 1], got " + std::to_string(alpha));
}

/// A_α(G) = α·D(G) + (1-α)·A(G).
inline SymmetricMatrix alpha_matrix(const Graph& g, double alpha)
{
    check_alpha(alpha);
    SymmetricMatrix m(g.order());
    for (int i = 0; i < g.order(); ++i) {
        m.set(i, i, alpha * g.degree(i));
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(i, j))
                m.set(i, j, 1.0 - alpha);
    }
    return m;
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-13 of the full norm.
inline EigenDecomposition eigen_decompose(const SymmetricMatrix& input)
{
    constexpr int max_sweeps = 100;
    const int n = input.order();
    const auto un = static_cast<std::size_t>(n);
    std::vector<double> a(un * un);
    std::vector<double> v(un * un, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = input(i, j);
        v[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(i)] = 1.0;
    }
    auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)]; };

    const double threshold = 1e-13 * input.frobenius_norm();
    auto off_norm = [&] {
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    sum += A(i, j) * A(i, j);
        return std::sqrt(sum);
    };

    int sweep = 0;
    for (; off_norm() > threshold; ++sweep) {
        if (sweep == max_sweeps) {
            double best = A(0, 0);
            for (int i = 1; i < n; ++i)
                best = std::max(best, A(i, i));
            throw NumericError("Jacobi iteration did not converge", best);
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                A(p, p) -= t * apq;
                A(q, q) += t * apq;
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = A(r, p);
                        const double arq = A(r, q);
                        A(r, p) = A(p, r) = arp - s * (arq + tau * arp);
                        A(r, q) = A(q, r) = arq + s * (arp - tau * arq);
                    }
                    const double vrp = V(r, p);
                    const double vrq = V(r, q);
                    V(r, p) = vrp - s * (vrq + tau * vrp);
                    V(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<int> order(un);
    for (int i = 0; i < n; ++i)
        order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return A(x, x) > A(y, y); });

    EigenDecomposition out;
    out.sweeps = sweep;
    for (int idx : order) {
        out.values.push_back(A(idx, idx));
        std::vector<double> column(un);
        for (int r = 0; r < n; ++r)
            column[static_cast<std::size_t>(r)] = V(r, idx);
        out.vectors.push_back(std::move(column));
    }
    return out;
}

/// All eigenvalues, largest first.
inline std::vector<double> spectrum(const SymmetricMatrix& m) { return eigen_decompose(m).values; }

inline std::vector<double> spectrum(const Graph& g, double alpha) { return spectrum(alpha_matrix(g, alpha)); }

/// Largest eigenvalue and a unit eigenvector whose largest-magnitude entry is positive.
inline SpectralResult largest_eigenpair(const SymmetricMatrix& m)
{
    auto decomposition = eigen_decompose(m);
    SpectralResult result{decomposition.values.front(), std::move(decomposition.vectors.front()), decomposition.sweeps};

    std::size_t pivot = 0;
    for (std::size_t i = 1; i < result.vector.size(); ++i)
        if (std::abs(result.vector[i]) > std::abs(result.vector[pivot]) + 1e-12)
            pivot = i;
    if (result.vector[pivot] < 0.0)
        for (double& x : result.vector)
            x = -x;

    double norm = 0.0;
    for (double x : result.vector)
        norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : result.vector)
        x /= norm;
    return result;
}

/// ρ_α(G).
inline double spectral_radius(const Graph& g, double alpha) { return largest_eigenpair(alpha_matrix(g, alpha)).radius; }

inline double rayleigh_quotient(const SymmetricMatrix& m, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != m.order())
        throw ParameterError("vector length does not match matrix order");
    double numerator = 0.0;
    double denominator = 0.0;
    for (int i = 0; i < m.order(); ++i) {
        const double xi = x[static_cast<std::size_t>(i)];
        denominator += xi * xi;
        double row = 0.0;
        for (int j = 0; j < m.order(); ++j)
            row += m(i, j) * x[static_cast<std::size_t>(j)];
        numerator += xi * row;
    }
    if (denominator == 0.0)
        throw ParameterError("Rayleigh quotient of the zero vector");
    return numerator / denominator;
}

inline nlohmann::json spectral_json(const SpectralResult& r, double alpha)
{
    return {{"rho", r.radius}, {"vector", r.vector}, {"alpha", alpha}};
}

} // namespace alphaspec

#pragma once

#include <alphaspec/combinatorics.hpp>
#include <alphaspec/detail/roots.hpp>
#include <alphaspec/errors.hpp>
#include <alphaspec/graph.hpp>
#include <alphaspec/spectra.hpp>

#include <json.hpp>

#include <bit>
#include <cmath>
#include <vector>

namespace alphaspec {

/// Ordered partition of {0, ..., n-1} into nonempty blocks.
class VertexPartition
{
public:
    VertexPartition(int n, const std::vector<std::vector<int>>& blocks)
        : n_(n)
    {
        std::uint64_t covered = 0;
        for (const auto& block : blocks) {
            if (block.empty())
                throw ParameterError("partition blocks must be nonempty");
            std::uint64_t mask = 0;
            for (int v : block) {
                if (v < 0 || v >= n)
                    throw ParameterError("partition vertex " + std::to_string(v) + " outside [0, n)");
                const std::uint64_t bit = std::uint64_t{1} << v;
                if ((covered | mask) & bit)
                    throw ParameterError("partition blocks overlap at vertex " + std::to_string(v));
                mask |= bit;
            }
            covered |= mask;
            blocks_.push_back({mask, n});
        }
        const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        if (covered != all)
            throw ParameterError("partition does not cover every vertex");
    }

    int order() const noexcept { return n_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    const VertexSet& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
    const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }

    std::vector<int> sizes() const
    {
        std::vector<int> out;
        for (const auto& b : blocks_)
            out.push_back(b.size());
        return out;
    }

private:
    int n_;
    std::vector<VertexSet> blocks_;
};

/// r×r matrix of block-average A_α row sums. Not symmetric in general.
struct QuotientMatrix
{
    int order = 0;
    std::vector<std::vector<double>> entries;

    double operator()(int i, int j) const
    {
        return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

namespace detail {

inline void check_partition(const Graph& g, const VertexPartition& p)
{
    if (p.order() != g.order())
        throw ParameterError("partition order " + std::to_string(p.order()) + " does not match graph order " +
                             std::to_string(g.order()));
}

inline std::vector<std::vector<int>> consecutive_blocks(std::initializer_list<int> sizes)
{
    std::vector<std::vector<int>> blocks;
    int next = 0;
    for (int size : sizes) {
        std::vector<int> block;
        for (int i = 0; i < size; ++i)
            block.push_back(next++);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

} // namespace detail

/// {joint clique, big clique, independent set} for extremal_family(spec).
inline VertexPartition natural_partition(const FamilySpec& spec)
{
    spec.validate();
    return VertexPartition(spec.n, detail::consecutive_blocks({spec.s, spec.clique_block(), spec.independent_block()}));
}

/// {clique, independent set} for half_family(n, k).
inline VertexPartition natural_half_partition(int n, int k)
{
    half_family(n, k);
    return VertexPartition(n, detail::consecutive_blocks({(n - k) / 2, (n + k) / 2}));
}

/// Every vertex of block i has the same number of neighbours in block j, for
/// all i, j. The diagonal degree term of A_α is then constant per block too,
/// so the answer does not depend on alpha.
inline bool is_equitable(const Graph& g, const VertexPartition& p, double alpha = 0.0)
{
    check_alpha(alpha);
    detail::check_partition(g, p);
    for (const auto& from : p.blocks()) {
        for (const auto& to : p.blocks()) {
            int expected = -1;
            for (int v : from.members()) {
                const int count = std::popcount(g.neighbors(v) & to.mask);
                if (expected == -1)
                    expected = count;
                else if (count != expected)
                    return false;
            }
        }
    }
    return true;
}

inline QuotientMatrix quotient(const Graph& g, const VertexPartition& p, double alpha)
{
    check_alpha(alpha);
    detail::check_partition(g, p);
    const int r = p.block_count();
    QuotientMatrix m{r, std::vector<std::vector<double>>(static_cast<std::size_t>(r), std::vector<double>(static_cast<std::size_t>(r), 0.0))};
    for (int i = 0; i < r; ++i) {
        const auto members = p.block(i).members();
        for (int j = 0; j < r; ++j) {
            double total = 0.0;
            for (int v : members) {
                total += (1.0 - alpha) * std::popcount(g.neighbors(v) & p.block(j).mask);
                if (i == j)
                    total += alpha * g.degree(v);
            }
            m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = total / static_cast<double>(members.size());
        }
    }
    return m;
}

/// Coefficients of det(xI - M), lowest degree first (Faddeev-LeVerrier).
inline std::vector<double> characteristic_polynomial(const QuotientMatrix& m)
{
    const int r = m.order;
    const auto ur = static_cast<std::size_t>(r);
    std::vector<double> coeffs(ur + 1, 0.0);
    coeffs[ur] = 1.0;
    // work_k = M * (work_{k-1} + c_{r-k+1} I), c_{r-k} = -tr(work_k) / k
    std::vector<std::vector<double>> work(ur, std::vector<double>(ur, 0.0));
    std::vector<std::vector<double>> next(ur, std::vector<double>(ur, 0.0));
    for (int step = 1; step <= r; ++step) {
        const double c_prev = coeffs[ur - static_cast<std::size_t>(step) + 1];
        for (std::size_t i = 0; i < ur; ++i) {
            for (std::size_t j = 0; j < ur; ++j) {
                double sum = 0.0;
                for (std::size_t l = 0; l < ur; ++l)
                    sum += m.entries[i][l] * (work[l][j] + (l == j ? c_prev : 0.0));
                next[i][j] = sum;
            }
        }
        work.swap(next);
        double trace = 0.0;
        for (std::size_t i = 0; i < ur; ++i)
            trace += work[i][i];
        coeffs[ur - static_cast<std::size_t>(step)] = -trace / step;
    }
    return coeffs;
}

/// Largest real eigenvalue of a small quotient matrix. Roots of the
/// characteristic polynomial are bracketed inside ±(max absolute row sum),
/// which bounds every eigenvalue.
inline double quotient_radius(const QuotientMatrix& m)
{
    if (m.order < 1)
        throw ParameterError("empty quotient matrix");
    double bound = 0.0;
    for (const auto& row : m.entries) {
        double sum = 0.0;
        for (double v : row)
            sum += std::abs(v);
        bound = std::max(bound, sum);
    }
    const auto coeffs = characteristic_polynomial(m);
    return detail::largest_real_root(coeffs, -bound - 1.0, bound + 1.0);
}

inline nlohmann::json quotient_json(const VertexPartition& p, const QuotientMatrix& m)
{
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : p.blocks())
        blocks.push_back(b.members());
    return {{"blocks", std::move(blocks)}, {"matrix", m.entries}};
}

} // namespace alphaspec

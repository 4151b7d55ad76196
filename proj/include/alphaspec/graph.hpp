#pragma once

#include <alphaspec/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace alphaspec {

/// Simple undirected graph on at most 62 vertices. Row i of the adjacency
/// matrix is a 64-bit mask; rows are kept symmetric and loop-free.
class Graph
{
public:
    static constexpr int max_order = 62;

    /// Edgeless graph on `n` vertices.
    explicit Graph(int n = 1)
        : n_(n)
    {
        if (n < 1 || n > max_order)
            throw ParameterError("graph order must lie in [1, 62], got " + std::to_string(n));
    }

    int order() const noexcept { return n_; }

    /// Bit mask with one bit per vertex.
    std::uint64_t vertex_mask() const noexcept { return (std::uint64_t{1} << n_) - 1; }

    bool has_edge(int i, int j) const noexcept { return (rows_[i] >> j) & 1U; }

    void add_edge(int i, int j)
    {
        check_pair(i, j);
        rows_[i] |= std::uint64_t{1} << j;
        rows_[j] |= std::uint64_t{1} << i;
    }

    void remove_edge(int i, int j)
    {
        check_pair(i, j);
        rows_[i] &= ~(std::uint64_t{1} << j);
        rows_[j] &= ~(std::uint64_t{1} << i);
    }

    std::uint64_t neighbors(int v) const noexcept { return rows_[v]; }

    int degree(int v) const noexcept { return std::popcount(rows_[v]); }

    std::size_t edge_count() const noexcept
    {
        std::size_t twice = 0;
        for (int v = 0; v < n_; ++v)
            twice += static_cast<std::size_t>(std::popcount(rows_[v]));
        return twice / 2;
    }

    int max_degree() const noexcept
    {
        int best = 0;
        for (int v = 0; v < n_; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    /// Degrees sorted in non-increasing order.
    std::vector<int> degree_sequence() const
    {
        std::vector<int> degrees(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            degrees[static_cast<std::size_t>(v)] = degree(v);
        std::sort(degrees.begin(), degrees.end(), std::greater<>{});
        return degrees;
    }

    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<std::array<int, 2>> edges() const
    {
        std::vector<std::array<int, 2>> result;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j))
                    result.push_back({i, j});
        return result;
    }

    /// Checks symmetry and absence of loops.
    bool is_well_formed() const noexcept
    {
        for (int i = 0; i < n_; ++i) {
            if (has_edge(i, i) || (rows_[i] & ~vertex_mask()) != 0)
                return false;
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j) != has_edge(j, i))
                    return false;
        }
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void check_pair(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
            throw ParameterError("invalid vertex pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }

    int n_;
    std::array<std::uint64_t, max_order> rows_{};
};

/// Number of vertex pairs; also the width of an edge mask.
constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// Bit position of pair (i, j), i < j, in upper-triangle column-major order
/// (the graph6 bit order).
constexpr int pair_index(int i, int j) noexcept { return j * (j - 1) / 2 + i; }

/// Builds the graph whose edges are the set bits of `mask` in pair_index order.
inline Graph graph_from_edge_mask(int n, std::uint64_t mask)
{
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1U)
                g.add_edge(i, j);
    return g;
}

inline std::uint64_t edge_mask(const Graph& g)
{
    if (pair_count(g.order()) > 64)
        throw CapabilityError("edge mask needs more than 64 bits for n = " + std::to_string(g.order()));
    std::uint64_t mask = 0;
    int bit = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j))
                mask |= std::uint64_t{1} << bit;
    return mask;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

inline Graph path_graph(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n)
{
    if (n < 3)
        throw ParameterError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complement(const Graph& g)
{
    Graph result(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.has_edge(i, j))
                result.add_edge(i, j);
    return result;
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.order();
    if (n1 + g2.order() > Graph::max_order)
        throw ParameterError("disjoint union would exceed 62 vertices");
    Graph result(n1 + g2.order());
    for (auto [i, j] : g1.edges())
        result.add_edge(i, j);
    for (auto [i, j] : g2.edges())
        result.add_edge(n1 + i, n1 + j);
    return result;
}

inline Graph join(const Graph& g1, const Graph& g2)
{
    if (g1.order() + g2.order() > Graph::max_order)
        throw ParameterError("join would exceed 62 vertices");
    Graph result = disjoint_union(g1, g2);
    for (int i = 0; i < g1.order(); ++i)
        for (int j = 0; j < g2.order(); ++j)
            result.add_edge(i, g1.order() + j);
    return result;
}

/// Induced subgraph on the vertices of `keep` (relabelled in increasing order).
inline Graph induced_subgraph(const Graph& g, std::uint64_t keep)
{
    std::vector<int> vertices;
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1U)
            vertices.push_back(v);
    if (vertices.empty())
        throw ParameterError("induced subgraph must keep at least one vertex");
    Graph result(static_cast<int>(vertices.size()));
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (g.has_edge(vertices[a], vertices[b]))
                result.add_edge(static_cast<int>(a), static_cast<int>(b));
    return result;
}

/// Parameters of K_s ∨ (K_{n+1-2s-k} ∪ co-K_{s+k-1}).
struct FamilySpec
{
    int n = 0;
    int s = 0;
    int k = 0;

    int clique_block() const noexcept { return n + 1 - 2 * s - k; }
    int independent_block() const noexcept { return s + k - 1; }

    std::vector<std::string> violations() const
    {
        std::vector<std::string> out;
        if (k < 2)
            out.push_back("k >= 2 violated (k = " + std::to_string(k) + ")");
        if (((n - k) % 2) != 0)
            out.push_back("parity n = k (mod 2) violated");
        if (s < 1)
            out.push_back("s >= 1 violated (s = " + std::to_string(s) + ")");
        if (2 * s > n - k)
            out.push_back("s <= (n-k)/2 violated");
        if (clique_block() < 1)
            out.push_back("n + 1 - 2s - k >= 1 violated");
        if (independent_block() < 1)
            out.push_back("s + k - 1 >= 1 violated");
        if (n > Graph::max_order)
            out.push_back("n <= 62 violated");
        return out;
    }

    void validate() const
    {
        auto v = violations();
        if (!v.empty()) {
            std::string message = "invalid family (n=" + std::to_string(n) + ", s=" + std::to_string(s) +
                                  ", k=" + std::to_string(k) + "):";
            for (const auto& item : v)
                message += " " + item + ";";
            throw ParameterError(message, std::move(v));
        }
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// K_s ∨ (K_{n+1-2s-k} ∪ co-K_{s+k-1}). Vertices are laid out as the joint
/// clique, then the big clique, then the independent set.
inline Graph extremal_family(const FamilySpec& spec)
{
    spec.validate();
    return join(complete(spec.s), disjoint_union(complete(spec.clique_block()), empty_graph(spec.independent_block())));
}

/// Complete split graph K_{(n-k)/2} ∨ co-K_{(n+k)/2}; clique block first.
inline Graph half_family(int n, int k)
{
    if (k < 2 || n < k + 2 || ((n - k) % 2) != 0 || n > Graph::max_order)
        throw ParameterError("half family needs k >= 2, n >= k + 2, n = k (mod 2), n <= 62; got n=" +
                             std::to_string(n) + ", k=" + std::to_string(k));
    return join(complete((n - k) / 2), empty_graph((n + k) / 2));
}

/// {"n": int, "edges": [[i, j], ...]} with i < j, sorted.
inline nlohmann::json adjacency_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : g.edges())
        edges.push_back({i, j});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

} // namespace alphaspec

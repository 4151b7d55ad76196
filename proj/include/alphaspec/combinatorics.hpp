#pragma once

#include <alphaspec/errors.hpp>
#include <alphaspec/graph.hpp>

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <vector>

namespace alphaspec {

/// Subset of {0, ..., n-1} stored as a bit mask.
struct VertexSet
{
    std::uint64_t mask = 0;
    int n = 0;

    int size() const noexcept { return std::popcount(mask); }
    bool contains(int v) const noexcept { return (mask >> v) & 1U; }

    std::vector<int> members() const
    {
        std::vector<int> out;
        for (std::uint64_t m = mask; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    static VertexSet of(int n, std::initializer_list<int> vertices)
    {
        VertexSet set{0, n};
        for (int v : vertices) {
            if (v < 0 || v >= n)
                throw ParameterError("vertex " + std::to_string(v) + " outside [0, n)");
            set.mask |= std::uint64_t{1} << v;
        }
        return set;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Maximizer of o(G - S) - |S|.
struct DeficiencyWitness
{
    VertexSet set;
    int odd_count = 0;
    int deficiency = 0;
};

namespace detail {

/// Vertices reachable from `start` without leaving `allowed`.
inline std::uint64_t reach(const Graph& g, int start, std::uint64_t allowed) noexcept
{
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1)
            next |= g.neighbors(std::countr_zero(f));
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// True when the subgraph induced on `alive` has at most one component.
inline bool induced_connected(const Graph& g, std::uint64_t alive) noexcept
{
    if (alive == 0)
        return true;
    return reach(g, std::countr_zero(alive), alive) == alive;
}

inline void check_subset(const Graph& g, const VertexSet& set)
{
    if ((set.mask & ~g.vertex_mask()) != 0)
        throw ParameterError("vertex set contains vertices outside the graph");
}

} // namespace detail

/// Components of G - removed, ordered by their smallest vertex.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {})
{
    detail::check_subset(g, removed);
    std::vector<VertexSet> out;
    std::uint64_t left = g.vertex_mask() & ~removed.mask;
    while (left != 0) {
        const std::uint64_t comp = detail::reach(g, std::countr_zero(left), left);
        out.push_back({comp, g.order()});
        left &= ~comp;
    }
    return out;
}

inline int odd_component_count(const Graph& g, const VertexSet& removed = {})
{
    detail::check_subset(g, removed);
    int odd = 0;
    std::uint64_t left = g.vertex_mask() & ~removed.mask;
    while (left != 0) {
        const std::uint64_t comp = detail::reach(g, std::countr_zero(left), left);
        odd += std::popcount(comp) & 1;
        left &= ~comp;
    }
    return odd;
}

inline bool is_connected(const Graph& g) noexcept { return detail::induced_connected(g, g.vertex_mask()); }

/// Enumerates every S and returns the maximizer of o(G - S) - |S|. Ties go to
/// the largest |S|, then to the smallest mask value. With that tie-break all
/// components of G - S are odd. Limited to n <= 14.
inline DeficiencyWitness berge_tutte_deficiency(const Graph& g)
{
    const int n = g.order();
    if (n > 14)
        throw CapabilityError("Berge-Tutte enumeration is limited to n <= 14; use matching_number for larger graphs");
    DeficiencyWitness best{{0, n}, odd_component_count(g), odd_component_count(g)};
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        const VertexSet set{mask, n};
        const int odd = odd_component_count(g, set);
        const int deficiency = odd - set.size();
        if (deficiency > best.deficiency || (deficiency == best.deficiency && set.size() > best.set.size()))
            best = {set, odd, deficiency};
    }
    return best;
}

/// Mate of every vertex in a maximum matching (-1 when exposed). Edmonds'
/// augmenting-path search with blossom contraction.
inline std::vector<int> maximum_matching(const Graph& g)
{
    const int n = g.order();
    std::vector<int> match(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> base(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n));
    std::vector<char> in_blossom(static_cast<std::size_t>(n));
    std::vector<char> on_path(static_cast<std::size_t>(n));
    std::deque<int> queue;

    auto at = [](auto& v, int i) -> auto& { return v[static_cast<std::size_t>(i)]; };

    auto lowest_common_base = [&](int a, int b) {
        std::fill(on_path.begin(), on_path.end(), 0);
        for (;;) {
            a = at(base, a);
            at(on_path, a) = 1;
            if (at(match, a) == -1)
                break;
            a = at(parent, at(match, a));
        }
        for (;;) {
            b = at(base, b);
            if (at(on_path, b))
                return b;
            b = at(parent, at(match, b));
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (at(base, v) != b) {
            at(in_blossom, at(base, v)) = 1;
            at(in_blossom, at(base, at(match, v))) = 1;
            at(parent, v) = child;
            child = at(match, v);
            v = at(parent, at(match, v));
        }
    };

    auto find_augmenting_path = [&](int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i)
            at(base, i) = i;
        at(used, root) = 1;
        queue.assign(1, root);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (std::uint64_t nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
                const int to = std::countr_zero(nb);
                if (at(base, v) == at(base, to) || at(match, v) == to)
                    continue;
                if (to == root || (at(match, to) != -1 && at(parent, at(match, to)) != -1)) {
                    const int current = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, current, to);
                    mark_path(to, current, v);
                    for (int i = 0; i < n; ++i) {
                        if (at(in_blossom, at(base, i))) {
                            at(base, i) = current;
                            if (!at(used, i)) {
                                at(used, i) = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (at(parent, to) == -1) {
                    at(parent, to) = v;
                    if (at(match, to) == -1)
                        return to;
                    at(used, at(match, to)) = 1;
                    queue.push_back(at(match, to));
                }
            }
        }
        return -1;
    };

    // Greedy start, then augment from every exposed vertex.
    for (int v = 0; v < n; ++v) {
        if (at(match, v) != -1)
            continue;
        for (std::uint64_t nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (at(match, u) == -1) {
                at(match, u) = v;
                at(match, v) = u;
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (at(match, v) != -1)
            continue;
        for (int x = find_augmenting_path(v); x != -1;) {
            const int pv = at(parent, x);
            const int next = at(match, pv);
            at(match, x) = pv;
            at(match, pv) = x;
            x = next;
        }
    }
    return match;
}

inline int matching_number(const Graph& g)
{
    const auto mate = maximum_matching(g);
    return static_cast<int>(std::count_if(mate.begin(), mate.end(), [](int m) { return m != -1; })) / 2;
}

namespace detail {

inline bool is_complete(const Graph& g) noexcept
{
    return 2 * g.edge_count() == static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(g.order() - 1);
}

/// Visits every c-subset of the n low bits (Gosper's hack); stops when `f` returns true.
template <typename F>
bool any_subset_of_size(int n, int c, F&& f)
{
    if (c == 0)
        return f(std::uint64_t{0});
    std::uint64_t set = (std::uint64_t{1} << c) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (set < limit) {
        if (f(set))
            return true;
        const std::uint64_t low = set & (~set + 1);
        const std::uint64_t ripple = set + low;
        set = (((ripple ^ set) >> 2) / low) | ripple;
    }
    return false;
}

/// Maximum number of internally vertex-disjoint s-t paths, capped at `limit`.
inline int local_connectivity(const Graph& g, int source, int sink, int limit)
{
    // Vertex v splits into v_in = 2v and v_out = 2v + 1 with unit capacity.
    const int n = g.order();
    const int nodes = 2 * n;
    std::vector<int> capacity(static_cast<std::size_t>(nodes * nodes), 0);
    auto cap = [&](int a, int b) -> int& { return capacity[static_cast<std::size_t>(a * nodes + b)]; };
    for (int v = 0; v < n; ++v) {
        cap(2 * v, 2 * v + 1) = (v == source || v == sink) ? n : 1;
        for (std::uint64_t nb = g.neighbors(v); nb != 0; nb &= nb - 1)
            cap(2 * v + 1, 2 * std::countr_zero(nb)) = n;
    }
    const int s = 2 * source + 1;
    const int t = 2 * sink;
    int flow = 0;
    std::vector<int> prev(static_cast<std::size_t>(nodes));
    while (flow < limit) {
        std::fill(prev.begin(), prev.end(), -1);
        prev[static_cast<std::size_t>(s)] = s;
        std::deque<int> queue{s};
        while (!queue.empty() && prev[static_cast<std::size_t>(t)] == -1) {
            const int a = queue.front();
            queue.pop_front();
            for (int b = 0; b < nodes; ++b) {
                if (prev[static_cast<std::size_t>(b)] == -1 && cap(a, b) > 0) {
                    prev[static_cast<std::size_t>(b)] = a;
                    queue.push_back(b);
                }
            }
        }
        if (prev[static_cast<std::size_t>(t)] == -1)
            break;
        for (int b = t; b != s; b = prev[static_cast<std::size_t>(b)]) {
            const int a = prev[static_cast<std::size_t>(b)];
            --cap(a, b);
            ++cap(b, a);
        }
        ++flow;
    }
    return flow;
}

} // namespace detail

/// Smallest vertex cut found by enumerating candidate cuts in increasing size,
/// bounded by the minimum degree. Exponential; used for n <= 14.
inline int vertex_connectivity_by_enumeration(const Graph& g)
{
    const int n = g.order();
    if (detail::is_complete(g))
        return n - 1;
    int min_degree = n;
    for (int v = 0; v < n; ++v)
        min_degree = std::min(min_degree, g.degree(v));
    const std::uint64_t all = g.vertex_mask();
    for (int c = 0; c < min_degree; ++c) {
        if (detail::any_subset_of_size(n, c, [&](std::uint64_t cut) { return !detail::induced_connected(g, all & ~cut); }))
            return c;
    }
    return min_degree;
}

/// Even's reduction to unit-capacity vertex-split max-flow.
inline int vertex_connectivity_by_flow(const Graph& g)
{
    const int n = g.order();
    if (detail::is_complete(g))
        return n - 1;
    int best = n;
    for (int v = 0; v < n; ++v)
        best = std::min(best, g.degree(v));
    for (int i = 0; i <= best && i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j))
                continue;
            best = std::min(best, detail::local_connectivity(g, i, j, best));
        }
    }
    return best;
}

/// κ(G): fewest vertices whose deletion disconnects G or leaves one vertex.
inline int vertex_connectivity(const Graph& g)
{
    return g.order() <= 14 ? vertex_connectivity_by_enumeration(g) : vertex_connectivity_by_flow(g);
}

inline bool is_t_connected(const Graph& g, int t)
{
    if (t < 0)
        throw ParameterError("connectivity threshold must be non-negative");
    if (t == 0)
        return true;
    const int n = g.order();
    if (t > n - 1)
        return false;
    if (n > 14)
        return vertex_connectivity_by_flow(g) >= t;
    const std::uint64_t all = g.vertex_mask();
    for (int c = 0; c < t; ++c)
        if (detail::any_subset_of_size(n, c, [&](std::uint64_t cut) { return !detail::induced_connected(g, all & ~cut); }))
            return false;
    return true;
}

inline nlohmann::json witness_json(const DeficiencyWitness& w)
{
    return {{"S", w.set.members()}, {"odd", w.odd_count}, {"deficiency", w.deficiency}};
}

} // namespace alphaspec

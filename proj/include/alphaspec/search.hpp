#pragma once

#include <alphaspec/classifier.hpp>
#include <alphaspec/combinatorics.hpp>
#include <alphaspec/errors.hpp>
#include <alphaspec/formulas.hpp>
#include <alphaspec/graph.hpp>
#include <alphaspec/graph6.hpp>
#include <alphaspec/spectra.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iterator>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace alphaspec {

/// Every labelled graph on n <= 8 vertices, in increasing edge-mask order
/// (bit b of the mask is the b-th vertex pair in graph6 order).
class GraphEnumeration
{
public:
    static constexpr int max_order = 8;

    class iterator
    {
    public:
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}

        Graph operator*() const { return graph_from_edge_mask(n_, mask_); }
        std::uint64_t mask() const noexcept { return mask_; }

        iterator& operator++()
        {
            ++mask_;
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++mask_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.mask_ == b.mask_; }

    private:
        int n_ = 1;
        std::uint64_t mask_ = 0;
    };

    explicit GraphEnumeration(int n)
        : n_(n)
    {
        if (n < 1)
            throw ParameterError("graph order must be positive");
        if (n > max_order)
            throw CapabilityError("exhaustive enumeration is limited to n <= 8, got " + std::to_string(n));
    }

    std::uint64_t size() const noexcept { return std::uint64_t{1} << pair_count(n_); }
    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, size()}; }

private:
    int n_;
};

inline GraphEnumeration enumerate_graphs(int n) { return GraphEnumeration(n); }

/// t-connected with matching number at most (n-k)/2. Cheap tests first.
inline bool admissible(const Graph& g, const ScenarioParams& params)
{
    if (g.order() != params.n)
        throw ParameterError("graph order does not match the scenario");
    if (params.t >= 1 && !is_connected(g))
        return false;
    if (!is_t_connected(g, params.t))
        return false;
    return matching_number(g) <= (params.n - params.k) / 2;
}

/// Backtracking search for a degree-preserving bijection.
inline bool are_isomorphic(const Graph& a, const Graph& b)
{
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence())
        return false;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a.degree(x) > a.degree(y); });
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::uint64_t used = 0;

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == order.size())
            return true;
        const int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1U || b.degree(w) != a.degree(v))
                continue;
            bool consistent = true;
            for (std::size_t d = 0; d < depth && consistent; ++d) {
                const int u = order[d];
                consistent = a.has_edge(u, v) == b.has_edge(image[static_cast<std::size_t>(u)], w);
            }
            if (!consistent)
                continue;
            image[static_cast<std::size_t>(v)] = w;
            used |= std::uint64_t{1} << w;
            if (extend(depth + 1))
                return true;
            used &= ~(std::uint64_t{1} << w);
        }
        return false;
    };
    return extend(0);
}

/// Same sorted degree sequence and the same A_α spectrum within `tolerance`.
inline bool spectrally_matches(const Graph& a, const Graph& b, double alpha, double tolerance = 1e-8)
{
    if (a.order() != b.order() || a.degree_sequence() != b.degree_sequence())
        return false;
    const auto sa = spectrum(a, alpha);
    const auto sb = spectrum(b, alpha);
    for (std::size_t i = 0; i < sa.size(); ++i)
        if (std::abs(sa[i] - sb[i]) >= tolerance)
            return false;
    return true;
}

enum class SearchMode { Exhaustive, Sample };

struct SearchTask
{
    ScenarioParams params;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct NearTie
{
    std::string graph6;
    double rho = 0.0;
};

struct SearchReport
{
    ScenarioParams params;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t examined = 0;
    std::uint64_t admissible = 0;
    std::optional<double> max_rho;
    std::optional<Graph> maximizer;
    double predicted_rho = 0.0;
    std::string predicted_family;
    Verdict verdict = Verdict::UndeterminedByTheorem;
    bool verdict_confirmed = false;
    bool isomorphism_checked = false;
    std::vector<NearTie> near_ties;
};

/// Graphs within this distance of the maximum are reported as ties.
inline constexpr double tie_tolerance = 1e-8;

namespace detail {

/// Sample i of a seeded stream. Each sample owns a generator seeded from
/// (seed, i) through std::seed_seq, so the stream does not depend on how
/// indices are split across workers.
inline std::mt19937_64 sample_generator(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

inline double unit_double(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

/// Uniform over labelled graphs: one fair bit per vertex pair.
inline Graph uniform_sample(int n, std::uint64_t seed, std::uint64_t index)
{
    auto gen = sample_generator(seed, index);
    Graph g(n);
    std::uint64_t word = 0;
    int left = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (left == 0) {
                word = gen();
                left = 64;
            }
            if (word & 1U)
                g.add_edge(i, j);
            word >>= 1;
            --left;
        }
    }
    return g;
}

/// Edge density drawn uniformly from [0, 1), then independent edges.
inline Graph mixed_density_sample(int n, std::uint64_t seed, std::uint64_t index)
{
    auto gen = sample_generator(seed, index);
    const double p = unit_double(gen);
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (unit_double(gen) < p)
                g.add_edge(i, j);
    return g;
}

struct Candidate
{
    std::uint64_t key = 0;
    double rho = 0.0;
};

struct Partial
{
    std::uint64_t examined = 0;
    std::uint64_t admissible = 0;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<Candidate> candidates;

    void offer(std::uint64_t key, double rho)
    {
        if (rho > best) {
            best = rho;
            std::erase_if(candidates, [&](const Candidate& c) { return c.rho < best - tie_tolerance; });
        }
        if (rho >= best - tie_tolerance)
            candidates.push_back({key, rho});
    }
};

template <typename MakeGraph>
Partial scan_range(const ScenarioParams& params, std::uint64_t begin, std::uint64_t end, MakeGraph make_graph)
{
    Partial part;
    for (std::uint64_t key = begin; key < end; ++key) {
        const Graph g = make_graph(key);
        ++part.examined;
        if (!admissible(g, params))
            continue;
        ++part.admissible;
        // ρ_α never exceeds the maximum degree (row sums are degrees).
        if (g.max_degree() < part.best - tie_tolerance)
            continue;
        part.offer(key, spectral_radius(g, params.alpha));
    }
    return part;
}

} // namespace detail

/// Scans labelled graphs and compares the admissible maximum of ρ_α with the
/// graph predicted by classify(). The report does not depend on the worker count.
inline SearchReport run(const SearchTask& task)
{
    const auto params = validate(task.params);
    if (task.mode == SearchMode::Exhaustive && params.n > GraphEnumeration::max_order)
        throw CapabilityError("exhaustive search is limited to n <= 8, got " + std::to_string(params.n));
    if (task.mode == SearchMode::Sample && task.sample_count < 1)
        throw ParameterError("sample search needs sample_count >= 1");
    if (params.n > Graph::max_order)
        throw ParameterError("search needs n <= 62");
    const int workers = std::max(1, task.workers);

    const bool exhaustive = task.mode == SearchMode::Exhaustive;
    const std::uint64_t total = exhaustive ? GraphEnumeration(params.n).size() : task.sample_count;
    auto make_graph = [&](std::uint64_t key) {
        return exhaustive ? graph_from_edge_mask(params.n, key) : detail::uniform_sample(params.n, task.seed, key);
    };

    std::vector<detail::Partial> partials(static_cast<std::size_t>(workers));
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = total / static_cast<std::uint64_t>(workers) * static_cast<std::uint64_t>(w) +
                                        std::min<std::uint64_t>(static_cast<std::uint64_t>(w), total % static_cast<std::uint64_t>(workers));
            const std::uint64_t end = begin + total / static_cast<std::uint64_t>(workers) +
                                      (static_cast<std::uint64_t>(w) < total % static_cast<std::uint64_t>(workers) ? 1 : 0);
            pool.emplace_back([&, w, begin, end] {
                partials[static_cast<std::size_t>(w)] = detail::scan_range(params, begin, end, make_graph);
            });
        }
    }

    SearchReport report;
    report.params = params;
    report.mode = task.mode;
    std::vector<detail::Candidate> candidates;
    for (const auto& part : partials) {
        report.examined += part.examined;
        report.admissible += part.admissible;
        candidates.insert(candidates.end(), part.candidates.begin(), part.candidates.end());
    }

    const auto classification = classify(params);
    report.verdict = classification.verdict;
    std::vector<Graph> predicted;
    switch (classification.resolved) {
    case Verdict::ExtremalT:
        report.predicted_rho = classification.rho_t;
        report.predicted_family = "extremal_t";
        predicted.push_back(extremal_family(classification.family_t));
        break;
    case Verdict::Half:
        report.predicted_rho = classification.rho_half;
        report.predicted_family = "half";
        predicted.push_back(half_family(params.n, params.k));
        break;
    default:
        report.predicted_rho = std::max(classification.rho_t, classification.rho_half);
        report.predicted_family = "extremal_t|half";
        predicted.push_back(extremal_family(classification.family_t));
        predicted.push_back(half_family(params.n, params.k));
        break;
    }

    if (candidates.empty())
        return report;

    double best = -std::numeric_limits<double>::infinity();
    for (const auto& c : candidates)
        best = std::max(best, c.rho);
    std::erase_if(candidates, [&](const detail::Candidate& c) { return c.rho < best - tie_tolerance; });
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) { return a.key < b.key; });

    // Smallest key among values equal to the maximum up to rounding noise.
    const auto top = std::find_if(candidates.begin(), candidates.end(),
                                  [&](const detail::Candidate& c) { return c.rho >= best - rho_tolerance; });
    const Graph maximizer = make_graph(top->key);
    report.max_rho = best;
    report.maximizer = maximizer;

    // One representative per isomorphism class among the remaining ties.
    std::vector<Graph> classes{maximizer};
    for (const auto& c : candidates) {
        const Graph g = make_graph(c.key);
        const bool known = std::any_of(classes.begin(), classes.end(), [&](const Graph& h) { return are_isomorphic(g, h); });
        if (!known) {
            classes.push_back(g);
            report.near_ties.push_back({graph6_encode(g), c.rho});
        }
    }

    bool matches = false;
    report.isomorphism_checked = params.n <= GraphEnumeration::max_order;
    for (const auto& g : predicted) {
        bool ok = spectrally_matches(maximizer, g, params.alpha);
        if (ok && report.isomorphism_checked)
            ok = are_isomorphic(maximizer, g);
        matches = matches || ok;
    }
    report.verdict_confirmed = std::abs(best - report.predicted_rho) < tie_tolerance && matches;
    return report;
}

inline nlohmann::json search_json(const SearchReport& r)
{
    nlohmann::json ties = nlohmann::json::array();
    for (const auto& t : r.near_ties)
        ties.push_back({{"graph6", t.graph6}, {"rho", t.rho}});
    return {{"n", r.params.n},
            {"t", r.params.t},
            {"k", r.params.k},
            {"alpha", r.params.alpha},
            {"mode", r.mode == SearchMode::Exhaustive ? "exhaustive" : "sample"},
            {"examined", r.examined},
            {"admissible", r.admissible},
            {"max_rho", r.max_rho ? nlohmann::json(*r.max_rho) : nlohmann::json(nullptr)},
            {"maximizer", r.maximizer ? nlohmann::json(graph6_encode(*r.maximizer)) : nlohmann::json(nullptr)},
            {"predicted_rho", r.predicted_rho},
            {"predicted_family", r.predicted_family},
            {"verdict", to_string(r.verdict)},
            {"verdict_confirmed", r.verdict_confirmed},
            {"isomorphism_checked", r.isomorphism_checked},
            {"near_ties", std::move(ties)}};
}

struct ProbeReport
{
    int n = 0;
    double alpha = 0.0;
    double threshold = 0.0;
    std::string threshold_graph;
    std::uint64_t examined = 0;
    std::uint64_t connected = 0;
    std::uint64_t above_threshold = 0;
    std::vector<std::string> violations;
};

namespace detail {

inline void probe_one(const Graph& g, ProbeReport& report)
{
    ++report.examined;
    if (!is_connected(g))
        return;
    ++report.connected;
    if (g.max_degree() <= report.threshold + rho_tolerance)
        return;
    if (spectral_radius(g, report.alpha) <= report.threshold + rho_tolerance)
        return;
    ++report.above_threshold;
    if (2 * matching_number(g) != g.order())
        report.violations.push_back(graph6_encode(g));
}

inline ProbeReport start_probe(int n, double alpha)
{
    const auto threshold = perfect_matching_threshold(n, alpha);
    ProbeReport report;
    report.n = n;
    report.alpha = alpha;
    report.threshold = threshold.rho;
    report.threshold_graph = threshold.label();
    return report;
}

} // namespace detail

/// Connected graphs with ρ_α strictly above the perfect-matching threshold
/// that nevertheless lack a perfect matching. Graphs are drawn with a
/// uniformly random edge density so that dense graphs are well represented.
inline ProbeReport counterexample_probe(int n, double alpha, std::uint64_t budget, std::uint64_t seed)
{
    auto report = detail::start_probe(n, alpha);
    for (std::uint64_t i = 0; i < budget; ++i)
        detail::probe_one(detail::mixed_density_sample(n, seed, i), report);
    return report;
}

/// The same check over every labelled graph on n <= 8 vertices.
inline ProbeReport counterexample_probe_exhaustive(int n, double alpha)
{
    auto report = detail::start_probe(n, alpha);
    for (auto it = enumerate_graphs(n).begin(), end = enumerate_graphs(n).end(); it != end; ++it)
        detail::probe_one(*it, report);
    return report;
}

inline nlohmann::json probe_json(const ProbeReport& r)
{
    return {{"n", r.n},
            {"alpha", r.alpha},
            {"threshold", r.threshold},
            {"threshold_graph", r.threshold_graph},
            {"examined", r.examined},
            {"connected", r.connected},
            {"above_threshold", r.above_threshold},
            {"violations", r.violations}};
}

} // namespace alphaspec

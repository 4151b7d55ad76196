#include <alphaspec/search.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace alphaspec;

TEST_CASE("enumeration counts")
{
    CHECK(enumerate_graphs(3).size() == 8);
    int total = 0;
    int connected = 0;
    for (const auto& g : enumerate_graphs(4)) {
        ++total;
        connected += is_connected(g) ? 1 : 0;
    }
    CHECK(total == 64);
    CHECK(connected == 38);
    CHECK(enumerate_graphs(6).size() == 32768);
    CHECK_THROWS_AS(enumerate_graphs(9), CapabilityError);

    std::uint64_t expected = 0;
    for (auto it = enumerate_graphs(5).begin(); it != enumerate_graphs(5).end(); ++it)
        CHECK(it.mask() == expected++);
}

TEST_CASE("admissibility")
{
    CHECK(admissible(extremal_family({8, 1, 2}), {8, 1, 2, 0.0}));
    CHECK(!admissible(complete(8), {8, 1, 2, 0.0}));
    CHECK(!admissible(disjoint_union(complete(3), complete(3)), {6, 1, 2, 0.0}));
    CHECK(!admissible(extremal_family({8, 1, 2}), {8, 2, 2, 0.0}));
    CHECK_THROWS_AS(admissible(complete(5), {8, 1, 2, 0.0}), ParameterError);
}

TEST_CASE("the predicted graphs are admissible")
{
    for (int k = 2; k <= 10; ++k)
        for (int n = k + 2; n <= 14; n += 2)
            for (int t = 1; 2 * t <= n - k; ++t) {
                CHECK(admissible(extremal_family({n, t, k}), {n, t, k, 0.0}));
                CHECK(admissible(half_family(n, k), {n, t, k, 0.0}));
            }
}

TEST_CASE("isomorphism")
{
    const auto a = extremal_family({6, 2, 2});
    const auto b = half_family(6, 2);
    CHECK(are_isomorphic(a, b));
    CHECK(!are_isomorphic(extremal_family({8, 1, 2}), half_family(8, 2)));
    CHECK(are_isomorphic(cycle_graph(6), graph_from_edge_mask(6, edge_mask(cycle_graph(6)))));
    // Same degree sequence, different graphs: C6 and two triangles.
    CHECK(!are_isomorphic(cycle_graph(6), disjoint_union(complete(3), complete(3))));
    CHECK(spectrally_matches(a, b, 0.3));
}

TEST_CASE("exhaustive search at n = 6")
{
    SearchTask task;
    task.params = {6, 1, 2, 0.0};
    const auto report = run(task);
    CHECK(report.examined == 32768);
    CHECK(report.admissible <= report.examined);
    REQUIRE(report.max_rho.has_value());
    CHECK(std::abs(*report.max_rho - (1 + std::sqrt(33.0)) / 2) < 1e-8);
    CHECK(are_isomorphic(*report.maximizer, half_family(6, 2)));
    CHECK(report.verdict_confirmed);
    CHECK(report.near_ties.empty());

    task.params = {6, 2, 2, 0.0};
    const auto coincident = run(task);
    CHECK(coincident.verdict_confirmed);
    CHECK(are_isomorphic(*coincident.maximizer, half_family(6, 2)));
}

TEST_CASE("exhaustive search at n = 7")
{
    SearchTask task;
    task.params = {7, 1, 3, 0.5};
    const auto report = run(task);
    CHECK(report.verdict_confirmed);
    const auto predicted = classify(task.params);
    const auto expected = predicted.resolved == Verdict::Half ? half_family(7, 3) : extremal_family({7, 1, 3});
    CHECK(are_isomorphic(*report.maximizer, expected));
}

TEST_CASE("reports do not depend on the worker count")
{
    SearchTask task;
    task.params = {6, 1, 2, 0.25};
    const auto one = search_json(run(task)).dump();
    for (int workers : {2, 3, 8, 13}) {
        task.workers = workers;
        CHECK(search_json(run(task)).dump() == one);
    }

    SearchTask sample;
    sample.params = {10, 2, 2, 0.5};
    sample.mode = SearchMode::Sample;
    sample.sample_count = 3000;
    sample.seed = 77;
    const auto single = search_json(run(sample)).dump();
    sample.workers = 4;
    CHECK(search_json(run(sample)).dump() == single);
    sample.seed = 78;
    CHECK(search_json(run(sample)).dump() != single);
}

TEST_CASE("search task validation")
{
    SearchTask task;
    task.params = {10, 1, 2, 0.0};
    CHECK_THROWS_AS(run(task), CapabilityError);
    task.mode = SearchMode::Sample;
    task.sample_count = 0;
    CHECK_THROWS_AS(run(task), ParameterError);
    task.params = {7, 1, 2, 0.0};
    task.sample_count = 5;
    CHECK_THROWS_AS(run(task), ParameterError);
}

TEST_CASE("sampled search never exceeds the prediction")
{
    SearchTask task;
    task.params = {10, 1, 2, 0.0};
    task.mode = SearchMode::Sample;
    task.sample_count = 20000;
    task.seed = 5;
    const auto report = run(task);
    CHECK(report.examined == 20000);
    if (report.max_rho)
        CHECK(*report.max_rho <= report.predicted_rho + 1e-8);
}

TEST_CASE("perfect matching probe")
{
    const auto exhaustive = counterexample_probe_exhaustive(6, 0.0);
    CHECK(exhaustive.examined == 32768);
    CHECK(exhaustive.above_threshold > 0);
    CHECK(exhaustive.violations.empty());

    const auto sampled = counterexample_probe(8, 0.5, 5000, 3);
    CHECK(sampled.examined == 5000);
    CHECK(sampled.above_threshold > 0);
    CHECK(sampled.violations.empty());
    CHECK(probe_json(sampled)["violations"].empty());
    CHECK(probe_json(counterexample_probe(8, 0.5, 5000, 3)) == probe_json(sampled));
}

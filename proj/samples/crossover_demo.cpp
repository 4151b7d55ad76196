// Prints where the extremal graph switches from the complete split graph to
// K_1 v (K_{n-3} u co-K_2) for t = 1, k = 2, and checks one case by brute force.

#include <alphaspec/alphaspec.hpp>

#include <cstdio>

int main()
{
    namespace as = alphaspec;
    for (double alpha : {0.0, 0.25, 0.5}) {
        std::printf("alpha = %.2f\n", alpha);
        for (const auto& row : as::sweep(1, 2, alpha, 4, 14)) {
            const auto& r = row.result;
            std::printf("  n = %2d  rho_t = %.9f  rho_half = %.9f  %s\n", row.n, r.rho_t, r.rho_half,
                        as::to_string(r.resolved).c_str());
        }
    }

    as::SearchTask task;
    task.params = {6, 1, 2, 0.0};
    const auto report = as::run(task);
    std::printf("\nall graphs on 6 vertices: %llu admissible, max rho = %.9f, maximizer %s, %s\n",
                static_cast<unsigned long long>(report.admissible), report.max_rho.value_or(0.0),
                report.maximizer ? as::graph6_encode(*report.maximizer).c_str() : "-",
                report.verdict_confirmed ? "confirmed" : "NOT confirmed");
    return report.verdict_confirmed ? 0 : 1;
}

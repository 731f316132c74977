// SPDX-License-Identifier: Apache-2.0
#include "clusterx/expansion.hpp"

#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clusterx {

int truncation_order(int graph_order, double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw ValidationError("epsilon must lie in (0, 1]");
    if (graph_order < 1) throw ValidationError("graph order must be >= 1");
    int m = static_cast<int>(std::ceil(2.0 * std::log(2.0 * graph_order / epsilon)));
    return std::max(m, 1);
}

int worker_count() {
    if (const char* env = std::getenv("CLUSTERX_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

ExpansionResult truncated_expansion(PolymerUniverse& u, int m) {
    if (m < 1) throw ValidationError("truncation order must be >= 1");
    ExpansionResult res;
    res.order = m;
    if (m == 1) return res; // no clusters of size 0

    auto clusters = enumerate_clusters(u, m - 1);
    res.clusters_evaluated = static_cast<long>(clusters.size());

    // Warm the weight cache sequentially so parallel workers only read.
    const int n_poly = u.polymer_count(m - 1);
    for (int i = 0; i < n_poly; ++i) u.weight(i);

    std::vector<Complex> terms(clusters.size());
    const int workers = worker_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
#endif
    for (long i = 0; i < static_cast<long>(clusters.size()); ++i)
        terms[i] = cluster_term(clusters[i], u);
    (void)workers;

    // Sequential accumulation in canonical cluster order: the result is
    // independent of the worker count.
    Complex t{0.0, 0.0};
    for (const Complex& x : terms) t += x;
    res.log_value = t;
    return res;
}

ExpansionResult truncated_expansion_serial(PolymerUniverse& u, int m) {
    if (m < 1) throw ValidationError("truncation order must be >= 1");
    ExpansionResult res;
    res.order = m;
    if (m == 1) return res;
    auto clusters = enumerate_clusters(u, m - 1);
    res.clusters_evaluated = static_cast<long>(clusters.size());
    Complex t{0.0, 0.0};
    for (const auto& c : clusters) t += cluster_term(c, u);
    res.log_value = t;
    return res;
}

DecayCheck weight_decay_check(PolymerUniverse& u, double bound_base, int m) {
    if (!(bound_base > 0.0)) throw ValidationError("bound base must be positive");
    DecayCheck report;
    report.bound_base = bound_base;
    const int n = u.polymer_count(m);
    for (int i = 0; i < n; ++i) {
        ++report.checked;
        double allowed = std::pow(bound_base, u.polymer_size(i));
        double observed = std::abs(u.weight(i));
        if (observed > allowed) {
            report.pass = false;
            report.violating_polymer = i;
            report.observed = observed;
            report.allowed = allowed;
            report.violating_description = u.describe(i);
            return report;
        }
    }
    return report;
}

ApproxZResult approximate_Z(PolymerUniverse& u, int graph_order, double epsilon,
                            std::optional<int> order_override) {
    int m = order_override ? *order_override : truncation_order(graph_order, epsilon);
    if (m < 1) throw ValidationError("truncation order must be >= 1");
    ApproxZResult out;
    out.expansion = truncated_expansion(u, m);
    out.value = std::exp(out.expansion.log_value);
    return out;
}

namespace {

void admissible_rec(PolymerUniverse& u, int n, int min_idx,
                    std::vector<int>& chosen, Complex prod, Complex& total) {
    total += prod;
    for (int i = min_idx; i < n; ++i) {
        bool ok = true;
        for (int j : chosen)
            if (u.incompatible(i, j)) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(i);
        admissible_rec(u, n, i + 1, chosen, prod * u.weight(i), total);
        chosen.pop_back();
    }
}

} // namespace

Complex brute_force_Z(PolymerUniverse& u, int m) {
    const int n = u.polymer_count(m);
    if (n > 25) throw GuardError("brute_force_Z guard: more than 25 polymers");
    Complex total{0.0, 0.0};
    std::vector<int> chosen;
    admissible_rec(u, n, 0, chosen, Complex{1.0, 0.0}, total);
    return total;
}

} // namespace clusterx

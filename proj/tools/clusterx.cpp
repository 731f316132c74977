// SPDX-License-Identifier: Apache-2.0
//
// clusterx <command> <problem-file> [--epsilon e] [--order m] [--force] [--compare]
//
// Commands:
//   check     evaluate the weight-decay conditions only
//   approx    truncated cluster expansion
//   oracle    exact brute-force reference
//   clusters  polymer/cluster counts per size (diagnostics)
//
// Exit codes: 0 success, 2 condition failure without --force,
// 3 validation error, 4 oracle guard exceeded.

#include <chrono>
#include <cmath>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "clusterx/problem.hpp"

namespace cx = clusterx;

namespace {

cx::ConditionReport conditions_of(const cx::Problem& p) {
    switch (p.kind) {
        case cx::ProblemKind::Amplitude: return cx::check_conditions(*p.circuit);
        case cx::ProblemKind::Expectation:
            return cx::check_conditions(*p.circuit, *p.observables);
        case cx::ProblemKind::Partition: return cx::check_conditions(*p.spin);
        case cx::ProblemKind::Thermal:
            return cx::check_conditions(*p.spin, *p.observables);
        case cx::ProblemKind::Ising: return cx::check_conditions(*p.ising);
        case cx::ProblemKind::HardCore: return cx::check_conditions(*p.hardcore);
    }
    throw cx::ValidationError("unknown problem kind");
}

void run_approx(const cx::Problem& p, double epsilon, std::optional<int> order,
                cx::RunReport& rep) {
    switch (p.kind) {
        case cx::ProblemKind::Amplitude: {
            auto r = cx::approximate_amplitude(*p.circuit, epsilon, order);
            rep.value = r.value;
            rep.truncation_order = r.expansion.order;
            rep.clusters_evaluated = r.expansion.clusters_evaluated;
            break;
        }
        case cx::ProblemKind::Expectation: {
            auto r = cx::approximate_expectation(*p.circuit, *p.observables, epsilon, order);
            rep.value = r.value;
            rep.truncation_order = r.expansion.order;
            rep.clusters_evaluated = r.expansion.clusters_evaluated;
            break;
        }
        case cx::ProblemKind::Partition: {
            auto r = cx::approximate_partition(*p.spin, epsilon, order);
            rep.value = r.value;
            rep.truncation_order = r.expansion.order;
            rep.clusters_evaluated = r.expansion.clusters_evaluated;
            break;
        }
        case cx::ProblemKind::Thermal: {
            auto r = cx::approximate_thermal(*p.spin, *p.observables, epsilon, order);
            rep.value = r.value;
            rep.truncation_order = r.order;
            rep.clusters_evaluated = r.clusters_evaluated;
            break;
        }
        case cx::ProblemKind::Ising: {
            auto r = cx::approximate_ising(*p.ising, epsilon, order);
            rep.value = r.value;
            rep.truncation_order = r.expansion.order;
            rep.clusters_evaluated = r.expansion.clusters_evaluated;
            rep.unnormalized_value =
                r.value * std::pow(2.0, p.ising->graph.order());
            break;
        }
        case cx::ProblemKind::HardCore: {
            auto r = cx::approximate_hardcore(*p.hardcore, epsilon, order);
            rep.value = r.value;
            rep.truncation_order = r.expansion.order;
            rep.clusters_evaluated = r.expansion.clusters_evaluated;
            break;
        }
    }
}

cx::Complex run_oracle(const cx::Problem& p) {
    switch (p.kind) {
        case cx::ProblemKind::Amplitude: return cx::exact_amplitude(*p.circuit);
        case cx::ProblemKind::Expectation:
            return cx::exact_expectation(*p.circuit, *p.observables);
        case cx::ProblemKind::Partition: return cx::exact_partition(*p.spin);
        case cx::ProblemKind::Thermal: return cx::exact_thermal(*p.spin, *p.observables);
        case cx::ProblemKind::Ising: return cx::exact_ising(*p.ising);
        case cx::ProblemKind::HardCore:
            return cx::exact_independence_poly(*p.hardcore);
    }
    throw cx::ValidationError("unknown problem kind");
}

// Polymer/cluster counts per size; the weights are never evaluated.
cx::ojson run_clusters(const cx::Problem& p, double epsilon, std::optional<int> order) {
    const cx::MultiHypergraph* host = nullptr;
    std::unique_ptr<cx::PolymerUniverse> u;
    std::shared_ptr<cx::CausalHypergraph> ch;
    auto dummy = [](const cx::EdgeSubset&) { return cx::Complex{0.0, 0.0}; };
    int graph_order = 0;
    switch (p.kind) {
        case cx::ProblemKind::Amplitude:
            host = &p.circuit->graph;
            graph_order = p.circuit->graph.order();
            break;
        case cx::ProblemKind::Expectation:
            ch = std::make_shared<cx::CausalHypergraph>(
                cx::causal_intersection_hypergraph(p.circuit->graph));
            host = &ch->graph;
            graph_order = p.circuit->graph.order();
            break;
        case cx::ProblemKind::Partition:
        case cx::ProblemKind::Thermal:
            host = &p.spin->graph;
            graph_order = p.spin->graph.order();
            break;
        case cx::ProblemKind::Ising:
            host = &p.ising->graph;
            graph_order = p.ising->graph.order();
            break;
        case cx::ProblemKind::HardCore:
            u = std::make_unique<cx::HardCoreUniverse>(*p.hardcore);
            graph_order = p.hardcore->graph.order();
            break;
    }
    if (!u) u = std::make_unique<cx::SubgraphPolymerUniverse>(*host, dummy);

    int m = order ? *order : cx::truncation_order(graph_order, epsilon);
    std::map<int, long> poly_by_size, clus_by_size;
    int n_poly = u->polymer_count(m - 1);
    for (int i = 0; i < n_poly; ++i) ++poly_by_size[u->polymer_size(i)];
    auto clusters = cx::enumerate_clusters(*u, m - 1);
    for (const auto& c : clusters) ++clus_by_size[c.total_size];

    cx::ojson jp = cx::ojson::object(), jc = cx::ojson::object();
    for (const auto& [s, n] : poly_by_size) jp[std::to_string(s)] = n;
    for (const auto& [s, n] : clus_by_size) jc[std::to_string(s)] = n;
    return cx::ojson{{"mode", "clusters"},
                     {"truncation_order", m},
                     {"polymers", n_poly},
                     {"clusters", static_cast<long>(clusters.size())},
                     {"polymers_by_size", std::move(jp)},
                     {"clusters_by_size", std::move(jc)}};
}

int run(const std::string& command, const std::string& path, double epsilon,
        std::optional<int> order, bool force, bool compare) {
    auto t0 = std::chrono::steady_clock::now();
    cx::Problem p = cx::load_problem(path);

    if (command == "clusters") {
        std::cout << run_clusters(p, epsilon, order).dump(2) << "\n";
        return 0;
    }

    cx::RunReport rep;
    rep.condition = conditions_of(p);
    rep.forced = force;

    auto finish = [&](int code) {
        rep.elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << cx::report_to_json(rep).dump(2) << "\n";
        return code;
    };

    if (command == "check") {
        rep.mode = "check";
        rep.forced = false;
        return finish(rep.condition.pass ? 0 : 2);
    }
    if (command == "oracle") {
        rep.mode = "oracle";
        rep.forced = false;
        rep.value = run_oracle(p);
        return finish(0);
    }
    // approx
    rep.mode = "cluster";
    if (!rep.condition.pass && !force) {
        std::cerr << "condition check failed; rerun with --force to proceed\n";
        return finish(2);
    }
    run_approx(p, epsilon, order, rep);
    if (compare) {
        rep.oracle_value = run_oracle(p);
        double denom = std::abs(*rep.oracle_value);
        rep.relative_error = denom > 0.0 ? std::abs(*rep.value - *rep.oracle_value) / denom
                                         : std::abs(*rep.value - *rep.oracle_value);
    }
    return finish(0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated cluster expansions for quantum and classical partition functions"};
    std::string command, path;
    double epsilon = 1e-3;
    int order = 0;
    bool force = false, compare = false;
    app.add_option("command", command, "check | approx | oracle | clusters")
        ->required()
        ->check(CLI::IsMember({"check", "approx", "oracle", "clusters"}));
    app.add_option("problem_file", path, "problem file (JSON)")->required();
    app.add_option("--epsilon", epsilon, "relative accuracy target")
        ->check(CLI::Range(1e-12, 1.0));
    app.add_option("--order", order, "override the truncation order m")
        ->check(CLI::PositiveNumber);
    app.add_flag("--force", force, "proceed despite condition failure");
    app.add_flag("--compare", compare, "also run the oracle and report relative error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 3;
    }

    std::optional<int> order_opt;
    if (order > 0) order_opt = order;
    try {
        return run(command, path, epsilon, order_opt, force, compare);
    } catch (const cx::GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 4;
    } catch (const cx::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

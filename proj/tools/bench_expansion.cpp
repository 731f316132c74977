// SPDX-License-Identifier: Apache-2.0
//
// bench_expansion [n_vertices] [order]
//
// Times the OpenMP cluster-term evaluation against the serial reference on
// a ring spin system and checks that both produce the same sum.

#include <chrono>
#include <cmath>
#include <iostream>

#include "clusterx/oracle.hpp"
#include "clusterx/quantum.hpp"

namespace cx = clusterx;

namespace {

cx::SpinSystemSpec ring_system(int n, double beta) {
    std::vector<cx::MultiHypergraph::Vertex> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = {"q" + std::to_string(i), 2};
    std::vector<std::pair<std::int64_t, std::vector<int>>> edges;
    std::map<std::int64_t, cx::LocalOperator> inter;
    cx::Matrix zz = cx::pauli_string("ZZ");
    cx::Matrix xx = cx::pauli_string("XX");
    for (int i = 0; i < n; ++i) {
        std::vector<int> sup{i, (i + 1) % n};
        edges.emplace_back(i + 1, sup);
        cx::Matrix phi = 0.5 * (zz + ((i % 2) ? 0.5 : -0.5) * xx);
        phi /= cx::spectral_norm(phi);
        inter[i + 1] = cx::LocalOperator{sup, phi};
    }
    auto g = cx::MultiHypergraph::from_indices(std::move(verts), std::move(edges));
    return cx::SpinSystemSpec(std::move(g), std::move(inter), cx::Complex{beta, 0.0});
}

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 10;
    int m = argc > 2 ? std::atoi(argv[2]) : 8;

    cx::SpinSystemSpec sys = ring_system(n, 0.005);
    std::cout << "ring system: " << n << " vertices, truncation order " << m << "\n";
    std::cout << "workers: " << cx::worker_count() << "\n";

    cx::ExpansionResult serial, parallel;
    {
        cx::SubgraphPolymerUniverse u(sys.graph, [&sys](const cx::EdgeSubset& g) {
            return cx::partition_weight(sys, g);
        });
        double t = timed([&] { serial = cx::truncated_expansion_serial(u, m); });
        std::cout << "serial:   " << t << " s, " << serial.clusters_evaluated
                  << " clusters\n";
    }
    {
        cx::SubgraphPolymerUniverse u(sys.graph, [&sys](const cx::EdgeSubset& g) {
            return cx::partition_weight(sys, g);
        });
        double t = timed([&] { parallel = cx::truncated_expansion(u, m); });
        std::cout << "parallel: " << t << " s, " << parallel.clusters_evaluated
                  << " clusters\n";
    }

    double diff = std::abs(serial.log_value - parallel.log_value);
    std::cout << "log Z (serial)   = " << serial.log_value << "\n";
    std::cout << "log Z (parallel) = " << parallel.log_value << "\n";
    std::cout << "|difference|     = " << diff << "\n";
    return diff <= 1e-12 ? 0 : 1;
}

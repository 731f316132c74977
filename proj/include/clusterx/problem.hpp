// SPDX-License-Identifier: Apache-2.0
#ifndef CLUSTERX_PROBLEM_HPP
#define CLUSTERX_PROBLEM_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "clusterx/classical.hpp"
#include "clusterx/oracle.hpp"
#include "clusterx/quantum.hpp"

namespace clusterx {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

enum class ProblemKind { Amplitude, Expectation, Partition, Thermal, Ising, HardCore };

std::string problem_kind_name(ProblemKind k);

/// A fully validated problem instance; exactly one of the instance
/// members is engaged, per kind.
struct Problem {
    ProblemKind kind = ProblemKind::Amplitude;
    std::optional<CircuitSpec> circuit;        // amplitude, expectation
    std::optional<SpinSystemSpec> spin;        // partition, thermal
    std::optional<IsingSpec> ising;            // ising
    std::optional<HardCoreSpec> hardcore;      // hardcore
    std::optional<VertexObservables> observables; // expectation, thermal
};

/// Strict-schema parse (format_version 1); unknown fields are rejected.
/// Complex numbers are [re, im] pairs; operators are dense matrices
/// (row-major [re, im] arrays) or named constructs (pauli_rotation,
/// identity_plus).
Problem parse_problem(const json& j);
Problem load_problem(const std::string& path);

/// Serialization with dense operators; parse(serialize(p)) reproduces p
/// bit-exactly.
ojson problem_to_json(const Problem& p);

ojson condition_to_json(const ConditionReport& rep);

struct RunReport {
    std::string mode; // "check", "cluster" or "oracle"
    bool forced = false;
    std::optional<Complex> value;
    std::optional<int> truncation_order;
    std::optional<long> clusters_evaluated;
    ConditionReport condition;
    std::optional<Complex> unnormalized_value; // Ising: 2^{|G|} * value
    std::optional<Complex> oracle_value;       // --compare
    std::optional<double> relative_error;      // --compare
    double elapsed = 0.0;
};

ojson report_to_json(const RunReport& r);

} // namespace clusterx

#endif

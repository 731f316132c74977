// SPDX-License-Identifier: Apache-2.0
#ifndef CLUSTERX_ORACLE_HPP
#define CLUSTERX_ORACLE_HPP

#include "clusterx/classical.hpp"
#include "clusterx/quantum.hpp"

namespace clusterx {

/// <0...0| U_G |0...0> by full statevector simulation. Guard: total
/// dimension <= 2^20.
Complex exact_amplitude(const CircuitSpec& c);

/// <0|U_G^dag O_G U_G|0> with O_G = prod_v O_v. Guard as exact_amplitude.
Complex exact_expectation(const CircuitSpec& c, const VertexObservables& obs);

/// Normalized trace of e^{-beta H_G}. Guard: total dimension <= 2^12.
Complex exact_partition(const SpinSystemSpec& s);

/// Normalized trace of Psi_G e^{-beta H_G} (the thermal numerator).
Complex exact_thermal_numerator(const SpinSystemSpec& s, const VertexObservables& obs);

/// Thermal expectation value Z^Psi / Z.
Complex exact_thermal(const SpinSystemSpec& s, const VertexObservables& obs);

/// 2^{-|G|} sum_sigma prod_eps e^{-beta phi ss'}. Guard: |G| <= 20.
Complex exact_ising(const IsingSpec& s);

/// Independence polynomial I(G;x). Guard: |G| <= 24.
Complex exact_independence_poly(const HardCoreSpec& h);

} // namespace clusterx

#endif

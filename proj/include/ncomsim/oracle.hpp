// Copyright 2026 The ncomsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCOMSIM_ORACLE_HPP
#define NCOMSIM_ORACLE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncomsim/circuit.hpp"
#include "ncomsim/distribution.hpp"
#include "ncomsim/symplectic.hpp"

namespace ncomsim {

// Exact dense statevector simulation. Deliberately simple and independent
// of the phase-space machinery it is used to check; its exponential cost
// at large n is expected.

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default amplitude cap: 3^12.
constexpr uint64_t kDefaultAmpCap = 531441;

/// Dense state of n qudits of dimension d. Wire w is the base-d digit of
/// the amplitude index with stride d^w (little-endian, wire 0 least
/// significant).
struct StateVector {
    int d = 0;
    int n = 0;
    CVector amps;
};

StateVector basis_state(int d, int n, const std::vector<int>& digits);

/// Dense matrix for a named gate. Single-wire gates are d x d; two-wire
/// gates are d^2 x d^2 with composite index (first wire digit) * d +
/// (second wire digit). Known names: I, X, Z, F, P, M (requires param),
/// SUM, CZ, and the non-Clifford T (d = 3 only). Throws BackendRefusal
/// for unknown names, std::invalid_argument for bad parameters.
CMatrix gate_matrix(const std::string& name, std::optional<int> param, int d);

/// Applies a unitary on the wires named by `g`. Matrix arity must match.
void apply_gate(StateVector& psi, const GateApp& g, const CMatrix& u);

StateVector run_circuit(const Circuit& c, uint64_t amp_cap = kDefaultAmpCap);

/// Output distribution over measured-wire digit strings: |amplitude|^2
/// summed over unmeasured digits. Throws CapExceeded if d^n > amp_cap.
Distribution exact_quantum_distribution(const Circuit& c, uint64_t amp_cap = kDefaultAmpCap);

/// The d^2 phase-point operators A_u for odd prime d, indexed u = q*d+p.
/// Convention: T_(q,p) = w^(-qp/2) Z^p X^q with 1/2 the inverse of 2 mod
/// d, A_0 = (1/d) sum_u T_u, A_u = T_u A_0 T_u^dag. Construction
/// self-checks Tr A_u = 1, Hermiticity, Tr(A_u A_v) = d [u=v], and
/// sum_u A_u = d I within 1e-10. Results are cached per d.
const std::vector<CMatrix>& phase_point_operators(int d);

/// Wigner function of a k-wire density operator: W(u) = d^-k Tr(rho A_u)
/// with flat index sum_w (q_w*d+p_w) * d^(2w). rho must be trace 1 and
/// positive semidefinite within 1e-10.
std::vector<double> wigner_function(const CMatrix& rho, int d, int k);

/// sum_u |W(u)| - 1. Requires sum_u W(u) = 1 within 1e-8.
double negativity(const std::vector<double>& w);

/// Finds the affine map (S, a) with U A_u U^dag = A_(Su+a) for every
/// phase point u, by conjugating each A_u and matching the result against
/// the phase-point operator basis (Frobenius distance < 1e-8). Throws
/// BackendRefusal if any conjugate matches no A_v — the operational flag
/// that the gate has no deterministic phase-space action (not Clifford in
/// this representation).
AffineSymplectic derive_symplectic(const CMatrix& u, int d);

}  // namespace ncomsim

#endif

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

#ifndef NCOMSIM_WIGNER_HPP
#define NCOMSIM_WIGNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ncomsim/circuit.hpp"
#include "ncomsim/model.hpp"
#include "ncomsim/symplectic.hpp"

namespace ncomsim {

// Concrete ontological model for odd-prime-dimension stabilizer circuits:
// phase-space points (q, p) are the local ontic states, Clifford gates act
// as affine symplectic permutations, and basis preparations / computational
// measurements have nonnegative factorized representations. Pairwise
// nonlocal spaces are trivial (size 1) here; the generic engine still
// carries the slots.

bool is_odd_prime(int d);

/// Largest dimension the backend builds models for (two-wire permutation
/// tables have d^4 entries).
constexpr int kMaxWignerDim = 13;

/// Preparation table for basis state j: mu(q, p) = (1/d) [q = j], indexed
/// lambda = q*d + p. Nonnegative, sums to 1.
std::vector<double> prep_distribution(int j, int d);

/// Computational-basis indicator tables: xi(x | (q, p)) = [x = q], shape
/// d x d^2. Every column sums to 1.
std::vector<std::vector<double>> meas_indicator(int d);

/// Gate keys the backend can represent at dimension d:
/// I, X, Z, F, P, M[1..d-1] (single wire) and SUM, CZ (two wires).
GateSet wigner_gate_set(int d);

/// Phase-space action of a named gate, derived by oracle conjugation on
/// first use and cached per (gate key, d). param is required exactly for
/// M. Throws BackendRefusal for gates outside the set,
/// std::invalid_argument for bad parameters or dimensions.
AffineSymplectic symplectic_for_gate(const std::string& name, std::optional<int> param, int d);

/// Builds the discrete-Wigner ontological model for a stabilizer circuit:
/// local spaces of size d^2, trivial pair spaces, factorized preparations
/// and indicators, and a permutation per distinct gate key used by the
/// circuit. Refuses (BackendRefusal) circuits whose dimension is not an
/// odd prime <= 13 or that contain gates outside the Clifford set — that
/// refusal is the backend's contextuality boundary; it never approximates.
OntologicalModel build_ncom(const Circuit& c);

}  // namespace ncomsim

#endif

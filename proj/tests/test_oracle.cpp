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

#include "ncomsim/oracle.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "ncomsim/random_circuit.hpp"
#include "ncomsim/rng.hpp"

using namespace ncomsim;

namespace {

Circuit one_wire(int d, int basis, std::vector<GateApp> gates) {
    Circuit c;
    c.dim = d;
    c.n_wires = 1;
    c.preps = {{0, basis}};
    c.gates = std::move(gates);
    c.measured = {0};
    return c;
}

CMatrix pure_density(const CVector& amps) { return amps * amps.adjoint(); }

}  // namespace

TEST_CASE("single-wire gates act as defined on basis states") {
    StateVector psi = basis_state(3, 1, {1});
    apply_gate(psi, {"X", {0}, {}}, gate_matrix("X", {}, 3));
    CHECK(std::abs(psi.amps[2] - 1.0) < 1e-15);

    psi = basis_state(3, 1, {0});
    apply_gate(psi, {"F", {0}, {}}, gate_matrix("F", {}, 3));
    for (int j = 0; j < 3; ++j)
        CHECK(std::abs(psi.amps[j] - 1.0 / std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("SUM adds the first wire into the second") {
    StateVector psi = basis_state(3, 2, {1, 0});
    apply_gate(psi, {"SUM", {0, 1}, {}}, gate_matrix("SUM", {}, 3));
    // Wire 0 digit 1, wire 1 digit 1: index 1 + 1*3 = 4.
    CHECK(std::abs(psi.amps[4] - 1.0) < 1e-15);
}

TEST_CASE("gate matrices are unitary for d in {2,3,5,7}") {
    for (int d : {2, 3, 5, 7}) {
        for (const char* name : {"I", "X", "Z", "F", "P", "SUM", "CZ"}) {
            const CMatrix u = gate_matrix(name, {}, d);
            CHECK((u * u.adjoint() - CMatrix::Identity(u.rows(), u.rows())).norm() < 1e-12);
        }
        for (int a = 1; a < d; ++a) {
            const CMatrix u = gate_matrix("M", a, d);
            CHECK((u * u.adjoint() - CMatrix::Identity(d, d)).norm() < 1e-12);
        }
    }
}

TEST_CASE("gate_matrix rejects bad input") {
    CHECK_THROWS_AS(gate_matrix("NOPE", {}, 3), BackendRefusal);
    CHECK_THROWS_AS(gate_matrix("M", {}, 3), std::invalid_argument);    // missing param
    CHECK_THROWS_AS(gate_matrix("X", 1, 3), std::invalid_argument);    // spurious param
    CHECK_THROWS_AS(gate_matrix("M", 0, 3), std::invalid_argument);    // a = 0
    CHECK_THROWS_AS(gate_matrix("M", 3, 3), std::invalid_argument);    // a out of range
    CHECK_THROWS_AS(gate_matrix("M", 2, 4), std::invalid_argument);    // no inverse mod 4
    CHECK_THROWS_AS(gate_matrix("T", {}, 5), std::invalid_argument);   // T is d=3 only
}

TEST_CASE("exact distributions of pinned circuits") {
    const auto p1 = exact_quantum_distribution(one_wire(3, 1, {}));
    CHECK(p1.weights.size() == 1);
    CHECK(p1.at("1") == doctest::Approx(1.0));

    const auto pf = exact_quantum_distribution(one_wire(3, 0, {{"F", {0}, {}}}));
    for (const char* k : {"0", "1", "2"})
        CHECK(pf.at(k) == doctest::Approx(1.0 / 3).epsilon(1e-12));

    Circuit c;
    c.dim = 3;
    c.n_wires = 2;
    c.preps = {{0, 1}, {1, 0}};
    c.gates = {{"SUM", {0, 1}, {}}};
    c.measured = {0, 1};
    const auto ps = exact_quantum_distribution(c);
    CHECK(ps.weights.size() == 1);
    CHECK(ps.at("11") == doctest::Approx(1.0));
}

TEST_CASE("probabilities sum to 1 and unmeasured wires are traced out") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Circuit c = random_stabilizer_circuit(3, 3, 15, seed);
        c.measured = {2, 0};  // partial, reordered measurement
        const auto p = exact_quantum_distribution(c);
        CHECK(p.total() == doctest::Approx(1.0).epsilon(1e-10));
        for (const auto& [k, v] : p.weights) CHECK(k.size() == 2);
    }
}

TEST_CASE("amplitude cap raises CapExceeded") {
    Circuit c = random_stabilizer_circuit(13, 3, 1, 0);
    CHECK_THROWS_AS(exact_quantum_distribution(c), CapExceeded);  // 3^13 > 3^12
}

TEST_CASE("norm drifts below 1e-12 per gate over depth-100 circuits") {
    const Circuit c = random_stabilizer_circuit(3, 3, 100, 11);
    const StateVector psi = run_circuit(c);
    CHECK(std::abs(psi.amps.norm() - 1.0) < 100 * 1e-12);
}

TEST_CASE("inserting a gate then its inverse leaves the distribution fixed") {
    const Circuit base = random_stabilizer_circuit(2, 3, 8, 3);
    const auto want = exact_quantum_distribution(base);
    std::vector<GateApp> inserts = {{"I", {0}, {}},   {"X", {0}, {}},  {"Z", {1}, {}},
                                    {"F", {0}, {}},   {"P", {1}, {}},  {"M", {0}, 2},
                                    {"SUM", {0, 1}, {}}, {"CZ", {1, 0}, {}}};
    for (const auto& g : inserts) {
        StateVector psi = run_circuit(base);
        const CMatrix u = gate_matrix(g.name, g.param, 3);
        apply_gate(psi, g, u);
        apply_gate(psi, g, CMatrix(u.adjoint()));
        Distribution got;
        got.kind = WeightKind::Probabilities;
        for (int j = 0; j < 9; ++j) {
            const double p = std::norm(psi.amps[j]);
            if (p > 1e-14)
                got.weights[{digit_char(j % 3), digit_char(j / 3)}] += p;
        }
        for (const auto& [k, v] : want.weights) CHECK(got.at(k) == doctest::Approx(v));
    }
}

TEST_CASE("phase-point operators satisfy the defining identities") {
    // The constructor self-checks at 1e-10; re-assert the pinned examples.
    const auto& ops = phase_point_operators(3);
    REQUIRE(ops.size() == 9);
    CHECK(std::abs(ops[0].trace() - 1.0) < 1e-12);
    CHECK(std::abs((ops[0 * 3 + 0] * ops[1 * 3 + 2]).trace()) < 1e-12);
    CMatrix sum = CMatrix::Zero(3, 3);
    for (const auto& a : ops) sum += a;
    CHECK((sum - 3.0 * CMatrix::Identity(3, 3)).norm() < 1e-12);

    // A_0 is the parity operator sum_m |-m><m|.
    CMatrix parity = CMatrix::Zero(3, 3);
    for (int m = 0; m < 3; ++m) parity((3 - m) % 3, m) = 1.0;
    CHECK((ops[0] - parity).norm() < 1e-12);

    CHECK_THROWS_AS(phase_point_operators(4), std::invalid_argument);
}

TEST_CASE("wigner function of basis and mixed states") {
    CMatrix rho = CMatrix::Zero(3, 3);
    rho(0, 0) = 1.0;
    const auto w = wigner_function(rho, 3, 1);
    REQUIRE(w.size() == 9);
    for (int q = 0; q < 3; ++q)
        for (int p = 0; p < 3; ++p)
            CHECK(w[q * 3 + p] == doctest::Approx(q == 0 ? 1.0 / 3 : 0.0).epsilon(1e-12));

    const CMatrix mixed = CMatrix::Identity(3, 3) / 3.0;
    const auto wm = wigner_function(mixed, 3, 1);
    for (double v : wm) CHECK(v == doctest::Approx(1.0 / 9).epsilon(1e-12));
    CHECK(negativity(wm) == doctest::Approx(0.0));
}

TEST_CASE("wigner function factorizes over wires") {
    const StateVector psi = basis_state(3, 2, {1, 2});
    const auto w = wigner_function(pure_density(psi.amps), 3, 2);
    REQUIRE(w.size() == 81);
    // Flat index: (wire 1 point) * 9 + (wire 0 point), point = q*3 + p.
    double total = 0;
    for (int u1 = 0; u1 < 9; ++u1)
        for (int u0 = 0; u0 < 9; ++u0) {
            const double expect = (u0 / 3 == 1 && u1 / 3 == 2) ? 1.0 / 9 : 0.0;
            CHECK(w[u1 * 9 + u0] == doctest::Approx(expect).epsilon(1e-12));
            total += w[u1 * 9 + u0];
        }
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("wigner_function validates its input") {
    CHECK_THROWS_AS(wigner_function(CMatrix::Identity(3, 3), 3, 1), std::invalid_argument);
    CMatrix not_psd = CMatrix::Zero(3, 3);
    not_psd(0, 0) = 2.0;
    not_psd(1, 1) = -1.0;
    CHECK_THROWS_AS(wigner_function(not_psd, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(wigner_function(CMatrix::Identity(9, 9) / 9.0, 3, 1),
                    std::invalid_argument);
}

TEST_CASE("strange state negativity matches the brute-forced regression value") {
    // (|1> - |2>)/sqrt(2) at d = 3: the most negative qutrit state. The
    // table below was measured by brute force over the 9 phase points and
    // is pinned as a regression constant: W(0,0) = -1/3, all other points
    // +1/6, negativity 2/3.
    CVector amps = CVector::Zero(3);
    amps[1] = 1.0 / std::sqrt(2.0);
    amps[2] = -1.0 / std::sqrt(2.0);
    const auto w = wigner_function(pure_density(amps), 3, 1);
    CHECK(w[0] == doctest::Approx(-1.0 / 3).epsilon(1e-12));
    double min_w = 1;
    for (size_t u = 1; u < 9; ++u) {
        CHECK(w[u] == doctest::Approx(1.0 / 6).epsilon(1e-12));
        min_w = std::min(min_w, w[u]);
    }
    CHECK(w[0] < 0.0);
    CHECK(negativity(w) == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("stabilizer states have nonnegative wigner functions") {
    for (int d : {3, 5}) {
        for (uint64_t seed = 0; seed < 8; ++seed) {
            const Circuit c = random_stabilizer_circuit(2, d, 12, seed * 7 + d);
            const StateVector psi = run_circuit(c);
            const auto w = wigner_function(pure_density(psi.amps), d, 2);
            double min_w = 1, total = 0;
            for (double v : w) {
                min_w = std::min(min_w, v);
                total += v;
            }
            CHECK(min_w >= -1e-10);
            CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("negativity rejects unnormalized tables") {
    CHECK_THROWS_AS(negativity(std::vector<double>{0.5, 0.2}), std::invalid_argument);
    CHECK(negativity(std::vector<double>{0.5, 0.5}) == doctest::Approx(0.0));
}

TEST_CASE("derive_symplectic recovers the pinned X and F actions") {
    const auto x = derive_symplectic(gate_matrix("X", {}, 3), 3);
    CHECK(x.arity == 1);
    CHECK(x.S[0][0] == 1);
    CHECK(x.S[0][1] == 0);
    CHECK(x.S[1][0] == 0);
    CHECK(x.S[1][1] == 1);
    CHECK(x.a[0] == 1);
    CHECK(x.a[1] == 0);

    // F maps (q, p) to (-p, q).
    const auto f = derive_symplectic(gate_matrix("F", {}, 3), 3);
    CHECK(f.S[0][0] == 0);
    CHECK(f.S[0][1] == 2);
    CHECK(f.S[1][0] == 1);
    CHECK(f.S[1][1] == 0);
    CHECK(f.a == std::array<int, 4>{0, 0, 0, 0});

    const auto id = derive_symplectic(gate_matrix("I", {}, 3), 3);
    CHECK(id == AffineSymplectic::identity(3, 1));
}

TEST_CASE("derive_symplectic refuses non-Clifford unitaries") {
    CHECK_THROWS_AS(derive_symplectic(gate_matrix("T", {}, 3), 3), BackendRefusal);

    // An arbitrary diagonal with a fractional power of omega; every
    // integer-power diagonal is Clifford at d = 3, this one is not.
    CMatrix u = CMatrix::Zero(3, 3);
    u(0, 0) = 1.0;
    u(1, 1) = std::polar(1.0, 2.0 * 3.14159265358979323846 / 9.0);
    u(2, 2) = 1.0;
    CHECK_THROWS_AS(derive_symplectic(u, 3), BackendRefusal);

    CHECK_THROWS_AS(derive_symplectic(CMatrix::Identity(3, 3) * 2.0, 3),
                    std::invalid_argument);  // not unitary
}

TEST_CASE("derived map of a product is the composition of derived maps") {
    const char* names[] = {"X", "Z", "F", "P"};
    for (const char* n1 : names) {
        for (const char* n2 : names) {
            const CMatrix u1 = gate_matrix(n1, {}, 3);
            const CMatrix u2 = gate_matrix(n2, {}, 3);
            const auto lhs = derive_symplectic(u1 * u2, 3);
            const auto rhs = compose(derive_symplectic(u1, 3), derive_symplectic(u2, 3));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("covariance holds entrywise for every gate in the set") {
    for (int d : {3, 5}) {
        const auto& ops = phase_point_operators(d);
        std::vector<std::pair<std::string, std::optional<int>>> gates = {
            {"I", {}}, {"X", {}}, {"Z", {}}, {"F", {}}, {"P", {}}, {"M", 2}};
        for (const auto& [name, param] : gates) {
            const CMatrix u = gate_matrix(name, param, d);
            const auto t = derive_symplectic(u, d);
            CHECK(t.is_symplectic());
            // det S = 1 mod d for the 2x2 block.
            const int det = imod(t.S[0][0] * t.S[1][1] - t.S[0][1] * t.S[1][0], d);
            CHECK(det == 1);
            for (int q = 0; q < d; ++q)
                for (int p = 0; p < d; ++p) {
                    const auto v = t.apply({q, p, 0, 0});
                    const CMatrix lhs = u * ops[q * d + p] * u.adjoint();
                    CHECK((lhs - ops[v[0] * d + v[1]]).norm() < 1e-10);
                }
        }
    }
}

TEST_CASE("two-wire derivations match the pinned SUM and CZ actions") {
    // Coordinates (q1, p1, q2, p2), first-listed wire first. Both tables
    // were brute-forced by exhaustive conjugation and frozen.
    const auto s = derive_symplectic(gate_matrix("SUM", {}, 3), 3);
    CHECK(s.arity == 2);
    const std::array<std::array<int, 4>, 4> sum_expect{
        {{1, 0, 0, 0}, {0, 1, 0, 2}, {1, 0, 1, 0}, {0, 0, 0, 1}}};
    CHECK(s.S == sum_expect);
    CHECK(s.a == std::array<int, 4>{0, 0, 0, 0});

    const auto cz = derive_symplectic(gate_matrix("CZ", {}, 3), 3);
    const std::array<std::array<int, 4>, 4> cz_expect{
        {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}}};
    CHECK(cz.S == cz_expect);
    CHECK(cz.a == std::array<int, 4>{0, 0, 0, 0});
}

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

#include "ncomsim/wigner.hpp"

#include <map>
#include <mutex>
#include <set>

#include "ncomsim/oracle.hpp"

namespace ncomsim {

bool is_odd_prime(int d) {
    if (d < 3 || d % 2 == 0) return false;
    for (int f = 3; f * f <= d; f += 2)
        if (d % f == 0) return false;
    return true;
}

std::vector<double> prep_distribution(int j, int d) {
    if (j < 0 || j >= d) throw std::invalid_argument("prep_distribution: label out of range");
    std::vector<double> mu(static_cast<size_t>(d) * d, 0.0);
    for (int p = 0; p < d; ++p) mu[static_cast<size_t>(j) * d + p] = 1.0 / d;
    return mu;
}

std::vector<std::vector<double>> meas_indicator(int d) {
    std::vector<std::vector<double>> xi(d, std::vector<double>(static_cast<size_t>(d) * d, 0.0));
    for (int q = 0; q < d; ++q)
        for (int p = 0; p < d; ++p) xi[q][static_cast<size_t>(q) * d + p] = 1.0;
    return xi;
}

GateSet wigner_gate_set(int d) {
    GateSet s;
    for (const char* name : {"I", "X", "Z", "F", "P"}) s[name] = {1};
    for (int a = 1; a < d; ++a) s["M[" + std::to_string(a) + "]"] = {1};
    s["SUM"] = {2};
    s["CZ"] = {2};
    return s;
}

namespace {

void require_wigner_dim(int d) {
    if (!is_odd_prime(d) || d > kMaxWignerDim)
        throw BackendRefusal("dimension " + std::to_string(d) +
                             " is outside the backend's domain (odd primes up to " +
                             std::to_string(kMaxWignerDim) + ")");
}

std::mutex g_sym_mutex;
std::map<std::pair<std::string, int>, AffineSymplectic> g_sym_cache;

}  // namespace

AffineSymplectic symplectic_for_gate(const std::string& name, std::optional<int> param, int d) {
    require_wigner_dim(d);
    GateApp g{name, {}, param};
    const std::string key = gate_key(g);
    {
        std::lock_guard<std::mutex> lock(g_sym_mutex);
        auto it = g_sym_cache.find({key, d});
        if (it != g_sym_cache.end()) return it->second;
    }
    // Derivation goes through the dense oracle: build the unitary, then
    // conjugate phase-point operators. gate_matrix rejects unknown names;
    // derive_symplectic rejects anything without an affine action, which
    // is where non-Clifford gates (e.g. T) are turned away.
    const AffineSymplectic t = derive_symplectic(gate_matrix(name, param, d), d);
    std::lock_guard<std::mutex> lock(g_sym_mutex);
    g_sym_cache.emplace(std::make_pair(key, d), t);
    return t;
}

namespace {

std::vector<uint32_t> permutation_from(const AffineSymplectic& t) {
    const int d = t.d;
    if (t.arity == 1) {
        std::vector<uint32_t> perm(static_cast<size_t>(d) * d);
        for (int q = 0; q < d; ++q)
            for (int p = 0; p < d; ++p) {
                const auto v = t.apply({q, p, 0, 0});
                perm[static_cast<size_t>(q) * d + p] = static_cast<uint32_t>(v[0] * d + v[1]);
            }
        return perm;
    }
    // Joint index lambda_first * d^2 + lambda_second (pair space is
    // trivial here), lambda = q*d + p.
    const size_t dd = static_cast<size_t>(d) * d;
    std::vector<uint32_t> perm(dd * dd);
    for (int q1 = 0; q1 < d; ++q1)
        for (int p1 = 0; p1 < d; ++p1)
            for (int q2 = 0; q2 < d; ++q2)
                for (int p2 = 0; p2 < d; ++p2) {
                    const auto v = t.apply({q1, p1, q2, p2});
                    const size_t from = (static_cast<size_t>(q1) * d + p1) * dd +
                                        (static_cast<size_t>(q2) * d + p2);
                    perm[from] = static_cast<uint32_t>((v[0] * d + v[1]) * static_cast<int>(dd) +
                                                       (v[2] * d + v[3]));
                }
    return perm;
}

}  // namespace

OntologicalModel build_ncom(const Circuit& c) {
    require_wigner_dim(c.dim);
    OntologicalModel m;
    m.n_wires = c.n_wires;
    m.d = c.dim;
    m.local_size = c.dim * c.dim;
    m.pair_size = 1;
    for (int j = 0; j < c.dim; ++j) m.preparations.push_back(prep_distribution(j, c.dim));
    m.indicator = meas_indicator(c.dim);
    std::set<std::string> done;
    for (const auto& g : c.gates) {
        const std::string key = gate_key(g);
        if (!done.insert(key).second) continue;
        const AffineSymplectic t = symplectic_for_gate(g.name, g.param, c.dim);
        if (static_cast<size_t>(t.arity) != g.wires.size())
            throw BackendRefusal("gate " + key + " applied to " +
                                 std::to_string(g.wires.size()) + " wire(s), expects " +
                                 std::to_string(t.arity));
        auto perm = permutation_from(t);
        if (t.arity == 1)
            m.gates1[key] = std::move(perm);
        else
            m.gates2[key] = std::move(perm);
    }
    return m;
}

}  // namespace ncomsim

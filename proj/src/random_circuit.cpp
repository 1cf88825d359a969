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

#include "ncomsim/random_circuit.hpp"

#include <numeric>
#include <stdexcept>

#include "ncomsim/rng.hpp"

namespace ncomsim {

namespace {

struct GateChoice {
    const char* name;
    int arity;
    bool has_param;
};

constexpr GateChoice kChoices[] = {
    {"X", 1, false}, {"Z", 1, false}, {"F", 1, false},   {"P", 1, false},
    {"M", 1, true},  {"SUM", 2, false}, {"CZ", 2, false},
};

Circuit skeleton(int n_wires, int d, SplitMix64& rng) {
    if (n_wires < 1 || d < 2) throw std::invalid_argument("need n_wires >= 1, d >= 2");
    Circuit c;
    c.dim = d;
    c.n_wires = n_wires;
    for (int w = 0; w < n_wires; ++w)
        c.preps.emplace_back(w, static_cast<int>(rng.next_below(d)));
    c.measured.resize(n_wires);
    std::iota(c.measured.begin(), c.measured.end(), 0);
    return c;
}

GateApp make_gate(const GateChoice& g, int n_wires, int d, SplitMix64& rng) {
    GateApp app;
    app.name = g.name;
    if (g.has_param) app.param = 1 + static_cast<int>(rng.next_below(d - 1));
    const int w1 = static_cast<int>(rng.next_below(n_wires));
    app.wires.push_back(w1);
    if (g.arity == 2) {
        int w2 = static_cast<int>(rng.next_below(n_wires - 1));
        if (w2 >= w1) ++w2;
        app.wires.push_back(w2);
    }
    return app;
}

}  // namespace

Circuit random_stabilizer_circuit(int n_wires, int d, int n_gates, uint64_t seed) {
    SplitMix64 rng(mix64(seed));
    Circuit c = skeleton(n_wires, d, rng);
    c.name = "random_stabilizer_n" + std::to_string(n_wires) + "_s" + std::to_string(seed);
    const int n_choices = n_wires >= 2 ? 7 : 5;  // drop two-wire gates on one wire
    for (int i = 0; i < n_gates; ++i)
        c.gates.push_back(make_gate(kChoices[rng.next_below(n_choices)], n_wires, d, rng));
    return c;
}

Circuit random_layered_circuit(int n_wires, int d, int depth, uint64_t seed) {
    SplitMix64 rng(mix64(seed));
    Circuit c = skeleton(n_wires, d, rng);
    c.name = "random_layered_n" + std::to_string(n_wires) + "_s" + std::to_string(seed);
    std::vector<int> order(n_wires);
    std::iota(order.begin(), order.end(), 0);
    for (int layer = 0; layer < depth; ++layer) {
        for (int i = n_wires - 1; i > 0; --i)
            std::swap(order[i], order[static_cast<int>(rng.next_below(i + 1))]);
        // Pair up roughly half the wires; the rest get single-wire gates.
        const int n_paired = n_wires / 2 - (n_wires / 2) % 2;
        for (int i = 0; i + 1 < n_paired; i += 2) {
            GateApp g;
            g.name = rng.next_below(2) == 0 ? "SUM" : "CZ";
            g.wires = {order[i], order[i + 1]};
            c.gates.push_back(std::move(g));
        }
        for (int i = n_paired; i < n_wires; ++i) {
            const GateChoice& choice = kChoices[rng.next_below(5)];  // single-wire only
            GateApp g;
            g.name = choice.name;
            if (choice.has_param) g.param = 1 + static_cast<int>(rng.next_below(d - 1));
            g.wires = {order[i]};
            c.gates.push_back(std::move(g));
        }
    }
    return c;
}

}  // namespace ncomsim

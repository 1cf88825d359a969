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

#include "ncomsim/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace ncomsim {

std::vector<Diagnostic> check_compatible(const OntologicalModel& m, const Circuit& c) {
    std::vector<Diagnostic> diags;
    if (m.d != c.dim)
        diags.push_back({"d", "model d = " + std::to_string(m.d) + ", circuit dim = " +
                                  std::to_string(c.dim)});
    if (m.n_wires != c.n_wires)
        diags.push_back({"n_wires", "model has " + std::to_string(m.n_wires) +
                                        " wires, circuit has " + std::to_string(c.n_wires)});
    std::vector<int> prep_count(std::max(c.n_wires, 0), 0);
    for (const auto& [w, j] : c.preps)
        if (w >= 0 && w < c.n_wires) ++prep_count[w];
    for (int w = 0; w < c.n_wires; ++w)
        if (prep_count[w] != 1)
            diags.push_back({"preps", "wire " + std::to_string(w) + " has " +
                                          std::to_string(prep_count[w]) + " preparations"});
    auto gate_diags = validate_circuit(c, model_gate_set(m));
    diags.insert(diags.end(), gate_diags.begin(), gate_diags.end());
    return diags;
}

namespace {

/// Circuit resolved against a model: per-wire preparation labels and the
/// gate tables in schedule order. Built once per run, shared by all shots.
struct Compiled {
    const OntologicalModel* m = nullptr;
    const Circuit* c = nullptr;
    std::vector<int> prep_label;
    struct Op {
        const std::vector<uint32_t>* table;
        int w1;
        int w2;  // -1 for single-wire ops
    };
    std::vector<Op> ops;
};

Compiled compile(const OntologicalModel& m, const Circuit& c, const Schedule& s) {
    auto diags = check_compatible(m, c);
    if (!diags.empty())
        throw ModelInvalid("model is incompatible with the circuit", std::move(diags));
    Compiled cc;
    cc.m = &m;
    cc.c = &c;
    cc.prep_label.assign(c.n_wires, 0);
    for (const auto& [w, j] : c.preps) cc.prep_label[w] = j;
    for (const auto& step : s.steps) {
        for (size_t gi : step) {
            const GateApp& g = c.gates[gi];
            const std::string key = gate_key(g);
            if (g.wires.size() == 1)
                cc.ops.push_back({&m.gates1.at(key), g.wires[0], -1});
            else
                cc.ops.push_back({&m.gates2.at(key), g.wires[0], g.wires[1]});
        }
    }
    return cc;
}

int draw(const std::vector<double>& p, SplitMix64& rng) {
    const double r = rng.next_double();
    double acc = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        if (r < acc) return static_cast<int>(i);
    }
    // r fell into rounding slack; return the last carried index.
    for (size_t i = p.size(); i-- > 0;)
        if (p[i] > 0) return static_cast<int>(i);
    return 0;
}

int draw_outcome(const std::vector<std::vector<double>>& indicator, uint32_t lambda,
                 SplitMix64& rng) {
    const double r = rng.next_double();
    double acc = 0;
    const int d = static_cast<int>(indicator.size());
    for (int x = 0; x < d; ++x) {
        acc += indicator[x][lambda];
        if (r < acc) return x;
    }
    for (int x = d; x-- > 0;)
        if (indicator[x][lambda] > 0) return x;
    return 0;
}

// Draw order is part of the output contract (byte-identical TSV across
// runs): preparations in wire order, then measured wires in measurement
// order. Gates consume no randomness.
std::string run_one(const Compiled& cc, SplitMix64& rng, OnticState& st) {
    const OntologicalModel& m = *cc.m;
    const Circuit& c = *cc.c;
    st.wire.assign(c.n_wires, 0);
    st.pair.clear();
    for (int w = 0; w < c.n_wires; ++w)
        st.wire[w] = static_cast<uint32_t>(draw(m.preparations[cc.prep_label[w]], rng));
    const uint64_t P = static_cast<uint64_t>(m.pair_size);
    const uint64_t LP = static_cast<uint64_t>(m.local_size) * P;
    for (const auto& op : cc.ops) {
        if (op.w2 < 0) {
            st.wire[op.w1] = (*op.table)[st.wire[op.w1]];
            continue;
        }
        auto slot = st.pair.try_emplace(OnticState::pair_key(op.w1, op.w2), 0).first;
        const uint64_t joint =
            st.wire[op.w1] * LP + st.wire[op.w2] * P + slot->second;
        const uint32_t v = (*op.table)[joint];
        st.wire[op.w1] = static_cast<uint32_t>(v / LP);
        const uint64_t rem = v % LP;
        st.wire[op.w2] = static_cast<uint32_t>(rem / P);
        slot->second = static_cast<uint32_t>(rem % P);
    }
    std::string out(c.measured.size(), '0');
    for (size_t i = 0; i < c.measured.size(); ++i)
        out[i] = digit_char(draw_outcome(m.indicator, st.wire[c.measured[i]], rng));
    return out;
}

int resolve_threads(int threads, uint64_t shots) {
    int n = threads;
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n < 1) n = 1;
        if (const char* env = std::getenv("NCOMSIM_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v >= 1) n = std::min<long>(n, v);
        }
    }
    return static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(n), shots));
}

}  // namespace

std::string sample_run(const OntologicalModel& m, const Circuit& c, const Schedule& s,
                       SplitMix64& rng) {
    const Compiled cc = compile(m, c, s);
    OnticState st;
    return run_one(cc, rng, st);
}

Distribution sample_many(const OntologicalModel& m, const Circuit& c, const Schedule& s,
                         uint64_t seed, uint64_t shots, int threads, SampleStats* stats) {
    if (shots < 1) throw std::invalid_argument("sample_many: shots must be >= 1");
    const Compiled cc = compile(m, c, s);
    const int n_threads = resolve_threads(threads, shots);

    struct Partial {
        std::map<std::string, double> counts;
        size_t max_pairs = 0;
    };
    std::vector<Partial> parts(n_threads);
    auto worker = [&](int t, uint64_t lo, uint64_t hi) {
        OnticState st;
        Partial& p = parts[t];
        for (uint64_t k = lo; k < hi; ++k) {
            SplitMix64 rng = shot_stream(seed, k);
            p.counts[run_one(cc, rng, st)] += 1.0;
            p.max_pairs = std::max(p.max_pairs, st.pair.size());
        }
    };
    if (n_threads == 1) {
        worker(0, 0, shots);
    } else {
        std::vector<std::thread> pool;
        const uint64_t chunk = (shots + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(worker, t, std::min<uint64_t>(t * chunk, shots),
                              std::min<uint64_t>((t + 1) * chunk, shots));
        for (auto& th : pool) th.join();
    }

    Distribution out;
    out.kind = WeightKind::Counts;
    size_t max_pairs = 0;
    for (const auto& p : parts) {
        for (const auto& [k, v] : p.counts) out.weights[k] += v;
        max_pairs = std::max(max_pairs, p.max_pairs);
    }
    if (stats) stats->max_tracked_pairs = max_pairs;
    return out;
}

Distribution exact_ontological_distribution(const OntologicalModel& m, const Circuit& c,
                                            const Schedule& s, uint64_t support_cap) {
    const Compiled cc = compile(m, c, s);

    // Tuple layout: wire coordinates, then one slot per wire pair touched
    // by a two-wire gate (first-touch order).
    std::map<std::pair<int, int>, size_t> pair_slot;
    for (const auto& g : c.gates) {
        if (g.wires.size() != 2) continue;
        const auto key = std::minmax(g.wires[0], g.wires[1]);
        pair_slot.try_emplace(key, static_cast<size_t>(c.n_wires) + pair_slot.size());
    }
    const size_t tuple_len = static_cast<size_t>(c.n_wires) + pair_slot.size();

    uint64_t predicted = 1;
    for (int w = 0; w < c.n_wires; ++w) {
        uint64_t nnz = 0;
        for (double p : m.preparations[cc.prep_label[w]])
            if (p > 0) ++nnz;
        if (nnz == 0 || predicted > support_cap / nnz)
            throw CapExceeded("initial ontic support exceeds the cap of " +
                              std::to_string(support_cap) + " points");
        predicted *= nnz;
    }

    using Support = std::map<std::vector<uint32_t>, double>;
    Support support;
    support.emplace(std::vector<uint32_t>(tuple_len, 0), 1.0);
    for (int w = 0; w < c.n_wires; ++w) {
        Support next;
        const auto& mu = m.preparations[cc.prep_label[w]];
        for (const auto& [tuple, weight] : support) {
            for (size_t l = 0; l < mu.size(); ++l) {
                if (mu[l] <= 0) continue;
                std::vector<uint32_t> t = tuple;
                t[w] = static_cast<uint32_t>(l);
                next.emplace(std::move(t), weight * mu[l]);
            }
        }
        support = std::move(next);
    }
    if (support.size() != predicted)
        throw std::logic_error("exact enumerator: initial support size mismatch");

    const uint64_t P = static_cast<uint64_t>(m.pair_size);
    const uint64_t LP = static_cast<uint64_t>(m.local_size) * P;
    for (const auto& step : s.steps) {
        for (size_t gi : step) {
            const GateApp& g = c.gates[gi];
            const auto* table = g.wires.size() == 1 ? &m.gates1.at(gate_key(g))
                                                    : &m.gates2.at(gate_key(g));
            Support next;
            for (const auto& [tuple, weight] : support) {
                std::vector<uint32_t> t = tuple;
                if (g.wires.size() == 1) {
                    t[g.wires[0]] = (*table)[t[g.wires[0]]];
                } else {
                    const size_t slot = pair_slot.at(std::minmax(g.wires[0], g.wires[1]));
                    const uint64_t joint = t[g.wires[0]] * LP + t[g.wires[1]] * P + t[slot];
                    const uint32_t v = (*table)[joint];
                    t[g.wires[0]] = static_cast<uint32_t>(v / LP);
                    const uint64_t rem = v % LP;
                    t[g.wires[1]] = static_cast<uint32_t>(rem / P);
                    t[slot] = static_cast<uint32_t>(rem % P);
                }
                if (!next.emplace(std::move(t), weight).second)
                    throw std::logic_error("exact enumerator: bijection produced a collision");
            }
            // Bijective dynamics cannot change the support size.
            if (next.size() != support.size())
                throw std::logic_error("exact enumerator: support size changed");
            support = std::move(next);
        }
    }

    Distribution out;
    out.kind = WeightKind::Probabilities;
    std::string key(c.measured.size(), '0');
    const auto& ind = m.indicator;
    // Depth-first product over measured wires, skipping zero branches;
    // deterministic indicators contribute exactly one path per point.
    auto contract = [&](const std::vector<uint32_t>& tuple, double weight) {
        auto rec = [&](auto&& self, size_t i, double acc) -> void {
            if (acc == 0) return;
            if (i == c.measured.size()) {
                out.weights[key] += acc;
                return;
            }
            const uint32_t lam = tuple[c.measured[i]];
            for (int x = 0; x < m.d; ++x) {
                const double p = ind[x][lam];
                if (p <= 0) continue;
                key[i] = digit_char(x);
                self(self, i + 1, acc * p);
            }
        };
        rec(rec, 0, weight);
    };
    for (const auto& [tuple, weight] : support) contract(tuple, weight);
    return out;
}

}  // namespace ncomsim

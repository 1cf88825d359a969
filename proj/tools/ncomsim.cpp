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

// ncomsim: weak simulation of circuits that admit a noncontextual
// ontological model, with an exact dense oracle for cross-checking.
//
// Exit codes (stable; scripts rely on them):
//   0  success
//   1  file or parse error
//   2  backend refusal (e.g. a gate with no deterministic phase-space
//      action under the wigner backend)
//   3  model validation failure
//   4  resource cap exceeded
//   5  verify found a mismatch
//   64 usage error
//
// stdout carries data (TSV), stderr carries diagnostics.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncomsim/circuit.hpp"
#include "ncomsim/distribution.hpp"
#include "ncomsim/engine.hpp"
#include "ncomsim/model.hpp"
#include "ncomsim/oracle.hpp"
#include "ncomsim/random_circuit.hpp"
#include "ncomsim/rng.hpp"
#include "ncomsim/wigner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitRefusal = 2;
constexpr int kExitModelInvalid = 3;
constexpr int kExitCapExceeded = 4;
constexpr int kExitVerifyMismatch = 5;
constexpr int kExitUsage = 64;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<ncomsim::Circuit> load_circuit_or_report(const std::string& path) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "ncomsim: cannot read " << path << "\n";
        return std::nullopt;
    }
    auto parsed = ncomsim::parse_circuit(*text);
    if (!parsed.ok()) {
        std::cerr << "ncomsim: " << path << " has errors:\n"
                  << ncomsim::format_diagnostics(parsed.diagnostics);
        return std::nullopt;
    }
    return parsed.circuit;
}

bool write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << data;
    if (!out) {
        std::cerr << "ncomsim: cannot write " << path << "\n";
        return false;
    }
    return true;
}

/// Sampler acceptance threshold at `shots` shots over a support of size
/// `support`: the default 0.01 floor, or five-ish standard deviations of
/// the multinomial TV fluctuation when the support is large enough to
/// push the expected TV above the floor.
double adaptive_threshold(uint64_t shots, size_t support) {
    const double n = static_cast<double>(shots);
    const double k = static_cast<double>(support);
    return std::max(0.01, 0.5 * std::sqrt(k / n) + 2.5 / std::sqrt(n));
}

struct CommonOpts {
    std::string circuit_path;
    std::string model_path;
    std::string backend = "wigner";
    std::string output_path;
    uint64_t shots = 10000;
    uint64_t seed = 0;
    int threads = 0;
    uint64_t support_cap = ncomsim::kDefaultSupportCap;
    uint64_t amp_cap = ncomsim::kDefaultAmpCap;
    bool verbose = false;
};

std::optional<ncomsim::OntologicalModel> resolve_model(const CommonOpts& opt,
                                                       const ncomsim::Circuit& c, int& exit_code) {
    if (!opt.model_path.empty()) {
        auto text = read_file(opt.model_path);
        if (!text) {
            std::cerr << "ncomsim: cannot read " << opt.model_path << "\n";
            exit_code = kExitParse;
            return std::nullopt;
        }
        auto loaded = ncomsim::load_model(*text);
        if (!loaded.ok()) {
            std::cerr << "ncomsim: model " << opt.model_path << " is invalid:\n"
                      << ncomsim::format_diagnostics(loaded.diagnostics);
            exit_code = kExitModelInvalid;
            return std::nullopt;
        }
        return loaded.model;
    }
    return ncomsim::build_ncom(c);  // throws BackendRefusal outside its domain
}

int cmd_simulate(const CommonOpts& opt) {
    auto circuit = load_circuit_or_report(opt.circuit_path);
    if (!circuit) return kExitParse;
    const auto t0 = std::chrono::steady_clock::now();
    ncomsim::Distribution counts;
    if (opt.backend == "statevector") {
        const auto exact = ncomsim::exact_quantum_distribution(*circuit, opt.amp_cap);
        counts.kind = ncomsim::WeightKind::Counts;
        for (uint64_t k = 0; k < opt.shots; ++k) {
            auto rng = ncomsim::shot_stream(opt.seed, k);
            const double r = rng.next_double();
            double acc = 0;
            const std::string* hit = &exact.weights.rbegin()->first;
            for (const auto& [key, p] : exact.weights) {
                acc += p;
                if (r < acc) {
                    hit = &key;
                    break;
                }
            }
            counts.weights[*hit] += 1.0;
        }
    } else {
        int code = kExitOk;
        auto model = resolve_model(opt, *circuit, code);
        if (!model) return code;
        const auto sched = ncomsim::schedule(*circuit);
        counts = ncomsim::sample_many(*model, *circuit, sched, opt.seed, opt.shots, opt.threads);
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (!write_output(opt.output_path, ncomsim::distribution_tsv(counts))) return kExitParse;
    std::cerr << "shots=" << opt.shots << " seed=" << opt.seed << " wall_ms=" << ms << "\n";
    return kExitOk;
}

int cmd_verify(const CommonOpts& opt, double threshold) {
    auto circuit = load_circuit_or_report(opt.circuit_path);
    if (!circuit) return kExitParse;
    int code = kExitOk;
    auto model = resolve_model(opt, *circuit, code);
    if (!model) return code;
    const auto sched = ncomsim::schedule(*circuit);

    const auto oracle = ncomsim::exact_quantum_distribution(*circuit, opt.amp_cap);
    const auto exact = ncomsim::exact_ontological_distribution(*model, *circuit, sched,
                                                               opt.support_cap);
    const auto counts =
        ncomsim::sample_many(*model, *circuit, sched, opt.seed, opt.shots, opt.threads);
    const auto sampled = ncomsim::normalize(counts);

    double max_abs = 0;
    for (const auto& [key, p] : oracle.weights)
        max_abs = std::max(max_abs, std::abs(p - exact.at(key)));
    for (const auto& [key, p] : exact.weights)
        max_abs = std::max(max_abs, std::abs(p - oracle.at(key)));
    const double tv_sampler = ncomsim::tv_distance(sampled, oracle);
    const double tv_exact = ncomsim::tv_distance(exact, oracle);
    const double tv_sampler_exact = ncomsim::tv_distance(sampled, exact);
    if (threshold <= 0) threshold = adaptive_threshold(opt.shots, oracle.weights.size());

    std::set<std::string> keys;
    for (const auto& [key, p] : counts.weights) keys.insert(key);
    for (const auto& [key, p] : exact.weights) keys.insert(key);
    for (const auto& [key, p] : oracle.weights) keys.insert(key);
    std::ostringstream report;
    report << "outcome\tcount\tfrequency\tenumerator\toracle\n";
    char buf[128];
    const double total = counts.total();
    for (const auto& key : keys) {
        std::snprintf(buf, sizeof buf, "%.0f\t%.9f\t%.9f\t%.9f", counts.at(key),
                      counts.at(key) / total, exact.at(key), oracle.at(key));
        report << key << "\t" << buf << "\n";
    }
    report << "metric\tvalue\n"
           << "enumerator_oracle_max_abs\t" << max_abs << "\n"
           << "enumerator_oracle_tv\t" << tv_exact << "\n"
           << "sampler_oracle_tv\t" << tv_sampler << "\n"
           << "sampler_enumerator_tv\t" << tv_sampler_exact << "\n"
           << "sampler_tv_threshold\t" << threshold << "\n";
    if (!write_output(opt.output_path, report.str())) return kExitParse;

    const bool exact_ok = max_abs <= 1e-9;
    const bool sampler_ok = tv_sampler <= threshold;
    if (!exact_ok)
        std::cerr << "verify: enumerator disagrees with the oracle (max |dp| = " << max_abs
                  << ")\n";
    if (!sampler_ok)
        std::cerr << "verify: sampler TV " << tv_sampler << " exceeds threshold " << threshold
                  << "\n";
    return exact_ok && sampler_ok ? kExitOk : kExitVerifyMismatch;
}

int cmd_check_model(const std::string& model_path) {
    auto text = read_file(model_path);
    if (!text) {
        std::cerr << "ncomsim: cannot read " << model_path << "\n";
        return kExitParse;
    }
    auto loaded = ncomsim::load_model(*text);
    if (!loaded.ok()) {
        std::cout << "invalid\n";
        std::cerr << ncomsim::format_diagnostics(loaded.diagnostics);
        return kExitModelInvalid;
    }
    const auto& m = *loaded.model;
    std::cout << "ok\td=" << m.d << "\tn_wires=" << m.n_wires << "\tlocal_size=" << m.local_size
              << "\tpair_size=" << m.pair_size << "\tgates1=" << m.gates1.size()
              << "\tgates2=" << m.gates2.size() << "\n";
    return kExitOk;
}

int cmd_negativity(const CommonOpts& opt) {
    auto circuit = load_circuit_or_report(opt.circuit_path);
    if (!circuit) return kExitParse;
    const int d = circuit->dim;
    if (!ncomsim::is_odd_prime(d))
        throw ncomsim::BackendRefusal("negativity analysis needs an odd prime dimension");

    std::ostringstream out;
    out << "kind\telement\tresult\n";
    bool ncom_ok = true;
    char buf[32];

    for (const auto& [w, j] : circuit->preps) {
        ncomsim::CMatrix rho = ncomsim::CMatrix::Zero(d, d);
        rho(j, j) = 1.0;
        const double neg = ncomsim::negativity(ncomsim::wigner_function(rho, d, 1));
        if (neg > 1e-12) ncom_ok = false;
        std::snprintf(buf, sizeof buf, "%.12f", neg);
        out << "prep\twire " << w << " basis " << j << "\t" << buf << "\n";
    }
    std::set<std::string> seen;
    for (const auto& g : circuit->gates) {
        const std::string key = ncomsim::gate_key(g);
        if (!seen.insert(key).second) continue;
        bool deterministic = true;
        try {
            ncomsim::derive_symplectic(ncomsim::gate_matrix(g.name, g.param, d), d);
        } catch (const ncomsim::BackendRefusal&) {
            deterministic = false;
            ncom_ok = false;
        }
        out << "gate\t" << key << "\tdeterministic phase-space action: "
            << (deterministic ? "yes" : "no") << "\n";
    }
    for (int w : circuit->measured) {
        // Effect negativity: total mass of xi(x|u) = Tr(|x><x| A_u)
        // outside [0, 1], summed over outcomes.
        const auto& ops = ncomsim::phase_point_operators(d);
        double neg = 0;
        for (int x = 0; x < d; ++x) {
            ncomsim::CMatrix e = ncomsim::CMatrix::Zero(d, d);
            e(x, x) = 1.0;
            for (const auto& a : ops) {
                const double xi = (e * a).trace().real();
                neg += std::max(0.0, -xi) + std::max(0.0, xi - 1.0);
            }
        }
        if (neg > 1e-12) ncom_ok = false;
        std::snprintf(buf, sizeof buf, "%.12f", neg);
        out << "measure\twire " << w << "\t" << buf << "\n";
    }
    out << "summary\tcircuit\t"
        << (ncom_ok ? "NCOM available" : "no NCOM in this representation") << "\n";
    if (!write_output(opt.output_path, out.str())) return kExitParse;
    return kExitOk;
}

int cmd_bench(const CommonOpts& opt, const std::vector<int>& sizes, int d) {
    std::ostringstream out;
    out << "n\tgates\tdepth\tshots\twall_ms\tmax_tracked_pairs\ttracked_coords\n";
    for (int n : sizes) {
        const auto circuit = ncomsim::random_layered_circuit(n, d, n, opt.seed + n);
        const auto model = ncomsim::build_ncom(circuit);
        const auto sched = ncomsim::schedule(circuit);
        ncomsim::SampleStats stats;
        const auto t0 = std::chrono::steady_clock::now();
        ncomsim::sample_many(model, circuit, sched, opt.seed, opt.shots, opt.threads, &stats);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        out << n << "\t" << circuit.gates.size() << "\t" << sched.depth() << "\t" << opt.shots
            << "\t" << ms << "\t" << stats.max_tracked_pairs << "\t"
            << n + stats.max_tracked_pairs << "\n";
    }
    if (!write_output(opt.output_path, out.str())) return kExitParse;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak simulation of circuits admitting noncontextual ontological models"};
    app.require_subcommand(1);

    CommonOpts opt;
    double threshold = 0;  // 0 = adaptive
    std::vector<int> bench_sizes{10, 100, 1000};
    int bench_d = 3;

    auto add_common = [&](CLI::App* sub, bool needs_circuit) {
        if (needs_circuit)
            sub->add_option("-c,--circuit", opt.circuit_path, "circuit file")->required();
        sub->add_option("-o,--output", opt.output_path, "output path (default stdout)");
        sub->add_option("--seed", opt.seed, "RNG seed");
        sub->add_option("--threads", opt.threads, "worker threads (0 = auto)");
        sub->add_flag("-v,--verbose", opt.verbose, "chatty diagnostics");
    };

    auto* simulate = app.add_subcommand("simulate", "sample a circuit's output distribution");
    add_common(simulate, true);
    simulate->add_option("--shots", opt.shots, "number of samples")->check(CLI::PositiveNumber);
    simulate->add_option("--backend", opt.backend, "wigner | generic | statevector")
        ->check(CLI::IsMember({"wigner", "generic", "statevector"}));
    simulate->add_option("--model", opt.model_path, "model file (generic backend)");
    simulate->add_option("--amp-cap", opt.amp_cap, "statevector amplitude cap");

    auto* verify = app.add_subcommand(
        "verify", "check the sampler and enumerator against the exact quantum oracle");
    add_common(verify, true);
    verify->add_option("--shots", opt.shots, "number of samples")->check(CLI::PositiveNumber);
    verify->add_option("--model", opt.model_path, "model file (default: wigner backend)");
    verify->add_option("--threshold", threshold, "sampler TV threshold (0 = adaptive)");
    verify->add_option("--support-cap", opt.support_cap, "enumerator support cap");
    verify->add_option("--amp-cap", opt.amp_cap, "oracle amplitude cap");

    auto* check = app.add_subcommand("check-model", "validate a model file");
    std::string model_path;
    check->add_option("model", model_path, "model file")->required();

    auto* negativity = app.add_subcommand(
        "negativity", "per-element Wigner negativity and phase-space determinism report");
    add_common(negativity, true);

    auto* bench = app.add_subcommand("bench", "wall time and memory scaling over circuit sizes");
    add_common(bench, false);
    bench->add_option("--sizes", bench_sizes, "wire counts to benchmark");
    bench->add_option("--shots", opt.shots, "shots per size")->check(CLI::PositiveNumber);
    bench->add_option("--d", bench_d, "qudit dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(opt);
        if (verify->parsed()) {
            if (verify->count("--shots") == 0) opt.shots = 100000;
            return cmd_verify(opt, threshold);
        }
        if (check->parsed()) return cmd_check_model(model_path);
        if (negativity->parsed()) return cmd_negativity(opt);
        if (bench->parsed()) {
            if (bench->count("--shots") == 0) opt.shots = 100;
            return cmd_bench(opt, bench_sizes, bench_d);
        }
    } catch (const ncomsim::BackendRefusal& e) {
        std::cerr << "ncomsim: backend refusal: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const ncomsim::ModelInvalid& e) {
        std::cerr << "ncomsim: invalid model: " << e.what() << "\n"
                  << ncomsim::format_diagnostics(e.diagnostics);
        return kExitModelInvalid;
    } catch (const ncomsim::CapExceeded& e) {
        std::cerr << "ncomsim: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "ncomsim: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

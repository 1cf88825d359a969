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

#include "ncomsim/model.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace ncomsim {

namespace {

constexpr double kNormTol = 1e-12;

void check_rows(const std::vector<std::vector<double>>& rows, int n_rows, int n_cols,
                const std::string& field, std::vector<Diagnostic>& diags) {
    if (static_cast<int>(rows.size()) != n_rows) {
        diags.push_back({field, "expected " + std::to_string(n_rows) + " rows, got " +
                                    std::to_string(rows.size())});
        return;
    }
    for (int r = 0; r < n_rows; ++r)
        if (static_cast<int>(rows[r].size()) != n_cols)
            diags.push_back({field + "[" + std::to_string(r) + "]",
                             "expected " + std::to_string(n_cols) + " entries, got " +
                                 std::to_string(rows[r].size())});
}

void check_permutation(const std::vector<uint32_t>& table, uint64_t size,
                       const std::string& field, std::vector<Diagnostic>& diags) {
    if (table.size() != size) {
        diags.push_back({field, "expected " + std::to_string(size) + " entries, got " +
                                    std::to_string(table.size())});
        return;
    }
    std::vector<uint8_t> hit(size, 0);
    for (size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= size) {
            diags.push_back({field, "entry " + std::to_string(i) + " is out of range"});
            return;
        }
        if (hit[table[i]]++) {
            diags.push_back({field, "value " + std::to_string(table[i]) +
                                        " appears twice; table is not a bijection"});
            return;
        }
    }
}

}  // namespace

std::vector<Diagnostic> validate_model(const OntologicalModel& m) {
    std::vector<Diagnostic> diags;
    if (m.n_wires < 1) diags.push_back({"n_wires", "must be >= 1"});
    if (m.d < 2) diags.push_back({"d", "must be >= 2"});
    if (m.local_size < 1) diags.push_back({"local_size", "must be >= 1"});
    if (m.pair_size < 1) diags.push_back({"pair_size", "must be >= 1"});
    if (!diags.empty()) return diags;

    const int L = m.local_size;
    check_rows(m.preparations, m.d, L, "preparations", diags);
    if (diags.empty()) {
        for (int j = 0; j < m.d; ++j) {
            double sum = 0;
            for (int l = 0; l < L; ++l) {
                const double p = m.preparations[j][l];
                if (p < 0 || !std::isfinite(p)) {
                    diags.push_back({"preparations[" + std::to_string(j) + "]",
                                     "entries must be finite and nonnegative"});
                    break;
                }
                sum += p;
            }
            if (std::abs(sum - 1.0) > kNormTol)
                diags.push_back({"preparations[" + std::to_string(j) + "]",
                                 "entries must sum to 1"});
        }
    }

    for (const auto& [key, table] : m.gates1)
        check_permutation(table, static_cast<uint64_t>(L), "gates1[" + key + "]", diags);
    const uint64_t joint = static_cast<uint64_t>(L) * L * static_cast<uint64_t>(m.pair_size);
    for (const auto& [key, table] : m.gates2) {
        if (m.gates1.count(key))
            diags.push_back({"gates2[" + key + "]", "key also appears in gates1"});
        check_permutation(table, joint, "gates2[" + key + "]", diags);
    }

    check_rows(m.indicator, m.d, L, "indicator", diags);
    if (std::none_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.where.rfind("indicator", 0) == 0; })) {
        for (int l = 0; l < L; ++l) {
            double col = 0;
            for (int x = 0; x < m.d; ++x) {
                const double p = m.indicator[x][l];
                if (p < 0 || p > 1 || !std::isfinite(p)) {
                    diags.push_back({"indicator[" + std::to_string(x) + "]",
                                     "entries must lie in [0, 1]"});
                    break;
                }
                col += p;
            }
            if (std::abs(col - 1.0) > kNormTol)
                diags.push_back({"indicator",
                                 "column " + std::to_string(l) + " must sum to 1"});
        }
    }
    return diags;
}

GateSet model_gate_set(const OntologicalModel& m) {
    GateSet s;
    for (const auto& [key, table] : m.gates1) s[key] = {1};
    for (const auto& [key, table] : m.gates2) s[key] = {2};
    return s;
}

std::vector<Diagnostic> validate_stochastic(const StochasticMap& t) {
    std::vector<Diagnostic> diags;
    if (t.m.rows() != t.m.cols() || t.m.rows() < 1) {
        diags.push_back({"map", "matrix must be square and nonempty"});
        return diags;
    }
    for (Eigen::Index c = 0; c < t.m.cols(); ++c) {
        double sum = 0;
        for (Eigen::Index r = 0; r < t.m.rows(); ++r) {
            if (t.m(r, c) < 0 || !std::isfinite(t.m(r, c))) {
                diags.push_back({"map", "column " + std::to_string(c) +
                                            " has a negative or non-finite entry"});
                break;
            }
            sum += t.m(r, c);
        }
        if (std::abs(sum - 1.0) > kNormTol)
            diags.push_back({"map", "column " + std::to_string(c) + " must sum to 1"});
    }
    return diags;
}

bool is_deterministic(const StochasticMap& t) {
    for (Eigen::Index c = 0; c < t.m.cols(); ++c)
        for (Eigen::Index r = 0; r < t.m.rows(); ++r) {
            const double v = t.m(r, c);
            if (std::abs(v) > kNormTol && std::abs(v - 1.0) > kNormTol) return false;
        }
    return true;
}

std::optional<StochasticMap> stochastic_inverse(const StochasticMap& t) {
    const Eigen::Index n = t.m.rows();
    if (n != t.m.cols() || n < 1) return std::nullopt;
    if (is_deterministic(t)) {
        // A 0/1 stochastic matrix is invertible iff it is a permutation;
        // then the transpose is the inverse.
        Eigen::MatrixXd tr = t.m.transpose();
        for (Eigen::Index c = 0; c < n; ++c)
            if (std::abs(tr.col(c).sum() - 1.0) > kNormTol) return std::nullopt;
        return StochasticMap{std::move(tr)};
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(t.m);
    if (!lu.isInvertible()) return std::nullopt;
    Eigen::MatrixXd inv = lu.inverse();
    // Any stochastic two-sided inverse must equal the matrix inverse, so
    // it exists iff the matrix inverse is itself column-stochastic.
    const double tol = 1e-9;
    for (Eigen::Index c = 0; c < n; ++c) {
        double sum = 0;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (inv(r, c) < -tol) return std::nullopt;
            sum += inv(r, c);
        }
        if (std::abs(sum - 1.0) > tol) return std::nullopt;
    }
    if ((t.m * inv - Eigen::MatrixXd::Identity(n, n)).norm() > tol) return std::nullopt;
    if ((inv * t.m - Eigen::MatrixXd::Identity(n, n)).norm() > tol) return std::nullopt;
    inv = inv.cwiseMax(0.0);
    for (Eigen::Index c = 0; c < n; ++c) inv.col(c) /= inv.col(c).sum();
    return StochasticMap{std::move(inv)};
}

std::string save_model(const OntologicalModel& m) {
    nlohmann::json j;
    j["version"] = 1;
    j["d"] = m.d;
    j["n_wires"] = m.n_wires;
    j["local_size"] = m.local_size;
    j["pair_size"] = m.pair_size;
    j["preparations"] = m.preparations;
    j["gates1"] = nlohmann::json::object();
    for (const auto& [key, table] : m.gates1) j["gates1"][key] = table;
    j["gates2"] = nlohmann::json::object();
    for (const auto& [key, table] : m.gates2) j["gates2"][key] = table;
    j["indicator"] = m.indicator;
    return j.dump(1);
}

namespace {

bool get_int(const nlohmann::json& j, const char* field, int& out,
             std::vector<Diagnostic>& diags) {
    if (!j.contains(field) || !j[field].is_number_integer()) {
        diags.push_back({std::string("$.") + field, "missing or not an integer"});
        return false;
    }
    out = j[field].get<int>();
    return true;
}

bool get_prob_rows(const nlohmann::json& j, const char* field,
                   std::vector<std::vector<double>>& out, std::vector<Diagnostic>& diags) {
    if (!j.contains(field) || !j[field].is_array()) {
        diags.push_back({std::string("$.") + field, "missing or not an array"});
        return false;
    }
    out.clear();
    for (size_t r = 0; r < j[field].size(); ++r) {
        const auto& row = j[field][r];
        if (!row.is_array()) {
            diags.push_back({std::string("$.") + field + "[" + std::to_string(r) + "]",
                             "not an array"});
            return false;
        }
        std::vector<double> vals;
        for (const auto& v : row) {
            if (!v.is_number()) {
                diags.push_back({std::string("$.") + field + "[" + std::to_string(r) + "]",
                                 "entry is not a number"});
                return false;
            }
            vals.push_back(v.get<double>());
        }
        out.push_back(std::move(vals));
    }
    return true;
}

bool get_gate_tables(const nlohmann::json& j, const char* field,
                     std::map<std::string, std::vector<uint32_t>>& out,
                     std::vector<Diagnostic>& diags) {
    if (!j.contains(field) || !j[field].is_object()) {
        diags.push_back({std::string("$.") + field, "missing or not an object"});
        return false;
    }
    out.clear();
    for (const auto& [key, table] : j[field].items()) {
        if (!table.is_array()) {
            diags.push_back({std::string("$.") + field + "." + key, "not an array"});
            return false;
        }
        std::vector<uint32_t> vals;
        for (const auto& v : table) {
            if (!v.is_number_integer() || v.get<int64_t>() < 0 ||
                v.get<int64_t>() > UINT32_MAX) {
                diags.push_back({std::string("$.") + field + "." + key,
                                 "entry is not a nonnegative integer"});
                return false;
            }
            vals.push_back(v.get<uint32_t>());
        }
        out[key] = std::move(vals);
    }
    return true;
}

}  // namespace

ModelLoadResult load_model(const std::string& text) {
    ModelLoadResult result;
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        result.diagnostics.push_back({"$", "not valid JSON"});
        return result;
    }
    if (!j.is_object()) {
        result.diagnostics.push_back({"$", "top level must be an object"});
        return result;
    }
    auto& diags = result.diagnostics;
    int version = 0;
    if (get_int(j, "version", version, diags) && version != 1)
        diags.push_back({"$.version", "unsupported schema version " + std::to_string(version)});
    OntologicalModel m;
    get_int(j, "d", m.d, diags);
    get_int(j, "n_wires", m.n_wires, diags);
    get_int(j, "local_size", m.local_size, diags);
    get_int(j, "pair_size", m.pair_size, diags);
    get_prob_rows(j, "preparations", m.preparations, diags);
    get_gate_tables(j, "gates1", m.gates1, diags);
    get_gate_tables(j, "gates2", m.gates2, diags);
    get_prob_rows(j, "indicator", m.indicator, diags);
    if (!diags.empty()) return result;
    auto model_diags = validate_model(m);
    diags.insert(diags.end(), model_diags.begin(), model_diags.end());
    if (diags.empty()) result.model = std::move(m);
    return result;
}

}  // namespace ncomsim

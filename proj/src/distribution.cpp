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

#include "ncomsim/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncomsim {

char digit_char(int v) {
    if (v < 0 || v > 12) throw std::invalid_argument("outcome digit out of range");
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + (v - 10));
}

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'c') return 10 + (c - 'a');
    throw std::invalid_argument("not an outcome digit");
}

double Distribution::total() const {
    double t = 0;
    for (const auto& [k, w] : weights) t += w;
    return t;
}

double Distribution::at(const std::string& outcome) const {
    auto it = weights.find(outcome);
    return it == weights.end() ? 0.0 : it->second;
}

Distribution normalize(const Distribution& counts) {
    const double t = counts.total();
    if (counts.weights.empty() || t <= 0)
        throw std::invalid_argument("cannot normalize an empty distribution");
    Distribution out;
    out.kind = WeightKind::Probabilities;
    for (const auto& [k, w] : counts.weights) out.weights[k] = w / t;
    return out;
}

double tv_distance(const Distribution& p, const Distribution& q) {
    if (p.kind != WeightKind::Probabilities || q.kind != WeightKind::Probabilities)
        throw std::invalid_argument("tv_distance expects probabilities");
    if (std::abs(p.total() - 1.0) > 1e-8 || std::abs(q.total() - 1.0) > 1e-8)
        throw std::invalid_argument("tv_distance inputs must sum to 1");
    std::set<std::string> support;
    for (const auto& [k, w] : p.weights) support.insert(k);
    for (const auto& [k, w] : q.weights) support.insert(k);
    double s = 0;
    for (const auto& k : support) s += std::abs(p.at(k) - q.at(k));
    return 0.5 * s;
}

std::string distribution_tsv(const Distribution& counts, const Distribution* exact) {
    std::set<std::string> keys;
    for (const auto& [k, w] : counts.weights) keys.insert(k);
    if (exact) {
        // Outcomes with exact weight but zero observations still get rows.
        for (const auto& [k, e] : exact->weights)
            if (e != 0) keys.insert(k);
    }
    const double total = counts.total();
    std::ostringstream out;
    out << "outcome\tcount\tfrequency";
    if (exact) out << "\texact\tabs_error";
    out << "\n";
    char buf[96];
    for (const auto& k : keys) {
        const double w = counts.at(k);
        const double freq = total > 0 ? w / total : 0.0;
        std::snprintf(buf, sizeof buf, "%.0f\t%.9f", w, freq);
        out << k << "\t" << buf;
        if (exact) {
            const double e = exact->at(k);
            std::snprintf(buf, sizeof buf, "%.9f\t%.9f", e, std::abs(freq - e));
            out << "\t" << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace ncomsim

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

#ifndef NCOMSIM_DISTRIBUTION_HPP
#define NCOMSIM_DISTRIBUTION_HPP

#include <map>
#include <string>

namespace ncomsim {

enum class WeightKind { Counts, Probabilities };

/// Outcome strings are base-d digit strings ('0'-'9' then 'a'-'c' for
/// digits 10..12), one digit per measured wire in measurement order.
char digit_char(int v);
int digit_value(char c);

struct Distribution {
    WeightKind kind = WeightKind::Counts;
    std::map<std::string, double> weights;

    double total() const;
    double at(const std::string& outcome) const;  // 0 for missing keys

    bool operator==(const Distribution&) const = default;
};

/// Counts -> probabilities. Throws std::invalid_argument on empty input
/// or zero total.
Distribution normalize(const Distribution& counts);

/// (1/2) sum_x |p(x) - q(x)| over the union of supports. Both inputs must
/// be probabilities summing to 1 within 1e-8.
double tv_distance(const Distribution& p, const Distribution& q);

/// TSV report: outcome, count, frequency, and when `exact` is given two
/// more columns, exact probability and |frequency - exact|. Rows are
/// sorted by outcome so identical inputs give byte-identical output.
std::string distribution_tsv(const Distribution& counts, const Distribution* exact = nullptr);

}  // namespace ncomsim

#endif

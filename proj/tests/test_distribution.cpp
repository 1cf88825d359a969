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

#include <stdexcept>

#include "doctest.h"
#include "ncomsim/rng.hpp"

using namespace ncomsim;

namespace {

Distribution probs(std::initializer_list<std::pair<const char*, double>> entries) {
    Distribution d;
    d.kind = WeightKind::Probabilities;
    for (const auto& [k, v] : entries) d.weights[k] = v;
    return d;
}

}  // namespace

TEST_CASE("digit codec covers 0..12") {
    CHECK(digit_char(0) == '0');
    CHECK(digit_char(9) == '9');
    CHECK(digit_char(10) == 'a');
    CHECK(digit_char(12) == 'c');
    for (int v = 0; v <= 12; ++v) CHECK(digit_value(digit_char(v)) == v);
    CHECK_THROWS_AS(digit_char(13), std::invalid_argument);
    CHECK_THROWS_AS(digit_value('z'), std::invalid_argument);
}

TEST_CASE("normalize divides by the total") {
    Distribution counts;
    counts.weights = {{"a", 3.0}, {"b", 1.0}};
    const Distribution p = normalize(counts);
    CHECK(p.kind == WeightKind::Probabilities);
    CHECK(p.at("a") == doctest::Approx(0.75));
    CHECK(p.at("b") == doctest::Approx(0.25));

    Distribution single;
    single.weights = {{"a", 5.0}};
    CHECK(normalize(single).at("a") == doctest::Approx(1.0));
}

TEST_CASE("normalize rejects empty input") {
    CHECK_THROWS_AS(normalize(Distribution{}), std::invalid_argument);
    Distribution zeros;
    zeros.weights = {{"a", 0.0}};
    CHECK_THROWS_AS(normalize(zeros), std::invalid_argument);
}

TEST_CASE("tv_distance on pinned cases") {
    const auto p = probs({{"0", 1.0}});
    const auto q = probs({{"0", 0.5}, {"1", 0.5}});
    CHECK(tv_distance(p, p) == doctest::Approx(0.0));
    CHECK(tv_distance(p, q) == doctest::Approx(0.5));
    // Disjoint supports are maximally distinguishable.
    const auto r = probs({{"1", 0.5}, {"2", 0.5}});
    CHECK(tv_distance(p, r) == doctest::Approx(1.0));
}

TEST_CASE("tv_distance rejects unnormalized input") {
    const auto p = probs({{"0", 0.7}});
    const auto q = probs({{"0", 1.0}});
    CHECK_THROWS_AS(tv_distance(p, q), std::invalid_argument);
    Distribution counts;
    counts.kind = WeightKind::Counts;
    counts.weights = {{"0", 1.0}};
    CHECK_THROWS_AS(tv_distance(counts, q), std::invalid_argument);
}

TEST_CASE("tv_distance is a metric on random triples") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        Distribution dists[3];
        for (auto& d : dists) {
            d.kind = WeightKind::Probabilities;
            double total = 0;
            for (int i = 0; i < 4; ++i) {
                const double w = rng.next_double() + 1e-3;
                d.weights[std::string(1, digit_char(i))] = w;
                total += w;
            }
            for (auto& [k, w] : d.weights) w /= total;
        }
        const double ab = tv_distance(dists[0], dists[1]);
        const double ba = tv_distance(dists[1], dists[0]);
        const double bc = tv_distance(dists[1], dists[2]);
        const double ac = tv_distance(dists[0], dists[2]);
        CHECK(ab == doctest::Approx(ba));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("distribution_tsv emits sorted rows with stable formatting") {
    Distribution counts;
    counts.weights = {{"10", 25.0}, {"02", 75.0}};
    const std::string tsv = distribution_tsv(counts);
    CHECK(tsv ==
          "outcome\tcount\tfrequency\n"
          "02\t75\t0.750000000\n"
          "10\t25\t0.250000000\n");

    const auto exact = probs({{"02", 0.75}, {"10", 0.2}, {"22", 0.05}});
    const std::string with_exact = distribution_tsv(counts, &exact);
    CHECK(with_exact ==
          "outcome\tcount\tfrequency\texact\tabs_error\n"
          "02\t75\t0.750000000\t0.750000000\t0.000000000\n"
          "10\t25\t0.250000000\t0.200000000\t0.050000000\n"
          "22\t0\t0.000000000\t0.050000000\t0.050000000\n");
}

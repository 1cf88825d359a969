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
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "ncomsim/rng.hpp"

namespace ncomsim {

namespace {

using namespace std::complex_literals;

std::complex<double> root_of_unity(long long num, long long den) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(num) /
                         static_cast<double>(den);
    return {std::cos(theta), std::sin(theta)};
}

std::complex<double> omega_pow(long long e, int d) { return root_of_unity(imod(e, d), d); }

uint64_t checked_pow(int d, int n, uint64_t cap) {
    uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > cap / static_cast<uint64_t>(d))
            throw CapExceeded("state of " + std::to_string(n) + " wires of dimension " +
                              std::to_string(d) + " exceeds the amplitude cap");
        total *= static_cast<uint64_t>(d);
    }
    return total;
}

}  // namespace

StateVector basis_state(int d, int n, const std::vector<int>& digits) {
    if (d < 2 || n < 1) throw std::invalid_argument("basis_state: need d >= 2, n >= 1");
    if (static_cast<int>(digits.size()) != n)
        throw std::invalid_argument("basis_state: digit count must equal n");
    const uint64_t total = checked_pow(d, n, kDefaultAmpCap);
    uint64_t idx = 0;
    uint64_t stride = 1;
    for (int w = 0; w < n; ++w) {
        if (digits[w] < 0 || digits[w] >= d)
            throw std::invalid_argument("basis_state: digit out of range");
        idx += static_cast<uint64_t>(digits[w]) * stride;
        stride *= static_cast<uint64_t>(d);
    }
    StateVector psi;
    psi.d = d;
    psi.n = n;
    psi.amps = CVector::Zero(static_cast<Eigen::Index>(total));
    psi.amps[static_cast<Eigen::Index>(idx)] = 1.0;
    return psi;
}

CMatrix gate_matrix(const std::string& name, std::optional<int> param, int d) {
    if (d < 2) throw std::invalid_argument("gate_matrix: need d >= 2");
    const bool wants_param = name == "M";
    if (param.has_value() != wants_param)
        throw std::invalid_argument(wants_param ? "gate M requires param"
                                                : "gate " + name + " takes no param");
    if (name == "I") return CMatrix::Identity(d, d);
    if (name == "X") {
        CMatrix m = CMatrix::Zero(d, d);
        for (int j = 0; j < d; ++j) m(imod(j + 1, d), j) = 1.0;
        return m;
    }
    if (name == "Z") {
        CMatrix m = CMatrix::Zero(d, d);
        for (int j = 0; j < d; ++j) m(j, j) = omega_pow(j, d);
        return m;
    }
    if (name == "F") {
        CMatrix m(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(d));
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j) m(k, j) = norm * omega_pow(static_cast<long long>(j) * k, d);
        return m;
    }
    if (name == "P") {
        // j(j-1) is even, so the exponent is an integer for every d.
        CMatrix m = CMatrix::Zero(d, d);
        for (int j = 0; j < d; ++j)
            m(j, j) = omega_pow(static_cast<long long>(j) * (j - 1) / 2, d);
        return m;
    }
    if (name == "M") {
        const int a = *param;
        if (a < 1 || a >= d) throw std::invalid_argument("gate M: param must be in [1, d-1]");
        bool invertible = false;
        for (int b = 1; b < d; ++b)
            if (imod(static_cast<long long>(a) * b, d) == 1) invertible = true;
        if (!invertible) throw std::invalid_argument("gate M: param has no inverse mod d");
        CMatrix m = CMatrix::Zero(d, d);
        for (int j = 0; j < d; ++j) m(imod(static_cast<long long>(a) * j, d), j) = 1.0;
        return m;
    }
    if (name == "SUM") {
        CMatrix m = CMatrix::Zero(d * d, d * d);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) m(j * d + imod(j + k, d), j * d + k) = 1.0;
        return m;
    }
    if (name == "CZ") {
        CMatrix m = CMatrix::Zero(d * d, d * d);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                m(j * d + k, j * d + k) = omega_pow(static_cast<long long>(j) * k, d);
        return m;
    }
    if (name == "T") {
        if (d != 3) throw std::invalid_argument("gate T is defined for d = 3 only");
        CMatrix m = CMatrix::Zero(3, 3);
        m(0, 0) = 1.0;
        m(1, 1) = root_of_unity(1, 9);
        m(2, 2) = root_of_unity(-1, 9);
        return m;
    }
    throw BackendRefusal("unknown gate name: " + name);
}

void apply_gate(StateVector& psi, const GateApp& g, const CMatrix& u) {
    const int d = psi.d;
    const uint64_t total = static_cast<uint64_t>(psi.amps.size());
    if (g.wires.size() == 1) {
        if (u.rows() != d || u.cols() != d)
            throw std::invalid_argument("apply_gate: matrix is not d x d");
        const uint64_t stride = checked_pow(d, g.wires[0], total);
        CVector in(d), out(d);
        for (uint64_t base = 0; base < total; ++base) {
            if ((base / stride) % static_cast<uint64_t>(d) != 0) continue;
            for (int j = 0; j < d; ++j) in[j] = psi.amps[static_cast<Eigen::Index>(base + j * stride)];
            out.noalias() = u * in;
            for (int j = 0; j < d; ++j) psi.amps[static_cast<Eigen::Index>(base + j * stride)] = out[j];
        }
        return;
    }
    if (g.wires.size() == 2) {
        if (u.rows() != d * d || u.cols() != d * d)
            throw std::invalid_argument("apply_gate: matrix is not d^2 x d^2");
        const uint64_t s1 = checked_pow(d, g.wires[0], total);  // first listed wire
        const uint64_t s2 = checked_pow(d, g.wires[1], total);
        CVector in(d * d), out(d * d);
        for (uint64_t base = 0; base < total; ++base) {
            if ((base / s1) % static_cast<uint64_t>(d) != 0) continue;
            if ((base / s2) % static_cast<uint64_t>(d) != 0) continue;
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    in[j * d + k] = psi.amps[static_cast<Eigen::Index>(base + j * s1 + k * s2)];
            out.noalias() = u * in;
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    psi.amps[static_cast<Eigen::Index>(base + j * s1 + k * s2)] = out[j * d + k];
        }
        return;
    }
    throw std::invalid_argument("apply_gate: gates take 1 or 2 wires");
}

StateVector run_circuit(const Circuit& c, uint64_t amp_cap) {
    checked_pow(c.dim, c.n_wires, amp_cap);
    std::vector<int> digits(c.n_wires, 0);
    std::vector<bool> prepped(c.n_wires, false);
    for (const auto& [w, j] : c.preps) {
        if (w < 0 || w >= c.n_wires || prepped[w])
            throw std::invalid_argument("run_circuit: bad or duplicate prep");
        digits[w] = j;
        prepped[w] = true;
    }
    for (int w = 0; w < c.n_wires; ++w)
        if (!prepped[w]) throw std::invalid_argument("run_circuit: unprepared wire");
    StateVector psi = basis_state(c.dim, c.n_wires, digits);
    for (const auto& g : c.gates) apply_gate(psi, g, gate_matrix(g.name, g.param, c.dim));
    return psi;
}

Distribution exact_quantum_distribution(const Circuit& c, uint64_t amp_cap) {
    const StateVector psi = run_circuit(c, amp_cap);
    const int d = c.dim;
    std::vector<uint64_t> strides(c.measured.size());
    for (size_t i = 0; i < c.measured.size(); ++i)
        strides[i] = checked_pow(d, c.measured[i], static_cast<uint64_t>(psi.amps.size()));
    Distribution out;
    out.kind = WeightKind::Probabilities;
    std::string key(c.measured.size(), '0');
    for (Eigen::Index idx = 0; idx < psi.amps.size(); ++idx) {
        const double p = std::norm(psi.amps[idx]);
        if (p == 0.0) continue;
        for (size_t i = 0; i < c.measured.size(); ++i)
            key[i] = digit_char(static_cast<int>((static_cast<uint64_t>(idx) / strides[i]) %
                                                 static_cast<uint64_t>(d)));
        out.weights[key] += p;
    }
    for (auto it = out.weights.begin(); it != out.weights.end();)
        it = it->second < 1e-14 ? out.weights.erase(it) : std::next(it);
    return out;
}

namespace {

std::vector<CMatrix> build_phase_point_operators(int d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("phase_point_operators: d must be an odd prime");
    const int inv2 = (d + 1) / 2;
    // T_(q,p) |j> = w^(-qp/2 + p(j+q)) |j+q>.
    auto displacement = [&](int q, int p) {
        CMatrix t = CMatrix::Zero(d, d);
        for (int j = 0; j < d; ++j) {
            const long long e = -static_cast<long long>(inv2) * q * p +
                                static_cast<long long>(p) * (j + q);
            t(imod(j + q, d), j) = omega_pow(e, d);
        }
        return t;
    };
    CMatrix a0 = CMatrix::Zero(d, d);
    for (int q = 0; q < d; ++q)
        for (int p = 0; p < d; ++p) a0 += displacement(q, p);
    a0 /= static_cast<double>(d);
    std::vector<CMatrix> ops(static_cast<size_t>(d) * d);
    for (int q = 0; q < d; ++q) {
        for (int p = 0; p < d; ++p) {
            const CMatrix t = displacement(q, p);
            ops[static_cast<size_t>(q) * d + p] = t * a0 * t.adjoint();
        }
    }
    // The construction is only trusted after it proves the defining
    // identities: unit trace, Hermiticity, orthogonality, resolution of
    // the identity.
    const double tol = 1e-10;
    CMatrix sum = CMatrix::Zero(d, d);
    for (size_t u = 0; u < ops.size(); ++u) {
        if (std::abs(ops[u].trace() - 1.0) > tol)
            throw std::logic_error("phase_point_operators: trace check failed");
        if ((ops[u] - ops[u].adjoint()).norm() > tol)
            throw std::logic_error("phase_point_operators: Hermiticity check failed");
        for (size_t v = 0; v <= u; ++v) {
            const double want = u == v ? static_cast<double>(d) : 0.0;
            if (std::abs((ops[u] * ops[v]).trace() - want) > tol)
                throw std::logic_error("phase_point_operators: orthogonality check failed");
        }
        sum += ops[u];
    }
    if ((sum - static_cast<double>(d) * CMatrix::Identity(d, d)).norm() > tol)
        throw std::logic_error("phase_point_operators: completeness check failed");
    return ops;
}

std::mutex g_ppo_mutex;
std::map<int, std::vector<CMatrix>> g_ppo_cache;

}  // namespace

const std::vector<CMatrix>& phase_point_operators(int d) {
    std::lock_guard<std::mutex> lock(g_ppo_mutex);
    auto it = g_ppo_cache.find(d);
    if (it == g_ppo_cache.end()) it = g_ppo_cache.emplace(d, build_phase_point_operators(d)).first;
    return it->second;
}

namespace {

// W for one chain level: contracts the top (most significant) wire with
// each A_u and recurses on the reduced (d^(k-1))-dimensional operator.
// The caller divides by d once per level.
std::vector<double> wigner_rec(const CMatrix& rho, int d, int k,
                               const std::vector<CMatrix>& ops) {
    if (k == 0) return {rho(0, 0).real()};
    const Eigen::Index rest = rho.rows() / d;
    size_t block = 1;
    for (int i = 0; i < k - 1; ++i) block *= static_cast<size_t>(d) * d;
    std::vector<double> out(ops.size() * block);
    for (size_t u = 0; u < ops.size(); ++u) {
        CMatrix reduced = CMatrix::Zero(rest, rest);
        for (int m = 0; m < d; ++m)
            for (int mp = 0; mp < d; ++mp)
                reduced += ops[u](mp, m) * rho.block(m * rest, mp * rest, rest, rest);
        const std::vector<double> sub = wigner_rec(reduced, d, k - 1, ops);
        for (size_t i = 0; i < block; ++i) out[u * block + i] = sub[i] / d;
    }
    return out;
}

}  // namespace

std::vector<double> wigner_function(const CMatrix& rho, int d, int k) {
    Eigen::Index dim = 1;
    for (int i = 0; i < k; ++i) dim *= d;
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("wigner_function: operator size is not d^k");
    if (std::abs(rho.trace() - 1.0) > 1e-10)
        throw std::invalid_argument("wigner_function: trace must be 1");
    if ((rho - rho.adjoint()).norm() > 1e-10)
        throw std::invalid_argument("wigner_function: operator must be Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("wigner_function: operator must be positive semidefinite");
    // wigner_rec divides by d at each of the k levels, giving d^-k total;
    // phase-point flat index sum_w (q_w*d+p_w) * d^(2w) falls out of the
    // most-significant-wire-first recursion.
    return wigner_rec(rho, d, k, phase_point_operators(d));
}

double negativity(const std::vector<double>& w) {
    double sum = 0, abs_sum = 0;
    for (double x : w) {
        sum += x;
        abs_sum += std::abs(x);
    }
    if (std::abs(sum - 1.0) > 1e-8)
        throw std::invalid_argument("negativity: Wigner function must sum to 1");
    return abs_sum - 1.0;
}

namespace {

constexpr double kFrobTol = 1e-8;

/// Index of the unique A_v within Frobenius distance kFrobTol of b, or -1.
int match_point(const CMatrix& b, const std::vector<CMatrix>& ops) {
    for (size_t v = 0; v < ops.size(); ++v)
        if ((b - ops[v]).norm() < kFrobTol) return static_cast<int>(v);
    return -1;
}

std::array<int, 4> coords_of(int flat, int d, int arity) {
    // Joint flat index is (first wire point) * d^2 + (second wire point);
    // each wire point is q*d + p.
    std::array<int, 4> u{};
    if (arity == 2) {
        const int second = flat % (d * d);
        const int first = flat / (d * d);
        u = {first / d, first % d, second / d, second % d};
    } else {
        u = {flat / d, flat % d, 0, 0};
    }
    return u;
}

int flat_of(const std::array<int, 4>& u, int d, int arity) {
    const int first = u[0] * d + u[1];
    if (arity == 1) return first;
    return first * d * d + (u[2] * d + u[3]);
}

AffineSymplectic fit_affine(const std::vector<int>& image_at, int d, int arity) {
    // image_at holds images of flat points {0, e_1, .., e_2arity} in that
    // order, where e_c has coordinate c equal to 1.
    AffineSymplectic t;
    t.d = d;
    t.arity = arity;
    const auto a = coords_of(image_at[0], d, arity);
    for (int i = 0; i < 2 * arity; ++i) t.a[i] = a[i];
    for (int c = 0; c < 2 * arity; ++c) {
        const auto img = coords_of(image_at[c + 1], d, arity);
        for (int r = 0; r < 2 * arity; ++r) t.S[r][c] = imod(img[r] - a[r], d);
    }
    return t;
}

}  // namespace

AffineSymplectic derive_symplectic(const CMatrix& u, int d) {
    const auto& ops = phase_point_operators(d);
    const int arity = u.rows() == d ? 1 : 2;
    if ((arity == 1 && u.cols() != d) ||
        (arity == 2 && (u.rows() != d * d || u.cols() != d * d)))
        throw std::invalid_argument("derive_symplectic: matrix is not d x d or d^2 x d^2");
    if ((u * u.adjoint() - CMatrix::Identity(u.rows(), u.rows())).norm() > 1e-10)
        throw std::invalid_argument("derive_symplectic: matrix is not unitary");

    // Image of one joint phase point under conjugation, identified in the
    // product basis. Two-wire operators are matched factor-by-factor via
    // partial traces (valid because Tr A_v = 1), then confirmed against
    // the full product.
    auto image_of = [&](int flat) -> int {
        if (arity == 1) {
            const CMatrix b = u * ops[flat] * u.adjoint();
            const int v = match_point(b, ops);
            if (v < 0)
                throw BackendRefusal(
                    "gate has no deterministic phase-space action "
                    "(conjugated phase-point operator matches no phase point)");
            return v;
        }
        const int f1 = flat / (d * d), f2 = flat % (d * d);
        CMatrix joint = CMatrix::Zero(d * d, d * d);
        for (int r1 = 0; r1 < d; ++r1)
            for (int c1 = 0; c1 < d; ++c1)
                joint.block(r1 * d, c1 * d, d, d) = ops[f1](r1, c1) * ops[f2];
        const CMatrix b = u * joint * u.adjoint();
        CMatrix tr2 = CMatrix::Zero(d, d), tr1 = CMatrix::Zero(d, d);
        for (int m = 0; m < d; ++m)
            for (int mp = 0; mp < d; ++mp) {
                for (int x = 0; x < d; ++x) {
                    tr2(m, mp) += b(m * d + x, mp * d + x);  // trace out second factor
                    tr1(m, mp) += b(x * d + m, x * d + mp);  // trace out first factor
                }
            }
        const int v1 = match_point(tr2, ops);
        const int v2 = match_point(tr1, ops);
        if (v1 < 0 || v2 < 0)
            throw BackendRefusal(
                "gate has no deterministic phase-space action "
                "(conjugated phase-point operator matches no phase point)");
        CMatrix rejoined = CMatrix::Zero(d * d, d * d);
        for (int r1 = 0; r1 < d; ++r1)
            for (int c1 = 0; c1 < d; ++c1)
                rejoined.block(r1 * d, c1 * d, d, d) = ops[v1](r1, c1) * ops[v2];
        if ((b - rejoined).norm() >= kFrobTol)
            throw BackendRefusal(
                "gate has no deterministic phase-space action "
                "(conjugated phase-point operator is not a product of phase points)");
        return v1 * d * d + v2;
    };

    const int m = 2 * arity;
    std::vector<int> probe_images;
    probe_images.push_back(image_of(0));
    for (int c = 0; c < m; ++c) {
        std::array<int, 4> e{};
        e[c] = 1;
        probe_images.push_back(image_of(flat_of(e, d, arity)));
    }
    AffineSymplectic t = fit_affine(probe_images, d, arity);
    if (!t.is_symplectic())
        throw BackendRefusal("gate's phase-space action is affine but not symplectic");

    // Confirm the fit pointwise: exhaustively when the point count is
    // small, otherwise on a fixed pseudo-random sample.
    const long long n_points = static_cast<long long>(d) * d * (arity == 2 ? d * d : 1);
    const bool exhaustive = n_points <= 700;
    SplitMix64 rng(mix64(0x5eedULL + d));
    const int n_samples = exhaustive ? static_cast<int>(n_points) : 128;
    for (int i = 0; i < n_samples; ++i) {
        const int flat = exhaustive
                             ? i
                             : static_cast<int>(rng.next_below(static_cast<uint64_t>(n_points)));
        const int want = flat_of(t.apply(coords_of(flat, d, arity)), d, arity);
        if (image_of(flat) != want)
            throw BackendRefusal("gate's phase-space action is not affine");
    }
    return t;
}

}  // namespace ncomsim

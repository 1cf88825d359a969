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

#ifndef NCOMSIM_SYMPLECTIC_HPP
#define NCOMSIM_SYMPLECTIC_HPP

#include <array>
#include <cstdint>

namespace ncomsim {

/// Least nonnegative residue of v mod d.
constexpr int imod(long long v, int d) {
    int r = static_cast<int>(v % d);
    return r < 0 ? r + d : r;
}

/// Affine map u -> S u + a on (Z_d)^{2k}, k = arity. Phase-space
/// coordinates are ordered (q1, p1[, q2, p2]) with the first-listed wire
/// first. Only the top-left 2k x 2k block of S (and first 2k entries of
/// a) are live; entries are stored as least nonnegative residues.
struct AffineSymplectic {
    int d = 0;
    int arity = 1;
    std::array<std::array<int, 4>, 4> S{};
    std::array<int, 4> a{};

    int dims() const { return 2 * arity; }

    std::array<int, 4> apply(const std::array<int, 4>& u) const {
        std::array<int, 4> out{};
        const int m = dims();
        for (int r = 0; r < m; ++r) {
            long long acc = a[r];
            for (int c = 0; c < m; ++c) acc += static_cast<long long>(S[r][c]) * u[c];
            out[r] = imod(acc, d);
        }
        return out;
    }

    /// S^T J S = J (mod d) with J block-diagonal in [[0,1],[-1,0]].
    bool is_symplectic() const {
        const int m = dims();
        auto j_entry = [&](int r, int c) -> int {
            if (r / 2 != c / 2) return 0;
            if (r % 2 == 0 && c == r + 1) return 1;
            if (r % 2 == 1 && c == r - 1) return d - 1;  // -1 mod d
            return 0;
        };
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) {
                long long acc = 0;
                for (int i = 0; i < m; ++i)
                    for (int k = 0; k < m; ++k)
                        acc += static_cast<long long>(S[i][r]) * j_entry(i, k) * S[k][c];
                if (imod(acc, d) != j_entry(r, c)) return false;
            }
        }
        return true;
    }

    static AffineSymplectic identity(int d, int arity) {
        AffineSymplectic t;
        t.d = d;
        t.arity = arity;
        for (int i = 0; i < 2 * arity; ++i) t.S[i][i] = 1;
        return t;
    }

    bool operator==(const AffineSymplectic&) const = default;
};

/// The map "first, then second": u -> S2 (S1 u + a1) + a2, i.e.
/// (S2 S1, S2 a1 + a2).
inline AffineSymplectic compose(const AffineSymplectic& second, const AffineSymplectic& first) {
    AffineSymplectic out;
    out.d = first.d;
    out.arity = first.arity;
    const int m = first.dims();
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            long long s = 0;
            for (int i = 0; i < m; ++i)
                s += static_cast<long long>(second.S[r][i]) * first.S[i][c];
            out.S[r][c] = imod(s, first.d);
        }
        long long acc = second.a[r];
        for (int i = 0; i < m; ++i) acc += static_cast<long long>(second.S[r][i]) * first.a[i];
        out.a[r] = imod(acc, first.d);
    }
    return out;
}

}  // namespace ncomsim

#endif

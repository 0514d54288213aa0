// Copyright 2026 The amekit Authors
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

#ifndef AMEKIT_PAULI_H
#define AMEKIT_PAULI_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace amekit {

/// Largest Hilbert-space dimension D^n for which dense_matrix will build a matrix.
inline constexpr size_t kDefaultMatrixBudget = 4096;

/// One element lambda^phase X_1^x_1 Z_1^z_1 (x) ... (x) X_n^x_n Z_n^z_n of the
/// n-qudit Weyl-Heisenberg group over Z_D, with
///
///     lambda = exp(i pi / D),  omega = lambda^2,
///     X = sum_j |j><j+1|,      Z = sum_j omega^j |j><j|.
///
/// Invariants: 0 <= phase < 2D and 0 <= xs[k], zs[k] < D.
struct PauliProduct {
    int64_t dimension = 2;
    int64_t phase = 0;
    std::vector<int64_t> xs;
    std::vector<int64_t> zs;

    PauliProduct() = default;
    /// Reduces every argument into its canonical range.
    PauliProduct(int64_t dimension, int64_t phase, std::vector<int64_t> xs, std::vector<int64_t> zs);

    static PauliProduct identity(int64_t dimension, size_t num_parties);
    /// X^x Z^z acting on a single party, identity elsewhere.
    static PauliProduct single(int64_t dimension, size_t num_parties, size_t party, int64_t x, int64_t z);

    size_t num_parties() const {
        return xs.size();
    }
    /// True when every x and z exponent vanishes (phase ignored).
    bool is_phase_only() const;
    bool is_identity() const {
        return phase == 0 && is_phase_only();
    }
    /// Parties on which the operator acts nontrivially.
    std::vector<size_t> support() const;

    bool operator==(const PauliProduct &) const = default;
    auto operator<=>(const PauliProduct &) const = default;

    /// `gamma | x_1 ... x_n | z_1 ... z_n`
    std::string str() const;
    static PauliProduct from_str(int64_t dimension, size_t num_parties, std::string_view text);
};

PauliProduct multiply(const PauliProduct &a, const PauliProduct &b);

inline PauliProduct operator*(const PauliProduct &a, const PauliProduct &b) {
    return multiply(a, b);
}

PauliProduct power(const PauliProduct &p, uint64_t k);

/// z_a . x_b - x_a . z_b (mod D). Zero exactly when the two operators commute.
int64_t symplectic_inner(const PauliProduct &a, const PauliProduct &b);

/// Smallest k >= 1 with p^k equal to the identity, phase included. Divides 2D.
uint64_t order(const PauliProduct &p);

Eigen::MatrixXcd dense_matrix(const PauliProduct &p, size_t budget = kDefaultMatrixBudget);

/// out = p |in>, with party 0 the most significant base-D digit of the index.
void apply_pauli(const PauliProduct &p, std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

/// D^n, throwing std::overflow_error if it exceeds `limit`.
size_t hilbert_dimension(int64_t dimension, size_t num_parties, size_t limit);

}  // namespace amekit

#endif

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

#ifndef AMEKIT_STATEVEC_H
#define AMEKIT_STATEVEC_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "amekit/stabgroup.h"

namespace amekit {

/// Default cap on D^n for dense state synthesis.
inline constexpr size_t kDefaultDenseBudget = 100'000;
inline constexpr double kStateTolerance = 1e-9;

/// Unit vector in (C^D)^{(x) n}. Index = sum_k j_k D^{n-1-k}: party 0 is the
/// most significant digit and each digit is the computational basis label.
struct DenseState {
    int64_t dimension = 2;
    size_t num_parties = 0;
    std::vector<std::complex<double>> amplitudes;

    static DenseState basis(int64_t dimension, size_t num_parties, size_t index);

    double norm() const;
    /// Scales to unit norm and rotates the global phase so the first
    /// amplitude of magnitude > 1e-9 is real and positive.
    void canonicalize();
};

/// |<a|b>|, i.e. state overlap modulo global phase.
double fidelity(const DenseState &a, const DenseState &b);

/// The unique +1 eigenvector of a valid stabilizer group, found by applying
/// the averaging projector (1/ord g) sum_k g^k of each generator to successive
/// computational basis seeds.
DenseState state_from_group(const StabilizerGroup &g, size_t budget = kDefaultDenseBudget);

struct ReducedDensity {
    std::vector<size_t> subset;
    Eigen::MatrixXcd matrix;
};

/// Partial trace onto `subset` (0-based party indices, any order, no repeats).
/// The result is ordered by sorted party index.
ReducedDensity reduced_density(const DenseState &psi, std::span<const size_t> subset);

struct MixednessCheck {
    bool verdict = false;
    double max_deviation = 0;
};

/// Elementwise max |rho - I/r| against `tol`.
MixednessCheck is_maximally_mixed(const ReducedDensity &rho, double tol = kStateTolerance);

struct DenseAmeCheck {
    bool is_ame = false;
    std::vector<size_t> worst_subset;
    double worst_deviation = 0;
};

/// Checks every floor(n/2)-party reduction, subsets in lexicographic order.
DenseAmeCheck verify_ame_dense(const DenseState &psi, double tol = kStateTolerance,
                               size_t budget = kDefaultDenseBudget);

/// Tensor product of states on the same parties, regrouped party-major: party
/// k's composite digit is the mixed-radix number (j_k^(1), ..., j_k^(m)) with
/// the first state's digit most significant.
DenseState tensor(std::span<const DenseState> states);

/// Relabels each party's basis: |j_1 ... j_n> -> |perm[j_1] ... perm[j_n]>.
DenseState apply_local_permutation(const DenseState &psi, std::span<const int64_t> perm);

/// Applies unitaries[k] to party k.
DenseState apply_local_unitaries(const DenseState &psi, std::span<const Eigen::MatrixXcd> unitaries);

/// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t k);

/// Dump: `D n` then D^n lines `re im`.
std::string format_state(const DenseState &psi);
DenseState parse_state(std::string_view text);

}  // namespace amekit

#endif

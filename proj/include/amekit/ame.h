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

#ifndef AMEKIT_AME_H
#define AMEKIT_AME_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "amekit/ring.h"
#include "amekit/stabgroup.h"
#include "amekit/statevec.h"

namespace amekit {

/// A result that would contradict the prime-power reduction (an AME input
/// with a non-AME factor or merge) or an internal cross-check. Always a bug.
struct ConsistencyViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// perm[j] = mixed-radix index of (j mod q_1, ..., j mod q_m), q_1 most significant.
/// As a basis relabeling U|j> = |perm[j]>, U X_D U^dag = X_{q_1} (x) ... (x) X_{q_m}
/// and U Z_D U^dag = Z_{q_1}^{c_1} (x) ... (x) Z_{q_m}^{c_m}.
std::vector<int64_t> crt_unitary(const PrimePowerFactorization &f);

/// c_i = (D/q_i)^{-1} mod q_i.
std::vector<int64_t> crt_z_coefficients(const PrimePowerFactorization &f);

std::vector<int64_t> invert_permutation(std::span<const int64_t> perm);

enum class AmeMethod { symbolic, dense, both };

std::string to_string(AmeMethod m);
AmeMethod parse_ame_method(const std::string &text);

enum class SymbolicStrategy {
    /// Enumerate when the group has at most kSymbolicEnumerationLimit elements.
    automatic,
    enumerate,
    /// Count support-restricted elements via relation lattices; never enumerates.
    lattice,
};

inline constexpr size_t kSymbolicEnumerationLimit = 1 << 16;

struct AmeVerdict {
    bool is_ame = false;
    AmeMethod method = AmeMethod::symbolic;
    /// Symbolic failure: a non-identity element supported inside witness_subset.
    std::optional<PauliProduct> witness;
    std::vector<size_t> witness_subset;
    /// Dense check: worst reduction.
    std::optional<double> worst_deviation;
    std::vector<size_t> worst_subset;
};

/// rho_S is maximally mixed exactly when the only stabilizer element supported
/// inside S is the identity; checks every floor(n/2)-subset lexicographically.
/// Requires a valid stabilizer-state group.
AmeVerdict verify_ame_symbolic(const StabilizerGroup &g, SymbolicStrategy strategy = SymbolicStrategy::automatic);

/// Same as verify_ame_symbolic but skips the validity check (for generators
/// already known to be valid, e.g. graph states in a search loop).
AmeVerdict verify_ame_symbolic_unchecked(const StabilizerGroup &g,
                                         SymbolicStrategy strategy = SymbolicStrategy::automatic);

/// Symbolic, dense or both. With `both`, disagreement throws ConsistencyViolation.
AmeVerdict verify_ame(const StabilizerGroup &g, AmeMethod method, double tol = kStateTolerance,
                      size_t dense_budget = kDefaultDenseBudget);

struct DecomposeOptions {
    /// Synthesize factor states and check them against the relabeled input.
    bool dense_verify = true;
    size_t dense_budget = kDefaultDenseBudget;
    double tol = kStateTolerance;
};

struct FactorDecomposition {
    PrimePowerFactorization factorization;
    std::vector<StabilizerGroup> factor_groups;
    std::optional<std::vector<DenseState>> factor_states;
    std::vector<int64_t> crt_permutation;
    /// |<tensor(factor states) | U^{(x)n} psi>| when dense verification ran.
    std::optional<double> fidelity;
};

FactorDecomposition decompose(const StabilizerGroup &g, const DecomposeOptions &options = {});

struct ReductionReport {
    AmeVerdict input;
    FactorDecomposition decomposition;
    std::vector<AmeVerdict> factors;
};

/// Decomposes g and checks each factor symbolically. An AME input with a
/// non-AME factor throws ConsistencyViolation.
ReductionReport reduce_ame(const StabilizerGroup &g, const DecomposeOptions &options = {});

struct MergedFactors {
    PrimePowerFactorization factorization;
    StabilizerGroup group;
    std::optional<DenseState> state;
    bool is_ame = false;
};

/// Pulls the tensor product of the selected factor groups back to one Pauli
/// group over Z_{d_M}, d_M = prod_{i in M} q_i, through the inverse CRT
/// relabeling for d_M.
MergedFactors merge_factors(const FactorDecomposition &d, std::span<const size_t> subset,
                            const DecomposeOptions &options = {});

/// Text report: factorization line, per-factor generator blocks, summary lines.
std::string format_decomposition_report(const ReductionReport &report, std::span<const MergedFactors> merges = {});

}  // namespace amekit

#endif

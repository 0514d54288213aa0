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

#ifndef AMEKIT_STABGROUP_H
#define AMEKIT_STABGROUP_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "amekit/pauli.h"
#include "amekit/ring.h"

namespace amekit {

inline constexpr size_t kDefaultEnumerationBudget = 1'000'000;

/// Raised when a phase cannot be carried between Pauli conventions. This
/// signals a convention bug, never a property of valid input.
struct PhaseConventionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A malformed generator file. `line` is 1-based (0 when not line specific).
struct ParseError : std::invalid_argument {
    size_t line;
    ParseError(size_t line, const std::string &message);
};

/// A generator list over Z_D. Nothing is assumed about the generators; use
/// validate() to check that they stabilize a unique state.
struct StabilizerGroup {
    int64_t dimension = 2;
    size_t num_parties = 0;
    std::vector<PauliProduct> generators;

    StabilizerGroup() = default;
    StabilizerGroup(int64_t dimension, size_t num_parties, std::vector<PauliProduct> generators = {});

    void add(PauliProduct p);

    /// Rows (x_1..x_n | z_1..z_n) of the generators.
    IntMatrix exponent_matrix() const;
};

struct ValidityReport {
    bool abelian = false;
    BigInt order = 0;
    bool phase_consistent = false;
    bool stabilizes_unique_state = false;
    /// A pair of non-commuting generator indices, when not abelian.
    std::optional<std::pair<size_t, size_t>> noncommuting_pair;
    /// A group element equal to lambda^gamma I with gamma != 0, when phase-inconsistent.
    std::optional<PauliProduct> phase_witness;

    std::string describe() const;
};

ValidityReport validate(const StabilizerGroup &g);

/// prod_i generators[i]^{c_i} (coefficients may be negative or huge).
PauliProduct relation_product(const StabilizerGroup &g, const IntMatrix &coefficients, size_t row);

/// Every element of the generated group, breadth-first from the identity.
/// Throws std::length_error when the closure outgrows `budget`.
std::vector<PauliProduct> enumerate_elements(const StabilizerGroup &g, size_t budget = kDefaultEnumerationBudget);

/// Generators raised to the CRT idempotent m_i: the q_i-primary part of g.
StabilizerGroup sylow_component(const StabilizerGroup &g, const PrimePowerFactorization &f, size_t i);

/// Re-express a q_i-primary component (all exponents divisible by D/q_i) in
/// the Pauli group over Z_{q_i}. The result is the exact image of each element
/// under conjugation by the CRT relabeling, restricted to the q_i sector:
///   x -> x mod q_i,  z -> c_i z mod q_i,  gamma -> gamma / (D/q_i) mod 2q_i,
/// where c_i = (D/q_i)^{-1} mod q_i.
StabilizerGroup project_to_factor(const StabilizerGroup &component, const PrimePowerFactorization &f, size_t i);

/// Generator file: `D n k`, then k lines `gamma | x_1 ... x_n | z_1 ... z_n`.
/// Lines whose first non-blank character is '#' and blank lines are ignored.
StabilizerGroup parse_generators(std::string_view text);
StabilizerGroup read_generators_file(const std::string &path);
std::string format_generators(const StabilizerGroup &g);

}  // namespace amekit

#endif

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

#ifndef AMEKIT_SEARCH_H
#define AMEKIT_SEARCH_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amekit/stabgroup.h"
#include "amekit/statevec.h"

namespace amekit {

inline constexpr uint64_t kDefaultSearchBudget = 100'000'000;

/// A Z_d-weighted simple graph: symmetric, zero diagonal, entries in [0, d).
struct GraphState {
    int64_t dimension = 2;
    size_t num_parties = 0;
    std::vector<int64_t> adjacency;  // row-major n x n

    GraphState() = default;
    GraphState(int64_t dimension, size_t num_parties);

    static GraphState from_upper_triangle(int64_t dimension, size_t num_parties, std::span<const int64_t> upper);
    /// a_{01} a_{02} ... a_{0,n-1} a_{12} ... a_{n-2,n-1}
    std::vector<int64_t> upper_triangle() const;

    int64_t operator()(size_t a, size_t b) const {
        return adjacency[a * num_parties + b];
    }
    /// Throws std::invalid_argument on a malformed adjacency matrix.
    void check() const;

    bool operator==(const GraphState &) const = default;
    auto operator<=>(const GraphState &) const = default;
};

/// Generators X_v prod_u Z_u^{A_vu}, phase 0.
StabilizerGroup graph_to_group(const GraphState &g);

enum class SearchMode { first_witness, exhaustive };

SearchMode parse_search_mode(const std::string &text);

struct SearchOptions {
    SearchMode mode = SearchMode::exhaustive;
    /// Candidate index range [shard_begin, shard_end), clamped to the space.
    uint64_t shard_begin = 0;
    std::optional<uint64_t> shard_end;
    uint64_t budget = kDefaultSearchBudget;
    /// Whether graph states are complete for stabilizer AME at this d (up to
    /// local Clifford equivalence). Defaults to "d is prime".
    std::optional<bool> graph_complete;
    size_t dense_budget = kDefaultDenseBudget;
    double tol = kStateTolerance;
};

struct SearchResult {
    size_t num_parties = 0;
    int64_t dimension = 0;
    uint64_t space_size = 0;
    uint64_t shard_begin = 0;
    uint64_t shard_end = 0;
    std::vector<GraphState> found;
    uint64_t searched = 0;
    /// The whole candidate space was enumerated.
    bool exhausted = false;
    bool graph_complete = false;

    /// The claim this run licenses, e.g. "no stabilizer AME(4,2)".
    std::string claim() const;
};

/// d^{n(n-1)/2}; throws std::overflow_error past 2^63.
uint64_t search_space_size(size_t num_parties, int64_t dimension);

/// Candidate `index` in row-major lexicographic order of the upper triangle
/// (a_{01} most significant).
GraphState candidate_at(size_t num_parties, int64_t dimension, uint64_t index);

/// Every witness is checked symbolically and, within the dense budget, densely.
SearchResult search_ame(size_t num_parties, int64_t dimension, const SearchOptions &options = {});

/// `n d : a_01 a_02 ... a_{n-2,n-1}`
std::string format_witness(const GraphState &g);
GraphState parse_witness(std::string_view line);

/// Witness lines, then either
///   `EXHAUSTED n=<n> d=<d> searched=<count> witnesses=<count>`
/// for a full enumeration or `SHARD ...` / `STOPPED ...` for partial runs, and
/// a `# claim:` comment.
std::string format_search_result(const SearchResult &r);

}  // namespace amekit

#endif

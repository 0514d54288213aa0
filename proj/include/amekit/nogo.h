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

#ifndef AMEKIT_NOGO_H
#define AMEKIT_NOGO_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amekit {

enum class FactStatus { no_ame, no_stab_ame, stab_ame_exists };

std::string to_string(FactStatus s);

/// Known (non-)existence at a prime-power local dimension.
struct KnownFact {
    size_t parties = 0;
    int64_t local_dim = 0;
    FactStatus status = FactStatus::no_ame;
    std::string source;

    /// noAME implies noStabAME.
    bool excludes_stabilizer() const {
        return status != FactStatus::stab_ame_exists;
    }
};

/// Contradictory facts, or an exclusion colliding with a witness.
struct FactConflict : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lines `n q status source...` with status in {noAME, noStabAME, stabAMEExists};
/// '#' comments. Throws std::invalid_argument (with line number) on bad input
/// and FactConflict when one (n, q) is both excluded and witnessed.
std::vector<KnownFact> load_facts(std::string_view text);

/// The single fact shipped by default: no AME(4,2).
std::string default_facts_text();

enum class CellStatus { excluded, witness, unknown };

std::string to_string(CellStatus s);

struct NoGoCell {
    CellStatus status = CellStatus::unknown;
    /// For excluded cells: one entry per triggering prime-power factor.
    /// For witnesses: the fact's source.
    std::vector<std::string> reasons;
};

struct NoGoTable {
    static constexpr size_t kMinParties = 2;
    static constexpr int64_t kMinDim = 2;

    size_t max_parties = 8;
    int64_t max_dim = 36;
    /// Row-major over n in [2, max_parties], D in [2, max_dim].
    std::vector<NoGoCell> cells;

    const NoGoCell &at(size_t n, int64_t d) const;
    NoGoCell &at(size_t n, int64_t d);
};

/// (n, D) is excluded iff some prime-power factor q of D has a fact excluding
/// stabilizer AME(n, q). Witness facts mark their own cell. A cell that is
/// both excluded and witnessed throws FactConflict.
NoGoTable propagate(const std::vector<KnownFact> &facts, size_t max_parties = 8, int64_t max_dim = 36);

/// Grid CSV: header `n\D,2,3,...`, then one row per n.
std::string emit_csv(const NoGoTable &t);
/// Long CSV `n,D,status,reason` listing every non-unknown cell with its reason chain.
std::string emit_reasons_csv(const NoGoTable &t);
/// Standalone SVG: red excluded, green witness, gray unknown.
std::string emit_svg(const NoGoTable &t);

/// Statuses read back from emit_csv output (reasons are not carried by the grid).
NoGoTable parse_csv(std::string_view text);

}  // namespace amekit

#endif

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

#include "amekit/search.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "amekit/ame.h"
#include "amekit/ring.h"

namespace amekit {

GraphState::GraphState(int64_t dimension, size_t num_parties)
    : dimension(dimension), num_parties(num_parties), adjacency(num_parties * num_parties, 0) {
    if (dimension < 2 || num_parties < 1) {
        throw std::invalid_argument("GraphState: need d >= 2 and n >= 1");
    }
}

GraphState GraphState::from_upper_triangle(int64_t dimension, size_t num_parties, std::span<const int64_t> upper) {
    GraphState g(dimension, num_parties);
    if (upper.size() != num_parties * (num_parties - 1) / 2) {
        throw std::invalid_argument(
            "GraphState: expected " + std::to_string(num_parties * (num_parties - 1) / 2) +
            " upper-triangle entries, got " + std::to_string(upper.size()));
    }
    size_t idx = 0;
    for (size_t a = 0; a < num_parties; a++) {
        for (size_t b = a + 1; b < num_parties; b++) {
            int64_t w = upper[idx++];
            if (w < 0 || w >= dimension) {
                throw std::invalid_argument("GraphState: edge weight " + std::to_string(w) + " outside [0, d)");
            }
            g.adjacency[a * num_parties + b] = w;
            g.adjacency[b * num_parties + a] = w;
        }
    }
    return g;
}

std::vector<int64_t> GraphState::upper_triangle() const {
    std::vector<int64_t> out;
    for (size_t a = 0; a < num_parties; a++) {
        for (size_t b = a + 1; b < num_parties; b++) {
            out.push_back((*this)(a, b));
        }
    }
    return out;
}

void GraphState::check() const {
    if (adjacency.size() != num_parties * num_parties) {
        throw std::invalid_argument("GraphState: adjacency must be n x n");
    }
    for (size_t a = 0; a < num_parties; a++) {
        if ((*this)(a, a) != 0) {
            throw std::invalid_argument("GraphState: nonzero diagonal entry");
        }
        for (size_t b = 0; b < num_parties; b++) {
            int64_t w = (*this)(a, b);
            if (w < 0 || w >= dimension) {
                throw std::invalid_argument("GraphState: entry outside [0, d)");
            }
            if (w != (*this)(b, a)) {
                throw std::invalid_argument("GraphState: adjacency is not symmetric");
            }
        }
    }
}

StabilizerGroup graph_to_group(const GraphState &g) {
    g.check();
    StabilizerGroup out(g.dimension, g.num_parties);
    for (size_t v = 0; v < g.num_parties; v++) {
        std::vector<int64_t> xs(g.num_parties, 0), zs(g.num_parties, 0);
        xs[v] = 1;
        for (size_t u = 0; u < g.num_parties; u++) {
            zs[u] = g(v, u);
        }
        out.add(PauliProduct(g.dimension, 0, std::move(xs), std::move(zs)));
    }
    return out;
}

SearchMode parse_search_mode(const std::string &text) {
    if (text == "exhaustive") {
        return SearchMode::exhaustive;
    }
    if (text == "first" || text == "first-witness" || text == "firstWitness") {
        return SearchMode::first_witness;
    }
    throw std::invalid_argument("unknown search mode '" + text + "' (expected exhaustive|first)");
}

uint64_t search_space_size(size_t num_parties, int64_t dimension) {
    const size_t edges = num_parties * (num_parties - 1) / 2;
    uint64_t total = 1;
    for (size_t e = 0; e < edges; e++) {
        if (total > (uint64_t{1} << 63) / static_cast<uint64_t>(dimension)) {
            throw std::overflow_error("search space d^(n(n-1)/2) exceeds 2^63");
        }
        total *= static_cast<uint64_t>(dimension);
    }
    return total;
}

GraphState candidate_at(size_t num_parties, int64_t dimension, uint64_t index) {
    const size_t edges = num_parties * (num_parties - 1) / 2;
    std::vector<int64_t> upper(edges);
    for (size_t e = edges; e-- > 0;) {
        upper[e] = static_cast<int64_t>(index % static_cast<uint64_t>(dimension));
        index /= static_cast<uint64_t>(dimension);
    }
    if (index != 0) {
        throw std::out_of_range("candidate_at: index beyond the search space");
    }
    return GraphState::from_upper_triangle(dimension, num_parties, upper);
}

std::string SearchResult::claim() const {
    std::string tag = "(" + std::to_string(num_parties) + "," + std::to_string(dimension) + ")";
    if (!found.empty()) {
        return "graph-state AME" + tag + " exists";
    }
    if (!exhausted) {
        return "none (partial search)";
    }
    return graph_complete ? "no stabilizer AME" + tag : "no graph-state AME" + tag;
}

SearchResult search_ame(size_t num_parties, int64_t dimension, const SearchOptions &options) {
    if (num_parties < 2 || dimension < 2) {
        throw std::invalid_argument("search_ame: need n >= 2 and d >= 2");
    }
    SearchResult r;
    r.num_parties = num_parties;
    r.dimension = dimension;
    r.space_size = search_space_size(num_parties, dimension);
    r.shard_begin = std::min(options.shard_begin, r.space_size);
    r.shard_end = std::min(options.shard_end.value_or(r.space_size), r.space_size);
    if (r.shard_end < r.shard_begin) {
        throw std::invalid_argument("search_ame: shard end precedes shard start");
    }
    r.graph_complete = options.graph_complete.value_or(factorize(dimension).size() == 1 &&
                                                       factorize(dimension)[0].exponent == 1);
    if (options.mode == SearchMode::exhaustive && r.shard_end - r.shard_begin > options.budget) {
        throw std::length_error(
            "search_ame: " + std::to_string(r.shard_end - r.shard_begin) + " candidates exceed the search budget of " +
            std::to_string(options.budget));
    }

    const size_t dense_size = [&] {
        try {
            return hilbert_dimension(dimension, num_parties, options.dense_budget);
        } catch (const std::overflow_error &) {
            return size_t{0};
        }
    }();

    for (uint64_t idx = r.shard_begin; idx < r.shard_end; idx++) {
        GraphState candidate = candidate_at(num_parties, dimension, idx);
        StabilizerGroup group = graph_to_group(candidate);
        r.searched++;
        if (!verify_ame_symbolic_unchecked(group).is_ame) {
            continue;
        }
        if (dense_size != 0) {
            DenseAmeCheck dense = verify_ame_dense(state_from_group(group, options.dense_budget), options.tol,
                                                   options.dense_budget);
            if (!dense.is_ame) {
                throw ConsistencyViolation("search_ame: symbolic AME witness fails the dense check: " +
                                       format_witness(candidate));
            }
        }
        r.found.push_back(std::move(candidate));
        if (options.mode == SearchMode::first_witness) {
            break;
        }
    }
    r.exhausted = r.shard_begin == 0 && r.searched == r.space_size;
    return r;
}

std::string format_witness(const GraphState &g) {
    std::ostringstream out;
    out << g.num_parties << " " << g.dimension << " :";
    for (int64_t w : g.upper_triangle()) {
        out << " " << w;
    }
    return out.str();
}

GraphState parse_witness(std::string_view line) {
    size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("witness line must look like 'n d : a_01 a_02 ...'");
    }
    std::istringstream head{std::string(line.substr(0, colon))};
    long long n = 0, d = 0;
    std::string extra;
    if (!(head >> n >> d) || (head >> extra) || n < 1 || d < 2) {
        throw std::invalid_argument("witness line must start with 'n d :'");
    }
    std::istringstream tail{std::string(line.substr(colon + 1))};
    std::vector<int64_t> upper;
    long long w = 0;
    while (tail >> w) {
        upper.push_back(w);
    }
    if (!tail.eof()) {
        throw std::invalid_argument("witness line has a non-integer edge weight");
    }
    return GraphState::from_upper_triangle(d, static_cast<size_t>(n), upper);
}

std::string format_search_result(const SearchResult &r) {
    std::ostringstream out;
    for (const auto &g : r.found) {
        out << format_witness(g) << "\n";
    }
    const std::string tail = " n=" + std::to_string(r.num_parties) + " d=" + std::to_string(r.dimension) +
                             " searched=" + std::to_string(r.searched) + " witnesses=" + std::to_string(r.found.size());
    if (r.exhausted) {
        out << "EXHAUSTED" << tail << "\n";
    } else if (r.shard_begin + r.searched == r.shard_end) {
        out << "SHARD start=" << r.shard_begin << " end=" << r.shard_end << tail << "\n";
    } else {
        out << "STOPPED start=" << r.shard_begin << " next=" << r.shard_begin + r.searched << tail << "\n";
    }
    out << "# claim: " << r.claim() << "\n";
    return out.str();
}

}  // namespace amekit

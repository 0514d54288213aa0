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

#include "amekit/ame.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace amekit;
using namespace amekit::testing;

TEST(graph_state, construction) {
    auto g = GraphState::from_upper_triangle(3, 3, std::vector<int64_t>{1, 2, 0});
    EXPECT_EQ(g(0, 1), 1);
    EXPECT_EQ(g(1, 0), 1);
    EXPECT_EQ(g(0, 2), 2);
    EXPECT_EQ(g(1, 2), 0);
    EXPECT_EQ(g.upper_triangle(), (std::vector<int64_t>{1, 2, 0}));
    EXPECT_THROW(GraphState::from_upper_triangle(3, 3, std::vector<int64_t>{1, 2}), std::invalid_argument);
    EXPECT_THROW(GraphState::from_upper_triangle(3, 3, std::vector<int64_t>{1, 2, 3}), std::invalid_argument);

    GraphState bad(2, 2);
    bad.adjacency = {1, 0, 0, 0};
    EXPECT_THROW(bad.check(), std::invalid_argument);
    bad.adjacency = {0, 1, 0, 0};
    EXPECT_THROW(bad.check(), std::invalid_argument);
    EXPECT_THROW(graph_to_group(bad), std::invalid_argument);
}

TEST(graph_to_group, examples) {
    auto empty = graph_to_group(GraphState(2, 2));
    EXPECT_EQ(empty.generators[0], PauliProduct::single(2, 2, 0, 1, 0));
    EXPECT_EQ(empty.generators[1], PauliProduct::single(2, 2, 1, 1, 0));
    std::vector<std::complex<double>> plus(4, 0.5);
    EXPECT_GT(fidelity(state_from_group(empty), DenseState{2, 2, plus}), 1 - 1e-12);

    auto edge = graph_to_group(GraphState::from_upper_triangle(2, 2, std::vector<int64_t>{1}));
    EXPECT_TRUE(verify_ame_symbolic(edge).is_ame);
    EXPECT_TRUE(verify_ame_dense(state_from_group(edge)).is_ame);

    auto triangle = graph_to_group(GraphState::from_upper_triangle(3, 3, std::vector<int64_t>{1, 1, 1}));
    EXPECT_TRUE(verify_ame_symbolic(triangle).is_ame);
}

TEST(graph_to_group, always_valid) {
    std::mt19937_64 rng(51);
    for (int64_t d : {2, 3, 4, 6, 9, 10}) {
        for (size_t n = 1; n <= 5; n++) {
            auto r = validate(graph_to_group(random_graph(rng, d, n)));
            EXPECT_TRUE(r.stabilizes_unique_state);
            BigInt expected = 1;
            for (size_t k = 0; k < n; k++) {
                expected *= d;
            }
            EXPECT_EQ(r.order, expected);
        }
    }
}

TEST(search_space, ordering) {
    EXPECT_EQ(search_space_size(4, 2), 64u);
    EXPECT_EQ(search_space_size(4, 3), 729u);
    EXPECT_EQ(search_space_size(2, 7), 7u);
    EXPECT_THROW(search_space_size(12, 6), std::overflow_error);
    EXPECT_EQ(candidate_at(3, 3, 0).upper_triangle(), (std::vector<int64_t>{0, 0, 0}));
    EXPECT_EQ(candidate_at(3, 3, 1).upper_triangle(), (std::vector<int64_t>{0, 0, 1}));
    EXPECT_EQ(candidate_at(3, 3, 9).upper_triangle(), (std::vector<int64_t>{1, 0, 0}));
    EXPECT_EQ(candidate_at(3, 3, 26).upper_triangle(), (std::vector<int64_t>{2, 2, 2}));
    EXPECT_THROW(candidate_at(3, 3, 27), std::out_of_range);
    for (uint64_t i = 1; i < 64; i++) {
        EXPECT_LT(candidate_at(4, 2, i - 1).upper_triangle(), candidate_at(4, 2, i).upper_triangle());
    }
}

TEST(search_ame, no_ame_4_2) {
    auto r = search_ame(4, 2);
    EXPECT_TRUE(r.found.empty());
    EXPECT_EQ(r.searched, 64u);
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(r.claim(), "no stabilizer AME(4,2)");
}

TEST(search_ame, witness_4_3) {
    SearchOptions opts;
    opts.mode = SearchMode::first_witness;
    auto r = search_ame(4, 3, opts);
    ASSERT_EQ(r.found.size(), 1u);
    EXPECT_FALSE(r.exhausted);
    auto g = graph_to_group(r.found[0]);
    EXPECT_TRUE(verify_ame_symbolic(g).is_ame);
    auto dense = verify_ame_dense(state_from_group(g));
    EXPECT_TRUE(dense.is_ame);
    EXPECT_LT(dense.worst_deviation, 1e-9);
    EXPECT_EQ(r.claim(), "graph-state AME(4,3) exists");
}

TEST(search_ame, exhaustive_4_3_matches_brute_force) {
    auto r = search_ame(4, 3);
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(r.searched, 729u);
    std::vector<GraphState> expected;
    for (uint64_t i = 0; i < 729; i++) {
        auto c = candidate_at(4, 3, i);
        if (verify_ame_dense(state_from_group(graph_to_group(c))).is_ame) {
            expected.push_back(c);
        }
    }
    EXPECT_FALSE(expected.empty());
    EXPECT_EQ(r.found, expected);
}

TEST(search_ame, bipartite_witnesses) {
    for (int64_t d : {2, 3, 4, 5}) {
        auto r = search_ame(2, d);
        EXPECT_TRUE(r.exhausted);
        EXPECT_EQ(r.found.size(), static_cast<size_t>(d - 1 - (d == 4 ? 1 : 0))) << d;
        for (const auto &w : r.found) {
            EXPECT_TRUE(verify_ame_dense(state_from_group(graph_to_group(w))).is_ame);
        }
    }
}

TEST(search_ame, deterministic) {
    auto a = search_ame(3, 4), b = search_ame(3, 4);
    EXPECT_EQ(a.searched, b.searched);
    EXPECT_EQ(a.found, b.found);
    EXPECT_EQ(format_search_result(a), format_search_result(b));
}

TEST(search_ame, shards_partition_the_space) {
    auto whole = search_ame(4, 3);
    std::vector<GraphState> merged;
    uint64_t searched = 0;
    for (uint64_t start = 0; start < 729; start += 100) {
        SearchOptions opts;
        opts.shard_begin = start;
        opts.shard_end = start + 100;
        auto part = search_ame(4, 3, opts);
        EXPECT_FALSE(part.exhausted);
        searched += part.searched;
        merged.insert(merged.end(), part.found.begin(), part.found.end());
        EXPECT_EQ(part.claim(), part.found.empty() ? "none (partial search)" : "graph-state AME(4,3) exists");
    }
    EXPECT_EQ(searched, 729u);
    EXPECT_EQ(merged, whole.found);

    SearchOptions backwards;
    backwards.shard_begin = 10;
    backwards.shard_end = 5;
    EXPECT_THROW(search_ame(4, 3, backwards), std::invalid_argument);
}

TEST(search_ame, budget_and_arguments) {
    SearchOptions opts;
    opts.budget = 63;
    EXPECT_THROW(search_ame(4, 2, opts), std::length_error);
    opts.mode = SearchMode::first_witness;
    EXPECT_NO_THROW(search_ame(4, 2, opts));
    EXPECT_THROW(search_ame(1, 2), std::invalid_argument);
    EXPECT_THROW(search_ame(2, 1), std::invalid_argument);
}

TEST(search_ame, completeness_flag_controls_claim) {
    auto composite = search_ame(4, 2, {.graph_complete = false});
    EXPECT_EQ(composite.claim(), "no graph-state AME(4,2)");
    EXPECT_FALSE(search_ame(2, 4).graph_complete);
    EXPECT_FALSE(search_ame(2, 6).graph_complete);
    EXPECT_TRUE(search_ame(2, 5).graph_complete);
}

TEST(witness_format, round_trip) {
    auto g = GraphState::from_upper_triangle(3, 4, std::vector<int64_t>{1, 0, 2, 2, 0, 1});
    EXPECT_EQ(format_witness(g), "4 3 : 1 0 2 2 0 1");
    EXPECT_EQ(parse_witness(format_witness(g)), g);
    EXPECT_THROW(parse_witness("4 3 1 0 2"), std::invalid_argument);
    EXPECT_THROW(parse_witness("4 3 : 1 0"), std::invalid_argument);
    EXPECT_THROW(parse_witness("2 3 : 5"), std::invalid_argument);
}

TEST(search_result, certificate_lines) {
    auto text = format_search_result(search_ame(4, 2));
    EXPECT_NE(text.find("EXHAUSTED n=4 d=2 searched=64 witnesses=0\n"), std::string::npos);
    EXPECT_NE(text.find("# claim: no stabilizer AME(4,2)\n"), std::string::npos);

    auto first = format_search_result(search_ame(2, 3, {.mode = SearchMode::first_witness}));
    EXPECT_EQ(first.substr(0, first.find('\n')), "2 3 : 1");
    EXPECT_EQ(first.find("EXHAUSTED"), std::string::npos);
}

TEST(search_mode, names) {
    EXPECT_EQ(parse_search_mode("exhaustive"), SearchMode::exhaustive);
    EXPECT_EQ(parse_search_mode("first"), SearchMode::first_witness);
    EXPECT_EQ(parse_search_mode("firstWitness"), SearchMode::first_witness);
    EXPECT_THROW(parse_search_mode("random"), std::invalid_argument);
}

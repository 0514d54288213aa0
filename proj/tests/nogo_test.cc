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

#include "amekit/nogo.h"

#include <fstream>
#include <random>
#include <sstream>

#include "amekit/ring.h"
#include "gtest/gtest.h"

using namespace amekit;

namespace {

size_t count(const std::string &haystack, const std::string &needle) {
    size_t n = 0;
    for (size_t pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
        n++;
    }
    return n;
}

}  // namespace

TEST(load_facts, examples) {
    auto facts = load_facts("# header\n4 2 noAME higuchi2000\n\n2 2 stabAMEExists bell state\n3 9 noStabAME x # tail\n");
    ASSERT_EQ(facts.size(), 3u);
    EXPECT_EQ(facts[0].parties, 4u);
    EXPECT_EQ(facts[0].local_dim, 2);
    EXPECT_EQ(facts[0].status, FactStatus::no_ame);
    EXPECT_EQ(facts[0].source, "higuchi2000");
    EXPECT_TRUE(facts[0].excludes_stabilizer());
    EXPECT_EQ(facts[1].status, FactStatus::stab_ame_exists);
    EXPECT_EQ(facts[1].source, "bell state");
    EXPECT_FALSE(facts[1].excludes_stabilizer());
    EXPECT_TRUE(facts[2].excludes_stabilizer());
    EXPECT_EQ(to_string(FactStatus::no_stab_ame), "noStabAME");
}

TEST(load_facts, errors_carry_line_numbers) {
    try {
        load_facts("4 2 noAME ok\n4 6 noAME x\n");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("prime power"), std::string::npos);
    }
    EXPECT_THROW(load_facts("4 2 maybe x\n"), std::invalid_argument);
    EXPECT_THROW(load_facts("4 two noAME x\n"), std::invalid_argument);
    EXPECT_THROW(load_facts("1 2 noAME x\n"), std::invalid_argument);
    EXPECT_NO_THROW(load_facts("4 2 noAME a\n4 2 noAME b\n"));
}

TEST(load_facts, conflict) {
    EXPECT_THROW(load_facts("2 2 noAME bogus\n2 2 stabAMEExists bell\n"), FactConflict);
    EXPECT_THROW(load_facts("3 4 stabAMEExists w\n3 4 noStabAME x\n"), FactConflict);
}

TEST(default_facts, single_line) {
    auto facts = load_facts(default_facts_text());
    ASSERT_EQ(facts.size(), 1u);
    EXPECT_EQ(facts[0].parties, 4u);
    EXPECT_EQ(facts[0].local_dim, 2);
    EXPECT_EQ(facts[0].status, FactStatus::no_ame);
}

TEST(default_facts, matches_shipped_file) {
    std::ifstream in(std::string(AMEKIT_DATA_DIR) + "/default_facts.txt");
    ASSERT_TRUE(in);
    std::ostringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str(), default_facts_text());
}

TEST(propagate, n4_row) {
    auto t = propagate(load_facts(default_facts_text()));
    std::vector<int64_t> excluded;
    for (int64_t d = 2; d <= 36; d++) {
        if (t.at(4, d).status == CellStatus::excluded) {
            excluded.push_back(d);
            EXPECT_EQ(t.at(4, d).reasons.size(), 1u);
        }
    }
    EXPECT_EQ(excluded, (std::vector<int64_t>{2, 6, 10, 14, 18, 22, 26, 30, 34}));
    for (size_t n = 2; n <= 8; n++) {
        for (int64_t d = 2; d <= 36; d++) {
            if (n != 4) {
                EXPECT_EQ(t.at(n, d).status, CellStatus::unknown);
            }
        }
    }
}

TEST(propagate, more_rows) {
    auto none = propagate({});
    for (const auto &c : none.cells) {
        EXPECT_EQ(c.status, CellStatus::unknown);
    }
    auto t = propagate(load_facts("7 2 noAME user\n"), 8, 20);
    for (int64_t d = 2; d <= 20; d++) {
        EXPECT_EQ(t.at(7, d).status == CellStatus::excluded, d % 4 == 2) << d;
    }
    auto w = propagate(load_facts("2 2 stabAMEExists bell\n"), 3, 3);
    EXPECT_EQ(w.at(2, 2).status, CellStatus::witness);
    EXPECT_EQ(w.at(2, 2).reasons, (std::vector<std::string>{"bell"}));
    EXPECT_THROW(w.at(4, 2), std::out_of_range);
    EXPECT_THROW(w.at(2, 4), std::out_of_range);
}

TEST(propagate, reasons_list_each_factor) {
    auto t = propagate(load_facts("3 2 noStabAME a\n3 3 noStabAME b\n"), 3, 12);
    EXPECT_EQ(t.at(3, 6).reasons.size(), 2u);
    EXPECT_EQ(t.at(3, 12).reasons.size(), 1u);
    EXPECT_EQ(t.at(3, 4).status, CellStatus::unknown);
}

TEST(propagate, witness_colliding_with_exclusion) {
    EXPECT_THROW(propagate(load_facts("4 2 noAME x\n4 2 stabAMEExists y\n")), FactConflict);
}

TEST(propagate, monotone_and_divisor_coherent) {
    std::mt19937_64 rng(61);
    const std::vector<int64_t> prime_powers{2, 3, 4, 5, 7, 8, 9};
    for (int trial = 0; trial < 20; trial++) {
        std::vector<KnownFact> facts;
        std::uniform_int_distribution<size_t> party(2, 8), pick(0, prime_powers.size() - 1);
        NoGoTable before = propagate(facts, 8, 40);
        for (int k = 0; k < 4; k++) {
            facts.push_back({party(rng), prime_powers[pick(rng)], FactStatus::no_stab_ame, "r"});
            NoGoTable after = propagate(facts, 8, 40);
            for (size_t i = 0; i < after.cells.size(); i++) {
                if (before.cells[i].status == CellStatus::excluded) {
                    EXPECT_EQ(after.cells[i].status, CellStatus::excluded);
                }
            }
            before = after;
        }
        for (size_t n = 2; n <= 8; n++) {
            for (int64_t d = 2; d <= 40; d++) {
                if (before.at(n, d).status != CellStatus::excluded) {
                    continue;
                }
                for (const auto &f : factorize(d).factors) {
                    bool hit = false;
                    for (const auto &fact : facts) {
                        hit = hit || (fact.parties == n && fact.local_dim == f.prime_power);
                    }
                    if (!hit) {
                        continue;
                    }
                    for (int64_t mult = 2 * d; mult <= 40; mult += d) {
                        if (gcd_nonneg(mult / d, f.prime) == 1) {
                            EXPECT_EQ(before.at(n, mult).status, CellStatus::excluded) << n << " " << mult;
                        }
                    }
                }
            }
        }
    }
}

TEST(emit, csv_layout_and_round_trip) {
    auto t = propagate(load_facts(default_facts_text() + "2 3 stabAMEExists bell3\n"), 5, 10);
    auto csv = emit_csv(t);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n\\D,2,3,4,5,6,7,8,9,10");
    EXPECT_NE(csv.find("\n4,excluded,unknown,unknown,unknown,excluded,unknown,unknown,unknown,excluded\n"),
              std::string::npos);
    auto back = parse_csv(csv);
    EXPECT_EQ(back.max_parties, 5u);
    EXPECT_EQ(back.max_dim, 10);
    ASSERT_EQ(back.cells.size(), t.cells.size());
    for (size_t i = 0; i < t.cells.size(); i++) {
        EXPECT_EQ(back.cells[i].status, t.cells[i].status);
    }
    EXPECT_EQ(emit_csv(back), csv);
    EXPECT_THROW(parse_csv("n\\D,2\n2,maybe\n"), std::invalid_argument);
}

TEST(emit, reasons_csv) {
    auto t = propagate(load_facts(default_facts_text()), 4, 6);
    auto text = emit_reasons_csv(t);
    EXPECT_EQ(text.substr(0, text.find('\n')), "n,D,status,reason");
    EXPECT_EQ(count(text, "\n4,"), 2u);
    EXPECT_NE(text.find("4,6,excluded,"), std::string::npos);
    EXPECT_NE(text.find("higuchi2000"), std::string::npos);
}

TEST(emit, svg) {
    auto t = propagate(load_facts(default_facts_text()));
    auto svg = emit_svg(t);
    EXPECT_EQ(svg, emit_svg(propagate(load_facts(default_facts_text()))));
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    // 9 red cells plus one legend swatch each.
    EXPECT_EQ(count(svg, "fill=\"#d62728\""), 10u);
    EXPECT_EQ(count(svg, "fill=\"#2ca02c\""), 1u);

    NoGoTable tiny = propagate({}, 2, 2);
    ASSERT_EQ(tiny.cells.size(), 1u);
    auto one = emit_svg(tiny);
    EXPECT_EQ(count(one, "fill=\"#c7c7c7\""), 2u);
    EXPECT_EQ(count(one, "fill=\"#d62728\""), 1u);
}

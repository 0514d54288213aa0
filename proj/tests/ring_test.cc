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

#include "amekit/ring.h"

#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace amekit;

namespace {

IntMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols, int64_t lo, int64_t hi) {
    std::uniform_int_distribution<int64_t> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m(r, c) = dist(rng);
        }
    }
    return m;
}

// gcd of all k x k minors (the k-th determinantal divisor), by brute force.
BigInt determinantal_divisor(const IntMatrix &m, size_t k) {
    std::vector<size_t> rows(k), cols(k);
    BigInt g = 0;
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
        do {
            IntMatrix minor(k, k);
            size_t ri = 0;
            for (size_t r = 0; r < m.rows(); r++) {
                if (!rsel[r]) {
                    continue;
                }
                size_t ci = 0;
                for (size_t c = 0; c < m.cols(); c++) {
                    if (csel[c]) {
                        minor(ri, ci++) = m(r, c);
                    }
                }
                ri++;
            }
            g = boost::multiprecision::gcd(g, abs(determinant(minor)));
        } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    return g;
}

}  // namespace

TEST(factorize, examples) {
    auto six = factorize(6);
    ASSERT_EQ(six.size(), 2u);
    EXPECT_EQ(six[0], (PrimePowerFactor{2, 1, 2}));
    EXPECT_EQ(six[1], (PrimePowerFactor{3, 1, 3}));

    auto four = factorize(4);
    ASSERT_EQ(four.size(), 1u);
    EXPECT_EQ(four[0], (PrimePowerFactor{2, 2, 4}));

    auto twelve = factorize(12);
    ASSERT_EQ(twelve.size(), 2u);
    EXPECT_EQ(twelve[0], (PrimePowerFactor{2, 2, 4}));
    EXPECT_EQ(twelve[1], (PrimePowerFactor{3, 1, 3}));
}

TEST(factorize, rejects_small) {
    EXPECT_THROW(factorize(1), std::invalid_argument);
    EXPECT_THROW(factorize(0), std::invalid_argument);
    EXPECT_THROW(factorize(-6), std::invalid_argument);
}

TEST(factorize, invariants) {
    for (int64_t d = 2; d <= 2000; d++) {
        auto f = factorize(d);
        int64_t product = 1;
        for (size_t i = 0; i < f.size(); i++) {
            EXPECT_GE(f[i].exponent, 1);
            int64_t pp = 1;
            for (int e = 0; e < f[i].exponent; e++) {
                pp *= f[i].prime;
            }
            EXPECT_EQ(pp, f[i].prime_power);
            product *= f[i].prime_power;
            if (i) {
                EXPECT_LT(f[i - 1].prime, f[i].prime);
            }
            for (int64_t p = 2; p < f[i].prime; p++) {
                EXPECT_NE(f[i].prime % p, 0) << f[i].prime << " is not prime";
            }
        }
        EXPECT_EQ(product, d);
    }
}

TEST(crt, split_examples) {
    EXPECT_EQ(crt_split(5, factorize(6)), (std::vector<int64_t>{1, 2}));
    EXPECT_EQ(crt_split(0, factorize(30)), (std::vector<int64_t>{0, 0, 0}));
    EXPECT_EQ(crt_split(7, factorize(12)), (std::vector<int64_t>{3, 1}));
    EXPECT_THROW(crt_split(6, factorize(6)), std::out_of_range);
    EXPECT_THROW(crt_split(-1, factorize(6)), std::out_of_range);
}

TEST(crt, combine_examples) {
    std::vector<int64_t> r{1, 2};
    EXPECT_EQ(crt_combine(r, factorize(6)), 5);
    std::vector<int64_t> zero{0, 0, 0};
    EXPECT_EQ(crt_combine(zero, factorize(30)), 0);
    std::vector<int64_t> bad{2, 0};
    EXPECT_THROW(crt_combine(bad, factorize(6)), std::out_of_range);
    std::vector<int64_t> short_list{1};
    EXPECT_THROW(crt_combine(short_list, factorize(6)), std::invalid_argument);
}

TEST(crt, round_trip_all_small_dimensions) {
    for (int64_t d = 2; d <= 60; d++) {
        auto f = factorize(d);
        std::set<std::vector<int64_t>> images;
        for (int64_t j = 0; j < d; j++) {
            auto parts = crt_split(j, f);
            EXPECT_EQ(crt_combine(parts, f), j);
            images.insert(parts);
        }
        EXPECT_EQ(images.size(), static_cast<size_t>(d));
    }
}

TEST(crt, combine_is_bijection) {
    for (int64_t d : {6, 12, 30}) {
        auto f = factorize(d);
        std::set<int64_t> hit;
        std::vector<int64_t> digits(f.size(), 0);
        while (true) {
            int64_t j = crt_combine(digits, f);
            EXPECT_EQ(crt_split(j, f), digits);
            hit.insert(j);
            size_t i = 0;
            for (; i < f.size(); i++) {
                if (++digits[i] < f[i].prime_power) {
                    break;
                }
                digits[i] = 0;
            }
            if (i == f.size()) {
                break;
            }
        }
        EXPECT_EQ(hit.size(), static_cast<size_t>(d));
    }
}

TEST(sylow_exponent, examples) {
    EXPECT_EQ(sylow_exponent(factorize(6), 0), 3);
    EXPECT_EQ(sylow_exponent(factorize(6), 1), 4);
    EXPECT_EQ(sylow_exponent(factorize(12), 0), 9);
    EXPECT_EQ(sylow_exponent(factorize(7), 0), 1);
    EXPECT_THROW(sylow_exponent(factorize(6), 2), std::out_of_range);
}

TEST(sylow_exponent, orthogonal_idempotents) {
    for (int64_t d = 2; d <= 60; d++) {
        auto f = factorize(d);
        int64_t sum = 0;
        for (size_t i = 0; i < f.size(); i++) {
            int64_t mi = sylow_exponent(f, i);
            EXPECT_EQ(mi % f[i].prime_power, 1 % f[i].prime_power);
            EXPECT_EQ(mi * mi % d, mi);
            for (size_t j = 0; j < f.size(); j++) {
                if (j != i) {
                    EXPECT_EQ(mi % f[j].prime_power, 0);
                    EXPECT_EQ(mi * sylow_exponent(f, j) % d, 0);
                }
            }
            sum += mi;
        }
        EXPECT_EQ(sum % d, 1 % d) << "D=" << d;
    }
}

TEST(mod_inverse, basics) {
    EXPECT_EQ(mod_inverse(3, 7), 5);
    EXPECT_EQ(mod_inverse(-1, 5), 4);
    EXPECT_THROW(mod_inverse(2, 4), std::invalid_argument);
}

TEST(smith_normal_form, examples) {
    EXPECT_EQ(smith_normal_form(IntMatrix::identity(2)).diagonal, (std::vector<BigInt>{1, 1}));
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal, (std::vector<BigInt>{1, 6}));
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4}, {4, 8}}).diagonal, (std::vector<BigInt>{2, 0}));
    auto empty = smith_normal_form(IntMatrix(0, 3));
    EXPECT_TRUE(empty.diagonal.empty());
    EXPECT_EQ(empty.right, IntMatrix::identity(3));
}

TEST(smith_normal_form, matches_determinantal_divisors) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 300; trial++) {
        size_t rows = 1 + rng() % 3, cols = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, rows, cols, -6, 6);
        auto snf = smith_normal_form(m);
        BigInt prefix = 1;
        for (size_t k = 1; k <= std::min(rows, cols); k++) {
            prefix *= snf.diagonal[k - 1];
            EXPECT_EQ(prefix, determinantal_divisor(m, k)) << m.str();
        }
    }
}

TEST(smith_normal_form, transforms_are_unimodular_and_reconstruct) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; trial++) {
        size_t rows = rng() % 6, cols = rng() % 7;
        IntMatrix m = random_matrix(rng, rows, cols, -20, 20);
        auto snf = smith_normal_form(m);
        IntMatrix diag = snf.left * m * snf.right;
        ASSERT_TRUE(diag.is_diagonal());
        for (size_t i = 0; i < snf.diagonal.size(); i++) {
            EXPECT_EQ(diag(i, i), snf.diagonal[i]);
            EXPECT_GE(snf.diagonal[i], 0);
            if (i + 1 < snf.diagonal.size()) {
                if (snf.diagonal[i] == 0) {
                    EXPECT_EQ(snf.diagonal[i + 1], 0) << "zeros must come last";
                } else {
                    EXPECT_EQ(snf.diagonal[i + 1] % snf.diagonal[i], 0);
                }
            }
        }
        EXPECT_EQ(abs(determinant(snf.left)), 1);
        EXPECT_EQ(abs(determinant(snf.right)), 1);
    }
}

TEST(determinant, small_cases) {
    EXPECT_EQ(determinant(IntMatrix{{2, 0}, {0, 3}}), 6);
    EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), -3);
    EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
}

TEST(subgroup_order_mod, matches_enumeration) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        int64_t d = 2 + static_cast<int64_t>(rng() % 7);
        size_t rows = rng() % 4, cols = 1 + rng() % 3;
        IntMatrix m = random_matrix(rng, rows, cols, 0, d - 1);
        // Closure of {0} under adding generator rows.
        std::set<std::vector<int64_t>> seen{std::vector<int64_t>(cols, 0)};
        std::vector<std::vector<int64_t>> queue(seen.begin(), seen.end());
        for (size_t head = 0; head < queue.size(); head++) {
            for (size_t r = 0; r < rows; r++) {
                auto next = queue[head];
                for (size_t c = 0; c < cols; c++) {
                    next[c] = (next[c] + static_cast<int64_t>(m(r, c))) % d;
                }
                if (seen.insert(next).second) {
                    queue.push_back(next);
                }
            }
        }
        EXPECT_EQ(subgroup_order_mod(m, d), BigInt(seen.size()));
    }
}

TEST(relation_basis_mod, spans_exactly_the_relations) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; trial++) {
        int64_t d = 2 + static_cast<int64_t>(rng() % 11);
        size_t rows = 1 + rng() % 4, cols = rng() % 4;
        IntMatrix m = random_matrix(rng, rows, cols, -d, d);
        IntMatrix basis = relation_basis_mod(m, d);
        IntMatrix products = basis * m;
        for (size_t r = 0; r < products.rows(); r++) {
            for (size_t c = 0; c < products.cols(); c++) {
                EXPECT_EQ(products(r, c) % d, 0);
            }
        }
        // Z^k / relations is isomorphic to the image, so the index matches its order.
        EXPECT_EQ(abs(determinant(basis)), subgroup_order_mod(m, d));
    }
}

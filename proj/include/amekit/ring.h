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

#ifndef AMEKIT_RING_H
#define AMEKIT_RING_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace amekit {

using BigInt = boost::multiprecision::cpp_int;

/// Least nonnegative residue of a modulo m (m > 0).
inline int64_t pos_mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t gcd_nonneg(int64_t a, int64_t b);

/// Inverse of a modulo m. Throws std::invalid_argument when gcd(a, m) != 1.
int64_t mod_inverse(int64_t a, int64_t m);

struct PrimePowerFactor {
    int64_t prime;
    int exponent;
    int64_t prime_power;

    bool operator==(const PrimePowerFactor &) const = default;
};

/// D = q_1 * ... * q_m with q_i = p_i^e_i and p_1 < p_2 < ... < p_m.
struct PrimePowerFactorization {
    int64_t dimension = 0;
    std::vector<PrimePowerFactor> factors;

    size_t size() const {
        return factors.size();
    }
    const PrimePowerFactor &operator[](size_t i) const {
        return factors[i];
    }
    bool operator==(const PrimePowerFactorization &) const = default;
    std::string str() const;
};

/// Trial division. Throws std::invalid_argument for d < 2.
PrimePowerFactorization factorize(int64_t d);

bool is_prime_power(int64_t q);

/// Residues (j mod q_1, ..., j mod q_m). Requires 0 <= j < D.
std::vector<int64_t> crt_split(int64_t j, const PrimePowerFactorization &f);

/// Inverse of crt_split. Requires residues[i] in [0, q_i).
int64_t crt_combine(std::span<const int64_t> residues, const PrimePowerFactorization &f);

/// The CRT idempotent m_i in [0, D): m_i = 1 mod q_i and m_i = 0 mod q_j for j != i.
int64_t sylow_exponent(const PrimePowerFactorization &f, size_t i);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);

    static IntMatrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    BigInt &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const BigInt &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    IntMatrix operator*(const IntMatrix &other) const;
    bool operator==(const IntMatrix &) const = default;

    bool is_diagonal() const;
    std::string str() const;

    void swap_rows(size_t a, size_t b);
    void swap_cols(size_t a, size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(size_t dst, size_t src, const BigInt &k);
    /// col[dst] += k * col[src]
    void add_col_multiple(size_t dst, size_t src, const BigInt &k);
    void negate_row(size_t r);

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// left * original * right == diag(diagonal) padded with zeros, where
/// diagonal[0] | diagonal[1] | ... and zeros (if any) come last.
struct SmithNormalForm {
    std::vector<BigInt> diagonal;
    IntMatrix left;
    IntMatrix right;

    size_t rank() const;
};

SmithNormalForm smith_normal_form(const IntMatrix &m);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
BigInt determinant(const IntMatrix &m);

/// Order of the subgroup of Z_modulus^cols generated by the rows of `generators`.
BigInt subgroup_order_mod(const IntMatrix &generators, int64_t modulus);

/// A lattice basis (as rows) of { c in Z^rows : c * generators == 0 mod modulus }.
IntMatrix relation_basis_mod(const IntMatrix &generators, int64_t modulus);

}  // namespace amekit

#endif

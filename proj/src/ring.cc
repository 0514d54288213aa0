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

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace amekit {

int64_t gcd_nonneg(int64_t a, int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

int64_t mod_inverse(int64_t a, int64_t m) {
    if (m <= 0) {
        throw std::invalid_argument("mod_inverse: modulus must be positive");
    }
    if (m == 1) {
        return 0;
    }
    int64_t old_r = pos_mod(a, m), r = m;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    if (old_r != 1) {
        throw std::invalid_argument(
            "mod_inverse: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
    }
    return pos_mod(old_s, m);
}

std::string PrimePowerFactorization::str() const {
    std::ostringstream out;
    out << dimension << " =";
    for (size_t i = 0; i < factors.size(); i++) {
        out << (i ? " * " : " ") << factors[i].prime;
        if (factors[i].exponent > 1) {
            out << "^" << factors[i].exponent;
        }
    }
    return out.str();
}

PrimePowerFactorization factorize(int64_t d) {
    if (d < 2) {
        throw std::invalid_argument("factorize: dimension must be >= 2, got " + std::to_string(d));
    }
    PrimePowerFactorization result;
    result.dimension = d;
    int64_t rest = d;
    for (int64_t p = 2; p * p <= rest; p++) {
        if (rest % p != 0) {
            continue;
        }
        PrimePowerFactor f{p, 0, 1};
        while (rest % p == 0) {
            rest /= p;
            f.exponent++;
            f.prime_power *= p;
        }
        result.factors.push_back(f);
    }
    if (rest > 1) {
        result.factors.push_back({rest, 1, rest});
    }
    return result;
}

bool is_prime_power(int64_t q) {
    return q >= 2 && factorize(q).size() == 1;
}

std::vector<int64_t> crt_split(int64_t j, const PrimePowerFactorization &f) {
    if (j < 0 || j >= f.dimension) {
        throw std::out_of_range(
            "crt_split: residue " + std::to_string(j) + " outside [0, " + std::to_string(f.dimension) + ")");
    }
    std::vector<int64_t> out;
    out.reserve(f.size());
    for (const auto &q : f.factors) {
        out.push_back(j % q.prime_power);
    }
    return out;
}

int64_t crt_combine(std::span<const int64_t> residues, const PrimePowerFactorization &f) {
    if (residues.size() != f.size()) {
        throw std::invalid_argument("crt_combine: residue count does not match factor count");
    }
    int64_t total = 0;
    for (size_t i = 0; i < f.size(); i++) {
        int64_t q = f[i].prime_power;
        if (residues[i] < 0 || residues[i] >= q) {
            throw std::out_of_range(
                "crt_combine: component " + std::to_string(i) + " = " + std::to_string(residues[i]) +
                " outside [0, " + std::to_string(q) + ")");
        }
        // m_i * r_i; m_i < D and r_i < q_i, so the product fits comfortably for realistic D.
        total = (total + sylow_exponent(f, i) * residues[i]) % f.dimension;
    }
    return total;
}

int64_t sylow_exponent(const PrimePowerFactorization &f, size_t i) {
    if (i >= f.size()) {
        throw std::out_of_range("sylow_exponent: factor index " + std::to_string(i) + " out of range");
    }
    int64_t q = f[i].prime_power;
    int64_t t = f.dimension / q;
    return (t * mod_inverse(t % q, q)) % f.dimension;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("IntMatrix: ragged initializer");
        }
        for (int64_t v : row) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("IntMatrix: shape mismatch in product");
    }
    IntMatrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            const BigInt &a = (*this)(r, k);
            if (a == 0) {
                continue;
            }
            for (size_t c = 0; c < other.cols_; c++) {
                out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

bool IntMatrix::is_diagonal() const {
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (r != c && (*this)(r, c) != 0) {
                return false;
            }
        }
    }
    return true;
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    for (size_t r = 0; r < rows_; r++) {
        out << "[";
        for (size_t c = 0; c < cols_; c++) {
            out << (c ? " " : "") << (*this)(r, c);
        }
        out << "]\n";
    }
    return out.str();
}

void IntMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t c = 0; c < cols_; c++) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

void IntMatrix::swap_cols(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t r = 0; r < rows_; r++) {
        std::swap((*this)(r, a), (*this)(r, b));
    }
}

void IntMatrix::add_row_multiple(size_t dst, size_t src, const BigInt &k) {
    if (k == 0) {
        return;
    }
    for (size_t c = 0; c < cols_; c++) {
        if ((*this)(src, c) != 0) {
            (*this)(dst, c) += k * (*this)(src, c);
        }
    }
}

void IntMatrix::add_col_multiple(size_t dst, size_t src, const BigInt &k) {
    if (k == 0) {
        return;
    }
    for (size_t r = 0; r < rows_; r++) {
        if ((*this)(r, src) != 0) {
            (*this)(r, dst) += k * (*this)(r, src);
        }
    }
}

void IntMatrix::negate_row(size_t r) {
    for (size_t c = 0; c < cols_; c++) {
        (*this)(r, c) = -(*this)(r, c);
    }
}

size_t SmithNormalForm::rank() const {
    return static_cast<size_t>(std::count_if(diagonal.begin(), diagonal.end(), [](const BigInt &d) {
        return d != 0;
    }));
}

SmithNormalForm smith_normal_form(const IntMatrix &m) {
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    IntMatrix a = m;
    IntMatrix left = IntMatrix::identity(rows);
    IntMatrix right = IntMatrix::identity(cols);
    const size_t diag = std::min(rows, cols);

    for (size_t t = 0; t < diag; t++) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            bool found = false;
            size_t pr = t, pc = t;
            BigInt best;
            for (size_t r = t; r < rows; r++) {
                for (size_t c = t; c < cols; c++) {
                    const BigInt &v = a(r, c);
                    if (v == 0) {
                        continue;
                    }
                    BigInt av = abs(v);
                    if (!found || av < best) {
                        found = true;
                        best = av;
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (!found) {
                SmithNormalForm out{{}, std::move(left), std::move(right)};
                for (size_t i = 0; i < diag; i++) {
                    out.diagonal.push_back(a(i, i));
                }
                return out;
            }
            a.swap_rows(t, pr);
            left.swap_rows(t, pr);
            a.swap_cols(t, pc);
            right.swap_cols(t, pc);

            bool clean = true;
            for (size_t r = t + 1; r < rows; r++) {
                if (a(r, t) == 0) {
                    continue;
                }
                BigInt q = a(r, t) / a(t, t);
                a.add_row_multiple(r, t, -q);
                left.add_row_multiple(r, t, -q);
                clean = clean && a(r, t) == 0;
            }
            for (size_t c = t + 1; c < cols; c++) {
                if (a(t, c) == 0) {
                    continue;
                }
                BigInt q = a(t, c) / a(t, t);
                a.add_col_multiple(c, t, -q);
                right.add_col_multiple(c, t, -q);
                clean = clean && a(t, c) == 0;
            }
            if (!clean) {
                continue;
            }

            // Enforce the divisibility chain: pull any offending row into the pivot row.
            bool divides_all = true;
            for (size_t r = t + 1; r < rows && divides_all; r++) {
                for (size_t c = t + 1; c < cols; c++) {
                    if (a(r, c) % a(t, t) != 0) {
                        a.add_row_multiple(t, r, 1);
                        left.add_row_multiple(t, r, 1);
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) {
                break;
            }
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    SmithNormalForm out{{}, std::move(left), std::move(right)};
    for (size_t i = 0; i < diag; i++) {
        out.diagonal.push_back(a(i, i));
    }
    return out;
}

BigInt determinant(const IntMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant: matrix is not square");
    }
    const size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (a(k, k) == 0) {
            size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0) {
                swap_with++;
            }
            if (swap_with == n) {
                return 0;
            }
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++) {
            for (size_t j = k + 1; j < n; j++) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

BigInt subgroup_order_mod(const IntMatrix &generators, int64_t modulus) {
    if (modulus < 1) {
        throw std::invalid_argument("subgroup_order_mod: modulus must be positive");
    }
    BigInt order = 1;
    BigInt bm = modulus;
    for (const BigInt &d : smith_normal_form(generators).diagonal) {
        // gcd(0, D) = D contributes a factor of one.
        BigInt g = d == 0 ? bm : boost::multiprecision::gcd(d, bm);
        order *= bm / g;
    }
    return order;
}

IntMatrix relation_basis_mod(const IntMatrix &generators, int64_t modulus) {
    if (modulus < 1) {
        throw std::invalid_argument("relation_basis_mod: modulus must be positive");
    }
    // With L * G * R = S, c * G == 0 (mod D) iff y = c * L^{-1} satisfies y_i d_i == 0 (mod D).
    SmithNormalForm snf = smith_normal_form(generators);
    const size_t k = generators.rows();
    IntMatrix basis(k, k);
    BigInt bm = modulus;
    for (size_t i = 0; i < k; i++) {
        BigInt scale = 1;
        if (i < snf.diagonal.size()) {
            const BigInt &d = snf.diagonal[i];
            scale = bm / (d == 0 ? bm : boost::multiprecision::gcd(d, bm));
        }
        for (size_t c = 0; c < k; c++) {
            basis(i, c) = scale * snf.left(i, c);
        }
    }
    return basis;
}

}  // namespace amekit

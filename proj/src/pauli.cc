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

#include "amekit/pauli.h"

#include <numbers>
#include <sstream>
#include <stdexcept>

#include "amekit/ring.h"

namespace amekit {

namespace {

void check_compatible(const PauliProduct &a, const PauliProduct &b, const char *op) {
    if (a.dimension != b.dimension || a.num_parties() != b.num_parties()) {
        throw std::invalid_argument(
            std::string(op) + ": operands differ in dimension or party count (" + std::to_string(a.dimension) +
            "," + std::to_string(a.num_parties()) + ") vs (" + std::to_string(b.dimension) + "," +
            std::to_string(b.num_parties()) + ")");
    }
}

std::vector<int64_t> parse_block(std::string_view block, size_t expected, std::string_view whole) {
    std::vector<int64_t> values;
    std::istringstream in{std::string(block)};
    std::string token;
    while (in >> token) {
        size_t used = 0;
        int64_t v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != token.size()) {
            throw std::invalid_argument("bad integer '" + token + "' in Pauli product '" + std::string(whole) + "'");
        }
        values.push_back(v);
    }
    if (values.size() != expected) {
        throw std::invalid_argument(
            "expected " + std::to_string(expected) + " values in block of '" + std::string(whole) + "', got " +
            std::to_string(values.size()));
    }
    return values;
}

}  // namespace

PauliProduct::PauliProduct(int64_t dimension, int64_t phase, std::vector<int64_t> xs, std::vector<int64_t> zs)
    : dimension(dimension), phase(0), xs(std::move(xs)), zs(std::move(zs)) {
    if (dimension < 2) {
        throw std::invalid_argument("PauliProduct: dimension must be >= 2");
    }
    if (this->xs.size() != this->zs.size()) {
        throw std::invalid_argument("PauliProduct: x and z exponent vectors differ in length");
    }
    this->phase = pos_mod(phase, 2 * dimension);
    for (auto &x : this->xs) {
        x = pos_mod(x, dimension);
    }
    for (auto &z : this->zs) {
        z = pos_mod(z, dimension);
    }
}

PauliProduct PauliProduct::identity(int64_t dimension, size_t num_parties) {
    return PauliProduct(dimension, 0, std::vector<int64_t>(num_parties, 0), std::vector<int64_t>(num_parties, 0));
}

PauliProduct PauliProduct::single(int64_t dimension, size_t num_parties, size_t party, int64_t x, int64_t z) {
    if (party >= num_parties) {
        throw std::out_of_range("PauliProduct::single: party index out of range");
    }
    PauliProduct p = identity(dimension, num_parties);
    p.xs[party] = pos_mod(x, dimension);
    p.zs[party] = pos_mod(z, dimension);
    return p;
}

bool PauliProduct::is_phase_only() const {
    for (size_t k = 0; k < xs.size(); k++) {
        if (xs[k] != 0 || zs[k] != 0) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> PauliProduct::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < xs.size(); k++) {
        if (xs[k] != 0 || zs[k] != 0) {
            out.push_back(k);
        }
    }
    return out;
}

std::string PauliProduct::str() const {
    std::ostringstream out;
    out << phase << " |";
    for (int64_t x : xs) {
        out << " " << x;
    }
    out << " |";
    for (int64_t z : zs) {
        out << " " << z;
    }
    return out.str();
}

PauliProduct PauliProduct::from_str(int64_t dimension, size_t num_parties, std::string_view text) {
    size_t bar1 = text.find('|');
    size_t bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos || text.find('|', bar2 + 1) != std::string_view::npos) {
        throw std::invalid_argument("Pauli product must have the form 'gamma | x... | z...': '" + std::string(text) + "'");
    }
    auto gamma = parse_block(text.substr(0, bar1), 1, text);
    auto xs = parse_block(text.substr(bar1 + 1, bar2 - bar1 - 1), num_parties, text);
    auto zs = parse_block(text.substr(bar2 + 1), num_parties, text);
    return PauliProduct(dimension, gamma[0], std::move(xs), std::move(zs));
}

PauliProduct multiply(const PauliProduct &a, const PauliProduct &b) {
    check_compatible(a, b, "multiply");
    const int64_t d = a.dimension;
    // X|k> = |k-1> gives Z^z X^x = omega^{-zx} X^x Z^z, so moving b's X factors
    // left past a's Z factors costs lambda^{-2 z_a.x_b}.
    int64_t cross = 0;
    PauliProduct out = a;
    for (size_t k = 0; k < a.xs.size(); k++) {
        cross = (cross + a.zs[k] * b.xs[k]) % d;
        out.xs[k] = (a.xs[k] + b.xs[k]) % d;
        out.zs[k] = (a.zs[k] + b.zs[k]) % d;
    }
    out.phase = pos_mod(a.phase + b.phase - 2 * cross, 2 * d);
    return out;
}

PauliProduct power(const PauliProduct &p, uint64_t k) {
    PauliProduct result = PauliProduct::identity(p.dimension, p.num_parties());
    PauliProduct base = p;
    // p^{2D} = I, so only k mod 2D matters.
    k %= static_cast<uint64_t>(2 * p.dimension);
    while (k) {
        if (k & 1) {
            result = multiply(result, base);
        }
        k >>= 1;
        if (k) {
            base = multiply(base, base);
        }
    }
    return result;
}

int64_t symplectic_inner(const PauliProduct &a, const PauliProduct &b) {
    check_compatible(a, b, "symplectic_inner");
    int64_t total = 0;
    for (size_t k = 0; k < a.xs.size(); k++) {
        total = pos_mod(total + a.zs[k] * b.xs[k] - a.xs[k] * b.zs[k], a.dimension);
    }
    return total;
}

uint64_t order(const PauliProduct &p) {
    PauliProduct acc = p;
    for (uint64_t k = 1; k <= static_cast<uint64_t>(2 * p.dimension); k++) {
        if (acc.is_identity()) {
            return k;
        }
        acc = multiply(acc, p);
    }
    throw std::logic_error("order: element order exceeds 2D");
}

size_t hilbert_dimension(int64_t dimension, size_t num_parties, size_t limit) {
    size_t total = 1;
    for (size_t k = 0; k < num_parties; k++) {
        if (total > limit / static_cast<size_t>(dimension)) {
            throw std::overflow_error(
                "dense budget exceeded: " + std::to_string(dimension) + "^" + std::to_string(num_parties) + " > " +
                std::to_string(limit));
        }
        total *= static_cast<size_t>(dimension);
    }
    if (total > limit) {
        throw std::overflow_error("dense budget exceeded");
    }
    return total;
}

void apply_pauli(const PauliProduct &p, std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    const int64_t d = p.dimension;
    const size_t n = p.num_parties();
    if (in.size() != out.size() || in.size() != hilbert_dimension(d, n, in.size())) {
        throw std::invalid_argument("apply_pauli: vector length does not equal D^n");
    }
    // lambda^k for k in [0, 2D).
    std::vector<std::complex<double>> lambda_pow(2 * d);
    for (int64_t k = 0; k < 2 * d; k++) {
        lambda_pow[k] = std::polar(1.0, std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    }
    std::vector<int64_t> digits(n, 0);
    for (size_t idx = 0; idx < in.size(); idx++) {
        // X^x Z^z |j> = omega^{z j} |j - x>.
        int64_t gamma = p.phase;
        size_t target = 0;
        for (size_t k = 0; k < n; k++) {
            gamma += 2 * p.zs[k] * digits[k];
            target = target * d + static_cast<size_t>(pos_mod(digits[k] - p.xs[k], d));
        }
        out[target] = lambda_pow[gamma % (2 * d)] * in[idx];
        for (size_t k = n; k-- > 0;) {
            if (++digits[k] < d) {
                break;
            }
            digits[k] = 0;
        }
    }
}

Eigen::MatrixXcd dense_matrix(const PauliProduct &p, size_t budget) {
    const size_t dim = hilbert_dimension(p.dimension, p.num_parties(), budget);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::vector<std::complex<double>> basis(dim), image(dim);
    for (size_t col = 0; col < dim; col++) {
        std::fill(basis.begin(), basis.end(), 0.0);
        basis[col] = 1.0;
        apply_pauli(p, basis, image);
        for (size_t row = 0; row < dim; row++) {
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = image[row];
        }
    }
    return m;
}

}  // namespace amekit

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

#include "amekit/statevec.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace amekit {

DenseState DenseState::basis(int64_t dimension, size_t num_parties, size_t index) {
    size_t dim = hilbert_dimension(dimension, num_parties, static_cast<size_t>(-1));
    if (index >= dim) {
        throw std::out_of_range("DenseState::basis: index out of range");
    }
    DenseState s{dimension, num_parties, std::vector<std::complex<double>>(dim, 0.0)};
    s.amplitudes[index] = 1.0;
    return s;
}

double DenseState::norm() const {
    double total = 0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void DenseState::canonicalize() {
    double nrm = norm();
    if (nrm == 0) {
        throw std::domain_error("DenseState::canonicalize: zero vector");
    }
    std::complex<double> rotate = 1.0 / nrm;
    for (const auto &a : amplitudes) {
        if (std::abs(a) > 1e-9) {
            rotate = std::conj(a) / (std::abs(a) * nrm);
            break;
        }
    }
    for (auto &a : amplitudes) {
        a *= rotate;
    }
}

double fidelity(const DenseState &a, const DenseState &b) {
    if (a.amplitudes.size() != b.amplitudes.size()) {
        throw std::invalid_argument("fidelity: states have different sizes");
    }
    std::complex<double> overlap = 0;
    for (size_t i = 0; i < a.amplitudes.size(); i++) {
        overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return std::abs(overlap);
}

DenseState state_from_group(const StabilizerGroup &g, size_t budget) {
    ValidityReport report = validate(g);
    if (!report.stabilizes_unique_state) {
        throw std::invalid_argument("state_from_group: not a stabilizer-state group: " + report.describe());
    }
    const size_t dim = hilbert_dimension(g.dimension, g.num_parties, budget);
    std::vector<uint64_t> orders;
    for (const auto &gen : g.generators) {
        orders.push_back(order(gen));
    }

    std::vector<std::complex<double>> current(dim), term(dim), next(dim);
    for (size_t seed = 0; seed < dim; seed++) {
        std::fill(current.begin(), current.end(), 0.0);
        current[seed] = 1.0;
        for (size_t r = 0; r < g.generators.size(); r++) {
            // next = (1/ord) sum_{k<ord} g^k current
            next = current;
            term = current;
            for (uint64_t k = 1; k < orders[r]; k++) {
                apply_pauli(g.generators[r], term, current);
                std::swap(term, current);
                for (size_t i = 0; i < dim; i++) {
                    next[i] += term[i];
                }
            }
            const double scale = 1.0 / static_cast<double>(orders[r]);
            for (size_t i = 0; i < dim; i++) {
                current[i] = next[i] * scale;
            }
        }
        DenseState s{g.dimension, g.num_parties, current};
        if (s.norm() > 1e-6) {
            s.canonicalize();
            return s;
        }
    }
    throw std::logic_error("state_from_group: every seed projected to zero for a valid group");
}

ReducedDensity reduced_density(const DenseState &psi, std::span<const size_t> subset) {
    const size_t n = psi.num_parties;
    const auto d = static_cast<size_t>(psi.dimension);
    std::vector<size_t> keep(subset.begin(), subset.end());
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end() || (!keep.empty() && keep.back() >= n)) {
        throw std::invalid_argument("reduced_density: subset must hold distinct party indices below n");
    }
    std::vector<bool> kept(n, false);
    for (size_t k : keep) {
        kept[k] = true;
    }
    std::vector<size_t> traced;
    for (size_t k = 0; k < n; k++) {
        if (!kept[k]) {
            traced.push_back(k);
        }
    }
    std::vector<size_t> stride(n, 1);
    for (size_t k = n - 1; k-- > 0;) {
        stride[k] = stride[k + 1] * d;
    }
    auto offsets = [&](const std::vector<size_t> &parties) {
        size_t count = 1;
        for (size_t i = 0; i < parties.size(); i++) {
            count *= d;
        }
        std::vector<size_t> out(count, 0);
        for (size_t idx = 0; idx < count; idx++) {
            size_t rest = idx, off = 0;
            for (size_t p = parties.size(); p-- > 0;) {
                off += (rest % d) * stride[parties[p]];
                rest /= d;
            }
            out[idx] = off;
        }
        return out;
    };
    std::vector<size_t> keep_off = offsets(keep);
    std::vector<size_t> trace_off = offsets(traced);

    const auto r = static_cast<Eigen::Index>(keep_off.size());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(r, r);
    for (Eigen::Index a = 0; a < r; a++) {
        for (Eigen::Index b = a; b < r; b++) {
            std::complex<double> acc = 0;
            for (size_t c : trace_off) {
                acc += psi.amplitudes[keep_off[a] + c] * std::conj(psi.amplitudes[keep_off[b] + c]);
            }
            rho(a, b) = acc;
            rho(b, a) = std::conj(acc);
        }
    }
    return {std::move(keep), std::move(rho)};
}

MixednessCheck is_maximally_mixed(const ReducedDensity &rho, double tol) {
    const Eigen::Index r = rho.matrix.rows();
    const double diag = 1.0 / static_cast<double>(r);
    double worst = 0;
    for (Eigen::Index a = 0; a < r; a++) {
        for (Eigen::Index b = 0; b < r; b++) {
            std::complex<double> expected = a == b ? diag : 0.0;
            worst = std::max(worst, std::abs(rho.matrix(a, b) - expected));
        }
    }
    return {worst <= tol, worst};
}

std::vector<std::vector<size_t>> subsets_of_size(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) {
        return out;
    }
    std::vector<size_t> cur(k);
    for (size_t i = 0; i < k; i++) {
        cur[i] = i;
    }
    while (true) {
        out.push_back(cur);
        size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) {
            i--;
        }
        if (i == 0) {
            return out;
        }
        cur[i - 1]++;
        for (size_t j = i; j < k; j++) {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

DenseAmeCheck verify_ame_dense(const DenseState &psi, double tol, size_t budget) {
    hilbert_dimension(psi.dimension, psi.num_parties, budget);
    DenseAmeCheck result{true, {}, -1.0};
    for (const auto &subset : subsets_of_size(psi.num_parties, psi.num_parties / 2)) {
        MixednessCheck check = is_maximally_mixed(reduced_density(psi, subset), tol);
        if (check.max_deviation > result.worst_deviation) {
            result.worst_deviation = check.max_deviation;
            result.worst_subset = subset;
        }
        result.is_ame = result.is_ame && check.verdict;
    }
    return result;
}

DenseState tensor(std::span<const DenseState> states) {
    if (states.empty()) {
        throw std::invalid_argument("tensor: need at least one state");
    }
    const size_t n = states[0].num_parties;
    int64_t total_dim = 1;
    for (const auto &s : states) {
        if (s.num_parties != n) {
            throw std::invalid_argument("tensor: states disagree on the number of parties");
        }
        total_dim *= s.dimension;
    }
    const size_t size = hilbert_dimension(total_dim, n, static_cast<size_t>(-1));
    DenseState out{total_dim, n, std::vector<std::complex<double>>(size, 0.0)};

    // Walk the composite index digit by digit, splitting each party's digit into factor digits.
    const size_t m = states.size();
    std::vector<int64_t> composite(n, 0);
    std::vector<size_t> factor_index(m);
    for (size_t idx = 0; idx < size; idx++) {
        std::fill(factor_index.begin(), factor_index.end(), 0);
        for (size_t k = 0; k < n; k++) {
            int64_t rest = composite[k];
            for (size_t i = m; i-- > 0;) {
                const int64_t q = states[i].dimension;
                int64_t digit = rest % q;
                rest /= q;
                factor_index[i] = factor_index[i] * static_cast<size_t>(q) + static_cast<size_t>(digit);
            }
        }
        std::complex<double> amp = 1.0;
        for (size_t i = 0; i < m && amp != 0.0; i++) {
            amp *= states[i].amplitudes[factor_index[i]];
        }
        out.amplitudes[idx] = amp;
        for (size_t k = n; k-- > 0;) {
            if (++composite[k] < total_dim) {
                break;
            }
            composite[k] = 0;
        }
    }
    return out;
}

DenseState apply_local_permutation(const DenseState &psi, std::span<const int64_t> perm) {
    const int64_t d = psi.dimension;
    if (perm.size() != static_cast<size_t>(d)) {
        throw std::invalid_argument("apply_local_permutation: permutation length must equal D");
    }
    std::vector<bool> hit(perm.size(), false);
    for (int64_t v : perm) {
        if (v < 0 || v >= d || hit[v]) {
            throw std::invalid_argument("apply_local_permutation: not a permutation of {0..D-1}");
        }
        hit[v] = true;
    }
    DenseState out{d, psi.num_parties, std::vector<std::complex<double>>(psi.amplitudes.size(), 0.0)};
    std::vector<int64_t> digits(psi.num_parties, 0);
    for (size_t idx = 0; idx < psi.amplitudes.size(); idx++) {
        size_t target = 0;
        for (int64_t j : digits) {
            target = target * static_cast<size_t>(d) + static_cast<size_t>(perm[j]);
        }
        out.amplitudes[target] = psi.amplitudes[idx];
        for (size_t k = psi.num_parties; k-- > 0;) {
            if (++digits[k] < d) {
                break;
            }
            digits[k] = 0;
        }
    }
    return out;
}

DenseState apply_local_unitaries(const DenseState &psi, std::span<const Eigen::MatrixXcd> unitaries) {
    const auto d = static_cast<size_t>(psi.dimension);
    const size_t n = psi.num_parties;
    if (unitaries.size() != n) {
        throw std::invalid_argument("apply_local_unitaries: need one unitary per party");
    }
    DenseState cur = psi;
    std::vector<std::complex<double>> next(cur.amplitudes.size());
    size_t stride = cur.amplitudes.size();
    for (size_t k = 0; k < n; k++) {
        const auto &u = unitaries[k];
        if (static_cast<size_t>(u.rows()) != d || static_cast<size_t>(u.cols()) != d) {
            throw std::invalid_argument("apply_local_unitaries: unitary has wrong size");
        }
        stride /= d;
        std::fill(next.begin(), next.end(), 0.0);
        for (size_t idx = 0; idx < cur.amplitudes.size(); idx++) {
            size_t digit = (idx / stride) % d;
            size_t base = idx - digit * stride;
            for (size_t row = 0; row < d; row++) {
                next[base + row * stride] +=
                    u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(digit)) * cur.amplitudes[idx];
            }
        }
        std::swap(cur.amplitudes, next);
    }
    return cur;
}

std::string format_state(const DenseState &psi) {
    std::string out = std::to_string(psi.dimension) + " " + std::to_string(psi.num_parties) + "\n";
    char buf[64];
    for (const auto &a : psi.amplitudes) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", a.real(), a.imag());
        out += buf;
    }
    return out;
}

DenseState parse_state(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long d = 0, n = 0;
    if (!(in >> d >> n) || d < 2 || n < 1) {
        throw std::invalid_argument("parse_state: expected header 'D n'");
    }
    size_t dim = hilbert_dimension(d, static_cast<size_t>(n), static_cast<size_t>(-1));
    DenseState s{d, static_cast<size_t>(n), std::vector<std::complex<double>>(dim)};
    for (size_t i = 0; i < dim; i++) {
        double re = 0, im = 0;
        if (!(in >> re >> im)) {
            throw std::invalid_argument("parse_state: expected " + std::to_string(dim) + " amplitude lines");
        }
        s.amplitudes[i] = {re, im};
    }
    return s;
}

}  // namespace amekit

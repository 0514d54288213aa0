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

#include "amekit/ame.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace amekit {

std::vector<int64_t> crt_unitary(const PrimePowerFactorization &f) {
    std::vector<int64_t> perm(static_cast<size_t>(f.dimension));
    for (int64_t j = 0; j < f.dimension; j++) {
        int64_t pos = 0;
        for (const auto &q : f.factors) {
            pos = pos * q.prime_power + j % q.prime_power;
        }
        perm[static_cast<size_t>(j)] = pos;
    }
    return perm;
}

std::vector<int64_t> crt_z_coefficients(const PrimePowerFactorization &f) {
    std::vector<int64_t> out;
    for (const auto &q : f.factors) {
        int64_t t = f.dimension / q.prime_power;
        out.push_back(mod_inverse(t % q.prime_power, q.prime_power));
    }
    return out;
}

std::vector<int64_t> invert_permutation(std::span<const int64_t> perm) {
    std::vector<int64_t> inv(perm.size(), -1);
    for (size_t j = 0; j < perm.size(); j++) {
        auto target = static_cast<size_t>(perm[j]);
        if (perm[j] < 0 || target >= perm.size() || inv[target] != -1) {
            throw std::invalid_argument("invert_permutation: not a permutation");
        }
        inv[target] = static_cast<int64_t>(j);
    }
    return inv;
}

std::string to_string(AmeMethod m) {
    switch (m) {
        case AmeMethod::symbolic:
            return "symbolic";
        case AmeMethod::dense:
            return "dense";
        case AmeMethod::both:
            return "both";
    }
    return "?";
}

AmeMethod parse_ame_method(const std::string &text) {
    if (text == "symbolic") {
        return AmeMethod::symbolic;
    }
    if (text == "dense") {
        return AmeMethod::dense;
    }
    if (text == "both") {
        return AmeMethod::both;
    }
    throw std::invalid_argument("unknown AME method '" + text + "' (expected symbolic|dense|both)");
}

namespace {

uint64_t support_mask(const PauliProduct &p) {
    uint64_t mask = 0;
    for (size_t k = 0; k < p.num_parties(); k++) {
        if (p.xs[k] != 0 || p.zs[k] != 0) {
            mask |= uint64_t{1} << k;
        }
    }
    return mask;
}

AmeVerdict symbolic_by_enumeration(const StabilizerGroup &g) {
    const size_t n = g.num_parties;
    if (n > 64) {
        throw std::invalid_argument("verify_ame_symbolic: enumeration path supports at most 64 parties");
    }
    std::vector<PauliProduct> elements = enumerate_elements(g);
    std::vector<uint64_t> masks;
    masks.reserve(elements.size());
    for (const auto &e : elements) {
        masks.push_back(support_mask(e));
    }
    AmeVerdict v{true, AmeMethod::symbolic, std::nullopt, {}, std::nullopt, {}};
    for (const auto &subset : subsets_of_size(n, n / 2)) {
        uint64_t allowed = 0;
        for (size_t k : subset) {
            allowed |= uint64_t{1} << k;
        }
        for (size_t e = 0; e < elements.size(); e++) {
            if ((masks[e] & ~allowed) == 0 && !elements[e].is_identity()) {
                v.is_ame = false;
                v.witness = elements[e];
                v.witness_subset = subset;
                return v;
            }
        }
    }
    return v;
}

AmeVerdict symbolic_by_lattice(const StabilizerGroup &g) {
    const size_t n = g.num_parties;
    const size_t k = g.generators.size();
    const IntMatrix exps = g.exponent_matrix();
    AmeVerdict v{true, AmeMethod::symbolic, std::nullopt, {}, std::nullopt, {}};
    for (const auto &subset : subsets_of_size(n, n / 2)) {
        std::vector<bool> inside(n, false);
        for (size_t p : subset) {
            inside[p] = true;
        }
        std::vector<size_t> in_cols, out_cols;
        for (size_t p = 0; p < n; p++) {
            auto &cols = inside[p] ? in_cols : out_cols;
            cols.push_back(p);
            cols.push_back(n + p);
        }
        IntMatrix outside(k, out_cols.size());
        for (size_t r = 0; r < k; r++) {
            for (size_t c = 0; c < out_cols.size(); c++) {
                outside(r, c) = exps(r, out_cols[c]);
            }
        }
        // Elements trivial outside S are exactly the relations of the outside
        // columns; their restrictions to S generate the support-S subgroup.
        IntMatrix relations = relation_basis_mod(outside, g.dimension);
        IntMatrix inner(k, in_cols.size());
        for (size_t r = 0; r < k; r++) {
            for (size_t c = 0; c < in_cols.size(); c++) {
                inner(r, c) = exps(r, in_cols[c]);
            }
        }
        IntMatrix image = relations * inner;
        for (size_t r = 0; r < image.rows(); r++) {
            for (size_t c = 0; c < image.cols(); c++) {
                BigInt val = image(r, c) % g.dimension;
                image(r, c) = val < 0 ? val + g.dimension : val;
            }
        }
        if (subgroup_order_mod(image, g.dimension) > 1) {
            v.is_ame = false;
            v.witness_subset = subset;
            for (size_t r = 0; r < image.rows(); r++) {
                PauliProduct candidate = relation_product(g, relations, r);
                if (!candidate.is_phase_only()) {
                    v.witness = candidate;
                    break;
                }
            }
            if (!v.witness) {
                throw std::logic_error("verify_ame_symbolic: nontrivial support subgroup without a witness");
            }
            return v;
        }
    }
    return v;
}

}  // namespace

AmeVerdict verify_ame_symbolic_unchecked(const StabilizerGroup &g, SymbolicStrategy strategy) {
    if (strategy == SymbolicStrategy::automatic) {
        BigInt size = 1;
        for (size_t k = 0; k < g.num_parties && size <= kSymbolicEnumerationLimit; k++) {
            size *= g.dimension;
        }
        strategy = size <= kSymbolicEnumerationLimit ? SymbolicStrategy::enumerate : SymbolicStrategy::lattice;
    }
    return strategy == SymbolicStrategy::enumerate ? symbolic_by_enumeration(g) : symbolic_by_lattice(g);
}

AmeVerdict verify_ame_symbolic(const StabilizerGroup &g, SymbolicStrategy strategy) {
    ValidityReport r = validate(g);
    if (!r.stabilizes_unique_state) {
        throw std::invalid_argument("verify_ame_symbolic: not a stabilizer-state group: " + r.describe());
    }
    return verify_ame_symbolic_unchecked(g, strategy);
}

AmeVerdict verify_ame(const StabilizerGroup &g, AmeMethod method, double tol, size_t dense_budget) {
    AmeVerdict out;
    if (method != AmeMethod::dense) {
        out = verify_ame_symbolic(g);
    }
    if (method != AmeMethod::symbolic) {
        DenseAmeCheck dense = verify_ame_dense(state_from_group(g, dense_budget), tol, dense_budget);
        if (method == AmeMethod::both && dense.is_ame != out.is_ame) {
            throw ConsistencyViolation(
                "symbolic and dense AME verdicts disagree (symbolic=" + std::string(out.is_ame ? "yes" : "no") +
                ", dense=" + (dense.is_ame ? "yes" : "no") + ")");
        }
        out.is_ame = dense.is_ame;
        out.worst_deviation = dense.worst_deviation;
        out.worst_subset = dense.worst_subset;
    }
    out.method = method;
    return out;
}

FactorDecomposition decompose(const StabilizerGroup &g, const DecomposeOptions &options) {
    ValidityReport r = validate(g);
    if (!r.stabilizes_unique_state) {
        throw std::invalid_argument("decompose: not a stabilizer-state group: " + r.describe());
    }
    FactorDecomposition out;
    out.factorization = factorize(g.dimension);
    out.crt_permutation = crt_unitary(out.factorization);
    for (size_t i = 0; i < out.factorization.size(); i++) {
        StabilizerGroup factor =
            project_to_factor(sylow_component(g, out.factorization, i), out.factorization, i);
        ValidityReport fr = validate(factor);
        if (!fr.stabilizes_unique_state) {
            throw ConsistencyViolation(
                "decompose: factor q=" + std::to_string(out.factorization[i].prime_power) +
                " is not a stabilizer-state group: " + fr.describe());
        }
        out.factor_groups.push_back(std::move(factor));
    }

    BigInt full = 1;
    for (size_t k = 0; k < g.num_parties; k++) {
        full *= g.dimension;
    }
    if (options.dense_verify && full <= options.dense_budget) {
        DenseState original = state_from_group(g, options.dense_budget);
        std::vector<DenseState> states;
        for (const auto &factor : out.factor_groups) {
            states.push_back(state_from_group(factor, options.dense_budget));
        }
        DenseState relabeled = apply_local_permutation(original, out.crt_permutation);
        out.fidelity = fidelity(tensor(states), relabeled);
        if (*out.fidelity < 1 - options.tol) {
            throw ConsistencyViolation(
                "decompose: tensor of factor states differs from the relabeled input (fidelity " +
                std::to_string(*out.fidelity) + ")");
        }
        out.factor_states = std::move(states);
    }
    return out;
}

ReductionReport reduce_ame(const StabilizerGroup &g, const DecomposeOptions &options) {
    ReductionReport report;
    report.input = verify_ame_symbolic(g);
    report.decomposition = decompose(g, options);
    for (size_t i = 0; i < report.decomposition.factor_groups.size(); i++) {
        report.factors.push_back(verify_ame_symbolic(report.decomposition.factor_groups[i]));
        if (report.input.is_ame && !report.factors.back().is_ame) {
            throw ConsistencyViolation(
                "reduce_ame: AME input over D=" + std::to_string(g.dimension) + " has non-AME factor q=" +
                std::to_string(report.decomposition.factorization[i].prime_power));
        }
    }
    return report;
}

MergedFactors merge_factors(const FactorDecomposition &d, std::span<const size_t> subset,
                            const DecomposeOptions &options) {
    std::vector<size_t> chosen(subset.begin(), subset.end());
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    if (chosen.empty()) {
        throw std::invalid_argument("merge_factors: subset of factors must be nonempty");
    }
    if (chosen.back() >= d.factor_groups.size()) {
        throw std::out_of_range("merge_factors: factor index out of range");
    }

    MergedFactors out;
    out.factorization.dimension = 1;
    for (size_t i : chosen) {
        out.factorization.factors.push_back(d.factorization[i]);
        out.factorization.dimension *= d.factorization[i].prime_power;
    }
    const int64_t dm = out.factorization.dimension;
    const size_t n = d.factor_groups[chosen[0]].num_parties;
    out.group = StabilizerGroup(dm, n);

    // Inverse of project_to_factor: x -> x * m_i, z -> z * (d_M/q_i), gamma -> gamma * (d_M/q_i).
    for (size_t pos = 0; pos < chosen.size(); pos++) {
        const int64_t q = out.factorization[pos].prime_power;
        const int64_t t = dm / q;
        const int64_t m = sylow_exponent(out.factorization, pos);
        for (const auto &p : d.factor_groups[chosen[pos]].generators) {
            std::vector<int64_t> xs(n), zs(n);
            for (size_t k = 0; k < n; k++) {
                xs[k] = (p.xs[k] * m) % dm;
                zs[k] = (p.zs[k] * t) % dm;
            }
            out.group.add(PauliProduct(dm, p.phase * t, std::move(xs), std::move(zs)));
        }
    }
    ValidityReport r = validate(out.group);
    if (!r.stabilizes_unique_state) {
        throw ConsistencyViolation("merge_factors: merged group is not a stabilizer-state group: " + r.describe());
    }

    if (d.factor_states) {
        std::vector<DenseState> picked;
        for (size_t i : chosen) {
            picked.push_back((*d.factor_states)[i]);
        }
        DenseState product = tensor(picked);
        DenseState merged = apply_local_permutation(product, invert_permutation(crt_unitary(out.factorization)));
        BigInt full = 1;
        for (size_t k = 0; k < n; k++) {
            full *= dm;
        }
        if (full <= options.dense_budget) {
            double f = fidelity(merged, state_from_group(out.group, options.dense_budget));
            if (f < 1 - options.tol) {
                throw ConsistencyViolation("merge_factors: merged group does not stabilize the merged state");
            }
        }
        out.state = std::move(merged);
    }

    out.is_ame = verify_ame_symbolic_unchecked(out.group).is_ame;
    bool all_factors_ame = true;
    for (size_t i : chosen) {
        all_factors_ame = all_factors_ame && verify_ame_symbolic_unchecked(d.factor_groups[i]).is_ame;
    }
    if (all_factors_ame && !out.is_ame) {
        throw ConsistencyViolation("merge_factors: AME factors merged into a non-AME state");
    }
    return out;
}

std::string format_decomposition_report(const ReductionReport &report, std::span<const MergedFactors> merges) {
    const auto &dec = report.decomposition;
    std::ostringstream out;
    out << "factorization " << dec.factorization.str() << "\n";
    for (size_t i = 0; i < dec.factor_groups.size(); i++) {
        out << "# factor " << i << " q=" << dec.factorization[i].prime_power << "\n";
        out << format_generators(dec.factor_groups[i]);
    }
    out << "input D=" << dec.factorization.dimension << " ame=" << (report.input.is_ame ? "yes" : "no") << "\n";
    for (size_t i = 0; i < report.factors.size(); i++) {
        out << "factor q=" << dec.factorization[i].prime_power << " ame=" << (report.factors[i].is_ame ? "yes" : "no")
            << "\n";
    }
    if (dec.fidelity) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.9f", *dec.fidelity);
        out << "dense tensor_fidelity=" << buf << "\n";
    }
    for (const auto &m : merges) {
        out << "merge d=" << m.factorization.dimension << " factors=";
        for (size_t i = 0; i < m.factorization.size(); i++) {
            out << (i ? "," : "") << m.factorization[i].prime_power;
        }
        out << " ame=" << (m.is_ame ? "yes" : "no") << "\n";
    }
    return out.str();
}

}  // namespace amekit

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

#include "amekit/stabgroup.h"

#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace amekit {

ParseError::ParseError(size_t line, const std::string &message)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message : message), line(line) {
}

StabilizerGroup::StabilizerGroup(int64_t dimension, size_t num_parties, std::vector<PauliProduct> gens)
    : dimension(dimension), num_parties(num_parties) {
    if (dimension < 2) {
        throw std::invalid_argument("StabilizerGroup: dimension must be >= 2");
    }
    if (num_parties < 1) {
        throw std::invalid_argument("StabilizerGroup: need at least one party");
    }
    for (auto &p : gens) {
        add(std::move(p));
    }
}

void StabilizerGroup::add(PauliProduct p) {
    if (p.dimension != dimension || p.num_parties() != num_parties) {
        throw std::invalid_argument("StabilizerGroup: generator does not match group dimension/party count");
    }
    generators.push_back(std::move(p));
}

IntMatrix StabilizerGroup::exponent_matrix() const {
    IntMatrix m(generators.size(), 2 * num_parties);
    for (size_t r = 0; r < generators.size(); r++) {
        for (size_t k = 0; k < num_parties; k++) {
            m(r, k) = generators[r].xs[k];
            m(r, num_parties + k) = generators[r].zs[k];
        }
    }
    return m;
}

std::string ValidityReport::describe() const {
    std::ostringstream out;
    out << "abelian=" << (abelian ? "yes" : "no");
    if (noncommuting_pair) {
        out << " (generators " << noncommuting_pair->first << "," << noncommuting_pair->second << " do not commute)";
    }
    out << " order=" << order << " phase_consistent=" << (phase_consistent ? "yes" : "no");
    if (phase_witness) {
        out << " (relation gives " << phase_witness->str() << ")";
    }
    out << " unique_state=" << (stabilizes_unique_state ? "yes" : "no");
    return out.str();
}

PauliProduct relation_product(const StabilizerGroup &g, const IntMatrix &coefficients, size_t row) {
    const BigInt period = 2 * g.dimension;
    PauliProduct acc = PauliProduct::identity(g.dimension, g.num_parties);
    for (size_t i = 0; i < g.generators.size(); i++) {
        BigInt c = coefficients(row, i) % period;
        if (c < 0) {
            c += period;
        }
        if (c != 0) {
            acc = multiply(acc, power(g.generators[i], static_cast<uint64_t>(c)));
        }
    }
    return acc;
}

ValidityReport validate(const StabilizerGroup &g) {
    ValidityReport report;
    report.abelian = true;
    for (size_t a = 0; a < g.generators.size() && report.abelian; a++) {
        for (size_t b = a + 1; b < g.generators.size(); b++) {
            if (symplectic_inner(g.generators[a], g.generators[b]) != 0) {
                report.abelian = false;
                report.noncommuting_pair = {a, b};
                break;
            }
        }
    }

    IntMatrix exps = g.exponent_matrix();
    report.order = subgroup_order_mod(exps, g.dimension);

    // Relations c with c.G == 0 (mod D) produce phase-only elements; the map
    // c -> phase is a homomorphism on the relation lattice when the generators
    // commute, so a lattice basis suffices.
    report.phase_consistent = true;
    if (report.abelian) {
        IntMatrix relations = relation_basis_mod(exps, g.dimension);
        for (size_t r = 0; r < relations.rows(); r++) {
            PauliProduct p = relation_product(g, relations, r);
            if (!p.is_phase_only()) {
                throw std::logic_error("validate: relation basis produced a non-scalar element");
            }
            if (p.phase != 0) {
                report.phase_consistent = false;
                report.phase_witness = p;
                break;
            }
        }
    } else {
        // Non-abelian groups contain commutators lambda^{2k} I with k != 0.
        report.phase_consistent = false;
    }

    BigInt full = 1;
    for (size_t k = 0; k < g.num_parties; k++) {
        full *= g.dimension;
    }
    report.stabilizes_unique_state = report.abelian && report.phase_consistent && report.order == full;
    return report;
}

std::vector<PauliProduct> enumerate_elements(const StabilizerGroup &g, size_t budget) {
    PauliProduct id = PauliProduct::identity(g.dimension, g.num_parties);
    std::vector<PauliProduct> elements{id};
    std::set<PauliProduct> seen{id};
    for (size_t head = 0; head < elements.size(); head++) {
        for (const auto &gen : g.generators) {
            PauliProduct next = multiply(elements[head], gen);
            if (seen.insert(next).second) {
                if (elements.size() >= budget) {
                    throw std::length_error(
                        "enumerate_elements: group exceeds enumeration budget of " + std::to_string(budget));
                }
                elements.push_back(std::move(next));
            }
        }
    }
    return elements;
}

namespace {

void require_valid(const StabilizerGroup &g, const char *op) {
    ValidityReport r = validate(g);
    if (!r.stabilizes_unique_state) {
        throw std::invalid_argument(std::string(op) + ": input is not a stabilizer-state group: " + r.describe());
    }
}

}  // namespace

StabilizerGroup sylow_component(const StabilizerGroup &g, const PrimePowerFactorization &f, size_t i) {
    if (f.dimension != g.dimension) {
        throw std::invalid_argument("sylow_component: factorization does not match group dimension");
    }
    require_valid(g, "sylow_component");
    const auto m = static_cast<uint64_t>(sylow_exponent(f, i));
    StabilizerGroup out(g.dimension, g.num_parties);
    for (const auto &gen : g.generators) {
        out.add(power(gen, m));
    }
    return out;
}

StabilizerGroup project_to_factor(const StabilizerGroup &component, const PrimePowerFactorization &f, size_t i) {
    if (f.dimension != component.dimension) {
        throw std::invalid_argument("project_to_factor: factorization does not match group dimension");
    }
    if (i >= f.size()) {
        throw std::out_of_range("project_to_factor: factor index out of range");
    }
    const int64_t q = f[i].prime_power;
    const int64_t t = f.dimension / q;
    const int64_t c = mod_inverse(t % q, q);
    StabilizerGroup out(q, component.num_parties);
    for (size_t r = 0; r < component.generators.size(); r++) {
        const auto &p = component.generators[r];
        std::vector<int64_t> xs(p.xs.size()), zs(p.zs.size());
        for (size_t k = 0; k < p.xs.size(); k++) {
            if (p.xs[k] % t != 0 || p.zs[k] % t != 0) {
                throw std::invalid_argument(
                    "project_to_factor: generator " + std::to_string(r) + " (" + p.str() +
                    ") has exponents not divisible by " + std::to_string(t));
            }
            xs[k] = p.xs[k] % q;
            zs[k] = (c * p.zs[k]) % q;
        }
        // lambda_D^gamma = lambda_q^{gamma/t}; any other phase has no image in the factor group.
        if (p.phase % t != 0) {
            throw PhaseConventionError(
                "project_to_factor: generator " + std::to_string(r) + " (" + p.str() + ") carries phase lambda^" +
                std::to_string(p.phase) + " which has no counterpart over Z_" + std::to_string(q));
        }
        out.add(PauliProduct(q, p.phase / t, std::move(xs), std::move(zs)));
    }
    return out;
}

StabilizerGroup parse_generators(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    bool have_header = false;
    int64_t d = 0;
    size_t n = 0, k = 0;
    StabilizerGroup g;
    while (std::getline(in, line)) {
        line_no++;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        if (!have_header) {
            std::istringstream header(line);
            long long dd = 0, nn = 0, kk = 0;
            std::string extra;
            if (!(header >> dd >> nn >> kk) || (header >> extra)) {
                throw ParseError(line_no, "expected header 'D n k'");
            }
            if (dd < 2 || nn < 1 || kk < 0) {
                throw ParseError(line_no, "header requires D >= 2, n >= 1, k >= 0");
            }
            d = dd;
            n = static_cast<size_t>(nn);
            k = static_cast<size_t>(kk);
            g = StabilizerGroup(d, n);
            have_header = true;
            continue;
        }
        if (g.generators.size() == k) {
            throw ParseError(line_no, "more generator lines than the header's k = " + std::to_string(k));
        }
        try {
            g.add(PauliProduct::from_str(d, n, line));
        } catch (const std::invalid_argument &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_header) {
        throw ParseError(0, "missing 'D n k' header");
    }
    if (g.generators.size() != k) {
        throw ParseError(
            line_no, "header promises " + std::to_string(k) + " generators, found " +
                         std::to_string(g.generators.size()));
    }
    return g;
}

StabilizerGroup read_generators_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open generator file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_generators(buf.str());
}

std::string format_generators(const StabilizerGroup &g) {
    std::ostringstream out;
    out << g.dimension << " " << g.num_parties << " " << g.generators.size() << "\n";
    for (const auto &p : g.generators) {
        out << p.str() << "\n";
    }
    return out.str();
}

}  // namespace amekit

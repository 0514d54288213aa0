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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "amekit/ame.h"
#include "amekit/cli.h"
#include "amekit/nogo.h"
#include "amekit/pauli.h"
#include "amekit/ring.h"
#include "amekit/search.h"
#include "amekit/stabgroup.h"
#include "amekit/statevec.h"

namespace py = pybind11;
using namespace amekit;

namespace {

py::int_ to_py(const BigInt &v) {
    std::string digits = v.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::array_t<std::complex<double>> amplitudes_array(const DenseState &s) {
    return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(s.amplitudes.size()), s.amplitudes.data());
}

DenseState state_from_array(int64_t dimension, size_t num_parties,
                            py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> amps) {
    DenseState s{dimension, num_parties, {amps.data(), amps.data() + amps.size()}};
    if (s.amplitudes.size() != hilbert_dimension(dimension, num_parties, s.amplitudes.size() + 1)) {
        throw std::invalid_argument("amplitude count does not match dimension ** num_parties");
    }
    return s;
}

}  // namespace

PYBIND11_MODULE(amekit, m) {
    m.doc() = "Stabilizer AME toolkit over Z_D: Pauli algebra, AME verification, prime-power decomposition, "
              "graph-state search and no-go tables.";

    py::register_exception<PhaseConventionError>(m, "PhaseConventionError", PyExc_ArithmeticError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConsistencyViolation>(m, "ConsistencyViolation", PyExc_AssertionError);
    py::register_exception<FactConflict>(m, "FactConflict", PyExc_RuntimeError);

    // ring
    py::class_<PrimePowerFactor>(m, "PrimePowerFactor")
        .def_readonly("prime", &PrimePowerFactor::prime)
        .def_readonly("exponent", &PrimePowerFactor::exponent)
        .def_readonly("prime_power", &PrimePowerFactor::prime_power)
        .def("__repr__", [](const PrimePowerFactor &f) {
            return "PrimePowerFactor(" + std::to_string(f.prime) + ", " + std::to_string(f.exponent) + ")";
        });
    py::class_<PrimePowerFactorization>(m, "PrimePowerFactorization")
        .def_readonly("dimension", &PrimePowerFactorization::dimension)
        .def_readonly("factors", &PrimePowerFactorization::factors)
        .def("__len__", &PrimePowerFactorization::size)
        .def("__str__", &PrimePowerFactorization::str)
        .def("__repr__", [](const PrimePowerFactorization &f) { return "<factorization " + f.str() + ">"; });
    m.def("factorize", &factorize, py::arg("d"));
    m.def("is_prime_power", &is_prime_power, py::arg("q"));
    m.def("crt_split", &crt_split, py::arg("j"), py::arg("factorization"));
    m.def(
        "crt_combine",
        [](const std::vector<int64_t> &residues, const PrimePowerFactorization &f) { return crt_combine(residues, f); },
        py::arg("residues"), py::arg("factorization"));
    m.def("sylow_exponent", &sylow_exponent, py::arg("factorization"), py::arg("i"));
    m.def("crt_unitary", &crt_unitary, py::arg("factorization"));

    // pauli
    py::class_<PauliProduct>(m, "PauliProduct")
        .def(py::init<int64_t, int64_t, std::vector<int64_t>, std::vector<int64_t>>(), py::arg("dimension"),
             py::arg("phase"), py::arg("xs"), py::arg("zs"))
        .def_static("identity", &PauliProduct::identity, py::arg("dimension"), py::arg("num_parties"))
        .def_static("single", &PauliProduct::single, py::arg("dimension"), py::arg("num_parties"), py::arg("party"),
                    py::arg("x"), py::arg("z"))
        .def_static("from_str", &PauliProduct::from_str, py::arg("dimension"), py::arg("num_parties"), py::arg("text"))
        .def_readonly("dimension", &PauliProduct::dimension)
        .def_readonly("phase", &PauliProduct::phase)
        .def_readonly("xs", &PauliProduct::xs)
        .def_readonly("zs", &PauliProduct::zs)
        .def_property_readonly("num_parties", &PauliProduct::num_parties)
        .def("support", &PauliProduct::support)
        .def("is_identity", &PauliProduct::is_identity)
        .def("order", [](const PauliProduct &p) { return order(p); })
        .def("matrix", [](const PauliProduct &p) { return dense_matrix(p); })
        .def("__mul__", [](const PauliProduct &a, const PauliProduct &b) { return multiply(a, b); })
        .def("__pow__", [](const PauliProduct &a, uint64_t k) { return power(a, k); })
        .def(py::self == py::self)
        .def("__hash__", [](const PauliProduct &p) { return py::hash(py::str(p.str())); })
        .def("__str__", &PauliProduct::str)
        .def("__repr__", [](const PauliProduct &p) { return "PauliProduct('" + p.str() + "')"; });
    m.def("symplectic_inner", &symplectic_inner, py::arg("a"), py::arg("b"));

    // stabgroup
    py::class_<StabilizerGroup>(m, "StabilizerGroup")
        .def(py::init<int64_t, size_t, std::vector<PauliProduct>>(), py::arg("dimension"), py::arg("num_parties"),
             py::arg("generators") = std::vector<PauliProduct>{})
        .def_static("parse", &parse_generators, py::arg("text"))
        .def_static("read", &read_generators_file, py::arg("path"))
        .def_readonly("dimension", &StabilizerGroup::dimension)
        .def_readonly("num_parties", &StabilizerGroup::num_parties)
        .def_readonly("generators", &StabilizerGroup::generators)
        .def("add", &StabilizerGroup::add, py::arg("generator"))
        .def("elements", [](const StabilizerGroup &g) { return enumerate_elements(g); })
        .def("__str__", &format_generators);
    py::class_<ValidityReport>(m, "ValidityReport")
        .def_readonly("abelian", &ValidityReport::abelian)
        .def_property_readonly("order", [](const ValidityReport &r) { return to_py(r.order); })
        .def_readonly("phase_consistent", &ValidityReport::phase_consistent)
        .def_readonly("stabilizes_unique_state", &ValidityReport::stabilizes_unique_state)
        .def("__bool__", [](const ValidityReport &r) { return r.stabilizes_unique_state; })
        .def("__str__", &ValidityReport::describe);
    m.def("validate", &validate, py::arg("group"));
    m.def("sylow_component", &sylow_component, py::arg("group"), py::arg("factorization"), py::arg("i"));
    m.def("project_to_factor", &project_to_factor, py::arg("component"), py::arg("factorization"), py::arg("i"));

    // statevec
    py::class_<DenseState>(m, "DenseState")
        .def(py::init(&state_from_array), py::arg("dimension"), py::arg("num_parties"), py::arg("amplitudes"))
        .def_readonly("dimension", &DenseState::dimension)
        .def_readonly("num_parties", &DenseState::num_parties)
        .def_property_readonly("amplitudes", &amplitudes_array)
        .def("norm", &DenseState::norm)
        .def("__str__", &format_state);
    m.def("state_from_group", &state_from_group, py::arg("group"), py::arg("budget") = kDefaultDenseBudget);
    m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));
    m.def("tensor", [](const std::vector<DenseState> &states) { return tensor(states); }, py::arg("states"));
    m.def(
        "reduced_density",
        [](const DenseState &s, const std::vector<size_t> &subset) { return reduced_density(s, subset).matrix; },
        py::arg("state"), py::arg("subset"));
    py::class_<DenseAmeCheck>(m, "DenseAmeCheck")
        .def_readonly("is_ame", &DenseAmeCheck::is_ame)
        .def_readonly("worst_subset", &DenseAmeCheck::worst_subset)
        .def_readonly("worst_deviation", &DenseAmeCheck::worst_deviation);
    m.def("verify_ame_dense", &verify_ame_dense, py::arg("state"), py::arg("tol") = kStateTolerance,
          py::arg("budget") = kDefaultDenseBudget);

    // ame
    py::class_<AmeVerdict>(m, "AmeVerdict")
        .def_readonly("is_ame", &AmeVerdict::is_ame)
        .def_property_readonly("method", [](const AmeVerdict &v) { return to_string(v.method); })
        .def_readonly("witness", &AmeVerdict::witness)
        .def_readonly("witness_subset", &AmeVerdict::witness_subset)
        .def_readonly("worst_deviation", &AmeVerdict::worst_deviation)
        .def("__bool__", [](const AmeVerdict &v) { return v.is_ame; });
    m.def(
        "verify_ame",
        [](const StabilizerGroup &g, const std::string &method, double tol, size_t budget) {
            return verify_ame(g, parse_ame_method(method), tol, budget);
        },
        py::arg("group"), py::arg("method") = "symbolic", py::arg("tol") = kStateTolerance,
        py::arg("dense_budget") = kDefaultDenseBudget);
    py::class_<FactorDecomposition>(m, "FactorDecomposition")
        .def_readonly("factorization", &FactorDecomposition::factorization)
        .def_readonly("factor_groups", &FactorDecomposition::factor_groups)
        .def_readonly("factor_states", &FactorDecomposition::factor_states)
        .def_readonly("crt_permutation", &FactorDecomposition::crt_permutation)
        .def_readonly("fidelity", &FactorDecomposition::fidelity);
    m.def(
        "decompose",
        [](const StabilizerGroup &g, bool dense_verify) { return decompose(g, {.dense_verify = dense_verify}); },
        py::arg("group"), py::arg("dense_verify") = true);
    py::class_<ReductionReport>(m, "ReductionReport")
        .def_readonly("input", &ReductionReport::input)
        .def_readonly("decomposition", &ReductionReport::decomposition)
        .def_readonly("factors", &ReductionReport::factors)
        .def("__str__", [](const ReductionReport &r) { return format_decomposition_report(r); });
    m.def(
        "reduce_ame",
        [](const StabilizerGroup &g, bool dense_verify) { return reduce_ame(g, {.dense_verify = dense_verify}); },
        py::arg("group"), py::arg("dense_verify") = true);
    py::class_<MergedFactors>(m, "MergedFactors")
        .def_readonly("factorization", &MergedFactors::factorization)
        .def_readonly("group", &MergedFactors::group)
        .def_readonly("state", &MergedFactors::state)
        .def_readonly("is_ame", &MergedFactors::is_ame);
    m.def(
        "merge_factors",
        [](const FactorDecomposition &d, const std::vector<size_t> &subset) { return merge_factors(d, subset); },
        py::arg("decomposition"), py::arg("subset"));

    // search
    py::class_<GraphState>(m, "GraphState")
        .def_static(
            "from_upper_triangle",
            [](int64_t d, size_t n, const std::vector<int64_t> &upper) {
                return GraphState::from_upper_triangle(d, n, upper);
            },
            py::arg("dimension"), py::arg("num_parties"), py::arg("upper"))
        .def_static("parse", &parse_witness, py::arg("line"))
        .def_readonly("dimension", &GraphState::dimension)
        .def_readonly("num_parties", &GraphState::num_parties)
        .def("upper_triangle", &GraphState::upper_triangle)
        .def("group", &graph_to_group)
        .def(py::self == py::self)
        .def("__str__", &format_witness);
    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("found", &SearchResult::found)
        .def_readonly("searched", &SearchResult::searched)
        .def_readonly("space_size", &SearchResult::space_size)
        .def_readonly("exhausted", &SearchResult::exhausted)
        .def_readonly("graph_complete", &SearchResult::graph_complete)
        .def("claim", &SearchResult::claim)
        .def("__str__", &format_search_result);
    m.def(
        "search_ame",
        [](size_t n, int64_t d, const std::string &mode, uint64_t shard_begin, std::optional<uint64_t> shard_end,
           std::optional<bool> graph_complete, uint64_t budget) {
            SearchOptions opts;
            opts.mode = parse_search_mode(mode);
            opts.shard_begin = shard_begin;
            opts.shard_end = shard_end;
            opts.graph_complete = graph_complete;
            opts.budget = budget;
            py::gil_scoped_release release;
            return search_ame(n, d, opts);
        },
        py::arg("num_parties"), py::arg("dimension"), py::arg("mode") = "exhaustive", py::arg("shard_begin") = 0,
        py::arg("shard_end") = py::none(), py::arg("graph_complete") = py::none(),
        py::arg("budget") = kDefaultSearchBudget);

    // nogo
    py::class_<KnownFact>(m, "KnownFact")
        .def_readonly("parties", &KnownFact::parties)
        .def_readonly("local_dim", &KnownFact::local_dim)
        .def_property_readonly("status", [](const KnownFact &f) { return to_string(f.status); })
        .def_readonly("source", &KnownFact::source);
    m.def("load_facts", &load_facts, py::arg("text"));
    m.def("default_facts_text", &default_facts_text);
    py::class_<NoGoTable>(m, "NoGoTable")
        .def_readonly("max_parties", &NoGoTable::max_parties)
        .def_readonly("max_dim", &NoGoTable::max_dim)
        .def(
            "status", [](const NoGoTable &t, size_t n, int64_t d) { return to_string(t.at(n, d).status); },
            py::arg("n"), py::arg("d"))
        .def(
            "reasons", [](const NoGoTable &t, size_t n, int64_t d) { return t.at(n, d).reasons; }, py::arg("n"),
            py::arg("d"))
        .def("csv", &emit_csv)
        .def("reasons_csv", &emit_reasons_csv)
        .def("svg", &emit_svg);
    m.def("propagate", &propagate, py::arg("facts"), py::arg("max_parties") = 8, py::arg("max_dim") = 36);

    // cli
    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}

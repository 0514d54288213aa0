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

#include "amekit/cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "amekit/ame.h"
#include "amekit/nogo.h"
#include "amekit/search.h"
#include "amekit/stabgroup.h"
#include "amekit/statevec.h"

namespace amekit {

namespace {

struct RunConfig {
    std::string input;
    std::string kind;
    int64_t dim = 0;
    size_t parties = 0;
    std::string adjacency;
    double tol = kStateTolerance;
    size_t dense_budget = kDefaultDenseBudget;
    uint64_t search_budget = kDefaultSearchBudget;
    std::string method = "symbolic";
    std::string mode = "exhaustive";
    std::string shard;
    std::string graph_complete = "auto";
    bool verify = false;
    std::string out;
    std::string format = "csv";
    size_t max_parties = 8;
    int64_t max_dim = 36;
};

void emit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
    if (cfg.out.empty() || cfg.out == "-") {
        out << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write '" + cfg.out + "'");
    }
    file << text;
}

std::vector<int64_t> parse_int_list(const std::string &text) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    std::vector<int64_t> out;
    long long v = 0;
    while (in >> v) {
        out.push_back(v);
    }
    if (!in.eof()) {
        throw std::invalid_argument("expected a list of integers, got '" + text + "'");
    }
    return out;
}

std::string subset_str(const std::vector<size_t> &s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); i++) {
        out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out + "}";
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

int cmd_construct(const RunConfig &cfg, std::ostream &out) {
    if (cfg.dim < 2 || cfg.parties < 1) {
        throw std::invalid_argument("construct: need --dim >= 2 and --parties >= 1");
    }
    StabilizerGroup g(cfg.dim, cfg.parties);
    std::string comment;
    if (cfg.kind == "ghz" || cfg.kind == "bell") {
        if (cfg.kind == "bell" && cfg.parties != 2) {
            throw std::invalid_argument("construct bell: requires --parties 2");
        }
        if (cfg.parties < 2) {
            throw std::invalid_argument("construct ghz: requires --parties >= 2");
        }
        // X^{(x)n} and Z_k Z_{k+1}^{-1}: stabilizes sum_j |j...j> / sqrt(D).
        g.add(PauliProduct(cfg.dim, 0, std::vector<int64_t>(cfg.parties, 1), std::vector<int64_t>(cfg.parties, 0)));
        for (size_t k = 0; k + 1 < cfg.parties; k++) {
            std::vector<int64_t> zs(cfg.parties, 0);
            zs[k] = 1;
            zs[k + 1] = -1;
            g.add(PauliProduct(cfg.dim, 0, std::vector<int64_t>(cfg.parties, 0), std::move(zs)));
        }
        comment = "# " + cfg.kind + " state over Z_" + std::to_string(cfg.dim) + " on " + std::to_string(cfg.parties) +
                  " parties\n";
    } else if (cfg.kind == "graph") {
        GraphState graph = GraphState::from_upper_triangle(cfg.dim, cfg.parties, parse_int_list(cfg.adjacency));
        g = graph_to_group(graph);
        comment = "# graph state " + format_witness(graph) + "\n";
    } else {
        throw std::invalid_argument("construct: unknown kind '" + cfg.kind + "' (expected ghz|bell|graph)");
    }
    ValidityReport r = validate(g);
    if (!r.stabilizes_unique_state) {
        throw std::logic_error("construct: produced an invalid group: " + r.describe());
    }
    emit(cfg, comment + format_generators(g), out);
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    StabilizerGroup g = read_generators_file(cfg.input);
    ValidityReport r = validate(g);
    std::ostringstream report;
    report << "group D=" << g.dimension << " n=" << g.num_parties << " generators=" << g.generators.size() << "\n";
    report << "valid " << r.describe() << "\n";
    if (!r.stabilizes_unique_state) {
        report << "AME invalid\n";
        emit(cfg, report.str(), out);
        return kExitInvalidGroup;
    }
    AmeVerdict v = verify_ame(g, parse_ame_method(cfg.method), cfg.tol, cfg.dense_budget);
    report << "method " << to_string(v.method) << "\n";
    if (v.witness) {
        report << "witness subset=" << subset_str(v.witness_subset) << " element=" << v.witness->str() << "\n";
    }
    if (v.worst_deviation) {
        report << "dense worst_subset=" << subset_str(v.worst_subset) << " worst_deviation=" << fixed(*v.worst_deviation)
               << "\n";
    }
    report << "AME " << (v.is_ame ? "yes" : "no") << "\n";
    emit(cfg, report.str(), out);
    return v.is_ame ? kExitOk : kExitNotAme;
}

int cmd_decompose(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    StabilizerGroup g = read_generators_file(cfg.input);
    ValidityReport r = validate(g);
    if (!r.stabilizes_unique_state) {
        err << "amekit: " << cfg.input << " is not a stabilizer-state group: " << r.describe() << "\n";
        return kExitInvalidGroup;
    }
    DecomposeOptions opts{cfg.verify, cfg.dense_budget, cfg.tol};
    ReductionReport rep = reduce_ame(g, opts);
    std::vector<MergedFactors> merges;
    if (cfg.verify) {
        const size_t m = rep.decomposition.factor_groups.size();
        for (size_t mask = 1; mask < (size_t{1} << m); mask++) {
            std::vector<size_t> subset;
            for (size_t i = 0; i < m; i++) {
                if (mask & (size_t{1} << i)) {
                    subset.push_back(i);
                }
            }
            merges.push_back(merge_factors(rep.decomposition, subset, opts));
        }
    }
    emit(cfg, format_decomposition_report(rep, merges), out);
    return kExitOk;
}

int cmd_search(const RunConfig &cfg, std::ostream &out) {
    SearchOptions opts;
    opts.mode = parse_search_mode(cfg.mode);
    opts.budget = cfg.search_budget;
    opts.dense_budget = cfg.dense_budget;
    opts.tol = cfg.tol;
    if (!cfg.shard.empty()) {
        size_t colon = cfg.shard.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("--shard must look like start:end");
        }
        opts.shard_begin = std::stoull(cfg.shard.substr(0, colon));
        if (colon + 1 < cfg.shard.size()) {
            opts.shard_end = std::stoull(cfg.shard.substr(colon + 1));
        }
    }
    if (cfg.graph_complete == "yes") {
        opts.graph_complete = true;
    } else if (cfg.graph_complete == "no") {
        opts.graph_complete = false;
    } else if (cfg.graph_complete != "auto") {
        throw std::invalid_argument("--graph-complete must be yes|no|auto");
    }
    SearchResult result = search_ame(cfg.parties, cfg.dim, opts);
    emit(cfg, format_search_result(result), out);
    return kExitOk;
}

int cmd_nogo(const RunConfig &cfg, std::ostream &out) {
    std::string facts_text = default_facts_text();
    if (!cfg.input.empty()) {
        std::ifstream in(cfg.input);
        if (!in) {
            throw std::runtime_error("cannot open facts file '" + cfg.input + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        facts_text = buf.str();
    }
    NoGoTable table = propagate(load_facts(facts_text), cfg.max_parties, cfg.max_dim);
    if (cfg.format == "csv") {
        emit(cfg, emit_csv(table), out);
    } else if (cfg.format == "svg") {
        emit(cfg, emit_svg(table), out);
    } else if (cfg.format == "reasons") {
        emit(cfg, emit_reasons_csv(table), out);
    } else {
        throw std::invalid_argument("--format must be csv|svg|reasons");
    }
    return kExitOk;
}

int cmd_state(const RunConfig &cfg, std::ostream &out) {
    StabilizerGroup g = read_generators_file(cfg.input);
    ValidityReport r = validate(g);
    if (!r.stabilizes_unique_state) {
        emit(cfg, "AME invalid\n", out);
        return kExitInvalidGroup;
    }
    emit(cfg, format_state(state_from_group(g, cfg.dense_budget)), out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Stabilizer AME toolkit: Pauli algebra over Z_D, AME verification, prime-power decomposition, "
                 "graph-state search and no-go tables."};
    app.name("amekit");
    app.require_subcommand(1);

    auto add_dense = [&](CLI::App *sub) {
        sub->add_option("--tol", cfg.tol, "Maximal-mixedness tolerance")->capture_default_str()->check(
            CLI::PositiveNumber);
        sub->add_option("--dense-budget", cfg.dense_budget, "Largest D^n for dense state vectors")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    };
    auto add_out = [&](CLI::App *sub) {
        sub->add_option("--out", cfg.out, "Output path (default: stdout)");
    };

    auto *construct = app.add_subcommand("construct", "Write the generator file of a standard stabilizer state");
    construct->add_option("kind", cfg.kind, "ghz | bell | graph")->required();
    construct->add_option("--dim", cfg.dim, "Local dimension D")->required();
    construct->add_option("--parties", cfg.parties, "Number of parties n")->required();
    construct->add_option("--adjacency", cfg.adjacency,
                          "Graph upper triangle a_12 a_13 ... a_(n-1)n, space or comma separated");
    add_out(construct);

    auto *verify = app.add_subcommand("verify", "Check a generator file for validity and the AME property");
    verify->add_option("generators", cfg.input, "Generator file")->required();
    verify->add_option("--method", cfg.method, "symbolic | dense | both")->capture_default_str();
    add_dense(verify);
    add_out(verify);

    auto *decomp = app.add_subcommand("decompose", "Split a stabilizer state into prime-power factors");
    decomp->add_option("generators", cfg.input, "Generator file")->required();
    decomp->add_flag("--verify", cfg.verify, "Dense-check the factor states and report every subset merge");
    add_dense(decomp);
    add_out(decomp);

    auto *search = app.add_subcommand("search", "Search weighted graph states for AME witnesses");
    search->add_option("--parties", cfg.parties, "Number of parties n")->required();
    search->add_option("--dim", cfg.dim, "Local dimension d")->required();
    search->add_option("--mode", cfg.mode, "exhaustive | first")->capture_default_str();
    search->add_option("--shard", cfg.shard, "Candidate index range start:end");
    search->add_option("--search-budget", cfg.search_budget, "Maximum candidates in exhaustive mode")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    search->add_option("--graph-complete", cfg.graph_complete,
                       "Treat graph exhaustion as stabilizer exhaustion: yes | no | auto (prime d)")
        ->capture_default_str();
    add_dense(search);
    add_out(search);

    auto *nogo = app.add_subcommand("nogo", "Propagate prime-power no-go facts into an (n, D) table");
    nogo->add_option("--facts", cfg.input, "Facts file (default: the shipped single fact)");
    nogo->add_option("--max-parties", cfg.max_parties, "Largest n")->capture_default_str();
    nogo->add_option("--max-dim", cfg.max_dim, "Largest D")->capture_default_str();
    nogo->add_option("--format", cfg.format, "csv | svg | reasons")->capture_default_str();
    add_out(nogo);

    auto *state = app.add_subcommand("state", "Dump the dense stabilized state");
    state->add_option("generators", cfg.input, "Generator file")->required();
    add_dense(state);
    add_out(state);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*construct) {
            return cmd_construct(cfg, out);
        }
        if (*verify) {
            return cmd_verify(cfg, out);
        }
        if (*decomp) {
            return cmd_decompose(cfg, out, err);
        }
        if (*search) {
            return cmd_search(cfg, out);
        }
        if (*nogo) {
            return cmd_nogo(cfg, out);
        }
        if (*state) {
            return cmd_state(cfg, out);
        }
    } catch (const FactConflict &e) {
        err << "amekit: conflict: " << e.what() << "\n";
        return kExitConflict;
    } catch (const ConsistencyViolation &e) {
        err << "amekit: internal inconsistency: " << e.what() << "\n";
        return kExitConflict;
    } catch (const std::exception &e) {
        err << "amekit: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace amekit

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

#include <algorithm>
#include <sstream>

#include "amekit/ring.h"

namespace amekit {

std::string to_string(FactStatus s) {
    switch (s) {
        case FactStatus::no_ame:
            return "noAME";
        case FactStatus::no_stab_ame:
            return "noStabAME";
        case FactStatus::stab_ame_exists:
            return "stabAMEExists";
    }
    return "?";
}

std::string to_string(CellStatus s) {
    switch (s) {
        case CellStatus::excluded:
            return "excluded";
        case CellStatus::witness:
            return "witness";
        case CellStatus::unknown:
            return "unknown";
    }
    return "?";
}

namespace {

std::invalid_argument line_error(size_t line, const std::string &msg) {
    return std::invalid_argument("facts line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::vector<KnownFact> load_facts(std::string_view text) {
    std::vector<KnownFact> facts;
    std::map<std::pair<size_t, int64_t>, size_t> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        long long n = 0, q = 0;
        std::string status;
        if (!(fields >> n >> q >> status)) {
            throw line_error(line_no, "expected 'n q status source...'");
        }
        KnownFact fact;
        if (n < 2) {
            throw line_error(line_no, "party count must be >= 2");
        }
        if (!is_prime_power(q)) {
            throw line_error(line_no, std::to_string(q) + " is not a prime power");
        }
        fact.parties = static_cast<size_t>(n);
        fact.local_dim = q;
        if (status == "noAME") {
            fact.status = FactStatus::no_ame;
        } else if (status == "noStabAME") {
            fact.status = FactStatus::no_stab_ame;
        } else if (status == "stabAMEExists") {
            fact.status = FactStatus::stab_ame_exists;
        } else {
            throw line_error(line_no, "unknown status '" + status + "'");
        }
        std::getline(fields >> std::ws, fact.source);
        while (!fact.source.empty() && (fact.source.back() == '\r' || fact.source.back() == ' ')) {
            fact.source.pop_back();
        }

        auto key = std::make_pair(fact.parties, fact.local_dim);
        auto it = seen.find(key);
        if (it != seen.end() && facts[it->second].excludes_stabilizer() != fact.excludes_stabilizer()) {
            throw FactConflict(
                "facts line " + std::to_string(line_no) + ": (" + std::to_string(n) + ", " + std::to_string(q) +
                ") is " + status + " [" + fact.source + "] but an earlier line says " +
                to_string(facts[it->second].status) + " [" + facts[it->second].source +
                "]; a stabilizer AME state cannot both exist and not exist");
        }
        seen.emplace(key, facts.size());
        facts.push_back(std::move(fact));
    }
    return facts;
}

std::string default_facts_text() {
    return "# n q status source\n"
           "4 2 noAME higuchi2000\n";
}

const NoGoCell &NoGoTable::at(size_t n, int64_t d) const {
    if (n < kMinParties || n > max_parties || d < kMinDim || d > max_dim) {
        throw std::out_of_range("NoGoTable: cell outside table");
    }
    return cells[(n - kMinParties) * static_cast<size_t>(max_dim - kMinDim + 1) + static_cast<size_t>(d - kMinDim)];
}

NoGoCell &NoGoTable::at(size_t n, int64_t d) {
    return const_cast<NoGoCell &>(static_cast<const NoGoTable &>(*this).at(n, d));
}

NoGoTable propagate(const std::vector<KnownFact> &facts, size_t max_parties, int64_t max_dim) {
    if (max_parties < NoGoTable::kMinParties || max_dim < NoGoTable::kMinDim) {
        throw std::invalid_argument("propagate: table needs max_parties >= 2 and max_dim >= 2");
    }
    NoGoTable t;
    t.max_parties = max_parties;
    t.max_dim = max_dim;
    t.cells.resize((max_parties - 1) * static_cast<size_t>(max_dim - 1));

    std::map<std::pair<size_t, int64_t>, std::vector<const KnownFact *>> by_cell;
    for (const auto &f : facts) {
        by_cell[{f.parties, f.local_dim}].push_back(&f);
    }

    for (size_t n = NoGoTable::kMinParties; n <= max_parties; n++) {
        for (int64_t d = NoGoTable::kMinDim; d <= max_dim; d++) {
            NoGoCell &cell = t.at(n, d);
            std::vector<std::string> witnesses;
            if (auto it = by_cell.find({n, d}); it != by_cell.end()) {
                for (const KnownFact *f : it->second) {
                    if (!f->excludes_stabilizer()) {
                        witnesses.push_back(f->source);
                    }
                }
            }
            for (const auto &q : factorize(d).factors) {
                auto it = by_cell.find({n, q.prime_power});
                if (it == by_cell.end()) {
                    continue;
                }
                for (const KnownFact *f : it->second) {
                    if (f->excludes_stabilizer()) {
                        cell.reasons.push_back("q=" + std::to_string(q.prime_power) + " " + to_string(f->status) +
                                               "(" + std::to_string(n) + "," + std::to_string(q.prime_power) +
                                               ") " + f->source);
                    }
                }
            }
            if (!cell.reasons.empty()) {
                cell.status = CellStatus::excluded;
                if (!witnesses.empty()) {
                    throw FactConflict(
                        "cell (" + std::to_string(n) + ", " + std::to_string(d) + ") is excluded by [" +
                        cell.reasons.front() + "] yet has a stabilizer AME witness [" + witnesses.front() +
                        "]; the facts are inconsistent with the prime-power reduction");
                }
            } else if (!witnesses.empty()) {
                cell.status = CellStatus::witness;
                cell.reasons = std::move(witnesses);
            }
        }
    }
    return t;
}

std::string emit_csv(const NoGoTable &t) {
    std::ostringstream out;
    out << "n\\D";
    for (int64_t d = NoGoTable::kMinDim; d <= t.max_dim; d++) {
        out << "," << d;
    }
    out << "\n";
    for (size_t n = NoGoTable::kMinParties; n <= t.max_parties; n++) {
        out << n;
        for (int64_t d = NoGoTable::kMinDim; d <= t.max_dim; d++) {
            out << "," << to_string(t.at(n, d).status);
        }
        out << "\n";
    }
    return out.str();
}

std::string emit_reasons_csv(const NoGoTable &t) {
    std::ostringstream out;
    out << "n,D,status,reason\n";
    for (size_t n = NoGoTable::kMinParties; n <= t.max_parties; n++) {
        for (int64_t d = NoGoTable::kMinDim; d <= t.max_dim; d++) {
            const NoGoCell &cell = t.at(n, d);
            if (cell.status == CellStatus::unknown) {
                continue;
            }
            std::string reason;
            for (size_t i = 0; i < cell.reasons.size(); i++) {
                reason += (i ? "; " : "") + cell.reasons[i];
            }
            // Quote the reason column; sources are free text.
            std::string quoted;
            for (char c : reason) {
                quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            }
            out << n << "," << d << "," << to_string(cell.status) << ",\"" << quoted << "\"\n";
        }
    }
    return out.str();
}

namespace {

std::string xml_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

const char *fill_for(CellStatus s) {
    switch (s) {
        case CellStatus::excluded:
            return "#d62728";
        case CellStatus::witness:
            return "#2ca02c";
        case CellStatus::unknown:
            return "#c7c7c7";
    }
    return "#000000";
}

}  // namespace

std::string emit_svg(const NoGoTable &t) {
    constexpr int cell = 20;
    constexpr int left = 40;
    constexpr int top = 40;
    const int cols = static_cast<int>(t.max_dim - NoGoTable::kMinDim + 1);
    const int rows = static_cast<int>(t.max_parties - NoGoTable::kMinParties + 1);
    const int grid_w = cols * cell;
    const int grid_h = rows * cell;
    const int width = std::max(left + grid_w + 20, 420);
    const int height = top + grid_h + 110;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << left + grid_w / 2 << "\" y=\"14\" text-anchor=\"middle\">local dimension D</text>\n";
    out << "<text x=\"12\" y=\"" << top + grid_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 12 "
        << top + grid_h / 2 << ")\">parties n</text>\n";
    for (int c = 0; c < cols; c++) {
        out << "<text x=\"" << left + c * cell + cell / 2 << "\" y=\"" << top - 6 << "\" text-anchor=\"middle\">"
            << NoGoTable::kMinDim + c << "</text>\n";
    }
    for (int r = 0; r < rows; r++) {
        const size_t n = NoGoTable::kMinParties + static_cast<size_t>(r);
        out << "<text x=\"" << left - 6 << "\" y=\"" << top + r * cell + cell / 2 + 4 << "\" text-anchor=\"end\">" << n
            << "</text>\n";
        for (int c = 0; c < cols; c++) {
            const int64_t d = NoGoTable::kMinDim + c;
            const NoGoCell &nc = t.at(n, d);
            out << "<rect x=\"" << left + c * cell << "\" y=\"" << top + r * cell << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << fill_for(nc.status)
                << "\" stroke=\"#ffffff\" stroke-width=\"1\"><title>(" << n << "," << d << ") "
                << to_string(nc.status);
            for (const auto &reason : nc.reasons) {
                out << "; " << xml_escape(reason);
            }
            out << "</title></rect>\n";
        }
    }
    const int ly = top + grid_h + 24;
    const std::pair<CellStatus, const char *> legend[] = {
        {CellStatus::excluded, "excluded: no stabilizer AME(n,D) state can exist"},
        {CellStatus::witness, "witness: a stabilizer AME(n,D) state is known"},
        {CellStatus::unknown, "unknown"},
    };
    for (int i = 0; i < 3; i++) {
        out << "<rect x=\"" << left << "\" y=\"" << ly + i * 22 << "\" width=\"14\" height=\"14\" fill=\""
            << fill_for(legend[i].first) << "\"/>\n";
        out << "<text x=\"" << left + 20 << "\" y=\"" << ly + i * 22 + 11 << "\">" << legend[i].second << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

NoGoTable parse_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line.rfind("n\\D", 0) != 0) {
        throw std::invalid_argument("parse_csv: missing 'n\\D,...' header");
    }
    std::vector<int64_t> dims;
    {
        std::istringstream header(line.substr(4));
        std::string tok;
        while (std::getline(header, tok, ',')) {
            dims.push_back(std::stoll(tok));
        }
    }
    if (dims.empty() || dims.front() != NoGoTable::kMinDim) {
        throw std::invalid_argument("parse_csv: dimension columns must start at 2");
    }
    for (size_t i = 0; i < dims.size(); i++) {
        if (dims[i] != NoGoTable::kMinDim + static_cast<int64_t>(i)) {
            throw std::invalid_argument("parse_csv: dimension columns must be consecutive");
        }
    }
    std::vector<std::vector<CellStatus>> rows;
    size_t expected_n = NoGoTable::kMinParties;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string tok;
        std::getline(fields, tok, ',');
        if (std::stoull(tok) != expected_n++) {
            throw std::invalid_argument("parse_csv: party rows must be consecutive from 2");
        }
        std::vector<CellStatus> row;
        while (std::getline(fields, tok, ',')) {
            if (tok == "excluded") {
                row.push_back(CellStatus::excluded);
            } else if (tok == "witness") {
                row.push_back(CellStatus::witness);
            } else if (tok == "unknown") {
                row.push_back(CellStatus::unknown);
            } else {
                throw std::invalid_argument("parse_csv: unknown cell value '" + tok + "'");
            }
        }
        if (row.size() != dims.size()) {
            throw std::invalid_argument("parse_csv: ragged row");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::invalid_argument("parse_csv: no rows");
    }
    NoGoTable t;
    t.max_parties = NoGoTable::kMinParties + rows.size() - 1;
    t.max_dim = dims.back();
    t.cells.resize(rows.size() * dims.size());
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c = 0; c < dims.size(); c++) {
            t.at(NoGoTable::kMinParties + r, dims[c]).status = rows[r][c];
        }
    }
    return t;
}

}  // namespace amekit

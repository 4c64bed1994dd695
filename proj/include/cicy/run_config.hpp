#pragma once

// Run configuration: embedding rows and the listed (Y, X, g, d) cases.
//
// Line format, one record per line, '#' starts a comment:
//   row   y=<degrees> x=<degrees> r=<int>
//   case  group=<no_minus_two|minus_two> y=<degrees> x=<degrees> g=<int> d=<int>
//   rational id=<cubic33|quadric24>
// Degrees are comma separated, e.g. y=2,4 x=2,2,2. The y spelling of a case is
// kept verbatim for display; matching uses the sorted degree sequence.

#include "pipeline.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cicy {

enum class CaseGroup { no_minus_two, minus_two };

inline std::string to_string(CaseGroup g) { return g == CaseGroup::no_minus_two ? "no_minus_two" : "minus_two"; }

struct ListedCase {
    CaseGroup group;
    DegreeType y_type;
    DegreeType x_type;
    Integer g;
    Integer d;
};

struct RunConfig {
    std::vector<EmbeddingRow> rows;
    std::vector<ListedCase> cases;
    std::vector<RationalCaseId> rational;

    // Rows whose Y matches the given type up to order, in file order.
    std::vector<EmbeddingRow> rows_for(const DegreeType& y) const {
        std::vector<EmbeddingRow> out;
        for (const EmbeddingRow& r : rows)
            if (normalized_type(r.y_degrees) == normalized_type(y)) out.push_back(r);
        return out;
    }

    const ListedCase* find_case(const DegreeType& y, const Integer& g, const Integer& d) const {
        for (const ListedCase& c : cases)
            if (normalized_type(c.y_type) == normalized_type(y) && c.g == g && c.d == d) return &c;
        return nullptr;
    }

    const EmbeddingRow* find_row(const DegreeType& y, const DegreeType& x) const {
        for (const EmbeddingRow& r : rows)
            if (normalized_type(r.y_degrees) == normalized_type(y) && r.x_degrees == x) return &r;
        return nullptr;
    }
};

inline DegreeType parse_degrees(const std::string& text) {
    DegreeType out;
    std::string s = text;
    if (!s.empty() && s.front() == '(') s.erase(s.begin());
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad degree list '" + text + "'");
        }
        if (used != item.size() || v < 1) throw std::invalid_argument("bad degree list '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty degree list '" + text + "'");
    return out;
}

inline RunConfig parse_run_config(std::istream& in) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        std::map<std::string, std::string> kv;
        std::string tok;
        while (ls >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value, got '" +
                                            tok + "'");
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        auto need = [&](const std::string& key) -> const std::string& {
            auto it = kv.find(key);
            if (it == kv.end())
                throw std::invalid_argument("config line " + std::to_string(lineno) + ": missing '" + key + "'");
            return it->second;
        };
        try {
            if (kind == "row") {
                EmbeddingRow row{parse_degrees(need("x")), parse_degrees(need("y")), std::stoi(need("r"))};
                validate_row(row);
                cfg.rows.push_back(row);
            } else if (kind == "case") {
                const std::string& grp = need("group");
                CaseGroup group;
                if (grp == "no_minus_two")
                    group = CaseGroup::no_minus_two;
                else if (grp == "minus_two")
                    group = CaseGroup::minus_two;
                else
                    throw std::invalid_argument("unknown group '" + grp + "'");
                cfg.cases.push_back({group, parse_degrees(need("y")), parse_degrees(need("x")), parse_integer(need("g")),
                                     parse_integer(need("d"))});
            } else if (kind == "rational") {
                cfg.rational.push_back(parse_rational_case(need("id")));
            } else {
                throw std::invalid_argument("unknown record '" + kind + "'");
            }
        } catch (const std::invalid_argument& e) {
            std::string msg = e.what();
            if (msg.rfind("config line", 0) == 0) throw;
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + msg);
        }
    }
    if (cfg.rows.empty()) throw std::invalid_argument("config: no embedding rows");
    if (cfg.cases.empty() && cfg.rational.empty()) throw std::invalid_argument("config: no cases");
    for (const ListedCase& c : cfg.cases)
        if (!cfg.find_row(c.y_type, c.x_type))
            throw std::invalid_argument("config: case " + format_type(c.y_type) + " " + format_type(c.x_type) +
                                        " has no matching row");
    return cfg;
}

inline RunConfig parse_run_config(const std::string& text) {
    std::istringstream in(text);
    return parse_run_config(in);
}

inline const char* default_config_text() {
    return R"(# Embedding rows: K3 complete intersection X in P^r inside Y.
row y=5 x=4,1 r=4
row y=5 x=3,2 r=4
row y=4,2 x=4,1,1 r=5
row y=2,4 x=2,3,1 r=5
row y=2,4 x=2,2,2 r=5
row y=3,3 x=3,2,1 r=5
row y=3,2,2 x=3,2,1,1 r=6
row y=2,2,3 x=2,2,2,1 r=6
row y=2,2,2,2 x=2,2,2,1,1 r=7

# Cases on K3 surfaces without -2 classes.
case group=no_minus_two y=5 x=3,2 g=23 d=18
case group=no_minus_two y=5 x=3,2 g=24 d=19
case group=no_minus_two y=5 x=3,2 g=26 d=20
case group=no_minus_two y=5 x=3,2 g=27 d=20
case group=no_minus_two y=5 x=3,2 g=29 d=21
case group=no_minus_two y=2,4 x=2,2,2 g=16 d=17
case group=no_minus_two y=2,4 x=2,2,2 g=16 d=18
case group=no_minus_two y=2,4 x=2,2,2 g=16 d=19
case group=no_minus_two y=2,4 x=2,2,2 g=17 d=17
case group=no_minus_two y=2,4 x=2,2,2 g=17 d=18
case group=no_minus_two y=2,4 x=2,2,2 g=17 d=19
case group=no_minus_two y=2,4 x=2,2,2 g=17 d=20
case group=no_minus_two y=2,4 x=2,2,2 g=18 d=20
case group=no_minus_two y=2,4 x=2,2,2 g=19 d=18
case group=no_minus_two y=2,4 x=2,2,2 g=19 d=20
case group=no_minus_two y=2,4 x=2,2,2 g=19 d=21
case group=no_minus_two y=2,4 x=2,2,2 g=20 d=19
case group=no_minus_two y=2,4 x=2,2,2 g=20 d=20
case group=no_minus_two y=2,4 x=2,2,2 g=21 d=20
case group=no_minus_two y=2,4 x=2,2,2 g=21 d=21
case group=no_minus_two y=2,4 x=2,2,2 g=22 d=20
case group=no_minus_two y=2,4 x=2,2,2 g=22 d=21
case group=no_minus_two y=2,4 x=2,2,2 g=23 d=20
case group=no_minus_two y=2,4 x=2,2,2 g=23 d=22
case group=no_minus_two y=2,4 x=2,2,2 g=25 d=21
case group=no_minus_two y=2,4 x=2,2,2 g=25 d=22
case group=no_minus_two y=2,4 x=2,2,2 g=26 d=22
case group=no_minus_two y=2,4 x=2,2,2 g=27 d=22
case group=no_minus_two y=2,4 x=2,2,2 g=29 d=23
case group=no_minus_two y=3,3 x=3,2,1 g=8 d=12
case group=no_minus_two y=2,2,3 x=2,2,2,1 g=11 d=16
case group=no_minus_two y=2,2,2,2 x=2,2,2,1,1 g=4 d=9
case group=no_minus_two y=2,2,2,2 x=2,2,2,1,1 g=5 d=10
case group=no_minus_two y=2,2,2,2 x=2,2,2,1,1 g=5 d=11

# Cases on K3 surfaces with -2 classes.
case group=minus_two y=5 x=3,2 g=23 d=19
case group=minus_two y=5 x=3,2 g=24 d=20
case group=minus_two y=5 x=3,2 g=25 d=19
case group=minus_two y=5 x=3,2 g=25 d=20
case group=minus_two y=2,4 x=2,2,2 g=16 d=20
case group=minus_two y=2,4 x=2,2,2 g=18 d=18
case group=minus_two y=2,4 x=2,2,2 g=18 d=19
case group=minus_two y=2,4 x=2,2,2 g=19 d=19
case group=minus_two y=2,4 x=2,2,2 g=20 d=21
case group=minus_two y=2,4 x=2,2,2 g=21 d=19
case group=minus_two y=2,4 x=2,2,2 g=23 d=21
case group=minus_two y=2,4 x=2,2,2 g=24 d=21
case group=minus_two y=2,4 x=2,2,2 g=24 d=22
case group=minus_two y=2,4 x=2,2,2 g=27 d=23
case group=minus_two y=2,4 x=2,2,2 g=28 d=23
case group=minus_two y=3,2,2 x=3,2,1,1 g=4 d=8
case group=minus_two y=2,2,2,2 x=2,2,2,1,1 g=4 d=10
case group=minus_two y=2,2,2,2 x=2,2,2,1,1 g=6 d=11

# Rational surface cases.
rational id=cubic33
rational id=quadric24
)";
}

inline const RunConfig& default_run_config() {
    static const RunConfig cfg = parse_run_config(std::string(default_config_text()));
    return cfg;
}

}  // namespace cicy

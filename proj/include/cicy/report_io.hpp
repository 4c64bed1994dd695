#pragma once

// JSON, TSV and plain-text rendering of cones, reports, tables and scans.

#include "cones.hpp"
#include "pipeline.hpp"
#include "run_config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cicy {

using Json = nlohmann::ordered_json;

// Integers become JSON numbers when they fit in 64 bits, decimal strings otherwise.
inline Json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer in JSON");
}

inline std::string to_string(RayKind k) { return k == RayKind::minus_two ? "minus_two" : "isotropic"; }

inline RayKind parse_ray_kind(const std::string& s) {
    if (s == "minus_two") return RayKind::minus_two;
    if (s == "isotropic") return RayKind::isotropic;
    throw std::invalid_argument("unknown ray kind '" + s + "'");
}

inline std::string to_string(ConeKind k) {
    return k == ConeKind::rational_rays ? "rational_rays" : "irrational_light_cone";
}

inline ConeKind parse_cone_kind(const std::string& s) {
    if (s == "rational_rays") return ConeKind::rational_rays;
    if (s == "irrational_light_cone") return ConeKind::irrational_light_cone;
    throw std::invalid_argument("unknown cone kind '" + s + "'");
}

inline Json cone_to_json(const ConeDesc& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    auto ray = [](const std::optional<ConeRay>& r) {
        return r ? Json{{"class", format_class(r->cls)}, {"kind", to_string(r->kind)}} : Json(nullptr);
    };
    auto cls = [](const std::optional<DivClass>& d) { return d ? Json(format_class(*d)) : Json(nullptr); };
    j["ray_left"] = ray(c.ray_left);
    j["ray_right"] = ray(c.ray_right);
    j["nef_left"] = cls(c.nef_left);
    j["nef_right"] = cls(c.nef_right);
    return j;
}

inline ConeDesc cone_from_json(const Json& j) {
    ConeDesc c;
    c.kind = parse_cone_kind(j.at("kind").get<std::string>());
    auto ray = [](const Json& r) -> std::optional<ConeRay> {
        if (r.is_null()) return std::nullopt;
        return ConeRay{parse_class(r.at("class").get<std::string>()), parse_ray_kind(r.at("kind").get<std::string>())};
    };
    auto cls = [](const Json& d) -> std::optional<DivClass> {
        if (d.is_null()) return std::nullopt;
        return parse_class(d.get<std::string>());
    };
    c.ray_left = ray(j.at("ray_left"));
    c.ray_right = ray(j.at("ray_right"));
    c.nef_left = cls(j.at("nef_left"));
    c.nef_right = cls(j.at("nef_right"));
    return c;
}

inline Json report_to_json(const CriterionReport& r) {
    Json j;
    j["subject"] = r.subject;
    j["y_type"] = r.y_type;
    j["x_type"] = r.x_type;
    j["g"] = integer_to_json(r.g);
    j["d"] = integer_to_json(r.d);
    Json q = Json::object();
    for (const NamedQuantity& nq : r.quantities) q[nq.name] = integer_to_json(nq.value);
    j["quantities"] = q;
    j["critical_class"] = r.critical_class ? Json(format_class(*r.critical_class)) : Json(nullptr);
    j["route"] = r.route;
    j["cone"] = r.cone ? cone_to_json(*r.cone) : Json(nullptr);
    if (r.certificate) {
        j["certificate"] = {{"verdict", to_string(r.certificate->verdict)},
                            {"reason", to_string(r.certificate->reason)},
                            {"h1", r.certificate->h1_value ? integer_to_json(*r.certificate->h1_value) : Json(nullptr)}};
    } else {
        j["certificate"] = nullptr;
    }
    Json checks = Json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"gating", c.gating}, {"detail", c.detail}});
    j["checks"] = checks;
    j["verdict"] = r.satisfied() ? "criterion_satisfied" : "failed";
    auto ff = r.first_failure();
    j["first_failure"] = ff ? Json(*ff) : Json(nullptr);
    return j;
}

inline CriterionReport report_from_json(const Json& j) {
    CriterionReport r;
    r.subject = j.at("subject").get<std::string>();
    r.y_type = j.at("y_type").get<DegreeType>();
    r.x_type = j.at("x_type").get<DegreeType>();
    r.g = integer_from_json(j.at("g"));
    r.d = integer_from_json(j.at("d"));
    for (const auto& [k, v] : j.at("quantities").items()) r.quantities.push_back({k, integer_from_json(v)});
    if (!j.at("critical_class").is_null()) r.critical_class = parse_class(j.at("critical_class").get<std::string>());
    r.route = j.at("route").get<std::string>();
    if (!j.at("cone").is_null()) r.cone = cone_from_json(j.at("cone"));
    if (const Json& c = j.at("certificate"); !c.is_null()) {
        H1Certificate cert{parse_verdict(c.at("verdict").get<std::string>()),
                           parse_reason(c.at("reason").get<std::string>()), std::nullopt};
        if (!c.at("h1").is_null()) cert.h1_value = integer_from_json(c.at("h1"));
        r.certificate = cert;
    }
    for (const Json& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), parse_check_status(c.at("status").get<std::string>()),
                            c.at("gating").get<bool>(), c.at("detail").get<std::string>()});
    std::string verdict = j.at("verdict").get<std::string>();
    if ((verdict == "criterion_satisfied") != r.satisfied())
        throw std::invalid_argument("report JSON: verdict disagrees with its checks");
    return r;
}

inline std::string render_report_text(const CriterionReport& r) {
    std::ostringstream os;
    if (r.subject == "k3")
        os << "check Y=" << format_type(r.y_type) << " X=" << format_type(r.x_type);
    else
        os << "check " << r.subject << " Y=" << format_type(r.y_type) << " X=" << format_type(r.x_type);
    os << " g=" << r.g << " d=" << r.d << "\n";
    os << "  quantities:";
    for (const NamedQuantity& q : r.quantities) os << ' ' << q.name << '=' << q.value;
    os << "\n";
    if (r.critical_class) os << "  D = " << format_class(*r.critical_class) << "\n";
    if (r.cone && r.cone->kind == ConeKind::rational_rays) {
        os << "  NE: " << format_class(r.cone->ray_left->cls) << ", " << format_class(r.cone->ray_right->cls) << "\n";
        os << "  Nef: " << format_class(*r.cone->nef_left) << ", " << format_class(*r.cone->nef_right) << "\n";
    }
    for (const CheckResult& c : r.checks) {
        os << "  [" << to_string(c.status) << "] " << c.name;
        if (!c.gating) os << " (informational)";
        os << ": " << c.detail << "\n";
    }
    auto ff = r.first_failure();
    os << "verdict: " << (ff ? "failed at " + *ff : std::string("criterion_satisfied")) << "\n";
    return os.str();
}

inline std::string render_cone_text(const GramForm& f, const Integer& sample_bound) {
    std::ostringstream os;
    os << "form: h=" << f.h() << " d=" << f.d() << " c=" << f.c() << " disc=" << f.discriminant() << "\n";
    ConeDesc cone = effective_cone(f);
    if (cone.kind == ConeKind::irrational_light_cone) {
        os << "no -2 classes; cone = closure of positive cone\n";
        return os.str();
    }
    auto ray_text = [](const ConeRay& r) { return format_class(r.cls) + " (" + to_string(r.kind) + ")"; };
    os << "NE: " << ray_text(*cone.ray_left) << ", " << ray_text(*cone.ray_right) << "\n";
    os << "Nef: " << format_class(*cone.nef_left) << ", " << format_class(*cone.nef_right) << "\n";
    if (!has_minus_two_class(f)) {
        os << "no -2 classes\n";
        return os.str();
    }
    SolutionSet sample = minus_two_classes_bounded(f, sample_bound);
    os << "-2 classes with |x| <= " << sample.exhaustive_bound << ":";
    if (sample.solutions.empty()) os << " none";
    for (const DivClass& s : sample.solutions) os << ' ' << format_class(s);
    os << "\n";
    return os.str();
}

struct TableRow {
    ListedCase listed;
    CriterionReport report;
};

inline std::vector<TableRow> compute_tables(const RunConfig& cfg) {
    std::vector<TableRow> out;
    for (CaseGroup group : {CaseGroup::no_minus_two, CaseGroup::minus_two}) {
        for (const ListedCase& c : cfg.cases) {
            if (c.group != group) continue;
            const EmbeddingRow* row = cfg.find_row(c.y_type, c.x_type);
            out.push_back({c, check_k3_case(*row, c.g, c.d)});
        }
    }
    return out;
}

namespace detail {

inline std::string ray_pair_text(const CriterionReport& r, bool nef) {
    if (!r.cone || r.cone->kind != ConeKind::rational_rays) return "-";
    if (nef) return format_class(*r.cone->nef_left) + "," + format_class(*r.cone->nef_right);
    return format_class(r.cone->ray_left->cls) + "," + format_class(r.cone->ray_right->cls);
}

inline std::string d_sq_text(const CriterionReport& r) {
    auto v = r.quantity("D_sq");
    return v ? v->str() : std::string("-");
}

inline std::string reason_text(const CriterionReport& r) {
    return r.certificate ? to_string(r.certificate->reason) : std::string("-");
}

}  // namespace detail

inline std::string render_tables_tsv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "g\td\ty_type\tx_type\tD\tD_sq\tne_rays\tnef_gens\treason\n";
    for (const TableRow& t : rows) {
        const CriterionReport& r = t.report;
        os << t.listed.g << '\t' << t.listed.d << '\t' << format_type(t.listed.y_type) << '\t'
           << format_type(t.listed.x_type) << '\t' << format_class(*r.critical_class) << '\t' << detail::d_sq_text(r)
           << '\t' << detail::ray_pair_text(r, false) << '\t' << detail::ray_pair_text(r, true) << '\t'
           << detail::reason_text(r) << '\n';
    }
    return os.str();
}

inline Json render_tables_json(const std::vector<TableRow>& rows) {
    Json arr = Json::array();
    for (const TableRow& t : rows) {
        const CriterionReport& r = t.report;
        Json j;
        j["g"] = integer_to_json(t.listed.g);
        j["d"] = integer_to_json(t.listed.d);
        j["y_type"] = format_type(t.listed.y_type);
        j["x_type"] = format_type(t.listed.x_type);
        j["D"] = format_class(*r.critical_class);
        auto sq = r.quantity("D_sq");
        j["D_sq"] = sq ? integer_to_json(*sq) : Json(nullptr);
        if (r.cone && r.cone->kind == ConeKind::rational_rays) {
            j["ne_rays"] = {format_class(r.cone->ray_left->cls), format_class(r.cone->ray_right->cls)};
            j["nef_gens"] = {format_class(*r.cone->nef_left), format_class(*r.cone->nef_right)};
        } else {
            j["ne_rays"] = nullptr;
            j["nef_gens"] = nullptr;
        }
        j["reason"] = r.certificate ? Json(to_string(r.certificate->reason)) : Json(nullptr);
        arr.push_back(j);
    }
    return arr;
}

enum class CellMark { listed_pass, unlisted_pass, fail, listed_fail };

inline char mark_char(CellMark m) {
    switch (m) {
        case CellMark::listed_pass: return '#';
        case CellMark::unlisted_pass: return '+';
        case CellMark::fail: return '.';
        case CellMark::listed_fail: return '!';
    }
    return '?';
}

inline std::string to_string(CellMark m) {
    switch (m) {
        case CellMark::listed_pass: return "listed_pass";
        case CellMark::unlisted_pass: return "unlisted_pass";
        case CellMark::fail: return "fail";
        case CellMark::listed_fail: return "listed_fail";
    }
    return "?";
}

struct ScanCell {
    Integer g;
    Integer d;
    CellMark mark;
    DegreeType x_type;  // row used for the verdict
    std::string first_failure;
};

struct ScanResult {
    DegreeType y_type;
    Integer g_lo, g_hi, d_lo, d_hi;
    std::vector<ScanCell> cells;  // g ascending, then d ascending
};

// Evaluates one (Y, g, d): the listed X when the case is listed, else the
// requested X, else every compatible row until one passes. Rows used by listed
// cases of the same Y go first, and the first report is kept when none passes.
inline CriterionReport evaluate_case(const RunConfig& cfg, const DegreeType& y, const Integer& g, const Integer& d,
                                     const std::optional<DegreeType>& x_override = std::nullopt) {
    std::vector<EmbeddingRow> rows;
    if (const ListedCase* c = cfg.find_case(y, g, d)) {
        rows.push_back(*cfg.find_row(y, c->x_type));
    } else if (x_override) {
        const EmbeddingRow* r = cfg.find_row(y, *x_override);
        if (!r)
            throw std::invalid_argument("no embedding row with Y=" + format_type(y) + " X=" + format_type(*x_override));
        rows.push_back(*r);
    } else {
        rows = cfg.rows_for(y);
        auto used_by_listed = [&](const EmbeddingRow& r) {
            for (const ListedCase& c : cfg.cases)
                if (normalized_type(c.y_type) == normalized_type(y) && c.x_type == r.x_degrees) return true;
            return false;
        };
        std::stable_partition(rows.begin(), rows.end(), used_by_listed);
    }
    if (rows.empty()) throw std::invalid_argument("no embedding row with Y=" + format_type(y));
    std::optional<CriterionReport> first;
    for (const EmbeddingRow& row : rows) {
        CriterionReport rep = check_k3_case(row, g, d);
        if (rep.satisfied()) return rep;
        if (!first) first = std::move(rep);
    }
    return *first;
}

inline ScanResult run_scan(const RunConfig& cfg, const DegreeType& y, const Integer& g_lo, const Integer& g_hi,
                           const Integer& d_lo, const Integer& d_hi) {
    if (cfg.rows_for(y).empty()) throw std::invalid_argument("no embedding row with Y=" + format_type(y));
    ScanResult out{y, g_lo, g_hi, d_lo, d_hi, {}};
    for (Integer g = g_lo; g <= g_hi; ++g) {
        for (Integer d = d_lo; d <= d_hi; ++d) {
            CriterionReport rep = evaluate_case(cfg, y, g, d);
            bool listed = cfg.find_case(y, g, d) != nullptr;
            bool ok = rep.satisfied();
            CellMark m = listed ? (ok ? CellMark::listed_pass : CellMark::listed_fail)
                                : (ok ? CellMark::unlisted_pass : CellMark::fail);
            out.cells.push_back({g, d, m, rep.x_type, rep.first_failure().value_or("")});
        }
    }
    return out;
}

inline std::string render_scan_text(const ScanResult& s) {
    std::ostringstream os;
    os << "scan Y=" << format_type(s.y_type) << " g=" << s.g_lo << ".." << s.g_hi << " d=" << s.d_lo << ".." << s.d_hi
       << "\n";
    if (s.cells.empty()) {
        os << "(empty grid)\n";
        return os.str();
    }
    auto at = [&](const Integer& g, const Integer& d) -> const ScanCell& {
        Integer width = s.d_hi - s.d_lo + 1;
        Integer idx = (g - s.g_lo) * width + (d - s.d_lo);
        return s.cells[static_cast<std::size_t>(idx)];
    };
    os << "  g\\d";
    for (Integer d = s.d_lo; d <= s.d_hi; ++d) {
        std::string ds = d.str();
        os << std::string(ds.size() < 4 ? 4 - ds.size() : 1, ' ') << ds;
    }
    os << "\n";
    for (Integer g = s.g_hi; g >= s.g_lo; --g) {
        std::string gs = g.str();
        os << std::string(gs.size() < 5 ? 5 - gs.size() : 1, ' ') << gs;
        for (Integer d = s.d_lo; d <= s.d_hi; ++d) os << "   " << mark_char(at(g, d).mark);
        os << "\n";
    }
    os << "legend: # listed pass, + unlisted pass, . fail, ! listed but failing\n";
    return os.str();
}

inline Json render_scan_json(const ScanResult& s) {
    Json j;
    j["y_type"] = format_type(s.y_type);
    j["g_range"] = {integer_to_json(s.g_lo), integer_to_json(s.g_hi)};
    j["d_range"] = {integer_to_json(s.d_lo), integer_to_json(s.d_hi)};
    Json cells = Json::array();
    for (const ScanCell& c : s.cells) {
        cells.push_back({{"g", integer_to_json(c.g)},
                         {"d", integer_to_json(c.d)},
                         {"mark", to_string(c.mark)},
                         {"x_type", format_type(c.x_type)},
                         {"first_failure", c.first_failure.empty() ? Json(nullptr) : Json(c.first_failure)}});
    }
    j["cells"] = cells;
    return j;
}

}  // namespace cicy

// Command-line front end: cones, single checks, table regeneration and scans.
//
// Exit codes: 0 success / criterion satisfied, 1 criterion failure, 2 invalid input.

#include <cicy/cicy.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

std::pair<cicy::Integer, cicy::Integer> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        cicy::Integer v = cicy::parse_integer(text);
        return {v, v};
    }
    return {cicy::parse_integer(text.substr(0, dots)), cicy::parse_integer(text.substr(dots + 2))};
}

cicy::RunConfig load_config(const std::string& path) {
    if (path.empty()) return cicy::default_run_config();
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    return cicy::parse_run_config(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice, cone and criterion checks for curves on complete intersection Calabi-Yau threefolds"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "Override file for embedding rows and listed cases");

    auto* cone_cmd = app.add_subcommand("cone", "Effective and nef cone of the lattice with Gram form (H^2, H.C, C^2)");
    std::string h_text, d_text, c_text, sample_text = "20", cone_format = "text";
    cone_cmd->add_option("H2", h_text, "H^2")->required();
    cone_cmd->add_option("HC", d_text, "H.C")->required();
    cone_cmd->add_option("C2", c_text, "C^2")->required()->allow_extra_args(false);
    cone_cmd->add_option("--sample", sample_text, "Bound on |x| for the listed -2 classes");
    cone_cmd->add_option("--format", cone_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* check_cmd = app.add_subcommand("check", "Run the full checklist for one case");
    std::string y_text, x_text, g_text, dd_text, rational_text, check_format = "text";
    check_cmd->add_option("--y", y_text, "Calabi-Yau type, e.g. 5 or 2,4");
    check_cmd->add_option("--x", x_text, "K3 type; defaults to the listed one, else all compatible rows");
    check_cmd->add_option("--g", g_text, "Genus");
    check_cmd->add_option("--d", dd_text, "Degree");
    check_cmd->add_option("--rational", rational_text, "cubic33 or quadric24");
    check_cmd->add_option("--format", check_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* tables_cmd = app.add_subcommand("tables", "Regenerate the tables of listed K3 cases");
    std::string tables_format = "tsv";
    tables_cmd->add_option("--format", tables_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    auto* scan_cmd = app.add_subcommand("scan", "Evaluate a (g, d) grid for one Calabi-Yau type");
    std::string scan_y, scan_g, scan_d, scan_format = "text";
    scan_cmd->add_option("--y", scan_y, "Calabi-Yau type")->required();
    scan_cmd->add_option("--g", scan_g, "Genus range A..B")->required();
    scan_cmd->add_option("--d", scan_d, "Degree range A..B")->required();
    scan_cmd->add_option("--format", scan_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    app.add_subcommand("config", "Print the built-in configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (app.got_subcommand("config")) {
            std::cout << cicy::default_config_text();
            return kExitOk;
        }
        const cicy::RunConfig cfg = load_config(config_path);

        if (*cone_cmd) {
            cicy::GramForm f(cicy::parse_integer(h_text), cicy::parse_integer(d_text), cicy::parse_integer(c_text));
            cicy::Integer bound = cicy::parse_integer(sample_text);
            if (cone_format == "json") {
                cicy::Json j;
                j["form"] = {{"h", cicy::integer_to_json(f.h())},
                             {"d", cicy::integer_to_json(f.d())},
                             {"c", cicy::integer_to_json(f.c())},
                             {"disc", cicy::integer_to_json(f.discriminant())}};
                j["cone"] = cicy::cone_to_json(cicy::effective_cone(f));
                cicy::Json sample = cicy::Json::array();
                for (const auto& s : cicy::minus_two_classes_bounded(f, bound).solutions)
                    sample.push_back(cicy::format_class(s));
                j["minus_two_sample"] = sample;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << cicy::render_cone_text(f, bound);
            }
            return kExitOk;
        }

        if (*check_cmd) {
            cicy::CriterionReport rep;
            if (!rational_text.empty()) {
                if (!y_text.empty() || !g_text.empty() || !dd_text.empty())
                    throw std::invalid_argument("--rational cannot be combined with --y/--g/--d");
                rep = cicy::check_rational_case(cicy::parse_rational_case(rational_text));
            } else {
                if (y_text.empty() || g_text.empty() || dd_text.empty())
                    throw std::invalid_argument("check needs --y, --g and --d (or --rational)");
                std::optional<cicy::DegreeType> x;
                if (!x_text.empty()) x = cicy::parse_degrees(x_text);
                rep = cicy::evaluate_case(cfg, cicy::parse_degrees(y_text), cicy::parse_integer(g_text),
                                          cicy::parse_integer(dd_text), x);
            }
            if (check_format == "json")
                std::cout << cicy::report_to_json(rep).dump(2) << "\n";
            else
                std::cout << cicy::render_report_text(rep);
            return rep.satisfied() ? kExitOk : kExitFail;
        }

        if (*tables_cmd) {
            auto rows = cicy::compute_tables(cfg);
            if (tables_format == "json")
                std::cout << cicy::render_tables_json(rows).dump(2) << "\n";
            else
                std::cout << cicy::render_tables_tsv(rows);
            return kExitOk;
        }

        if (*scan_cmd) {
            auto [g_lo, g_hi] = parse_range(scan_g);
            auto [d_lo, d_hi] = parse_range(scan_d);
            auto result = cicy::run_scan(cfg, cicy::parse_degrees(scan_y), g_lo, g_hi, d_lo, d_hi);
            if (scan_format == "json")
                std::cout << cicy::render_scan_json(result).dump(2) << "\n";
            else
                std::cout << cicy::render_scan_text(result);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

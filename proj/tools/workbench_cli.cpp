#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "workbench/acceptance.hpp"
#include "workbench/config.hpp"
#include "workbench/group_spec.hpp"
#include "workbench/quillen.hpp"
#include "workbench/series.hpp"
#include "workbench/unstable.hpp"

using json = nlohmann::ordered_json;
using namespace workbench;

namespace {

void emit(const json& doc, OutputFormat format) {
    if (format == OutputFormat::Json) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // CSV and ASCII are projections of the JSON document: every array of
    // scalars becomes indexed rows, scalars become key/value rows.
    struct Row {
        std::string key;
        std::string value;
    };
    std::vector<Row> rows;
    for (const auto& [key, value] : doc.items()) {
        if (value.is_array() && (value.empty() || value.front().is_primitive())) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                const auto& item = value[i];
                rows.push_back({key + "[" + std::to_string(i) + "]",
                                item.is_string() ? item.get<std::string>() : item.dump()});
            }
        } else if (value.is_primitive()) {
            rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
        } else {
            rows.push_back({key, value.dump()});
        }
    }
    if (format == OutputFormat::Csv) {
        std::cout << "key,value\n";
        for (const auto& r : rows) std::cout << r.key << "," << r.value << "\n";
    } else {
        std::size_t width = 0;
        for (const auto& r : rows) width = std::max(width, r.key.size());
        for (const auto& r : rows)
            std::cout << r.key << std::string(width - r.key.size() + 2, ' ') << r.value << "\n";
    }
}

json limit_table_json(const LimitTable& table) {
    json doc;
    doc["group"] = table.group_label;
    doc["mode"] = table.mode;
    json degrees = json::array(), dims = json::array();
    for (int d = 0; d <= table.max_degree; ++d) {
        degrees.push_back(d);
        dims.push_back(table.dims[std::size_t(d)]);
    }
    doc["degrees"] = std::move(degrees);
    doc["dims"] = std::move(dims);
    json objects = json::array();
    for (std::size_t i = 0; i < table.object_ranks.size(); ++i)
        objects.push_back({{"rank", table.object_ranks[i]}, {"class_size", table.object_class_sizes[i]}});
    doc["objects"] = std::move(objects);
    doc["morphism_count"] = table.morphism_count;
    return doc;
}

json module_json(const TruncatedUnstableModule& m) {
    json doc;
    doc["max_degree"] = m.max_degree();
    doc["dims"] = m.dims();
    json sq = json::array();
    for (int i = 1; i <= m.max_degree(); ++i)
        for (int n = 0; n + i <= m.max_degree(); ++n) {
            if (m.dim(n) == 0 || m.dim(n + i) == 0) continue;
            sq.push_back({{"i", i}, {"n", n}, {"matrix", m.sq(i, n).row_strings()}});
        }
    doc["sq"] = std::move(sq);
    if (m.has_u()) {
        json u = json::array();
        for (int n = 0; n + 1 <= m.max_degree(); ++n) {
            if (m.dim(n) == 0 || m.dim(n + 1) == 0) continue;
            u.push_back({{"n", n}, {"matrix", m.u(n).row_strings()}});
        }
        doc["u_mult"] = std::move(u);
    }
    return doc;
}

json series_json(const std::string& label, const PowerSeries& s) {
    json doc;
    doc["label"] = label;
    doc["truncation"] = s.truncation();
    doc["coefficients"] = s.coefficient_strings();
    return doc;
}

TruncatedUnstableModule module_from_spec(const std::string& spec, int max_degree) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad module spec: " + spec);
    std::string kind = spec.substr(0, colon);
    int n = std::stoi(spec.substr(colon + 1));
    if (kind == "sylow-sym") return sylow_symmetric_module(n, max_degree);
    if (kind == "ea") return cohomology_elementary_abelian(n, max_degree);
    throw std::invalid_argument("bad module spec: " + spec + " (expected sylow-sym:N or ea:D)");
}

int run(int argc, char** argv) {
    RunConfig cfg = config_from_environment();

    CLI::App app{"Desk-scale computations around 2-Sylow subgroups, unstable modules over the\n"
                 "mod-2 Steenrod algebra, and limits over categories of elementary abelian\n"
                 "2-subgroups."};
    app.require_subcommand(1);
    std::string format_name;
    app.add_option("--format", format_name, "Output format: json, csv or ascii")
        ->check(CLI::IsMember({"json", "csv", "ascii"}));

    std::string group_spec;
    std::string mode_name_opt = "skeleton";
    int max_degree = cfg.max_degree;
    std::size_t max_order = cfg.max_group_order;
    std::size_t max_rank = cfg.max_ea_rank;
    unsigned long long seed = cfg.seed;

    auto* group_cmd = app.add_subcommand("group", "Build a group from a spec and print a summary");
    group_cmd->fallthrough();
    group_cmd->add_option("spec", group_spec, "Group spec, e.g. sylow-sym:8")->required();
    group_cmd->add_option("--max-order", max_order, "Group order cap");

    DiagramCaps diagram_caps;
    auto* limit_cmd = app.add_subcommand("limit", "Limit of H* over the elementary abelian diagram");
    limit_cmd->fallthrough();
    limit_cmd->add_option("--group", group_spec, "Group spec")->required();
    limit_cmd->add_option("--max-degree", max_degree, "Top degree");
    limit_cmd->add_option("--mode", mode_name_opt, "skeleton or full")
        ->check(CLI::IsMember({"skeleton", "full"}));
    limit_cmd->add_option("--max-order", max_order, "Group order cap");
    limit_cmd->add_option("--max-rank", max_rank, "Elementary abelian rank cap");
    limit_cmd->add_option("--max-subgroups", diagram_caps.max_subgroups, "Subgroup count cap");
    limit_cmd->add_option("--max-morphisms", diagram_caps.max_morphisms, "Morphism count cap");

    auto* series_cmd = app.add_subcommand("series", "Poincare series pipelines");
    series_cmd->fallthrough();
    std::string series_kind;
    int series_n = 0, series_trunc = 12;
    series_cmd->add_option("kind", series_kind, "sym, alt, a4x or quad")
        ->required()
        ->check(CLI::IsMember({"sym", "alt", "a4x", "quad"}));
    series_cmd->add_option("n", series_n, "Letters (sym/alt) or seed rank (a4x/quad)")->required();
    series_cmd->add_option("truncation", series_trunc, "Top degree");

    auto* module_cmd = app.add_subcommand("module", "Unstable module models");
    module_cmd->fallthrough();
    std::string module_spec;
    std::string emit_kind = "json";
    module_cmd->add_option("spec", module_spec, "sylow-sym:N or ea:D")->required();
    module_cmd->add_option("--max-degree", max_degree, "Truncation degree");
    module_cmd->add_option("--emit", emit_kind, "json, dims or checks")
        ->check(CLI::IsMember({"json", "dims", "checks"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
    verify_cmd->fallthrough();
    std::string verify_scope = "all";
    verify_cmd->add_option("scope", verify_scope, "Criteria scope (only 'all' is defined)");
    verify_cmd->add_option("--max-degree", max_degree, "Accepted for symmetry; criteria pin their own degrees");
    verify_cmd->add_option("--seed", seed, "Seed for randomized spot checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (!format_name.empty()) cfg.format = parse_format(format_name);
    cfg.max_degree = max_degree;
    cfg.max_group_order = max_order;
    cfg.max_ea_rank = max_rank;
    cfg.seed = seed;
    cfg.validate();

    if (*group_cmd) {
        FiniteGroup g = parse_group_spec(group_spec, cfg.max_group_order);
        json doc;
        doc["spec"] = group_spec;
        doc["degree"] = g.degree();
        doc["order"] = g.order();
        doc["generator_count"] = g.generators().size();
        doc["abelian"] = g.is_abelian();
        emit(doc, cfg.format);
        return 0;
    }

    if (*limit_cmd) {
        auto g = std::make_shared<const FiniteGroup>(parse_group_spec(group_spec, cfg.max_group_order));
        diagram_caps.max_ea_rank = cfg.max_ea_rank;
        QuillenDiagram diagram = build_quillen_diagram(g, parse_mode(mode_name_opt), diagram_caps);
        LimitTable table = limit_dims(diagram, cfg.max_degree, group_spec, false);
        emit(limit_table_json(table), cfg.format);
        return 0;
    }

    if (*series_cmd) {
        PowerSeries out;
        std::string label = series_kind + ":" + std::to_string(series_n);
        if (series_kind == "sym") {
            out = series_sylow_symmetric(series_n, series_trunc);
        } else if (series_kind == "alt") {
            if (series_n < 2 || (series_n & (series_n - 1)) != 0)
                throw std::invalid_argument("series alt expects a power of two >= 2");
            int m = 0;
            while ((1 << m) < series_n) ++m;
            out = series_sylow_alt_pipeline(m, series_trunc).a;
        } else if (series_kind == "a4x") {
            out = series_a4x(PowerSeries::geometric(series_trunc, series_n));
        } else {
            out = series_quadratic(PowerSeries::geometric(series_trunc, series_n));
        }
        emit(series_json(label, out), cfg.format);
        return 0;
    }

    if (*module_cmd) {
        TruncatedUnstableModule m = module_from_spec(module_spec, cfg.max_degree);
        if (emit_kind == "dims") {
            json doc;
            doc["spec"] = module_spec;
            doc["max_degree"] = m.max_degree();
            doc["dims"] = m.dims();
            emit(doc, cfg.format);
        } else if (emit_kind == "checks") {
            auto adem = check_adem(m);
            auto instability = check_instability(m);
            auto reduced = check_reduced(m, m.max_degree() / 2);
            std::vector<std::string> ucompat;
            if (m.has_u()) ucompat = check_u_compat(m);
            json doc;
            doc["spec"] = module_spec;
            doc["adem"] = adem.empty() ? "pass" : "fail";
            doc["instability"] = instability.empty() ? "pass" : "fail";
            doc["reduced_through"] = m.max_degree() / 2;
            doc["reduced"] = reduced.empty() ? "pass" : "fail";
            if (m.has_u()) doc["u_compat"] = ucompat.empty() ? "pass" : "fail";
            json violations = json::array();
            for (const auto& v : adem) violations.push_back(v);
            for (const auto& v : instability) violations.push_back(v);
            for (const auto& v : reduced) violations.push_back(v);
            for (const auto& v : ucompat) violations.push_back(v);
            doc["violations"] = std::move(violations);
            emit(doc, cfg.format);
            if (!(adem.empty() && instability.empty() && reduced.empty() && ucompat.empty())) return 1;
        } else {
            emit(module_json(m), cfg.format);
        }
        return 0;
    }

    if (*verify_cmd) {
        if (verify_scope != "all") throw std::invalid_argument("verify: unknown scope " + verify_scope);
        auto results = run_acceptance(cfg.seed);
        for (const auto& r : results)
            std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", r.passed ? "PASS" : "FAIL", r.id,
                        r.name.c_str(), r.seconds, r.detail.empty() ? "" : " - ", r.detail.c_str());
        return all_passed(results) ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ResourceLimitError& e) {
        std::fprintf(stderr, "resource cap: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

#pragma once

// Command-line front end. Exit codes: 0 success, 1 parse or usage error,
// 2 validation failure or unsupported request, 3 inconsistent optional input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohomone/report.hpp"

namespace cohomone::cli {

struct Options {
    std::string format = "text";
    int degree_bound = 20;
    std::string monomial_order = "grevlex";
};

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Parse, path + ": cannot open file");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// A readable file wins over a catalog name of the same spelling.
inline DiagramInput resolve(const std::string& target)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(target, ec))
        return parse_diagram(read_file(target), target);
    if (const CatalogEntry* e = find_catalog_entry(target))
        return e->input;
    throw Error(ErrorKind::Parse, target + ": no such file or catalog entry");
}

inline ReportOptions report_options(const Options& o)
{
    ReportOptions r;
    r.degree_bound = o.degree_bound;
    r.order = o.monomial_order == "lex" ? poly::MonomialOrder::Lex : poly::MonomialOrder::Grevlex;
    return r;
}

inline void emit(std::ostream& out, const Options& o, const nlohmann::json& j, const std::string& text)
{
    if (o.format == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

} // namespace detail

inline int cmd_report(const std::string& target, const Options& o, std::ostream& out)
{
    const DiagramInput in = detail::resolve(target);
    const ReportOutcome r = build_report(in, detail::report_options(o));
    detail::emit(out, o, r.json, render_text(r.json));
    return r.exit_code;
}

inline int cmd_catalog(const std::optional<std::string>& name, const Options& o, std::ostream& out,
                       std::ostream& err)
{
    if (name) {
        const CatalogEntry* e = find_catalog_entry(*name);
        if (!e) {
            err << "error: unknown catalog entry \"" << *name << "\"\n";
            return ExitCode::ParseFailure;
        }
        out << diagram_to_json(e->input).dump(2) << "\n";
        return ExitCode::Ok;
    }
    nlohmann::json list = nlohmann::json::array();
    std::string text;
    for (const auto& e : catalog()) {
        list.push_back({{"name", e.name}, {"provenance", e.provenance}});
        text += e.name + "\t" + e.provenance + "\n";
    }
    detail::emit(out, o, list, text);
    return ExitCode::Ok;
}

inline int cmd_ring(const std::string& target, const Options& o, std::ostream& out, std::ostream& err)
{
    const DiagramInput in = detail::resolve(target);
    const std::string label = in.name.value_or(target);
    if (!in.family) {
        err << "error: " << label << " is not in the torus family (no family data; K- and K+ must be maximal tori)\n";
        return ExitCode::ValidationFailure;
    }
    const ValidationReport v = validate(in.diagram);
    if (!v.ok()) {
        for (const auto& x : v.violations)
            err << "error: [" << x.rule << "] " << x.detail << "\n";
        return ExitCode::ValidationFailure;
    }
    if (auto why = cohomone::detail::family_mismatch(in.diagram, *in.family)) {
        err << "error: " << *why << "\n";
        return ExitCode::InconsistentInput;
    }
    nlohmann::json j;
    try {
        j = ring_json(in, detail::report_options(o));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::FamilyNotImplemented && e.kind() != ErrorKind::Unsupported)
            throw;
        err << "error: " << e.what() << "\n";
        return ExitCode::ValidationFailure;
    }
    j["name"] = label;
    detail::emit(out, o, j, "ring: " + label + "\n" + render_ring_text(j));
    return ExitCode::Ok;
}

inline int cmd_series(const std::string& literal, const Options& o, std::ostream& out)
{
    const CompactGroupType g = parse_group(literal);
    const PoincareSeries s = classifying_series(g);
    const int bound = std::max(0, o.degree_bound);
    nlohmann::json taylor = nlohmann::json::array();
    std::string coeffs;
    for (const auto& c : s.taylor_coefficients(bound)) {
        taylor.push_back(integer_to_json(c));
        coeffs += (coeffs.empty() ? "" : ", ") + c.get_str();
    }
    nlohmann::json j{{"group", g.to_string()},
                     {"series", cohomone::detail::series_json(s)},
                     {"taylor_coefficients", taylor},
                     {"degree_bound", bound}};
    std::string text = "P(B" + g.to_string() + ") = " + s.to_string() + "\n";
    text += "coefficients t^0..t^" + std::to_string(bound) + ": [" + coeffs + "]\n";
    detail::emit(out, o, j, text);
    return ExitCode::Ok;
}

/// Entry point shared by the executable and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cohomology of cohomogeneity-one manifolds from group diagrams", "cohomone"};
    app.require_subcommand(1);
    Options o;
    const auto add_flags = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--degree-bound", o.degree_bound, "Largest cohomological degree for bounded checks")
            ->check(CLI::Range(0, 200));
        sub->add_option("--monomial-order", o.monomial_order, "Groebner basis order")
            ->check(CLI::IsMember({"grevlex", "lex"}));
    };

    std::string target;
    std::string catalog_name;
    auto* report = app.add_subcommand("report", "Validate a diagram and print every invariant");
    report->add_option("diagram", target, "Diagram file or catalog name")->required();
    auto* cat = app.add_subcommand("catalog", "List the built-in examples or print one as JSON");
    cat->add_option("name", catalog_name, "Catalog entry");
    auto* ring = app.add_subcommand("ring", "Ring presentations for a torus-family diagram");
    ring->add_option("diagram", target, "Diagram file or catalog name")->required();
    auto* series = app.add_subcommand("series", "Poincare series of a classifying space");
    series->add_option("group", target, "Group literal, e.g. B2 or A2+T1")->required();
    for (auto* sub : {report, cat, ring, series})
        add_flags(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::ParseFailure;
    }

    try {
        if (*report)
            return cmd_report(target, o, out);
        if (*cat)
            return cmd_catalog(catalog_name.empty() ? std::nullopt : std::optional<std::string>(catalog_name), o,
                               out, err);
        if (*ring)
            return cmd_ring(target, o, out, err);
        return cmd_series(target, o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::Parse: return ExitCode::ParseFailure;
        case ErrorKind::Inconsistent: return ExitCode::InconsistentInput;
        default: return ExitCode::ValidationFailure;
        }
    }
}

} // namespace cohomone::cli

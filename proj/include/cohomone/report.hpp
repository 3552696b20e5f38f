#pragma once

// Full reports for a diagram as JSON (sorted keys) and as text rendered from
// the same JSON document.

#include <sstream>
#include <string>

#include <json.hpp>

#include "cohomone/catalog.hpp"
#include "cohomone/gkm.hpp"

namespace cohomone {

enum ExitCode : int { Ok = 0, ParseFailure = 1, ValidationFailure = 2, InconsistentInput = 3 };

struct ReportOptions {
    int degree_bound = 20;
    poly::MonomialOrder order = poly::MonomialOrder::Grevlex;
};

struct ReportOutcome {
    nlohmann::json json;
    int exit_code = ExitCode::Ok;
};

namespace detail {

inline nlohmann::json series_json(const PoincareSeries& s)
{
    nlohmann::json j = s.to_json();
    j["text"] = s.to_string();
    return j;
}

inline nlohmann::json poly_json(const IntPoly& p)
{
    nlohmann::json c = nlohmann::json::array();
    for (const auto& v : p.coefficients())
        c.push_back(integer_to_json(v));
    return {{"coefficients", c}, {"text", p.to_string()}, {"betti_sum", integer_to_json(p.value_at_one())}};
}

inline nlohmann::json graded_dims_json(const PoincareSeries& s)
{
    nlohmann::json a = nlohmann::json::array();
    if (auto p = s.as_polynomial())
        for (const auto& v : even_graded_dimensions(*p))
            a.push_back(integer_to_json(v));
    return a;
}

inline nlohmann::json basis_json(const poly::GroebnerBasis& gb)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : gb.polynomials())
        a.push_back(p.to_string());
    return a;
}

/// Family data must describe K- = K+ = maximal torus and H a corank-one torus.
inline std::optional<std::string> family_mismatch(const GroupDiagram& d, const TorusFamilyData& fam)
{
    if (!d.is_interval())
        return "torus-family data needs an interval orbit space";
    const int r = d.g.rank();
    if (!d.k_minus.is_torus() || !d.k_plus.is_torus() || d.k_minus.rank() != r || d.k_plus.rank() != r)
        return "torus-family data needs K- and K+ to be maximal tori of G";
    if (!d.h.is_torus() || d.h.rank() != r - 1)
        return "torus-family data needs H to be a torus of rank " + std::to_string(r - 1);
    if (fam.k != static_cast<std::size_t>(r))
        return "k = " + std::to_string(fam.k) + " but the maximal torus of G has rank " + std::to_string(r);
    return std::nullopt;
}

} // namespace detail

/// Ring presentations, square-zero test and pair model for a torus-family diagram.
inline nlohmann::json ring_json(const DiagramInput& in, const ReportOptions& opt)
{
    using nlohmann::json;
    const TorusFamilyData& fam = in.family.value();
    json j;
    const auto rings = poly::build_torus_family_presentations(in.diagram.g, fam.alpha);
    json alpha = json::array();
    for (const auto& a : fam.alpha)
        alpha.push_back(rational_to_json(a));
    j["family"] = {{"alpha", alpha}, {"alpha_text", rings.alpha.to_string()}, {"k", fam.k}};

    const auto describe = [&](const poly::IdealPresentation& p) {
        const auto gb = p.groebner(opt.order);
        const auto hs = poly::hilbert_series_quotient(gb);
        json o{{"presentation", p.to_string()},
               {"groebner_basis", detail::basis_json(gb)},
               {"monomial_order", poly::to_string(opt.order)},
               {"hilbert_series", detail::series_json(hs)}};
        return std::make_pair(o, hs);
    };
    auto [eq, eq_series] = describe(rings.equivariant);
    auto [ord, ord_series] = describe(rings.ordinary);
    ord["graded_dimensions"] = detail::graded_dims_json(ord_series);

    // Cross-routes through the series formulas.
    const GroupDiagram& d = in.diagram;
    try {
        eq["matches_equivariant_series"] = eq_series == equivariant_hilbert_series(d);
    } catch (const Error&) {
    }
    try {
        ord["matches_poincare_polynomial"] = ord_series == PoincareSeries(poincare_polynomial(d));
    } catch (const Error&) {
    }
    j["equivariant"] = eq;
    j["ordinary"] = ord;

    const auto sz = poly::square_zero_analysis(rings.ordinary.groebner(opt.order));
    json szj{{"exists", sz.exists}, {"method", sz.method}, {"degree2_dimension", sz.degree2_dimension}};
    if (sz.witness)
        szj["witness"] = sz.witness->to_string();
    j["square_zero_degree2"] = szj;

    // Pair model on the maximal torus coordinates.
    const TorusFamilySpec spec(fam.k, fam.alpha);
    json dims = json::array();
    std::vector<std::string> warnings;
    const int bound = std::max(0, opt.degree_bound);
    for (int deg = 0; deg <= bound; deg += 2)
        dims.push_back(graded_dimension(spec, deg, &warnings));
    const PoincareSeries pair_series = PoincareSeries(IntPoly::constant(2), std::vector<int>(fam.k, 2)) -
                                       PoincareSeries(IntPoly::constant(1), std::vector<int>(fam.k - 1, 2));
    const auto taylor = pair_series.taylor_coefficients(bound);
    bool matches = true;
    for (int deg = 0; deg <= bound; deg += 2)
        matches = matches && Integer(dims[static_cast<std::size_t>(deg / 2)].get<std::size_t>()) ==
                                 taylor[static_cast<std::size_t>(deg)];
    const auto tensor = check_tensor_isomorphism(spec, bound);
    json tj{{"ok", tensor.ok}, {"degree_bound", tensor.degree_bound}};
    if (tensor.certificate)
        tj["certificate"] = {{"degree", tensor.certificate->degree},
                             {"kind", tensor.certificate->kind},
                             {"detail", tensor.certificate->detail}};
    j["pair_model"] = {{"degree_bound", bound},
                       {"graded_dimensions", dims},
                       {"matches_series", matches},
                       {"series", detail::series_json(pair_series)},
                       {"tensor_isomorphism", tj}};
    return j;
}

inline ReportOutcome build_report(const DiagramInput& in, const ReportOptions& opt = {})
{
    using nlohmann::json;
    ReportOutcome out;
    json& j = out.json;
    j["schema"] = "1";
    j["diagram"] = diagram_to_json(in);
    const GroupDiagram& d = in.diagram;

    const ValidationReport v = validate(d);
    json violations = json::array();
    for (const auto& x : v.violations)
        violations.push_back({{"rule", x.rule}, {"detail", x.detail}});
    j["validation"] = {{"ok", v.ok()}, {"violations", violations}, {"warnings", v.warnings}};
    if (!v.ok()) {
        out.exit_code = ExitCode::ValidationFailure;
        return out;
    }

    try {
        const InvariantReport r = compute_invariants(d);
        json inv;
        inv["manifold_dimension"] = r.manifold_dimension;
        inv["even_dimensional"] = r.even_dimensional;
        if (r.sphere_dimensions)
            inv["sphere_dimensions"] = {{"l-", r.sphere_dimensions->first}, {"l+", r.sphere_dimensions->second}};
        inv["chi_M"] = integer_to_json(r.chi_m);
        if (r.chi_orbits)
            inv["chi_orbits"] = {{"G/K-", integer_to_json(r.chi_orbits->minus)},
                                 {"G/K+", integer_to_json(r.chi_orbits->plus)},
                                 {"G/H", integer_to_json(r.chi_orbits->principal)}};
        inv["formal"] = r.formal;
        inv["krull_dimension"] = r.krull_dim;
        inv["rank_G"] = d.g.rank();
        if (r.equivariant_series)
            inv["equivariant_series"] = detail::series_json(*r.equivariant_series);
        if (r.poincare_polynomial)
            inv["poincare_polynomial"] = detail::poly_json(*r.poincare_polynomial);
        json nc = json::object();
        for (const auto& [field, reason] : r.not_computed)
            nc[field] = reason;
        inv["not_computed"] = nc;
        inv["notes"] = r.applicability_notes;
        j["invariants"] = inv;
    } catch (const Error& e) {
        j["invariants"] = {{"error", e.what()}};
        out.exit_code = ExitCode::InconsistentInput;
        return out;
    }

    const bool full_rank = d.is_interval() && d.h.rank() == d.g.rank();
    if (full_rank) {
        try {
            const OddCaseReport o = analyze_odd_case(d, in.weyl_order, in.normalizer_order);
            json oj{{"chi_G/H", integer_to_json(o.chi_gh)}, {"warnings", o.warnings}};
            if (o.weyl_order_action)
                oj["weyl_order"] = integer_to_json(*o.weyl_order_action);
            if (o.dim_cohomology)
                oj["dim_cohomology"] = integer_to_json(*o.dim_cohomology);
            if (o.rational_sphere)
                oj["rational_sphere"] = *o.rational_sphere;
            if (o.normalizer_consistent)
                oj["normalizer_consistent"] = *o.normalizer_consistent;
            if (in.normalizer_order)
                oj["normalizer_order"] = integer_to_json(*in.normalizer_order);
            j["odd_case"] = oj;
            if (o.normalizer_consistent == false)
                out.exit_code = ExitCode::InconsistentInput;
        } catch (const Error& e) {
            j["odd_case"] = {{"error", e.what()}};
            out.exit_code = ExitCode::InconsistentInput;
        }
    } else if (in.weyl_order || in.normalizer_order) {
        j["odd_case"] = {{"error", "weyl_order/normalizer_order need rank H = rank G"}};
        out.exit_code = ExitCode::InconsistentInput;
    }

    if (in.family) {
        if (auto why = detail::family_mismatch(d, *in.family)) {
            j["ring"] = {{"error", *why}};
            out.exit_code = ExitCode::InconsistentInput;
        } else {
            try {
                j["ring"] = ring_json(in, opt);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::FamilyNotImplemented && e.kind() != ErrorKind::Unsupported)
                    throw;
                j["ring"] = {{"not_computed", e.what()}};
            }
        }
    }
    return out;
}

namespace detail {

inline std::string json_scalar(const nlohmann::json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

inline std::string dims_text(const nlohmann::json& a)
{
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? "," : "") + a[i].dump();
    return s + ")";
}

} // namespace detail

/// Text for the ring section of a report.
inline std::string render_ring_text(const nlohmann::json& r)
{
    using detail::json_scalar;
    std::ostringstream o;
    if (r.contains("error")) {
        o << "ring: error: " << json_scalar(r["error"]) << "\n";
        return o.str();
    }
    if (r.contains("not_computed")) {
        o << "ring: not computed (" << json_scalar(r["not_computed"]) << ")\n";
        return o.str();
    }
    o << "ring presentations (k = " << r["family"]["k"].dump() << ", alpha = " << json_scalar(r["family"]["alpha_text"])
      << "):\n";
    o << "  equivariant: " << json_scalar(r["equivariant"]["presentation"]) << "\n";
    o << "    Hilbert series = " << json_scalar(r["equivariant"]["hilbert_series"]["text"]) << "\n";
    o << "  ordinary: " << json_scalar(r["ordinary"]["presentation"]) << "\n";
    o << "    Groebner basis (" << json_scalar(r["ordinary"]["monomial_order"]) << "):";
    for (const auto& g : r["ordinary"]["groebner_basis"])
        o << " " << json_scalar(g) << ";";
    o << "\n";
    o << "    Hilbert series = " << json_scalar(r["ordinary"]["hilbert_series"]["text"]) << "\n";
    o << "graded dims = " << detail::dims_text(r["ordinary"]["graded_dimensions"]) << "\n";
    const auto& sz = r["square_zero_degree2"];
    o << "square-zero: " << (sz["exists"].get<bool>() ? "true" : "false");
    if (sz.contains("witness"))
        o << " (w = " << json_scalar(sz["witness"]) << ")";
    o << "\n";
    const auto& pm = r["pair_model"];
    o << "pair model dims to degree " << pm["degree_bound"].dump() << " = " << detail::dims_text(pm["graded_dimensions"])
      << ", matches series: " << json_scalar(pm["matches_series"]) << "\n";
    const auto& ti = pm["tensor_isomorphism"];
    o << "tensor isomorphism to degree " << ti["degree_bound"].dump() << ": " << json_scalar(ti["ok"]);
    if (ti.contains("certificate"))
        o << " (degree " << ti["certificate"]["degree"].dump() << ", " << json_scalar(ti["certificate"]["kind"])
          << ": " << json_scalar(ti["certificate"]["detail"]) << ")";
    o << "\n";
    return o.str();
}

/// Human-readable rendering of a report document.
inline std::string render_text(const nlohmann::json& j)
{
    using detail::json_scalar;
    std::ostringstream o;
    const auto& dg = j["diagram"];
    o << "diagram: " << (dg.contains("name") ? dg["name"].get<std::string>() : std::string("(unnamed)")) << "\n";
    o << "  G = " << json_scalar(dg["G"]);
    if (dg.contains("K-"))
        o << ", K- = " << json_scalar(dg["K-"]) << ", K+ = " << json_scalar(dg["K+"]);
    o << ", H = " << json_scalar(dg["H"]) << " (" << json_scalar(dg["orbit_space"]) << ")\n";

    const auto& v = j["validation"];
    o << "validation: " << (v["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    for (const auto& x : v["violations"])
        o << "  [" << json_scalar(x["rule"]) << "] " << json_scalar(x["detail"]) << "\n";
    for (const auto& w : v["warnings"])
        o << "  warning: " << json_scalar(w) << "\n";
    if (!j.contains("invariants"))
        return o.str();

    const auto& inv = j["invariants"];
    if (inv.contains("error")) {
        o << "error: " << json_scalar(inv["error"]) << "\n";
        return o.str();
    }
    o << "dim M = " << inv["manifold_dimension"].dump() << " ("
      << (inv["even_dimensional"].get<bool>() ? "even" : "odd") << ")\n";
    if (inv.contains("sphere_dimensions"))
        o << "l- = " << inv["sphere_dimensions"]["l-"].dump() << ", l+ = " << inv["sphere_dimensions"]["l+"].dump()
          << "\n";
    if (inv.contains("chi_orbits"))
        o << "chi(G/K-) = " << json_scalar(inv["chi_orbits"]["G/K-"])
          << ", chi(G/K+) = " << json_scalar(inv["chi_orbits"]["G/K+"])
          << ", chi(G/H) = " << json_scalar(inv["chi_orbits"]["G/H"]) << "\n";
    o << "chi(M) = " << json_scalar(inv["chi_M"]) << "\n";
    o << "equivariantly formal: " << json_scalar(inv["formal"]) << " (Krull dimension "
      << inv["krull_dimension"].dump() << ", rank G " << inv["rank_G"].dump() << ")\n";
    if (inv.contains("equivariant_series"))
        o << "P_G(M) = " << json_scalar(inv["equivariant_series"]["text"]) << "\n";
    if (inv.contains("poincare_polynomial")) {
        o << "P(M) = " << json_scalar(inv["poincare_polynomial"]["text"]) << "\n";
        o << "dim H*(M) = " << json_scalar(inv["poincare_polynomial"]["betti_sum"]) << "\n";
    }
    for (const auto& [field, reason] : inv["not_computed"].items())
        o << "not computed: " << field << " (" << json_scalar(reason) << ")\n";
    for (const auto& n : inv["notes"])
        o << "note: " << json_scalar(n) << "\n";

    if (j.contains("odd_case")) {
        const auto& oc = j["odd_case"];
        if (oc.contains("error")) {
            o << "odd case: error: " << json_scalar(oc["error"]) << "\n";
        } else {
            o << "chi(G/H) = " << json_scalar(oc["chi_G/H"]) << "\n";
            if (oc.contains("weyl_order"))
                o << "|W| = " << json_scalar(oc["weyl_order"]) << "\n";
            if (oc.contains("dim_cohomology"))
                o << "dim H*(M) = " << json_scalar(oc["dim_cohomology"]) << "\n";
            if (oc.contains("rational_sphere"))
                o << "rational homology sphere: " << json_scalar(oc["rational_sphere"]) << "\n";
            if (oc.contains("normalizer_consistent"))
                o << "|N(H)/H| = " << json_scalar(oc["normalizer_order"])
                  << ", consistent: " << json_scalar(oc["normalizer_consistent"]) << "\n";
            for (const auto& w : oc["warnings"])
                o << "warning: " << json_scalar(w) << "\n";
        }
    }

    if (j.contains("ring"))
        o << render_ring_text(j["ring"]);
    return o.str();
}

} // namespace cohomone

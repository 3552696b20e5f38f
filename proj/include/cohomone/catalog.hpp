#pragma once

// Named example diagrams with their expected invariants.

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cohomone/diagram_io.hpp"
#include "cohomone/invariants.hpp"
#include "cohomone/oddcase.hpp"
#include "cohomone/polyring/square_zero.hpp"
#include "cohomone/polyring/torus_family.hpp"

namespace cohomone {

struct CatalogExpectations {
    std::optional<int> manifold_dimension;
    std::optional<bool> even_dimensional;
    std::optional<std::pair<int, int>> sphere_dimensions;
    std::optional<long> chi_m;
    std::optional<std::vector<long>> chi_orbits;
    std::optional<bool> formal;
    std::optional<int> krull_dim;
    std::optional<PoincareSeries> equivariant_series;
    std::optional<IntPoly> poincare_polynomial;
    // odd-dimensional data
    std::optional<long> chi_gh;
    std::optional<long> dim_cohomology;
    std::optional<long> weyl_from_dim;
    std::optional<bool> rational_sphere;
    std::optional<bool> normalizer_consistent;
    // torus-family rings
    std::optional<std::vector<long>> ordinary_graded_dims;
    std::optional<PoincareSeries> equivariant_ring_series;
    std::optional<bool> square_zero;
    std::optional<std::string> ordinary_first_relation;
};

struct CatalogEntry {
    std::string name;
    DiagramInput input;
    CatalogExpectations expected;
    std::string provenance;
};

struct ExpectationCheck {
    std::string field;
    bool ok = false;
    std::string expected;
    std::string actual;
};

namespace detail {

inline DiagramInput make_input(const std::string& name, const std::string& g, const std::string& km,
                               const std::string& kp, const std::string& h)
{
    DiagramInput in;
    in.name = name;
    in.diagram = GroupDiagram::interval(parse_group(g), parse_group(km), parse_group(kp), parse_group(h));
    return in;
}

inline IntPoly so_odd_polynomial(int n)
{
    // 1 + t^2 + ... + t^{2n-2} + 2t^{2n} + t^{2n+2} + ... + t^{4n}
    std::vector<Integer> c(static_cast<std::size_t>(4 * n) + 1, 0);
    for (int i = 0; i <= 4 * n; i += 2)
        c[static_cast<std::size_t>(i)] = 1;
    c[static_cast<std::size_t>(2 * n)] = 2;
    return IntPoly(std::move(c));
}

inline CatalogEntry so_odd_entry(int n)
{
    const std::string name = "so(2n+1)-line5-n" + std::to_string(n);
    const std::string b = "B" + std::to_string(n);
    const std::string d = "D" + std::to_string(n);
    const std::string bm = "B" + std::to_string(n - 1);
    CatalogEntry e{name, make_input(name, b, d, bm + "+T1", bm), {},
                   "SO(" + std::to_string(2 * n + 1) + ") with singular isotropy SO(" + std::to_string(2 * n) +
                       ") and SO(" + std::to_string(2 * n - 1) + ")xSO(2), principal isotropy SO(" +
                       std::to_string(2 * n - 1) + ")"};
    auto& x = e.expected;
    x.manifold_dimension = 4 * n;
    x.even_dimensional = true;
    x.sphere_dimensions = std::make_pair(2 * n - 1, 1);
    x.chi_m = 2 * n + 2;
    x.chi_orbits = std::vector<long>{2, 2 * n, 0};
    x.formal = true;
    x.krull_dim = n;
    x.poincare_polynomial = so_odd_polynomial(n);
    if (n == 2)
        x.equivariant_series = PoincareSeries(IntPoly{1, 0, 1, 0, 1}, {4, 4});
    return e;
}

inline std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> out;
    for (int n = 2; n <= 4; ++n)
        out.push_back(so_odd_entry(n));

    {
        CatalogEntry e{"N7G", make_input("N7G", "A2", "A1+T1", "A1+T1", "T2"), {},
                       "SU(3) on a 7-manifold, principal isotropy a maximal torus, integral homology of CP^2 x S^3"};
        e.input.weyl_order = 2;
        e.input.normalizer_order = 6;
        auto& x = e.expected;
        x.manifold_dimension = 7;
        x.even_dimensional = false;
        x.sphere_dimensions = std::make_pair(2, 2);
        x.chi_m = 0;
        x.chi_orbits = std::vector<long>{3, 3, 6};
        x.formal = true;
        x.krull_dim = 2;
        x.chi_gh = 6;
        x.dim_cohomology = 6;
        x.weyl_from_dim = 2;
        x.rational_sphere = false;
        x.normalizer_consistent = true;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"N7I", make_input("N7I", "C2", "C1xC1", "C1xC1", "C1+T1"), {},
                       "Sp(2) on a 7-manifold with singular isotropy Sp(1)xSp(1), homology of S^3 x S^4"};
        e.input.weyl_order = 2;
        e.input.normalizer_order = 2;
        auto& x = e.expected;
        x.manifold_dimension = 7;
        x.even_dimensional = false;
        x.sphere_dimensions = std::make_pair(2, 2);
        x.chi_m = 0;
        x.chi_orbits = std::vector<long>{2, 2, 4};
        x.formal = true;
        x.krull_dim = 2;
        x.chi_gh = 4;
        x.dim_cohomology = 4;
        x.weyl_from_dim = 2;
        x.rational_sphere = false;
        x.normalizer_consistent = true;
        out.push_back(std::move(e));
    }
    for (const auto& [name, alpha, relation, square_zero] :
         std::vector<std::tuple<std::string, std::vector<Rational>, std::string, bool>>{
             {"u3-M1", {1, 0, 0}, "x1^2 - u^2", false}, {"u3-M2", {1, 1, 1}, "u^2", true}}) {
        CatalogEntry e{name, make_input(name, "A2+T1", "T3", "T3", "T2"), {},
                       "U(3) with K- = K+ = T^3 and H = ker(alpha), alpha = " +
                           std::string(square_zero ? "x1 + x2 + x3" : "x1")};
        e.input.family = TorusFamilyData{3, alpha};
        auto& x = e.expected;
        x.manifold_dimension = 8;
        x.even_dimensional = true;
        x.sphere_dimensions = std::make_pair(1, 1);
        x.chi_m = 12;
        x.chi_orbits = std::vector<long>{6, 6, 0};
        x.formal = true;
        x.krull_dim = 3;
        x.equivariant_series = PoincareSeries(IntPoly::constant(2), {2, 2, 2}) - PoincareSeries(IntPoly{1}, {2, 2});
        x.poincare_polynomial = IntPoly{1, 0, 3, 0, 4, 0, 3, 0, 1};
        x.ordinary_graded_dims = std::vector<long>{1, 3, 4, 3, 1};
        x.equivariant_ring_series = x.equivariant_series;
        x.square_zero = square_zero;
        x.ordinary_first_relation = relation;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"circle-on-s2", make_input("circle-on-s2", "T1", "T1", "T1", "1"), {},
                       "rotation of S^2 about an axis, fixed poles"};
        e.input.family = TorusFamilyData{1, {1}};
        auto& x = e.expected;
        x.manifold_dimension = 2;
        x.even_dimensional = true;
        x.sphere_dimensions = std::make_pair(1, 1);
        x.chi_m = 2;
        x.chi_orbits = std::vector<long>{1, 1, 0};
        x.formal = true;
        x.krull_dim = 1;
        x.equivariant_series = PoincareSeries(IntPoly::constant(2), {2}) - PoincareSeries::one();
        x.poincare_polynomial = IntPoly{1, 0, 1};
        x.ordinary_graded_dims = std::vector<long>{1, 1};
        x.equivariant_ring_series = x.equivariant_series;
        x.square_zero = true;
        x.ordinary_first_relation = "u^2";
        out.push_back(std::move(e));
    }
    return out;
}

inline std::string str(long v) { return std::to_string(v); }
inline std::string str(int v) { return std::to_string(v); }
inline std::string str(bool v) { return v ? "true" : "false"; }
inline std::string str(const Integer& v) { return v.get_str(); }
inline std::string str(const std::pair<int, int>& p) { return "(" + str(p.first) + ", " + str(p.second) + ")"; }
inline std::string str(const IntPoly& p) { return p.to_string(); }
inline std::string str(const PoincareSeries& s) { return s.to_string(); }
inline std::string str(const std::string& s) { return s; }
inline std::string str(const std::vector<long>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

} // namespace detail

/// The built-in examples, in a fixed order.
inline const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name)
{
    for (const auto& e : catalog())
        if (e.name == name)
            return &e;
    return nullptr;
}

/// Names of the expectation fields an entry sets.
inline std::vector<std::string> expected_fields(const CatalogExpectations& x)
{
    std::vector<std::string> f;
    const auto add = [&](bool present, const char* name) {
        if (present)
            f.push_back(name);
    };
    add(x.manifold_dimension.has_value(), "manifold_dimension");
    add(x.even_dimensional.has_value(), "even_dimensional");
    add(x.sphere_dimensions.has_value(), "sphere_dimensions");
    add(x.chi_m.has_value(), "chi_m");
    add(x.chi_orbits.has_value(), "chi_orbits");
    add(x.formal.has_value(), "formal");
    add(x.krull_dim.has_value(), "krull_dim");
    add(x.equivariant_series.has_value(), "equivariant_series");
    add(x.poincare_polynomial.has_value(), "poincare_polynomial");
    add(x.chi_gh.has_value(), "chi_gh");
    add(x.dim_cohomology.has_value(), "dim_cohomology");
    add(x.weyl_from_dim.has_value(), "weyl_from_dim");
    add(x.rational_sphere.has_value(), "rational_sphere");
    add(x.normalizer_consistent.has_value(), "normalizer_consistent");
    add(x.ordinary_graded_dims.has_value(), "ordinary_graded_dims");
    add(x.equivariant_ring_series.has_value(), "equivariant_ring_series");
    add(x.square_zero.has_value(), "square_zero");
    add(x.ordinary_first_relation.has_value(), "ordinary_first_relation");
    return f;
}

/// Recomputes every expected field of the entry. Computation errors become
/// failed checks with the message as the actual value.
inline std::vector<ExpectationCheck> verify_entry(const CatalogEntry& entry)
{
    using detail::str;
    std::vector<ExpectationCheck> out;
    const auto& x = entry.expected;
    const auto& in = entry.input;
    const GroupDiagram& d = in.diagram;

    const auto check = [&](const char* field, const auto& expected, auto&& compute) {
        if (!expected)
            return;
        ExpectationCheck c{field, false, str(*expected), {}};
        try {
            const auto actual = compute();
            c.actual = str(actual);
            if constexpr (std::is_same_v<std::decay_t<decltype(actual)>, PoincareSeries>)
                c.ok = actual.structurally_equal(*expected);
            else
                c.ok = actual == *expected;
        } catch (const std::exception& e) {
            c.actual = std::string("error: ") + e.what();
        }
        out.push_back(std::move(c));
    };

    check("manifold_dimension", x.manifold_dimension, [&] { return manifold_dimension(d); });
    check("even_dimensional", x.even_dimensional, [&] { return is_even_dimensional(d); });
    check("sphere_dimensions", x.sphere_dimensions, [&] {
        const auto n = normalized(d);
        return std::make_pair(sphere_dimension_minus(n), sphere_dimension_plus(n));
    });
    check("chi_m", x.chi_m, [&] { return to_int64(euler_characteristic(d)); });
    check("chi_orbits", x.chi_orbits, [&] {
        const auto e = orbit_euler_characteristics(d);
        return std::vector<long>{to_int64(e.minus), to_int64(e.plus), to_int64(e.principal)};
    });
    check("formal", x.formal, [&] { return formality_verdict(d); });
    check("krull_dim", x.krull_dim, [&] { return krull_dimension(d); });
    check("equivariant_series", x.equivariant_series, [&] { return equivariant_hilbert_series(d); });
    check("poincare_polynomial", x.poincare_polynomial, [&] { return poincare_polynomial(d); });
    check("chi_gh", x.chi_gh, [&] { return to_int64(principal_euler(d)); });
    check("dim_cohomology", x.dim_cohomology, [&] { return to_int64(dim_from_weyl(d, in.weyl_order.value())); });
    check("weyl_from_dim", x.weyl_from_dim,
          [&] { return to_int64(weyl_from_dim(d, Integer(x.dim_cohomology.value())).value); });
    check("rational_sphere", x.rational_sphere, [&] { return rational_sphere_predicate(d, in.weyl_order.value()); });
    check("normalizer_consistent", x.normalizer_consistent,
          [&] { return normalizer_consistency(d, in.weyl_order.value(), in.normalizer_order.value()); });

    if (x.ordinary_graded_dims || x.equivariant_ring_series || x.square_zero || x.ordinary_first_relation) {
        std::optional<poly::TorusFamilyPresentations> rings;
        const auto presentations = [&]() -> const poly::TorusFamilyPresentations& {
            if (!rings)
                rings = poly::build_torus_family_presentations(d.g, in.family.value().alpha);
            return *rings;
        };
        check("ordinary_graded_dims", x.ordinary_graded_dims, [&] {
            const auto p = poly::hilbert_series_quotient(presentations().ordinary).as_polynomial();
            if (!p)
                throw Error(ErrorKind::InfiniteQuotient, "ordinary quotient is infinite-dimensional");
            std::vector<long> dims;
            for (const auto& v : even_graded_dimensions(*p))
                dims.push_back(to_int64(v));
            return dims;
        });
        check("equivariant_ring_series", x.equivariant_ring_series,
              [&] { return poly::hilbert_series_quotient(presentations().equivariant); });
        check("square_zero", x.square_zero, [&] { return poly::square_zero_degree2(presentations().ordinary); });
        check("ordinary_first_relation", x.ordinary_first_relation,
              [&] { return presentations().ordinary.generators().front().to_string(); });
    }
    return out;
}

} // namespace cohomone

// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <iostream>
#include <random>
#include <sstream>

#include "cohomone/catalog.hpp"
#include "cohomone/gkm.hpp"
#include "cohomone/polyring/hilbert.hpp"
#include "oracle/oracles.hpp"
#include "support/generators.hpp"

using namespace cohomone;

namespace {

struct Criterion {
    bool ok = true;
    std::ostringstream why;

    void check(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            why << what;
        }
    }
};

std::vector<GroupDiagram> catalog_intervals()
{
    std::vector<GroupDiagram> out;
    for (const auto& e : catalog())
        if (e.input.diagram.is_interval())
            out.push_back(e.input.diagram);
    return out;
}

void so_odd(Criterion& c)
{
    for (int n = 2; n <= 4; ++n) {
        const auto b = "B" + std::to_string(n), bm = "B" + std::to_string(n - 1);
        const auto d = GroupDiagram::interval(parse_group(b), parse_group("D" + std::to_string(n)),
                                              parse_group(bm + "+T1"), parse_group(bm));
        std::vector<Integer> coeffs(static_cast<std::size_t>(4 * n) + 1, 0);
        for (int i = 0; i <= 4 * n; i += 2)
            coeffs[static_cast<std::size_t>(i)] = 1;
        coeffs[static_cast<std::size_t>(2 * n)] = 2;
        const auto p = poincare_polynomial(d);
        c.check(p == IntPoly(coeffs), "n=" + std::to_string(n) + ": P = " + p.to_string());
        c.check(p.value_at_one() == 2 * n + 2, "coefficient sum");
        c.check(euler_characteristic(d) == 2 * n + 2, "euler characteristic");
    }
}

void classifying(Criterion& c)
{
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> den;
        for (int i = 1; i <= n; ++i)
            den.push_back(4 * i);
        const auto s = classifying_series(parse_group("B" + std::to_string(n)));
        c.check(s.structurally_equal(PoincareSeries(IntPoly{1}, den)), "B" + std::to_string(n) + ": " + s.to_string());
    }
}

void gysin(Criterion& c)
{
    int used = 0;
    for (const auto& d : catalog_intervals()) {
        if (d.k_minus.rank() != d.g.rank() || d.h.rank() != d.k_minus.rank() - 1)
            continue;
        ++used;
        const int l = sphere_dimension_minus(d);
        std::vector<Integer> f(static_cast<std::size_t>(l) + 2, 0);
        f[0] = 1;
        f[static_cast<std::size_t>(l) + 1] = -1;
        c.check(classifying_series(d.h).structurally_equal(IntPoly(f) * classifying_series(d.k_minus)), to_string(d));
    }
    c.check(used >= 4, "too few applicable catalog diagrams");
}

void krull(Criterion& c)
{
    int used = 0;
    for (const auto& d : catalog_intervals()) {
        std::optional<PoincareSeries> s;
        try {
            s = equivariant_hilbert_series(d);
        } catch (const Error&) {
            continue;
        }
        ++used;
        c.check(s->pole_order_at_one() == std::max(d.k_minus.rank(), d.k_plus.rank()), to_string(d));
    }
    c.check(used >= 4, "too few applicable catalog diagrams");
}

void freeness(Criterion& c)
{
    int used = 0;
    for (const auto& d : catalog_intervals()) {
        if (!formality_verdict(d) || !is_even_dimensional(d))
            continue;
        ++used;
        const auto lhs = equivariant_hilbert_series(d);
        const auto rhs = poincare_polynomial(d) * classifying_series(d.g);
        c.check(lhs.structurally_equal(rhs), to_string(d) + ": " + lhs.to_string() + " vs " + rhs.to_string());
    }
    c.check(used >= 4, "too few formal catalog diagrams");
}

void odd_case(Criterion& c)
{
    const auto& g = find_catalog_entry("N7G")->input.diagram;
    const auto& i = find_catalog_entry("N7I")->input.diagram;
    c.check(weyl_from_dim(g, 6).value == 2, "weyl_from_dim N7G");
    c.check(weyl_from_dim(i, 4).value == 2, "weyl_from_dim N7I");
    c.check(principal_euler(g) == 6, "chi(G/H) N7G");
    c.check(principal_euler(i) == 4, "chi(G/H) N7I");
    c.check(!rational_sphere_predicate(g, 2) && !rational_sphere_predicate(i, 2), "rational sphere");
    c.check(normalizer_consistency(g, 2, 6), "normalizer N7G");
    c.check(normalizer_consistency(i, 2, 2), "normalizer N7I");
}

void unitary_pair(Criterion& c)
{
    const auto d = GroupDiagram::interval(parse_group("A2+T1"), parse_group("T3"), parse_group("T3"), parse_group("T2"));
    const auto series_route = poincare_polynomial(d);
    c.check(series_route == IntPoly{1, 0, 3, 0, 4, 0, 3, 0, 1}, "series route " + series_route.to_string());
    const std::vector<Integer> dims{1, 3, 4, 3, 1};
    for (const auto& [alpha, square_zero] :
         std::vector<std::pair<std::vector<Rational>, bool>>{{{1, 0, 0}, false}, {{1, 1, 1}, true}}) {
        const auto rings = poly::build_torus_family_presentations(d.g, alpha);
        const auto p = poly::hilbert_series_quotient(rings.ordinary).as_polynomial();
        c.check(p && even_graded_dimensions(*p) == dims && *p == series_route, "ordinary graded dimensions");
        c.check(poly::square_zero_degree2(rings.ordinary) == square_zero, "square-zero");
    }
}

void gkm(Criterion& c)
{
    for (std::size_t k = 2; k <= 3; ++k) {
        const auto a = PoincareSeries(IntPoly{2}, std::vector<int>(k, 2)).taylor_coefficients(20);
        const auto b = PoincareSeries(IntPoly{1}, std::vector<int>(k - 1, 2)).taylor_coefficients(20);
        std::vector<std::vector<Rational>> alphas{std::vector<Rational>(k, 0), std::vector<Rational>(k, 1)};
        alphas[0][0] = 1;
        alphas[1][k - 1] = -2;
        for (const auto& alpha : alphas) {
            const TorusFamilySpec s(k, alpha);
            for (int deg = 0; deg <= 20; ++deg)
                c.check(Integer(graded_dimension(s, deg)) == a[static_cast<std::size_t>(deg)] -
                                                                   b[static_cast<std::size_t>(deg)],
                        "k=" + std::to_string(k) + " degree " + std::to_string(deg));
            const auto t = check_tensor_isomorphism(s, 8);
            c.check(t.ok, "tensor isomorphism k=" + std::to_string(k) +
                              (t.certificate ? ": " + t.certificate->kind : std::string()));
        }
    }
}

oracle::Poly to_oracle(const poly::Polynomial& p)
{
    oracle::Poly out;
    for (const auto& [e, coef] : p.terms())
        out[e] = coef;
    return out;
}

void compare_with_oracle(Criterion& c, const poly::IdealPresentation& ideal, int up_to)
{
    std::vector<int> weights;
    for (const auto& v : ideal.ring()->variables())
        weights.push_back(v.degree);
    std::vector<oracle::Poly> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(to_oracle(g));
    const auto taylor = poly::hilbert_series_quotient(ideal).taylor_coefficients(up_to);
    for (int d = 0; d <= up_to; ++d)
        c.check(taylor[static_cast<std::size_t>(d)] == oracle::quotient_dimension(weights, gens, d),
                ideal.to_string() + " at degree " + std::to_string(d));
}

void oracle_equivalence(Criterion& c)
{
    // Variables sit in degree 2, so polynomial degree 12 is graded degree 24.
    int ideals = 0;
    for (const auto& e : catalog()) {
        if (!e.input.family)
            continue;
        const auto rings = poly::build_torus_family_presentations(e.input.diagram.g, e.input.family->alpha);
        compare_with_oracle(c, rings.equivariant, 24);
        compare_with_oracle(c, rings.ordinary, 24);
        ideals += 2;
    }
    c.check(ideals >= 4, "catalog ideals missing");
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const auto ring = poly::make_ring(1 + rng() % 3, "x");
        std::vector<poly::Polynomial> gens;
        const auto count = 1 + rng() % 3;
        for (std::size_t g = 0; g < count; ++g)
            gens.push_back(gen::random_homogeneous(rng, ring, 2 * (1 + static_cast<int>(rng() % 4))));
        compare_with_oracle(c, poly::IdealPresentation(ring, gens), 24);
    }
}

void parity(Criterion& c)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = gen::random_valid_diagram(rng, true);
        c.check(validate(d).ok() && d.h.rank() == d.g.rank(), "generator produced " + to_string(d));
        c.check(euler_characteristic(d) == 0, "chi != 0 for " + to_string(d));
        c.check(!is_even_dimensional(d), "even-dimensional " + to_string(d));
    }
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, void (*)(Criterion&)>> criteria{
        {"SO(2n+1) Poincare polynomials, n = 2..4", so_odd},
        {"classifying series of B_n, n = 2..5", classifying},
        {"Gysin identity on catalog diagrams", gysin},
        {"pole order equals maximal isotropy rank", krull},
        {"equivariant series = P(M) * P(BG) for formal diagrams", freeness},
        {"odd-dimensional relations for N7G and N7I", odd_case},
        {"U(3) ring pair", unitary_pair},
        {"pair model dimensions and tensor isomorphism", gkm},
        {"Groebner quotient dimensions against brute force", oracle_equivalence},
        {"rank H = rank G diagrams have chi = 0 and odd dimension", parity},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.check(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first;
        if (!c.ok)
            std::cout << " (" << c.why.str() << ")";
        std::cout << "\n";
        failed += c.ok ? 0 : 1;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

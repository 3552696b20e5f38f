#pragma once

// Ring presentations for diagrams with K- = K+ = T (a maximal torus of G) and
// H = ker(alpha). In coordinates x1..xk on t and an extra degree-2 class u:
//
//   equivariant:  Q[x, u] / <alpha^2 - u^2>
//   ordinary:     Q[x, u] / <alpha^2 - u^2, f_1, ..., f_r>
//
// with f_i representatives of the basic Weyl invariants. When alpha already
// lies in the ideal of the f_i the first relation is written u^2.

#include <string>
#include <vector>

#include "cohomone/lie_data.hpp"
#include "cohomone/polyring/groebner.hpp"
#include "cohomone/polyring/hilbert.hpp"

namespace cohomone::poly {

struct TorusFamilyPresentations {
    std::size_t k = 0;
    Polynomial alpha;
    std::vector<Polynomial> chevalley;
    IdealPresentation equivariant;
    IdealPresentation ordinary;
};

/// Elementary symmetric polynomials e_1..e_n of the given linear forms.
inline std::vector<Polynomial> elementary_symmetric(const RingPtr& ring, const std::vector<Polynomial>& xs)
{
    // e(t) = prod (1 + x_i t); e[j] is the coefficient of t^j.
    std::vector<Polynomial> e{Polynomial::constant(ring, 1)};
    for (const auto& x : xs) {
        e.push_back(Polynomial(ring));
        for (std::size_t j = e.size() - 1; j > 0; --j)
            e[j] += e[j - 1] * x;
    }
    e.erase(e.begin());
    return e;
}

inline TorusFamilyPresentations build_torus_family_presentations(const CompactGroupType& g,
                                                                 const std::vector<Rational>& alpha)
{
    std::size_t k = 0;
    enum class Kind { Torus, Unitary, Special } kind;
    int n = 0;
    if (g.is_torus()) {
        kind = Kind::Torus;
        k = static_cast<std::size_t>(g.torus_rank());
    } else if (g.simple_factors().size() == 1 && type_a_rank(g.simple_factors().front()) > 0 && g.torus_rank() <= 1) {
        n = type_a_rank(g.simple_factors().front()) + 1;
        kind = g.torus_rank() == 1 ? Kind::Unitary : Kind::Special;
        k = static_cast<std::size_t>(kind == Kind::Unitary ? n : n - 1);
    } else {
        throw Error(ErrorKind::FamilyNotImplemented,
                    "ring presentations are implemented for tori, A_n and A_n+T1 only, not " + g.to_string());
    }
    if (k == 0)
        throw Error(ErrorKind::Validation, "the torus family needs a group of positive rank");
    if (alpha.size() != k)
        throw Error(ErrorKind::Validation, "alpha has " + std::to_string(alpha.size()) + " coordinates, expected " +
                                               std::to_string(k));
    if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return a == 0; }))
        throw Error(ErrorKind::Validation, "alpha must be nonzero");

    const RingPtr ring = make_ring(k, "x", {"u"});
    std::vector<Polynomial> xs;
    for (std::size_t i = 0; i < k; ++i)
        xs.push_back(Polynomial::variable(ring, i));
    const Polynomial u = Polynomial::variable(ring, k);
    const Polynomial a = Polynomial::linear(ring, alpha);

    std::vector<Polynomial> chevalley;
    switch (kind) {
    case Kind::Torus:
        chevalley = xs;
        break;
    case Kind::Unitary:
        chevalley = elementary_symmetric(ring, xs);
        break;
    case Kind::Special: {
        // x_n = -(x_1 + ... + x_{n-1}); e_1 vanishes identically.
        Polynomial last(ring);
        for (const auto& x : xs)
            last -= x;
        auto all = xs;
        all.push_back(last);
        chevalley = elementary_symmetric(ring, all);
        chevalley.erase(chevalley.begin());
        break;
    }
    }

    const Polynomial relation = a * a - u * u;
    const GroebnerBasis chev_basis = groebner_basis(ring, chevalley);
    std::vector<Polynomial> ordinary{normal_form(a, chev_basis).is_zero() ? u * u : relation};
    ordinary.insert(ordinary.end(), chevalley.begin(), chevalley.end());

    return TorusFamilyPresentations{k, a, chevalley, IdealPresentation(ring, {relation}),
                                    IdealPresentation(ring, std::move(ordinary))};
}

} // namespace cohomone::poly

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohomone/diagram.hpp"
#include "cohomone/series.hpp"

namespace cohomone {

/// chi(G/K): |W(G)|/|W(K)| for equal rank, 0 for a rank drop.
inline Integer homogeneous_euler(const CompactGroupType& g, const CompactGroupType& k)
{
    if (k.rank() > g.rank())
        throw Error(ErrorKind::Validation, "rank " + k.to_string() + " exceeds rank " + g.to_string());
    if (k.rank() < g.rank())
        return 0;
    const Integer wg = g.weyl_order();
    const Integer wk = k.weyl_order();
    if (!mpz_divisible_p(wg.get_mpz_t(), wk.get_mpz_t()))
        throw Error(ErrorKind::Inconsistent, "|W(" + k.to_string() + ")| does not divide |W(" + g.to_string() +
                                                 ")|: no such equal-rank pair");
    return wg / wk;
}

struct OrbitEuler {
    Integer minus;
    Integer plus;
    Integer principal;

    bool operator==(const OrbitEuler&) const = default;
};

/// (chi(G/K-), chi(G/K+), chi(G/H)) in the normalized orientation. A side with
/// K/H = S^0 is a double cover of the principal orbit, so its Euler
/// characteristic is chi(G/H)/2.
inline OrbitEuler orbit_euler_characteristics(const GroupDiagram& input)
{
    require_interval(input, "orbit Euler characteristics");
    require_valid(input);
    const GroupDiagram d = normalized(input);
    OrbitEuler e;
    e.principal = homogeneous_euler(d.g, d.h);
    const auto side = [&](const CompactGroupType& k) -> Integer {
        if (k.dimension() == d.h.dimension()) {
            if (!mpz_divisible_p(e.principal.get_mpz_t(), Integer(2).get_mpz_t()))
                throw Error(ErrorKind::Inconsistent, "chi(G/H) is odd but K/H = S^0 needs a double cover");
            return e.principal / 2;
        }
        return homogeneous_euler(d.g, k);
    };
    e.minus = side(d.k_minus);
    e.plus = side(d.k_plus);
    return e;
}

inline Integer euler_characteristic(const GroupDiagram& d)
{
    require_valid(d);
    if (!d.is_interval())
        return 0;
    const auto e = orbit_euler_characteristics(d);
    return e.minus + e.plus - e.principal;
}

/// Largest isotropy rank: max(rank K-, rank K+), or rank H on a circle.
inline int krull_dimension(const GroupDiagram& d)
{
    require_valid(d);
    if (!d.is_interval())
        return d.h.rank();
    return std::max(d.k_minus.rank(), d.k_plus.rank());
}

/// Equivariantly formal iff some isotropy group has full rank.
inline bool formality_verdict(const GroupDiagram& d) { return krull_dimension(d) == d.g.rank(); }

/// P(BK-) + P(BK+) - P(BH), defined when rank H = rank K- - 1 (normalized).
inline PoincareSeries equivariant_hilbert_series(const GroupDiagram& input)
{
    require_interval(input, "equivariant Hilbert series");
    require_valid(input);
    const GroupDiagram d = normalized(input);
    if (d.h.rank() != d.k_minus.rank() - 1)
        throw Error(ErrorKind::NotComputed,
                    "all isotropy groups have equal rank; the Mayer-Vietoris series formula does not apply");
    return classifying_series(d.k_minus) + classifying_series(d.k_plus) - classifying_series(d.h);
}

/// (P(BK-) + P(BK+) - P(BH)) / P(BG) for even-dimensional formal diagrams.
inline IntPoly poincare_polynomial(const GroupDiagram& d)
{
    require_interval(d, "Poincare polynomial");
    if (!is_even_dimensional(d))
        throw Error(ErrorKind::Hypothesis, "Poincare polynomial formula needs an even-dimensional manifold");
    if (!formality_verdict(d))
        throw Error(ErrorKind::Hypothesis, "Poincare polynomial formula needs an isotropy group of full rank");
    const PoincareSeries q = equivariant_hilbert_series(d) / classifying_series(d.g);
    const auto p = q.as_polynomial();
    if (!p)
        throw Error(ErrorKind::Inconsistent, "quotient " + q.to_string() + " is not a polynomial");
    if (!p->has_nonnegative_coefficients())
        throw Error(ErrorKind::Inconsistent, "Poincare polynomial " + p->to_string() + " has a negative coefficient");
    if (p->value_at_one() != euler_characteristic(d))
        throw Error(ErrorKind::Inconsistent, "Betti sum of " + p->to_string() + " differs from chi(M)");
    return *p;
}

struct InvariantReport {
    int manifold_dimension = 0;
    bool even_dimensional = false;
    std::optional<std::pair<int, int>> sphere_dimensions; // (l-, l+), normalized
    Integer chi_m;
    std::optional<OrbitEuler> chi_orbits;
    bool formal = false;
    int krull_dim = 0;
    std::optional<PoincareSeries> equivariant_series;
    std::optional<IntPoly> poincare_polynomial;
    /// field name -> reason it is absent
    std::vector<std::pair<std::string, std::string>> not_computed;
    std::vector<std::string> applicability_notes;
};

/// Every invariant for a valid diagram. Fields that do not apply are left empty
/// and listed in `not_computed` with the reason.
inline InvariantReport compute_invariants(const GroupDiagram& input)
{
    require_valid(input);
    const GroupDiagram d = normalized(input);
    InvariantReport r;
    r.manifold_dimension = manifold_dimension(d);
    r.even_dimensional = r.manifold_dimension % 2 == 0;
    r.krull_dim = krull_dimension(d);
    r.formal = r.krull_dim == d.g.rank();
    r.chi_m = euler_characteristic(d);

    if (!d.is_interval()) {
        r.not_computed.emplace_back("chi_orbits", "circle orbit space has no singular orbits");
        r.not_computed.emplace_back("equivariant_series", "no series formula for a circle orbit space");
        r.not_computed.emplace_back("poincare_polynomial", "no series formula for a circle orbit space");
        return r;
    }

    r.sphere_dimensions = std::make_pair(sphere_dimension_minus(d), sphere_dimension_plus(d));
    r.chi_orbits = orbit_euler_characteristics(d);

    try {
        r.equivariant_series = equivariant_hilbert_series(d);
        if (r.equivariant_series->pole_order_at_one() != r.krull_dim)
            r.applicability_notes.push_back("pole order of the equivariant series differs from the Krull dimension");
    } catch (const Error& e) {
        r.not_computed.emplace_back("equivariant_series", e.what());
    }

    if (!r.even_dimensional) {
        r.not_computed.emplace_back("poincare_polynomial", "manifold is odd-dimensional");
    } else if (!r.formal) {
        r.not_computed.emplace_back("poincare_polynomial", "action is not equivariantly formal");
    } else {
        try {
            r.poincare_polynomial = poincare_polynomial(d);
            if (!r.poincare_polynomial->is_palindromic())
                r.applicability_notes.push_back("warning: Poincare polynomial is not palindromic");
        } catch (const Error& e) {
            r.not_computed.emplace_back("poincare_polynomial", e.what());
            r.applicability_notes.push_back(std::string("inconsistent diagram: ") + e.what());
        }
    }
    return r;
}

} // namespace cohomone

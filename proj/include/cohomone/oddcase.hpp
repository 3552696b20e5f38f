#pragma once

// Relations between dim H^*(M), chi(G/H) and the order of the Weyl group W of
// the action when every isotropy group has full rank:
//     dim H^*(M) * |W| = 2 * chi(G/H).
// |W| and |N(H)/H| are user data; nothing here derives them from the diagram.

#include <optional>
#include <string>
#include <vector>

#include "cohomone/invariants.hpp"

namespace cohomone {

namespace detail {

inline Integer full_rank_principal_euler(const GroupDiagram& d)
{
    require_interval(d, "odd-dimensional relations");
    require_valid(d);
    if (d.h.rank() != d.g.rank())
        throw Error(ErrorKind::Hypothesis, "odd-dimensional relations need rank H = rank G");
    if (is_even_dimensional(d))
        throw Error(ErrorKind::Inconsistent, "rank H = rank G but M is even-dimensional");
    return homogeneous_euler(d.g, d.h);
}

inline void require_positive(const Integer& v, const char* what)
{
    if (sgn(v) <= 0)
        throw Error(ErrorKind::Inconsistent, std::string(what) + " must be a positive integer");
}

inline bool divides(const Integer& a, const Integer& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }

} // namespace detail

/// chi(G/H) for a diagram with rank H = rank G.
inline Integer principal_euler(const GroupDiagram& d) { return detail::full_rank_principal_euler(d); }

/// dim H^*(M) = 2 chi(G/H) / |W|
inline Integer dim_from_weyl(const GroupDiagram& d, const Integer& weyl_order)
{
    const Integer chi = detail::full_rank_principal_euler(d);
    detail::require_positive(weyl_order, "|W|");
    if (!detail::divides(weyl_order, 2 * chi))
        throw Error(ErrorKind::Inconsistent, "|W| = " + weyl_order.get_str() + " does not divide 2 chi(G/H) = " +
                                                 Integer(2 * chi).get_str() + ": inconsistent with dim H^*(M) = 2 chi(G/H)/|W|");
    return 2 * chi / weyl_order;
}

struct WeylOrderResult {
    Integer value;
    std::vector<std::string> warnings;
};

/// |W| = 2 chi(G/H) / dim H^*(M)
inline WeylOrderResult weyl_from_dim(const GroupDiagram& d, const Integer& dim_cohomology)
{
    const Integer chi = detail::full_rank_principal_euler(d);
    detail::require_positive(dim_cohomology, "dim H^*(M)");
    if (!detail::divides(dim_cohomology, 2 * chi))
        throw Error(ErrorKind::Inconsistent, "dim H^*(M) = " + dim_cohomology.get_str() +
                                                 " does not divide 2 chi(G/H) = " + Integer(2 * chi).get_str() +
                                                 ": inconsistent with dim H^*(M) = 2 chi(G/H)/|W|");
    WeylOrderResult r{2 * chi / dim_cohomology, {}};
    if (r.value < 2)
        r.warnings.push_back("|W| = " + r.value.get_str() +
                             " is below 2, the order of a group generated by two reflections");
    return r;
}

/// M is a rational homology sphere iff |W| = chi(G/H).
inline bool rational_sphere_predicate(const GroupDiagram& d, const Integer& weyl_order)
{
    const Integer chi = detail::full_rank_principal_euler(d);
    detail::require_positive(weyl_order, "|W|");
    return weyl_order == chi;
}

/// W is a subgroup of N(H)/H, and equals it when |W| = chi(G/H). Returns false
/// only for the latter contradiction; a |W| that cannot be a subgroup order is
/// an input error.
inline bool normalizer_consistency(const GroupDiagram& d, const Integer& weyl_order, const Integer& normalizer_order)
{
    const Integer chi = detail::full_rank_principal_euler(d);
    detail::require_positive(weyl_order, "|W|");
    detail::require_positive(normalizer_order, "|N(H)/H|");
    if (weyl_order > normalizer_order)
        throw Error(ErrorKind::Inconsistent, "|W| = " + weyl_order.get_str() + " exceeds |N(H)/H| = " +
                                                 normalizer_order.get_str() + " although W is contained in N(H)/H");
    if (!detail::divides(weyl_order, normalizer_order))
        throw Error(ErrorKind::Inconsistent, "|W| = " + weyl_order.get_str() + " does not divide |N(H)/H| = " +
                                                 normalizer_order.get_str());
    if (weyl_order == chi && normalizer_order != weyl_order)
        return false;
    return true;
}

struct OddCaseReport {
    Integer chi_gh;
    std::optional<Integer> weyl_order_action;
    std::optional<Integer> dim_cohomology;
    std::optional<bool> rational_sphere;
    std::optional<bool> normalizer_consistent;
    std::vector<std::string> warnings;
};

/// Runs every relation the supplied data allows. Throws Inconsistent when the
/// data contradicts the relations.
inline OddCaseReport analyze_odd_case(const GroupDiagram& d, const std::optional<Integer>& weyl_order,
                                      const std::optional<Integer>& normalizer_order)
{
    OddCaseReport r;
    r.chi_gh = principal_euler(d);
    if (weyl_order) {
        r.weyl_order_action = *weyl_order;
        r.dim_cohomology = dim_from_weyl(d, *weyl_order);
        r.rational_sphere = rational_sphere_predicate(d, *weyl_order);
        if (*weyl_order < 2)
            r.warnings.push_back("|W| = " + weyl_order->get_str() +
                                 " is below 2, the order of a group generated by two reflections");
        if (normalizer_order)
            r.normalizer_consistent = normalizer_consistency(d, *weyl_order, *normalizer_order);
    } else if (normalizer_order) {
        r.warnings.push_back("|N(H)/H| given without |W|; normalizer check skipped");
    }
    return r;
}

} // namespace cohomone

#pragma once

// Cohomogeneity-one group diagrams G > K-, K+ > H and the necessary
// conditions the abstract group types must satisfy. Passing validation does
// not certify that the diagram is realized by actual subgroups.

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "cohomone/error.hpp"
#include "cohomone/lie_data.hpp"

namespace cohomone {

enum class OrbitSpace { Interval, Circle };

inline const char* to_string(OrbitSpace o) { return o == OrbitSpace::Interval ? "interval" : "circle"; }

struct GroupDiagram {
    OrbitSpace orbit_space = OrbitSpace::Interval;
    CompactGroupType g;
    CompactGroupType k_minus;
    CompactGroupType k_plus;
    CompactGroupType h;

    static GroupDiagram interval(CompactGroupType g, CompactGroupType k_minus, CompactGroupType k_plus,
                                 CompactGroupType h)
    {
        return {OrbitSpace::Interval, std::move(g), std::move(k_minus), std::move(k_plus), std::move(h)};
    }

    /// Circle orbit space: all isotropy groups are conjugate to H; K- and K+ stay empty.
    static GroupDiagram circle(CompactGroupType g, CompactGroupType h)
    {
        return {OrbitSpace::Circle, std::move(g), {}, {}, std::move(h)};
    }

    bool is_interval() const { return orbit_space == OrbitSpace::Interval; }

    GroupDiagram swapped() const
    {
        GroupDiagram d = *this;
        std::swap(d.k_minus, d.k_plus);
        return d;
    }

    bool operator==(const GroupDiagram&) const = default;
};

inline void require_interval(const GroupDiagram& d, const char* what)
{
    if (!d.is_interval())
        throw Error(ErrorKind::WrongOrbitSpace, std::string(what) + " requires an interval orbit space");
}

/// l- = dim K- - dim H
inline int sphere_dimension_minus(const GroupDiagram& d)
{
    require_interval(d, "sphere dimension");
    return d.k_minus.dimension() - d.h.dimension();
}

/// l+ = dim K+ - dim H
inline int sphere_dimension_plus(const GroupDiagram& d)
{
    require_interval(d, "sphere dimension");
    return d.k_plus.dimension() - d.h.dimension();
}

/// Orders K- and K+ so that rank K- >= rank K+; ties are broken by dimension
/// and then by literal so the result does not depend on the input order.
inline GroupDiagram normalized(const GroupDiagram& d)
{
    if (!d.is_interval())
        return d;
    const auto key = [](const CompactGroupType& k) {
        return std::make_tuple(k.rank(), k.dimension(), k.to_string());
    };
    if (key(d.k_minus) < key(d.k_plus))
        return d.swapped();
    return d;
}

struct Violation {
    std::string rule;
    std::string detail;

    auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
};

namespace detail {

inline void check_subgroup(std::vector<Violation>& out, const std::string& sub_name, const CompactGroupType& sub,
                           const std::string& sup_name, const CompactGroupType& sup)
{
    if (sub.rank() > sup.rank())
        out.push_back({"rank-order", "rank " + sub_name + " = " + std::to_string(sub.rank()) + " exceeds rank " +
                                         sup_name + " = " + std::to_string(sup.rank())});
    if (sub.dimension() > sup.dimension())
        out.push_back({"dimension-order", "dim " + sub_name + " = " + std::to_string(sub.dimension()) +
                                              " exceeds dim " + sup_name + " = " +
                                              std::to_string(sup.dimension())});
    // Equal rank: a common maximal torus makes W(sub) a subgroup of W(sup).
    if (sub.rank() == sup.rank() && sub.dimension() <= sup.dimension()) {
        const Integer ws = sub.weyl_order();
        const Integer wp = sup.weyl_order();
        if (!mpz_divisible_p(wp.get_mpz_t(), ws.get_mpz_t()))
            out.push_back({"weyl-divisibility", "|W(" + sub_name + ")| = " + ws.get_str() +
                                                    " does not divide |W(" + sup_name + ")| = " + wp.get_str()});
    }
}

// K/H = S^l. Connected transitive actions on spheres: l odd drops the rank by
// one, l even keeps it; for even l >= 2, chi(S^l) = |W(K)|/|W(H)| = 2.
inline void check_sphere(std::vector<Violation>& out, std::vector<std::string>& warnings, const std::string& side,
                         const CompactGroupType& k, const CompactGroupType& h)
{
    const int l = k.dimension() - h.dimension();
    if (l < 0)
        return; // reported as dimension-order
    const std::string sphere = side + "/H = S^" + std::to_string(l);
    if (l % 2 == 0) {
        if (h.rank() != k.rank()) {
            out.push_back({"rank-rule", sphere + " is even-dimensional, requires rank H = rank " + side + " (" +
                                            std::to_string(h.rank()) + " != " + std::to_string(k.rank()) + ")"});
            return;
        }
        if (l == 0) {
            warnings.push_back(sphere + ": a zero-dimensional sphere needs non-connected isotropy; chi(G/" +
                               side + ") is taken as chi(G/H)/2");
            return;
        }
        const Integer wk = k.weyl_order();
        const Integer wh = h.weyl_order();
        if (wk != 2 * wh)
            out.push_back({"sphere-euler", sphere + " requires |W(" + side + ")|/|W(H)| = 2, got " + wk.get_str() +
                                               "/" + wh.get_str()});
    } else if (h.rank() != k.rank() - 1) {
        out.push_back({"rank-rule", sphere + " is odd-dimensional, requires rank H = rank " + side + " - 1 (" +
                                        std::to_string(h.rank()) + " != " + std::to_string(k.rank() - 1) + ")"});
    }
}

} // namespace detail

/// Necessary conditions only; every violated rule is reported, sorted.
inline ValidationReport validate(const GroupDiagram& d)
{
    ValidationReport r;
    if (d.is_interval()) {
        detail::check_subgroup(r.violations, "K-", d.k_minus, "G", d.g);
        detail::check_subgroup(r.violations, "K+", d.k_plus, "G", d.g);
        detail::check_subgroup(r.violations, "H", d.h, "K-", d.k_minus);
        detail::check_subgroup(r.violations, "H", d.h, "K+", d.k_plus);
        detail::check_sphere(r.violations, r.warnings, "K-", d.k_minus, d.h);
        detail::check_sphere(r.violations, r.warnings, "K+", d.k_plus, d.h);
    } else {
        detail::check_subgroup(r.violations, "H", d.h, "G", d.g);
    }
    std::sort(r.violations.begin(), r.violations.end());
    r.violations.erase(std::unique(r.violations.begin(), r.violations.end()), r.violations.end());
    std::sort(r.warnings.begin(), r.warnings.end());
    return r;
}

inline void require_valid(const GroupDiagram& d)
{
    const auto r = validate(d);
    if (!r.ok()) {
        std::string msg = "invalid diagram:";
        for (const auto& v : r.violations)
            msg += " [" + v.rule + "] " + v.detail + ";";
        throw Error(ErrorKind::Validation, msg);
    }
}

/// dim M = dim G - dim H + 1
inline int manifold_dimension(const GroupDiagram& d)
{
    require_valid(d);
    return d.g.dimension() - d.h.dimension() + 1;
}

inline bool is_even_dimensional(const GroupDiagram& d) { return manifold_dimension(d) % 2 == 0; }

inline std::string to_string(const GroupDiagram& d)
{
    if (!d.is_interval())
        return "G=" + d.g.to_string() + " H=" + d.h.to_string() + " (circle)";
    return "G=" + d.g.to_string() + " K-=" + d.k_minus.to_string() + " K+=" + d.k_plus.to_string() +
           " H=" + d.h.to_string() + " (interval)";
}

} // namespace cohomone

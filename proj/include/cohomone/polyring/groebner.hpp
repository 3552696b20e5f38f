#pragma once

// Buchberger's algorithm over Q with the normal selection strategy and both of
// Buchberger's criteria, followed by reduction to the unique reduced basis.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "cohomone/polyring/polynomial.hpp"

namespace cohomone::poly {

namespace detail {

using Term = std::pair<Exponents, Rational>;

/// Terms held in descending monomial order; front() is the leading term.
struct OrderedPoly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Exponents& lm() const { return terms.front().first; }
    const Rational& lc() const { return terms.front().second; }
};

struct Context {
    const Ring* ring;
    MonomialOrder order;

    bool greater(const Exponents& a, const Exponents& b) const
    {
        return compare_monomials(*ring, a, b, order) == std::strong_ordering::greater;
    }
};

inline OrderedPoly to_ordered(const Polynomial& p, MonomialOrder order) { return {p.sorted_terms(order)}; }

inline Polynomial from_ordered(const RingPtr& ring, const OrderedPoly& p)
{
    Polynomial out(ring);
    for (const auto& [e, c] : p.terms)
        out.add_term(e, c);
    return out;
}

/// a - c * x^shift * b, merging the sorted term lists.
inline OrderedPoly sub_scaled(const Context& ctx, const OrderedPoly& a, const Rational& c, const Exponents& shift,
                              const OrderedPoly& b)
{
    OrderedPoly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            out.terms.push_back(a.terms[i++]);
            continue;
        }
        Exponents eb = b.terms[j].first + shift;
        if (i == a.terms.size() || ctx.greater(eb, a.terms[i].first)) {
            out.terms.emplace_back(std::move(eb), -c * b.terms[j].second);
            ++j;
        } else if (eb == a.terms[i].first) {
            Rational v = a.terms[i].second - c * b.terms[j].second;
            if (v != 0)
                out.terms.emplace_back(a.terms[i].first, std::move(v));
            ++i;
            ++j;
        } else {
            out.terms.push_back(a.terms[i++]);
        }
    }
    return out;
}

/// Full reduction of p modulo `basis` (every term, not only the leading one).
inline OrderedPoly reduce(const Context& ctx, OrderedPoly p, const std::vector<OrderedPoly>& basis,
                          std::size_t skip = static_cast<std::size_t>(-1))
{
    OrderedPoly remainder;
    while (!p.is_zero()) {
        const Exponents& m = p.lm();
        const OrderedPoly* divisor = nullptr;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || basis[k].is_zero())
                continue;
            if (divides(basis[k].lm(), m)) {
                divisor = &basis[k];
                break;
            }
        }
        if (divisor) {
            const Rational c = p.lc() / divisor->lc();
            p = sub_scaled(ctx, p, c, m - divisor->lm(), *divisor);
        } else {
            remainder.terms.push_back(p.terms.front());
            p.terms.erase(p.terms.begin());
        }
    }
    return remainder;
}

inline OrderedPoly s_polynomial(const Context& ctx, const OrderedPoly& f, const OrderedPoly& g)
{
    const Exponents l = lcm(f.lm(), g.lm());
    OrderedPoly scaled_f;
    const Exponents sf = l - f.lm();
    scaled_f.terms.reserve(f.terms.size());
    const Rational inv = 1 / f.lc();
    for (const auto& [e, c] : f.terms)
        scaled_f.terms.emplace_back(e + sf, c * inv);
    return sub_scaled(ctx, scaled_f, 1 / g.lc(), l - g.lm(), g);
}

inline void make_monic(OrderedPoly& p)
{
    if (p.is_zero())
        return;
    const Rational inv = 1 / p.lc();
    for (auto& t : p.terms)
        t.second *= inv;
}

inline bool coprime(const Exponents& a, const Exponents& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i])
            return false;
    return true;
}

} // namespace detail

class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> polys)
        : ring_(std::move(ring)), order_(order), polys_(std::move(polys))
    {
    }

    const RingPtr& ring() const { return ring_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Polynomial>& polynomials() const { return polys_; }
    std::size_t size() const { return polys_.size(); }

    /// Leading exponents, in basis order.
    std::vector<Exponents> leading_monomials() const
    {
        std::vector<Exponents> out;
        for (const auto& p : polys_)
            out.push_back(p.sorted_terms(order_).front().first);
        return out;
    }

    /// The ideal is the whole ring.
    bool is_unit() const { return polys_.size() == 1 && polys_.front().max_degree() == 0; }

    bool operator==(const GroebnerBasis& o) const
    {
        return same_ring(ring_, o.ring_) && order_ == o.order_ && polys_ == o.polys_;
    }

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Polynomial> polys_;
};

/// Reduced Groebner basis of the ideal generated by `generators`.
inline GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& generators,
                                    MonomialOrder order = MonomialOrder::Grevlex)
{
    using namespace detail;
    const Context ctx{ring.get(), order};

    std::vector<OrderedPoly> basis;
    for (const auto& g : generators) {
        if (!same_ring(g.ring(), ring))
            throw Error(ErrorKind::VariableMismatch, "generator from a different ring");
        auto p = reduce(ctx, to_ordered(g, order), basis);
        if (!p.is_zero()) {
            make_monic(p);
            basis.push_back(std::move(p));
        }
    }

    // Pending pairs (i < j). Selection: smallest lcm (degree first in grevlex),
    // ties broken by index.
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            pending.emplace(i, j);

    const auto is_pending = [&](std::size_t a, std::size_t b) {
        return pending.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    while (!pending.empty()) {
        auto best = pending.begin();
        Exponents best_lcm = lcm(basis[best->first].lm(), basis[best->second].lm());
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Exponents l = lcm(basis[it->first].lm(), basis[it->second].lm());
            if (ctx.greater(best_lcm, l)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);

        if (coprime(basis[i].lm(), basis[j].lm()))
            continue;
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j)
                continue;
            if (divides(basis[k].lm(), best_lcm) && !is_pending(i, k) && !is_pending(j, k))
                chain = true;
        }
        if (chain)
            continue;

        auto r = reduce(ctx, s_polynomial(ctx, basis[i], basis[j]), basis);
        if (r.is_zero())
            continue;
        make_monic(r);
        const std::size_t n = basis.size();
        basis.push_back(std::move(r));
        for (std::size_t k = 0; k < n; ++k)
            pending.emplace(k, n);
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<OrderedPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i)
                continue;
            if (divides(basis[k].lm(), basis[i].lm()) && (basis[k].lm() != basis[i].lm() || k < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    // Interreduce: tails reduced against the others. Leading terms are
    // untouched because no leading monomial divides another.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        OrderedPoly tail;
        tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
        OrderedPoly red = reduce(ctx, std::move(tail), minimal, i);
        red.terms.insert(red.terms.begin(), minimal[i].terms.front());
        minimal[i] = std::move(red);
        make_monic(minimal[i]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const OrderedPoly& a, const OrderedPoly& b) { return ctx.greater(a.lm(), b.lm()); });

    std::vector<Polynomial> out;
    for (const auto& p : minimal)
        out.push_back(from_ordered(ring, p));
    return GroebnerBasis(ring, order, std::move(out));
}

/// Canonical representative of p modulo the ideal of `basis`.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis)
{
    if (!same_ring(p.ring(), basis.ring()))
        throw Error(ErrorKind::VariableMismatch, "polynomial and basis live in different rings");
    const detail::Context ctx{basis.ring().get(), basis.order()};
    std::vector<detail::OrderedPoly> g;
    for (const auto& q : basis.polynomials())
        g.push_back(detail::to_ordered(q, basis.order()));
    return detail::from_ordered(p.ring(), detail::reduce(ctx, detail::to_ordered(p, basis.order()), g));
}

/// Monomials of the given cohomological degree not divisible by any leading
/// monomial: a basis of that graded piece of the quotient.
inline std::vector<Exponents> standard_monomials(const GroebnerBasis& basis, int degree)
{
    const auto lms = basis.leading_monomials();
    std::vector<Exponents> out;
    for (auto& m : monomials_of_degree(*basis.ring(), degree)) {
        bool standard = std::none_of(lms.begin(), lms.end(), [&](const Exponents& l) { return divides(l, m); });
        if (standard)
            out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [&](const Exponents& a, const Exponents& b) {
        return compare_monomials(*basis.ring(), a, b, basis.order()) == std::strong_ordering::greater;
    });
    return out;
}

} // namespace cohomone::poly

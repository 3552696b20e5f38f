#pragma once

#include <algorithm>
#include <vector>

#include "cohomone/polyring/groebner.hpp"
#include "cohomone/series.hpp"

namespace cohomone::poly {

/// A ring together with homogeneous generators of an ideal.
class IdealPresentation {
public:
    IdealPresentation(RingPtr ring, std::vector<Polynomial> generators)
        : ring_(std::move(ring)), generators_(std::move(generators))
    {
        for (const auto& g : generators_) {
            if (!same_ring(g.ring(), ring_))
                throw Error(ErrorKind::VariableMismatch, "generator " + g.to_string() + " from a different ring");
            if (!g.is_homogeneous())
                throw Error(ErrorKind::Inhomogeneous, "generator " + g.to_string() + " is not homogeneous");
        }
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }

    GroebnerBasis groebner(MonomialOrder order = MonomialOrder::Grevlex) const
    {
        return groebner_basis(ring_, generators_, order);
    }

    std::string to_string() const
    {
        std::string s = "Q[";
        for (std::size_t i = 0; i < ring_->size(); ++i)
            s += (i ? "," : "") + ring_->var(i).name;
        s += "] / <";
        for (std::size_t i = 0; i < generators_.size(); ++i)
            s += (i ? ", " : "") + generators_[i].to_string();
        return s + ">";
    }

private:
    RingPtr ring_;
    std::vector<Polynomial> generators_;
};

inline GroebnerBasis groebner_basis(const IdealPresentation& i, MonomialOrder order = MonomialOrder::Grevlex)
{
    return i.groebner(order);
}

namespace detail {

inline void minimalize_monomials(std::vector<Exponents>& gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < gens.size() && !redundant; ++k)
            if (k != i && divides(gens[k], gens[i]))
                redundant = true;
        if (!redundant)
            out.push_back(gens[i]);
    }
    gens = std::move(out);
}

// Numerator N of HS(S/I) = N(t) / prod (1 - t^{deg x_i}) for a monomial ideal,
// via N(I + <m>) = N(I) - t^{deg m} N(I : m).
inline IntPoly hilbert_numerator(const Ring& ring, std::vector<Exponents> gens)
{
    minimalize_monomials(gens);
    if (gens.empty())
        return IntPoly::constant(1);
    // Pairwise coprime generators give a complete intersection.
    bool coprime_all = true;
    for (std::size_t i = 0; i < gens.size() && coprime_all; ++i)
        for (std::size_t k = i + 1; k < gens.size() && coprime_all; ++k)
            coprime_all = coprime(gens[i], gens[k]);
    if (coprime_all) {
        IntPoly n = IntPoly::constant(1);
        for (const auto& g : gens)
            n = n * IntPoly::one_minus_t_pow(ring.degree_of(g));
        return n;
    }
    const Exponents last = gens.back();
    gens.pop_back();
    std::vector<Exponents> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens)
        colon.push_back(g - gcd(g, last));
    return hilbert_numerator(ring, gens) -
           IntPoly::monomial(1, ring.degree_of(last)) * hilbert_numerator(ring, std::move(colon));
}

} // namespace detail

/// Hilbert series of ring / <monomials> in the cohomological grading.
inline PoincareSeries monomial_quotient_series(const Ring& ring, const std::vector<Exponents>& monomials)
{
    std::vector<int> den;
    for (const auto& v : ring.variables())
        den.push_back(v.degree);
    return PoincareSeries(detail::hilbert_numerator(ring, monomials), std::move(den));
}

inline PoincareSeries hilbert_series_quotient(const GroebnerBasis& basis)
{
    return monomial_quotient_series(*basis.ring(), basis.leading_monomials());
}

/// Hilbert series of ambient/ideal, read from the leading monomials of the
/// reduced Groebner basis.
inline PoincareSeries hilbert_series_quotient(const IdealPresentation& i,
                                              MonomialOrder order = MonomialOrder::Grevlex)
{
    return hilbert_series_quotient(i.groebner(order));
}

} // namespace cohomone::poly

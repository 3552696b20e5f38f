#pragma once

// Does the degree-2 part of a finite-dimensional graded quotient contain a
// nonzero element w with w^2 = 0?
//
// With w = sum a_i w_i over a basis of the degree-2 piece, the coordinates of
// normal_form(w^2) in the degree-4 piece are quadratic forms q_j(a). The answer
// is whether the q_j have a common nonzero rational zero. The pole order of the
// Hilbert series of <q_j> in Q[a] gives the dimension of the common zero cone:
//
//   0         only a = 0, even over C
//   1         finitely many lines; each is found by rational elimination
//   m         every q_j vanishes
//   2 (m = 3) a plane curve: a rational line if two of the q_j are
//             independent, else one conic, decided by Legendre's theorem

#include <optional>
#include <string>
#include <vector>

#include "cohomone/polyring/groebner.hpp"
#include "cohomone/polyring/hilbert.hpp"
#include "cohomone/polyring/linalg.hpp"
#include "cohomone/polyring/univariate.hpp"

namespace cohomone::poly {

struct SquareZeroResult {
    bool exists = false;
    /// A nonzero w with w^2 = 0, when one was exhibited.
    std::optional<Polynomial> witness;
    int degree2_dimension = 0;
    /// Dimension of the affine cone of solutions over C.
    int solution_cone_dimension = 0;
    std::string method;
};

/// Every variable has a pure power among the leading monomials.
inline bool is_finite_quotient(const GroebnerBasis& basis)
{
    if (basis.is_unit())
        return true;
    const auto lms = basis.leading_monomials();
    for (std::size_t i = 0; i < basis.ring()->size(); ++i) {
        bool found = false;
        for (const auto& m : lms) {
            bool pure = m[i] > 0;
            for (std::size_t j = 0; j < m.size() && pure; ++j)
                if (j != i && m[j] != 0)
                    pure = false;
            found = found || pure;
        }
        if (!found)
            return false;
    }
    return true;
}

namespace detail {

using Assignment = std::vector<Rational>;

inline bool only_variable(const Exponents& e, std::size_t v)
{
    for (std::size_t i = 0; i < e.size(); ++i)
        if (i != v && e[i] != 0)
            return false;
    return true;
}

// Rational solution of a zero-dimensional system; `active` lists the variables
// still free, all others are already substituted away.
inline std::optional<std::vector<std::pair<std::size_t, Rational>>>
find_rational_solution(const RingPtr& ring, const std::vector<Polynomial>& gens, std::vector<std::size_t> active)
{
    const GroebnerBasis gb = groebner_basis(ring, gens, MonomialOrder::Lex);
    if (gb.is_unit())
        return std::nullopt;
    if (active.empty())
        return std::vector<std::pair<std::size_t, Rational>>{};

    const std::size_t v = active.back();
    active.pop_back();
    const Polynomial* uni = nullptr;
    for (const auto& p : gb.polynomials()) {
        bool ok = p.max_degree() > 0;
        for (const auto& [e, c] : p.terms())
            ok = ok && only_variable(e, v);
        if (ok) {
            uni = &p;
            break;
        }
    }
    if (!uni)
        throw Error(ErrorKind::Unsupported, "elimination did not produce a univariate polynomial");

    std::vector<Rational> coeffs;
    for (const auto& [e, c] : uni->terms()) {
        const auto pw = static_cast<std::size_t>(e[v]);
        if (coeffs.size() <= pw)
            coeffs.resize(pw + 1, 0);
        coeffs[pw] = c;
    }
    for (const auto& r : rational_roots(coeffs)) {
        std::vector<Polynomial> next;
        for (const auto& g : gb.polynomials()) {
            Polynomial s = g.substitute(v, Polynomial::constant(ring, r));
            if (!s.is_zero())
                next.push_back(std::move(s));
        }
        if (auto rest = find_rational_solution(ring, next, active)) {
            rest->emplace_back(v, r);
            return rest;
        }
    }
    return std::nullopt;
}

// Nonzero rational point of a homogeneous system whose projective zero set is
// finite: search the charts a_0 = 1; a_0 = 0, a_1 = 1; ...
inline std::optional<Assignment> projective_point(const RingPtr& ring, const std::vector<Polynomial>& forms)
{
    const std::size_t m = ring->size();
    for (std::size_t chart = 0; chart < m; ++chart) {
        std::vector<Polynomial> gens;
        for (const auto& f : forms) {
            Polynomial g = f;
            for (std::size_t j = 0; j < chart; ++j)
                g = g.substitute(j, Polynomial(ring));
            g = g.substitute(chart, Polynomial::constant(ring, 1));
            if (!g.is_zero())
                gens.push_back(std::move(g));
        }
        std::vector<std::size_t> active;
        for (std::size_t j = chart + 1; j < m; ++j)
            active.push_back(j);
        if (auto sol = find_rational_solution(ring, gens, active)) {
            Assignment a(m, 0);
            a[chart] = 1;
            for (const auto& [i, r] : *sol)
                a[i] = r;
            return a;
        }
    }
    return std::nullopt;
}

inline std::vector<Rational> quadratic_form_matrix(const Polynomial& q)
{
    // Row-major symmetric 3x3 from a ternary quadratic form.
    std::vector<Rational> s(9, 0);
    for (const auto& [e, c] : q.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < 3; ++i)
            for (int k = 0; k < e[i]; ++k)
                idx.push_back(i);
        if (idx[0] == idx[1]) {
            s[idx[0] * 4] += c;
        } else {
            s[idx[0] * 3 + idx[1]] += c / 2;
            s[idx[1] * 3 + idx[0]] += c / 2;
        }
    }
    return s;
}

// Congruence diagonalization: returns diag and P with P^T S P = diag(diag).
inline std::pair<std::vector<Rational>, std::vector<Rational>> diagonalize3(std::vector<Rational> s)
{
    auto at = [](std::vector<Rational>& m, std::size_t i, std::size_t j) -> Rational& { return m[i * 3 + j]; };
    std::vector<Rational> p(9, 0);
    for (std::size_t i = 0; i < 3; ++i)
        at(p, i, i) = 1;
    // Column op on P and matching row+column op on S: e_i += f * e_j.
    auto add = [&](std::size_t i, std::size_t j, const Rational& f) {
        for (std::size_t r = 0; r < 3; ++r)
            at(p, r, i) += f * at(p, r, j);
        for (std::size_t r = 0; r < 3; ++r)
            at(s, r, i) += f * at(s, r, j);
        for (std::size_t c = 0; c < 3; ++c)
            at(s, i, c) += f * at(s, j, c);
    };
    auto swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < 3; ++r)
            std::swap(at(p, r, i), at(p, r, j));
        for (std::size_t r = 0; r < 3; ++r)
            std::swap(at(s, r, i), at(s, r, j));
        for (std::size_t c = 0; c < 3; ++c)
            std::swap(at(s, i, c), at(s, j, c));
    };
    for (std::size_t i = 0; i < 3; ++i) {
        if (at(s, i, i) == 0) {
            for (std::size_t j = i + 1; j < 3; ++j)
                if (at(s, j, j) != 0) {
                    swap(i, j);
                    break;
                }
        }
        if (at(s, i, i) == 0) {
            for (std::size_t j = i + 1; j < 3; ++j)
                if (at(s, i, j) != 0) {
                    add(i, j, 1);
                    break;
                }
        }
        if (at(s, i, i) == 0)
            continue;
        for (std::size_t j = i + 1; j < 3; ++j)
            if (at(s, i, j) != 0)
                add(j, i, -at(s, i, j) / at(s, i, i));
    }
    return {{at(s, 0, 0), at(s, 1, 1), at(s, 2, 2)}, p};
}

inline Integer squarefree_part(Integer n)
{
    Integer out = n < 0 ? -1 : 1;
    if (n < 0)
        n = -n;
    for (Integer p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2)
            out *= p;
    }
    return out * n;
}

inline bool is_square_mod(const Integer& r, Integer n)
{
    // n squarefree and positive: r must be a square modulo each odd prime factor.
    for (Integer p = 2; n > 1; ++p) {
        if (p * p > n)
            p = n;
        if (n % p != 0)
            continue;
        n /= p;
        if (p == 2)
            continue;
        Integer rr = r % p;
        if (rr < 0)
            rr += p;
        if (rr != 0 && mpz_legendre(rr.get_mpz_t(), p.get_mpz_t()) != 1)
            return false;
    }
    return true;
}

// Legendre: a x^2 + b y^2 + c z^2 = 0 over Q for nonzero rationals.
inline bool ternary_isotropic(const std::vector<Rational>& diag)
{
    std::vector<Integer> a;
    for (const auto& d : diag)
        a.push_back(squarefree_part(Integer(d.get_num() * d.get_den())));
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < 3 && !changed; ++i)
            for (std::size_t j = i + 1; j < 3 && !changed; ++j) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), a[i].get_mpz_t(), a[j].get_mpz_t());
                if (g > 1) {
                    const std::size_t k = 3 - i - j;
                    a[i] /= g;
                    a[j] /= g;
                    a[k] = squarefree_part(a[k] * g);
                    changed = true;
                }
            }
    }
    if ((a[0] > 0 && a[1] > 0 && a[2] > 0) || (a[0] < 0 && a[1] < 0 && a[2] < 0))
        return false;
    for (std::size_t i = 0; i < 3; ++i) {
        const Integer r = -a[(i + 1) % 3] * a[(i + 2) % 3];
        const Integer n = abs(a[i]);
        if (n > 1 && !is_square_mod(r, n))
            return false;
    }
    return true;
}

inline std::optional<Assignment> small_isotropic_vector(const std::vector<Rational>& diag, int bound)
{
    for (int b = 1; b <= bound; ++b)
        for (int x = -b; x <= b; ++x)
            for (int y = -b; y <= b; ++y)
                for (int z = -b; z <= b; ++z) {
                    if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != b)
                        continue;
                    if (diag[0] * x * x + diag[1] * y * y + diag[2] * z * z == 0)
                        return Assignment{x, y, z};
                }
    return std::nullopt;
}

} // namespace detail

/// Decides the square-zero question for the degree-2 piece of ring / ideal.
inline SquareZeroResult square_zero_analysis(const GroebnerBasis& basis)
{
    const RingPtr& ring = basis.ring();
    if (!is_finite_quotient(basis))
        throw Error(ErrorKind::InfiniteQuotient, "the quotient is not finite-dimensional");

    SquareZeroResult result;
    const auto w = standard_monomials(basis, 2);
    const std::size_t m = w.size();
    result.degree2_dimension = static_cast<int>(m);
    if (m == 0) {
        result.method = "degree-2 piece is zero";
        return result;
    }

    const MonomialIndex deg4(standard_monomials(basis, 4));
    const RingPtr params = make_ring(m, "a");
    std::vector<Polynomial> q(deg4.size(), Polynomial(params));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = i; l < m; ++l) {
            const Polynomial prod = Polynomial::monomial(ring, w[i] + w[l], 1);
            const auto coords = deg4.coordinates(normal_form(prod, basis));
            Exponents e(m, 0);
            ++e[i];
            ++e[l];
            for (std::size_t j = 0; j < coords.size(); ++j)
                q[j].add_term(e, coords[j] * (i == l ? 1 : 2));
        }
    std::vector<Polynomial> forms;
    for (auto& f : q)
        if (!f.is_zero())
            forms.push_back(std::move(f));

    const auto to_witness = [&](const detail::Assignment& a) {
        Polynomial p(ring);
        for (std::size_t i = 0; i < m; ++i)
            p.add_term(w[i], a[i]);
        return p;
    };

    if (forms.empty()) {
        result.exists = true;
        result.solution_cone_dimension = static_cast<int>(m);
        result.witness = Polynomial::monomial(ring, w.front(), 1);
        result.method = "every degree-2 square vanishes";
        return result;
    }

    const IdealPresentation coeff_ideal(params, forms);
    const int d = hilbert_series_quotient(coeff_ideal).pole_order_at_one();
    result.solution_cone_dimension = d;

    if (d == 0) {
        result.method = "square-zero locus is {0} over C";
        return result;
    }
    if (d == 1) {
        result.method = "rational elimination over finitely many lines";
        if (auto a = detail::projective_point(params, forms)) {
            result.exists = true;
            result.witness = to_witness(*a);
        }
        return result;
    }
    if (m == 3 && d == 2) {
        std::vector<RationalVector> rows;
        const MonomialIndex quad(monomials_of_degree(*params, 4));
        for (const auto& f : forms)
            rows.push_back(quad.coordinates(f));
        if (matrix_rank(rows, quad.size()) >= 2) {
            // Two independent conics share a rational line; cut it with a plane.
            result.exists = true;
            result.method = "common rational line";
            for (const auto& c : std::vector<std::vector<Rational>>{{1, 2, 3}, {1, -1, 2}, {2, 3, -5}, {1, 0, 0}}) {
                auto cut = forms;
                cut.push_back(Polynomial::linear(params, c));
                if (hilbert_series_quotient(IdealPresentation(params, cut)).pole_order_at_one() != 1)
                    continue;
                if (auto a = detail::projective_point(params, cut)) {
                    result.witness = to_witness(*a);
                    break;
                }
            }
            return result;
        }
        const auto [diag, p] = detail::diagonalize3(detail::quadratic_form_matrix(forms.front()));
        std::optional<detail::Assignment> y;
        if (diag[0] == 0 || diag[1] == 0 || diag[2] == 0) {
            result.method = "degenerate conic";
            y = detail::Assignment{diag[0] == 0 ? 1 : 0, diag[0] != 0 && diag[1] == 0 ? 1 : 0,
                                   diag[0] != 0 && diag[1] != 0 ? 1 : 0};
        } else {
            result.method = "conic, Legendre's criterion";
            if (!detail::ternary_isotropic(diag))
                return result;
            y = detail::small_isotropic_vector(diag, 40);
        }
        result.exists = true;
        if (y) {
            detail::Assignment a(3, 0);
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c)
                    a[r] += p[r * 3 + c] * (*y)[c];
            result.witness = to_witness(a);
        }
        return result;
    }
    throw Error(ErrorKind::Unsupported, "square-zero locus of dimension " + std::to_string(d) + " in " +
                                            std::to_string(m) + " parameters is outside the decidable range");
}

inline SquareZeroResult square_zero_analysis(const IdealPresentation& i) { return square_zero_analysis(i.groebner()); }

inline bool square_zero_degree2(const IdealPresentation& i) { return square_zero_analysis(i).exists; }

} // namespace cohomone::poly

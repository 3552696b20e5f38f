#pragma once

// Pair model for torus-family diagrams: pairs (f, g) of polynomials on t with
// alpha | f - g, compared against S(t*) (x)_R S(t*) where R is the subring
// fixed by the reflection in ker(alpha).

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohomone/polyring/groebner.hpp"
#include "cohomone/polyring/linalg.hpp"

namespace cohomone {

class TorusFamilySpec {
public:
    TorusFamilySpec(std::size_t k, std::vector<Rational> alpha) : k_(k), alpha_(std::move(alpha))
    {
        if (k_ == 0)
            throw Error(ErrorKind::Validation, "torus rank must be positive");
        if (alpha_.size() != k_)
            throw Error(ErrorKind::Validation, "alpha needs exactly k coordinates");
        Rational norm = 0;
        for (const auto& a : alpha_)
            norm += a * a;
        if (norm == 0)
            throw Error(ErrorKind::Validation, "alpha must be nonzero");
        ring_ = poly::make_ring(k_, "x");
        alpha_poly_ = poly::Polynomial::linear(ring_, alpha_);
        for (std::size_t i = 0; i < k_; ++i) {
            poly::Polynomial img = poly::Polynomial::variable(ring_, i);
            img -= alpha_poly_ * (2 * alpha_[i] / norm);
            twist_images_.push_back(std::move(img));
        }
        alpha_basis_.emplace(poly::groebner_basis(ring_, {alpha_poly_}));
    }

    std::size_t k() const { return k_; }
    const std::vector<Rational>& alpha() const { return alpha_; }
    const poly::RingPtr& ring() const { return ring_; }
    const poly::Polynomial& alpha_polynomial() const { return alpha_poly_; }

    /// The reflection fixing ker(alpha) and negating alpha, applied to f.
    poly::Polynomial twist(const poly::Polynomial& f) const
    {
        check(f);
        return f.evaluate(ring_, twist_images_);
    }

    bool divisible_by_alpha(const poly::Polynomial& h) const
    {
        check(h);
        return poly::normal_form(h, *alpha_basis_).is_zero();
    }

private:
    void check(const poly::Polynomial& f) const
    {
        if (!poly::same_ring(f.ring(), ring_))
            throw Error(ErrorKind::VariableMismatch, "polynomial is not on the torus coordinates x1..x" +
                                                         std::to_string(k_));
    }

    std::size_t k_;
    std::vector<Rational> alpha_;
    poly::RingPtr ring_;
    poly::Polynomial alpha_poly_{nullptr};
    std::vector<poly::Polynomial> twist_images_;
    std::optional<poly::GroebnerBasis> alpha_basis_;
};

inline bool is_member(const poly::Polynomial& f, const poly::Polynomial& g, const TorusFamilySpec& spec)
{
    return spec.divisible_by_alpha(f - g);
}

class GkmPair {
public:
    GkmPair(poly::Polynomial f, poly::Polynomial g, const TorusFamilySpec& spec)
        : f_(std::move(f)), g_(std::move(g)), spec_(&spec)
    {
        if (!is_member(f_, g_, spec))
            throw Error(ErrorKind::Validation, "alpha does not divide f - g");
    }

    const poly::Polynomial& f() const { return f_; }
    const poly::Polynomial& g() const { return g_; }

    friend GkmPair operator+(const GkmPair& a, const GkmPair& b) { return {a.f_ + b.f_, a.g_ + b.g_, *a.spec_}; }
    friend GkmPair operator*(const GkmPair& a, const GkmPair& b) { return {a.f_ * b.f_, a.g_ * b.g_, *a.spec_}; }

private:
    poly::Polynomial f_;
    poly::Polynomial g_;
    const TorusFamilySpec* spec_;
};

namespace detail {

inline std::vector<poly::Polynomial> monomial_basis(const poly::RingPtr& ring, int poly_degree)
{
    std::vector<poly::Polynomial> out;
    for (const auto& e : poly::monomials_of_degree(*ring, 2 * poly_degree))
        out.push_back(poly::Polynomial::monomial(ring, e, 1));
    return out;
}

inline poly::MonomialIndex monomial_index(const poly::RingPtr& ring, int poly_degree)
{
    return poly::MonomialIndex(poly::monomials_of_degree(*ring, 2 * poly_degree));
}

/// Basis of the twist-invariant polynomials of the given polynomial degree.
inline std::vector<poly::Polynomial> invariant_basis(const TorusFamilySpec& spec, int poly_degree)
{
    const auto basis = monomial_basis(spec.ring(), poly_degree);
    const auto index = monomial_index(spec.ring(), poly_degree);
    // Columns are basis monomials; rows are coordinates of m - twist(m).
    std::vector<poly::RationalVector> rows(index.size(), poly::RationalVector(basis.size(), 0));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto v = index.coordinates(basis[c] - spec.twist(basis[c]));
        for (std::size_t r = 0; r < v.size(); ++r)
            rows[r][c] = v[r];
    }
    std::vector<poly::Polynomial> out;
    for (const auto& x : poly::kernel(rows, basis.size())) {
        poly::Polynomial p(spec.ring());
        for (std::size_t c = 0; c < x.size(); ++c)
            p += basis[c] * x[c];
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace detail

/// Dimension of the pair space in the given cohomological degree: 2 dim S_d
/// minus dim (S/alpha)_d, d = degree/2. Odd degrees give 0 and a warning.
inline std::size_t graded_dimension(const TorusFamilySpec& spec, int degree,
                                    std::vector<std::string>* warnings = nullptr)
{
    if (degree < 0)
        throw Error(ErrorKind::Validation, "negative degree");
    if (degree % 2) {
        if (warnings)
            warnings->push_back("degree " + std::to_string(degree) + " is odd; the pair space is zero there");
        return 0;
    }
    const int d = degree / 2;
    const auto index = detail::monomial_index(spec.ring(), d);
    poly::RowEchelon image(index.size());
    if (d > 0)
        for (const auto& m : detail::monomial_basis(spec.ring(), d - 1))
            image.insert(index.coordinates(m * spec.alpha_polynomial()));
    const std::size_t quotient = index.size() - image.rank();
    return 2 * index.size() - quotient;
}

/// Dimension of the twist-invariant polynomials in the given cohomological degree.
inline std::size_t invariant_dimension(const TorusFamilySpec& spec, int degree)
{
    if (degree < 0 || degree % 2)
        return 0;
    return detail::invariant_basis(spec, degree / 2).size();
}

struct TensorCertificate {
    int degree = 0;
    std::string kind; // membership, well-definedness, surjectivity, injectivity
    std::string detail;
};

struct TensorCheckResult {
    bool ok = true;
    int degree_bound = 0;
    std::optional<TensorCertificate> certificate;
};

using TensorMap =
    std::function<std::pair<poly::Polynomial, poly::Polynomial>(const poly::Polynomial&, const poly::Polynomial&)>;

/// m1 (x) m2 -> (m1 m2, m1 twist(m2))
inline TensorMap standard_tensor_map(const TorusFamilySpec& spec)
{
    return [&spec](const poly::Polynomial& a, const poly::Polynomial& b) {
        return std::make_pair(a * b, a * spec.twist(b));
    };
}

/// Degree by degree up to `degree_bound`, checks that the map lands in the pair
/// space, kills the balancing relations (m1 r) (x) m2 - m1 (x) (r m2), and is
/// bijective from the balanced tensor product onto the pair space.
inline TensorCheckResult check_tensor_isomorphism(const TorusFamilySpec& spec, int degree_bound,
                                                  const TensorMap& map = {})
{
    const TensorMap phi = map ? map : standard_tensor_map(spec);
    TensorCheckResult result;
    result.degree_bound = degree_bound;
    const auto fail = [&](int degree, std::string kind, std::string detail) {
        result.ok = false;
        result.certificate = TensorCertificate{degree, std::move(kind), std::move(detail)};
        return result;
    };

    const int top = degree_bound / 2;
    std::vector<std::vector<poly::Polynomial>> s;
    for (int i = 0; i <= top; ++i)
        s.push_back(detail::monomial_basis(spec.ring(), i));

    // Algebra generators of R by degree: invariants not spanned by products of
    // lower-degree generators with invariants.
    std::vector<std::vector<poly::Polynomial>> r_basis{{poly::Polynomial::constant(spec.ring(), 1)}};
    std::vector<std::pair<int, poly::Polynomial>> r_gens;
    for (int e = 1; e <= top; ++e) {
        r_basis.push_back(detail::invariant_basis(spec, e));
        const auto index = detail::monomial_index(spec.ring(), e);
        poly::RowEchelon decomposable(index.size());
        for (const auto& [ge, g] : r_gens)
            for (const auto& r : r_basis[static_cast<std::size_t>(e - ge)])
                decomposable.insert(index.coordinates(g * r));
        for (const auto& r : r_basis.back())
            if (decomposable.insert(index.coordinates(r)))
                r_gens.emplace_back(e, r);
    }

    for (int d = 0; d <= top; ++d) {
        const int degree = 2 * d;
        // Domain coordinates: blocks (i, a, b) with a in S_i and b in S_{d-i}.
        std::vector<std::size_t> offset(static_cast<std::size_t>(d) + 2, 0);
        for (int i = 0; i <= d; ++i)
            offset[static_cast<std::size_t>(i) + 1] =
                offset[static_cast<std::size_t>(i)] + s[static_cast<std::size_t>(i)].size() *
                                                          s[static_cast<std::size_t>(d - i)].size();
        const std::size_t domain = offset.back();
        std::vector<poly::MonomialIndex> idx;
        for (int i = 0; i <= d; ++i)
            idx.push_back(detail::monomial_index(spec.ring(), i));
        const auto& target = idx[static_cast<std::size_t>(d)];
        const std::size_t n = target.size();

        // Images of the domain basis and the membership check.
        std::vector<poly::RationalVector> images;
        images.reserve(domain);
        for (int i = 0; i <= d; ++i)
            for (const auto& a : s[static_cast<std::size_t>(i)])
                for (const auto& b : s[static_cast<std::size_t>(d - i)]) {
                    auto [f, g] = phi(a, b);
                    if (!is_member(f, g, spec))
                        return fail(degree, "membership",
                                    "image of " + a.to_string() + " (x) " + b.to_string() + " is not a pair");
                    auto v = target.coordinates(f);
                    auto w = target.coordinates(g);
                    v.insert(v.end(), w.begin(), w.end());
                    images.push_back(std::move(v));
                }

        // Balancing relations and their images.
        poly::RowEchelon relations(domain);
        for (const auto& [e, r] : r_gens) {
            for (int i = 0; i + e <= d; ++i) {
                const int j = d - e - i;
                const auto& si = s[static_cast<std::size_t>(i)];
                const auto& sj = s[static_cast<std::size_t>(j)];
                for (std::size_t ai = 0; ai < si.size(); ++ai)
                    for (std::size_t bi = 0; bi < sj.size(); ++bi) {
                        poly::RationalVector rel(domain, 0);
                        // (r m1) (x) m2 sits in block i + e; m1 (x) (r m2) in block i.
                        const auto left = idx[static_cast<std::size_t>(i + e)].coordinates(r * si[ai]);
                        for (std::size_t t = 0; t < left.size(); ++t)
                            if (left[t] != 0)
                                rel[offset[static_cast<std::size_t>(i + e)] + t * sj.size() + bi] += left[t];
                        const auto right = idx[static_cast<std::size_t>(d - i)].coordinates(r * sj[bi]);
                        const std::size_t width = s[static_cast<std::size_t>(d - i)].size();
                        for (std::size_t t = 0; t < right.size(); ++t)
                            if (right[t] != 0)
                                rel[offset[static_cast<std::size_t>(i)] + ai * width + t] -= right[t];
                        poly::RationalVector img(2 * n, 0);
                        for (std::size_t c = 0; c < domain; ++c)
                            if (rel[c] != 0)
                                for (std::size_t t = 0; t < 2 * n; ++t)
                                    if (images[c][t] != 0)
                                        img[t] += rel[c] * images[c][t];
                        if (std::any_of(img.begin(), img.end(), [](const Rational& x) { return x != 0; }))
                            return fail(degree, "well-definedness",
                                        "(" + r.to_string() + " * " + si[ai].to_string() + ") (x) " +
                                            sj[bi].to_string() + " and its balanced partner have different images");
                        relations.insert(std::move(rel));
                    }
            }
        }

        const std::size_t rank = poly::matrix_rank(images, 2 * n);
        const std::size_t pairs = graded_dimension(spec, degree);
        const std::size_t quotient = domain - relations.rank();
        if (rank != pairs)
            return fail(degree, "surjectivity",
                        "image has dimension " + std::to_string(rank) + ", pair space " + std::to_string(pairs));
        if (quotient != rank)
            return fail(degree, "injectivity",
                        "tensor product has dimension " + std::to_string(quotient) + ", image " + std::to_string(rank));
    }
    return result;
}

} // namespace cohomone

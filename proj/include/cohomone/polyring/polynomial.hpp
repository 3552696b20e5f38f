#pragma once

// Multivariate polynomials over Q on named generators of positive even
// cohomological degree.

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohomone/error.hpp"
#include "cohomone/numeric.hpp"

namespace cohomone::poly {

struct Variable {
    std::string name;
    int degree = 2;

    bool operator==(const Variable&) const = default;
};

using Exponents = std::vector<int>;

class Ring {
public:
    explicit Ring(std::vector<Variable> vars) : vars_(std::move(vars))
    {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const auto& v = vars_[i];
            if (v.name.empty() || !(std::isalpha(static_cast<unsigned char>(v.name[0])) || v.name[0] == '_'))
                throw Error(ErrorKind::Validation, "bad variable name \"" + v.name + "\"");
            for (char c : v.name)
                if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                    throw Error(ErrorKind::Validation, "bad variable name \"" + v.name + "\"");
            if (v.degree <= 0 || v.degree % 2 != 0)
                throw Error(ErrorKind::Validation, "variable " + v.name + " must have positive even degree");
            for (std::size_t j = 0; j < i; ++j)
                if (vars_[j].name == v.name)
                    throw Error(ErrorKind::Validation, "duplicate variable " + v.name);
        }
    }

    std::size_t size() const { return vars_.size(); }
    const Variable& var(std::size_t i) const { return vars_[i]; }
    const std::vector<Variable>& variables() const { return vars_; }

    std::optional<std::size_t> index_of(const std::string& name) const
    {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name)
                return i;
        return std::nullopt;
    }

    /// Cohomological degree: sum of exponent times generator degree.
    int degree_of(const Exponents& e) const
    {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            d += e[i] * vars_[i].degree;
        return d;
    }

    bool operator==(const Ring&) const = default;

private:
    std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<Variable> vars) { return std::make_shared<const Ring>(std::move(vars)); }

/// Generators x1..xk of degree 2, optionally followed by extra named degree-2 generators.
inline RingPtr make_ring(std::size_t k, const std::string& prefix, const std::vector<std::string>& extra = {})
{
    std::vector<Variable> v;
    for (std::size_t i = 1; i <= k; ++i)
        v.push_back({prefix + std::to_string(i), 2});
    for (const auto& e : extra)
        v.push_back({e, 2});
    return make_ring(std::move(v));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

enum class MonomialOrder { Grevlex, Lex };

inline const char* to_string(MonomialOrder o) { return o == MonomialOrder::Grevlex ? "grevlex" : "lex"; }

/// Grevlex compares cohomological degree first, then the last differing
/// exponent (smaller wins). Lex compares exponents left to right.
inline std::strong_ordering compare_monomials(const Ring& ring, const Exponents& a, const Exponents& b,
                                              MonomialOrder order)
{
    if (order == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }
    const int da = ring.degree_of(a);
    const int db = ring.degree_of(b);
    if (da != db)
        return da <=> db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

inline bool divides(const Exponents& a, const Exponents& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b)
{
    Exponents c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = std::max(a[i], b[i]);
    return c;
}

inline Exponents gcd(const Exponents& a, const Exponents& b)
{
    Exponents c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = std::min(a[i], b[i]);
    return c;
}

inline Exponents operator+(const Exponents& a, const Exponents& b)
{
    Exponents c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

inline Exponents operator-(const Exponents& a, const Exponents& b)
{
    Exponents c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] - b[i];
    return c;
}

/// All exponent vectors of the given cohomological degree, in lex-descending order.
inline std::vector<Exponents> monomials_of_degree(const Ring& ring, int degree)
{
    std::vector<Exponents> out;
    if (degree < 0)
        return out;
    Exponents e(ring.size(), 0);
    const auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == ring.size()) {
            if (left == 0)
                out.push_back(e);
            return;
        }
        const int step = ring.var(i).degree;
        for (int p = left / step; p >= 0; --p) {
            e[i] = p;
            self(self, i + 1, left - p * step);
        }
        e[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

class Polynomial {
public:
    using Terms = std::map<Exponents, Rational>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(const RingPtr& ring, const Rational& c)
    {
        Polynomial p(ring);
        p.add_term(Exponents(ring->size(), 0), c);
        return p;
    }

    static Polynomial variable(const RingPtr& ring, std::size_t i)
    {
        Exponents e(ring->size(), 0);
        e.at(i) = 1;
        return monomial(ring, e, 1);
    }

    static Polynomial variable(const RingPtr& ring, const std::string& name)
    {
        auto i = ring->index_of(name);
        if (!i)
            throw Error(ErrorKind::VariableMismatch, "unknown variable " + name);
        return variable(ring, *i);
    }

    static Polynomial monomial(const RingPtr& ring, const Exponents& e, const Rational& c)
    {
        if (e.size() != ring->size())
            throw Error(ErrorKind::VariableMismatch, "exponent vector has the wrong length");
        Polynomial p(ring);
        p.add_term(e, c);
        return p;
    }

    /// Linear form sum coeffs[i] * x_i.
    static Polynomial linear(const RingPtr& ring, const std::vector<Rational>& coeffs)
    {
        if (coeffs.size() > ring->size())
            throw Error(ErrorKind::VariableMismatch, "too many coefficients for a linear form");
        Polynomial p(ring);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Exponents e(ring->size(), 0);
            e[i] = 1;
            p.add_term(e, coeffs[i]);
        }
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& e, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Cohomological degree if every term agrees; nullopt otherwise. The zero
    /// polynomial is homogeneous of every degree and reports nullopt.
    std::optional<int> homogeneous_degree() const
    {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            const int de = ring_->degree_of(e);
            if (d && *d != de)
                return std::nullopt;
            d = de;
        }
        return d;
    }

    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    /// Highest cohomological degree of a term; -1 for zero.
    int max_degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, ring_->degree_of(e));
        return d;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        a.check(b);
        Polynomial p(a.ring_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                p.add_term(ea + eb, ca * cb);
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s)
    {
        Polynomial p(a.ring_);
        if (s == 0)
            return p;
        for (const auto& [e, c] : a.terms_)
            p.terms_.emplace(e, c * s);
        return p;
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

    Polynomial pow(unsigned n) const
    {
        Polynomial r = constant(ring_, 1);
        for (unsigned i = 0; i < n; ++i)
            r = r * *this;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }

    /// Replace generator i by q (q in the same ring).
    Polynomial substitute(std::size_t i, const Polynomial& q) const
    {
        check(q);
        Polynomial out(ring_);
        std::vector<Polynomial> powers{constant(ring_, 1)};
        for (const auto& [e, c] : terms_) {
            while (powers.size() <= static_cast<std::size_t>(e[i]))
                powers.push_back(powers.back() * q);
            Exponents rest = e;
            rest[i] = 0;
            out += monomial(ring_, rest, c) * powers[static_cast<std::size_t>(e[i])];
        }
        return out;
    }

    /// Maps into `target`, sending generator i to images[i].
    Polynomial evaluate(const RingPtr& target, const std::vector<Polynomial>& images) const
    {
        if (images.size() != ring_->size())
            throw Error(ErrorKind::VariableMismatch, "substitution needs one image per generator");
        Polynomial out(target);
        for (const auto& [e, c] : terms_) {
            Polynomial t = constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i])
                    t = t * images[i].pow(static_cast<unsigned>(e[i]));
            out += t;
        }
        return out;
    }

    /// Terms sorted from largest to smallest in `order`.
    std::vector<std::pair<Exponents, Rational>> sorted_terms(MonomialOrder order) const
    {
        std::vector<std::pair<Exponents, Rational>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
            return compare_monomials(*ring_, x.first, y.first, order) == std::strong_ordering::greater;
        });
        return v;
    }

    /// Human-readable form, terms in descending grevlex order: "x1^2 - u^2".
    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : sorted_terms(MonomialOrder::Grevlex)) {
            Rational mag = abs(c);
            if (first)
                s += sgn(c) < 0 ? "-" : "";
            else
                s += sgn(c) < 0 ? " - " : " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i])
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += ring_->var(i).name;
                if (e[i] > 1)
                    mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                s += cohomone::to_string(mag);
            else if (mag == 1)
                s += mono;
            else
                s += cohomone::to_string(mag) + "*" + mono;
        }
        return s;
    }

private:
    void check(const Polynomial& o) const
    {
        if (!same_ring(ring_, o.ring_))
            throw Error(ErrorKind::VariableMismatch, "polynomials live in different rings");
    }

    RingPtr ring_;
    Terms terms_;
};

} // namespace cohomone::poly

#pragma once

// Dense exact linear algebra over Q, used for graded-piece rank computations.

#include <cstddef>
#include <map>
#include <vector>

#include "cohomone/numeric.hpp"
#include "cohomone/polyring/polynomial.hpp"

namespace cohomone::poly {

using RationalVector = std::vector<Rational>;

/// Incremental row echelon form: rows are inserted one at a time and reduced
/// against the pivots found so far.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t columns) : columns_(columns) {}

    std::size_t columns() const { return columns_; }
    std::size_t rank() const { return pivots_.size(); }

    /// Returns true if the row was independent of the rows inserted before.
    bool insert(RationalVector row)
    {
        reduce_in_place(row);
        for (std::size_t c = 0; c < columns_; ++c) {
            if (row[c] == 0)
                continue;
            const Rational inv = 1 / row[c];
            for (std::size_t k = c; k < columns_; ++k)
                row[k] *= inv;
            pivots_.emplace(c, std::move(row));
            return true;
        }
        return false;
    }

    bool contains(RationalVector row) const
    {
        reduce_in_place(row);
        for (const auto& v : row)
            if (v != 0)
                return false;
        return true;
    }

private:
    void reduce_in_place(RationalVector& row) const
    {
        for (const auto& [c, pivot] : pivots_) {
            if (row[c] == 0)
                continue;
            const Rational f = row[c];
            for (std::size_t k = c; k < columns_; ++k)
                if (pivot[k] != 0)
                    row[k] -= f * pivot[k];
        }
    }

    std::size_t columns_;
    std::map<std::size_t, RationalVector> pivots_;
};

inline std::size_t matrix_rank(const std::vector<RationalVector>& rows, std::size_t columns)
{
    RowEchelon e(columns);
    for (const auto& r : rows)
        e.insert(r);
    return e.rank();
}

/// Basis of {x : A x = 0} for A given by rows.
inline std::vector<RationalVector> kernel(const std::vector<RationalVector>& rows, std::size_t columns)
{
    std::vector<RationalVector> m = rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& v : m[r])
            v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t k = 0; k < columns; ++k)
                m[i][k] -= f * m[r][k];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free])
            continue;
        RationalVector x(columns, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            x[pivot_cols[i]] = -m[i][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Coordinates of polynomials in a fixed monomial basis.
class MonomialIndex {
public:
    explicit MonomialIndex(std::vector<Exponents> monomials) : monomials_(std::move(monomials))
    {
        for (std::size_t i = 0; i < monomials_.size(); ++i)
            index_.emplace(monomials_[i], i);
    }

    std::size_t size() const { return monomials_.size(); }
    const std::vector<Exponents>& monomials() const { return monomials_; }

    /// Throws if p has a term outside the basis.
    RationalVector coordinates(const Polynomial& p) const
    {
        RationalVector v(monomials_.size(), 0);
        for (const auto& [e, c] : p.terms()) {
            auto it = index_.find(e);
            if (it == index_.end())
                throw Error(ErrorKind::Validation, "term outside the monomial basis");
            v[it->second] = c;
        }
        return v;
    }

private:
    std::vector<Exponents> monomials_;
    std::map<Exponents, std::size_t> index_;
};

} // namespace cohomone::poly

#pragma once

// Abstract compact connected Lie group types: simple factors plus a central
// torus. Every quantity here (rank, dimension, Weyl order, invariant degrees)
// is invariant under isogeny, so SO(3) and SU(2), or U(n) and SU(n) x T1, are
// the same object for this library.

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "cohomone/error.hpp"
#include "cohomone/numeric.hpp"

namespace cohomone {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

inline const char* family_name(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E";
    case Family::E7: return "E";
    case Family::E8: return "E";
    case Family::F4: return "F";
    case Family::G2: return "G";
    }
    return "?";
}

struct SimpleType {
    Family family = Family::A;
    int rank_param = 1;

    auto operator<=>(const SimpleType&) const = default;
};

inline bool is_exceptional(Family f)
{
    return f == Family::E6 || f == Family::E7 || f == Family::E8 || f == Family::F4 || f == Family::G2;
}

inline int exceptional_rank(Family f)
{
    switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
    }
}

/// B1 and C1 are accepted as aliases of A1; D2 (= A1 x A1) and D3 (= A3) are
/// accepted with their D-series degree data.
inline bool is_legal(const SimpleType& s)
{
    switch (s.family) {
    case Family::A:
    case Family::B:
    case Family::C: return s.rank_param >= 1;
    case Family::D: return s.rank_param >= 2;
    default: return s.rank_param == exceptional_rank(s.family);
    }
}

/// Degrees of a free generating set of Weyl-invariant polynomials.
inline std::vector<int> invariant_degrees(const SimpleType& s)
{
    if (!is_legal(s))
        throw Error(ErrorKind::Validation, "illegal simple type");
    const int n = s.rank_param;
    std::vector<int> d;
    switch (s.family) {
    case Family::A:
        for (int i = 2; i <= n + 1; ++i)
            d.push_back(i);
        break;
    case Family::B:
    case Family::C:
        for (int i = 1; i <= n; ++i)
            d.push_back(2 * i);
        break;
    case Family::D:
        for (int i = 1; i < n; ++i)
            d.push_back(2 * i);
        d.push_back(n);
        break;
    case Family::E6: d = {2, 5, 6, 8, 9, 12}; break;
    case Family::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
    case Family::E8: d = {2, 8, 12, 14, 18, 20, 24, 30}; break;
    case Family::F4: d = {2, 6, 8, 12}; break;
    case Family::G2: d = {2, 6}; break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline int dimension(const SimpleType& s)
{
    int dim = 0;
    for (int d : invariant_degrees(s))
        dim += 2 * d - 1;
    return dim;
}

inline std::string to_string(const SimpleType& s)
{
    return std::string(family_name(s.family)) + std::to_string(s.rank_param);
}

/// A type-A factor up to the low-rank coincidences B1 = C1 = A1 and D3 = A3.
/// Returns the A-rank, or 0 if the factor is not of type A.
inline int type_a_rank(const SimpleType& s)
{
    switch (s.family) {
    case Family::A: return s.rank_param;
    case Family::B:
    case Family::C: return s.rank_param == 1 ? 1 : 0;
    case Family::D: return s.rank_param == 3 ? 3 : 0;
    default: return 0;
    }
}

class CompactGroupType {
public:
    CompactGroupType() = default;

    CompactGroupType(std::vector<SimpleType> factors, int torus_rank)
        : factors_(std::move(factors)), torus_rank_(torus_rank)
    {
        if (torus_rank_ < 0)
            throw Error(ErrorKind::Validation, "negative torus rank");
        for (const auto& f : factors_)
            if (!is_legal(f))
                throw Error(ErrorKind::Validation, "illegal simple factor " + cohomone::to_string(f));
        std::sort(factors_.begin(), factors_.end());
    }

    static CompactGroupType trivial() { return {}; }
    static CompactGroupType torus(int k) { return CompactGroupType({}, k); }
    static CompactGroupType simple(Family f, int n) { return CompactGroupType({SimpleType{f, n}}, 0); }

    const std::vector<SimpleType>& simple_factors() const { return factors_; }
    int torus_rank() const { return torus_rank_; }

    int rank() const
    {
        int r = torus_rank_;
        for (const auto& f : factors_)
            r += f.rank_param;
        return r;
    }

    int dimension() const
    {
        int d = torus_rank_;
        for (const auto& f : factors_)
            d += cohomone::dimension(f);
        return d;
    }

    /// Degrees of the simple part followed by rank-many 1s for the torus, sorted.
    std::vector<int> invariant_degrees() const
    {
        std::vector<int> out(static_cast<std::size_t>(torus_rank_), 1);
        for (const auto& f : factors_) {
            auto d = cohomone::invariant_degrees(f);
            out.insert(out.end(), d.begin(), d.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    Integer weyl_order() const
    {
        Integer w = 1;
        for (const auto& f : factors_)
            for (int d : cohomone::invariant_degrees(f))
                w *= d;
        return w;
    }

    bool is_trivial() const { return factors_.empty() && torus_rank_ == 0; }
    bool is_torus() const { return factors_.empty(); }

    friend CompactGroupType operator*(const CompactGroupType& a, const CompactGroupType& b)
    {
        auto f = a.factors_;
        f.insert(f.end(), b.factors_.begin(), b.factors_.end());
        return CompactGroupType(std::move(f), a.torus_rank_ + b.torus_rank_);
    }

    bool operator==(const CompactGroupType&) const = default;

    /// Canonical literal: simple factors joined by 'x', torus appended as "+T<k>",
    /// the trivial group rendered as "1".
    std::string to_string() const
    {
        if (is_trivial())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i)
                s += 'x';
            s += cohomone::to_string(factors_[i]);
        }
        if (torus_rank_ > 0) {
            if (!s.empty())
                s += '+';
            s += "T" + std::to_string(torus_rank_);
        }
        return s;
    }

private:
    std::vector<SimpleType> factors_;
    int torus_rank_ = 0;
};

inline std::string to_string(const CompactGroupType& g) { return g.to_string(); }

inline Integer weyl_order(const CompactGroupType& g) { return g.weyl_order(); }
inline int rank(const CompactGroupType& g) { return g.rank(); }
inline int dimension(const CompactGroupType& g) { return g.dimension(); }
inline std::vector<int> invariant_degrees(const CompactGroupType& g) { return g.invariant_degrees(); }

/// Parses literals such as "B2", "A2+T1", "C1xC1", "T2" or "1".
/// Factors are separated by '+' or 'x'; whitespace is ignored.
inline CompactGroupType parse_group(std::string_view text)
{
    std::vector<SimpleType> factors;
    int torus = 0;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    const auto fail = [&](std::size_t pos, const std::string& msg) -> CompactGroupType {
        throw Error(ErrorKind::Parse, "group literal \"" + std::string(text) + "\", position " +
                                          std::to_string(pos) + ": " + msg,
                    pos);
    };

    skip_ws();
    if (i == text.size())
        return fail(i, "empty group literal");
    if (text[i] == '1') {
        ++i;
        skip_ws();
        if (i != text.size())
            return fail(i, "the trivial group \"1\" cannot be combined with other factors");
        return CompactGroupType::trivial();
    }

    for (;;) {
        skip_ws();
        if (i == text.size())
            return fail(i, "expected a factor");
        const std::size_t start = i;
        const char letter = text[i];
        if (letter == 'Z' || letter == 'O')
            return fail(start, "non-connected groups are not supported");
        if (std::string_view("ABCDEFGT").find(letter) == std::string_view::npos)
            return fail(start, std::string("unknown factor '") + letter + "'");
        ++i;
        std::size_t digits = i;
        while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
            ++digits;
        if (digits == i)
            return fail(i, "expected a rank after the family letter");
        if (digits - i > 6)
            return fail(i, "rank too large");
        const int n = std::stoi(std::string(text.substr(i, digits - i)));
        i = digits;

        if (letter == 'T') {
            torus += n;
        } else {
            SimpleType s;
            switch (letter) {
            case 'A': s = {Family::A, n}; break;
            case 'B': s = {Family::B, n}; break;
            case 'C': s = {Family::C, n}; break;
            case 'D': s = {Family::D, n}; break;
            case 'E':
                if (n == 6)
                    s = {Family::E6, 6};
                else if (n == 7)
                    s = {Family::E7, 7};
                else if (n == 8)
                    s = {Family::E8, 8};
                else
                    return fail(start, "E-series rank must be 6, 7 or 8");
                break;
            case 'F':
                if (n != 4)
                    return fail(start, "F-series rank must be 4");
                s = {Family::F4, 4};
                break;
            case 'G':
                if (n != 2)
                    return fail(start, "G-series rank must be 2");
                s = {Family::G2, 2};
                break;
            }
            if (!is_legal(s))
                return fail(start, "rank out of range for family " + std::string(1, letter));
            factors.push_back(s);
        }

        skip_ws();
        if (i == text.size())
            break;
        if (text[i] != '+' && text[i] != 'x')
            return fail(i, std::string("unexpected character '") + text[i] + "'");
        ++i;
    }
    return CompactGroupType(std::move(factors), torus);
}

} // namespace cohomone

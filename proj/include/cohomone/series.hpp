#pragma once

// Poincare series as exact rational functions N(t) / prod (1 - t^d) with
// arbitrary-precision integer numerators.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohomone/error.hpp"
#include "cohomone/lie_data.hpp"
#include "cohomone/numeric.hpp"

namespace cohomone {

/// Dense integer polynomial in one variable t; coefficient i multiplies t^i.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs)
    {
        for (long v : coeffs)
            c_.emplace_back(v);
        trim();
    }

    static IntPoly constant(const Integer& v) { return IntPoly(std::vector<Integer>{v}); }
    static IntPoly monomial(const Integer& v, int exponent)
    {
        std::vector<Integer> c(static_cast<std::size_t>(exponent) + 1, 0);
        c.back() = v;
        return IntPoly(std::move(c));
    }
    /// 1 - t^d
    static IntPoly one_minus_t_pow(int d)
    {
        std::vector<Integer> c(static_cast<std::size_t>(d) + 1, 0);
        c.front() += 1;
        c.back() -= 1;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return c_; }
    Integer coefficient(int i) const
    {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return 0;
        return c_[static_cast<std::size_t>(i)];
    }

    Integer value_at_one() const
    {
        Integer s = 0;
        for (const auto& v : c_)
            s += v;
        return s;
    }

    bool is_palindromic() const
    {
        for (std::size_t i = 0, j = c_.size(); i < j--; ++i)
            if (c_[i] != c_[j])
                return false;
        return true;
    }

    bool has_nonnegative_coefficients() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Integer& v) { return sgn(v) >= 0; });
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b)
    {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a) { return IntPoly::constant(-1) * a; }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b)
    {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            c[i] -= b.c_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(c));
    }

    bool operator==(const IntPoly&) const = default;

    /// Exact quotient a / b over the integers, if it exists.
    friend std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b)
    {
        if (b.is_zero())
            throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
        if (a.is_zero())
            return IntPoly{};
        if (a.degree() < b.degree())
            return std::nullopt;
        std::vector<Integer> rem = a.c_;
        std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
        const Integer& lead = b.c_.back();
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            Integer& top = rem[static_cast<std::size_t>(i + b.degree())];
            if (top == 0)
                continue;
            if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
                return std::nullopt;
            Integer f = top / lead;
            q[static_cast<std::size_t>(i)] = f;
            for (int j = 0; j <= b.degree(); ++j)
                rem[static_cast<std::size_t>(i + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
        for (const auto& v : rem)
            if (v != 0)
                return std::nullopt;
        return IntPoly(std::move(q));
    }

    /// Human-readable form in the variable `var`, ascending powers: "1 + t^2 + 2t^4".
    std::string to_string(const std::string& var = "t") const
    {
        if (is_zero())
            return "0";
        std::string s;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            Integer mag = abs(c_[i]);
            if (first)
                s += sgn(c_[i]) < 0 ? "-" : "";
            else
                s += sgn(c_[i]) < 0 ? " - " : " + ";
            first = false;
            if (i == 0) {
                s += mag.get_str();
                continue;
            }
            if (mag != 1)
                s += mag.get_str();
            s += var;
            if (i > 1)
                s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Integer> c_;
};

namespace detail {

inline int moebius(int n)
{
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

/// Phi_m = prod_{d | m} (t^d - 1)^{mu(m/d)}
inline IntPoly cyclotomic(int m)
{
    IntPoly up = IntPoly::constant(1);
    IntPoly down = IntPoly::constant(1);
    for (int d = 1; d <= m; ++d) {
        if (m % d)
            continue;
        const int mu = moebius(m / d);
        if (mu == 1)
            up = up * -IntPoly::one_minus_t_pow(d);
        else if (mu == -1)
            down = down * -IntPoly::one_minus_t_pow(d);
    }
    return *divide_exact(up, down);
}

inline std::vector<int> multiset_max_union(const std::vector<int>& a, const std::vector<int>& b)
{
    std::map<int, int> count;
    for (int d : a)
        ++count[d];
    std::map<int, int> cb;
    for (int d : b)
        ++cb[d];
    for (auto [d, n] : cb)
        count[d] = std::max(count[d], n);
    std::vector<int> out;
    for (auto [d, n] : count)
        out.insert(out.end(), static_cast<std::size_t>(n), d);
    return out;
}

inline std::vector<int> multiset_difference(const std::vector<int>& a, const std::vector<int>& b)
{
    std::map<int, int> count;
    for (int d : a)
        ++count[d];
    for (int d : b)
        --count[d];
    std::vector<int> out;
    for (auto [d, n] : count)
        if (n > 0)
            out.insert(out.end(), static_cast<std::size_t>(n), d);
    return out;
}

inline IntPoly product_one_minus(const std::vector<int>& ds)
{
    IntPoly p = IntPoly::constant(1);
    for (int d : ds)
        p = p * IntPoly::one_minus_t_pow(d);
    return p;
}

} // namespace detail

/// N(t) / prod_i (1 - t^{d_i}). Always held in canonical form; see canonicalize().
class PoincareSeries {
public:
    PoincareSeries() = default;
    explicit PoincareSeries(IntPoly numerator, std::vector<int> denominator = {})
        : num_(std::move(numerator)), den_(std::move(denominator))
    {
        for (int d : den_)
            if (d <= 0)
                throw Error(ErrorKind::Validation, "denominator exponents must be positive");
        canonicalize();
    }

    static PoincareSeries zero() { return {}; }
    static PoincareSeries one() { return PoincareSeries(IntPoly::constant(1)); }
    /// 1 / (1 - t^d)
    static PoincareSeries geometric(int d) { return PoincareSeries(IntPoly::constant(1), {d}); }

    const IntPoly& numerator() const { return num_; }
    /// Exponents d of the (1 - t^d) denominator factors, ascending.
    const std::vector<int>& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b)
    {
        auto den = detail::multiset_max_union(a.den_, b.den_);
        auto n = a.num_ * detail::product_one_minus(detail::multiset_difference(den, a.den_)) +
                 b.num_ * detail::product_one_minus(detail::multiset_difference(den, b.den_));
        return PoincareSeries(std::move(n), std::move(den));
    }

    friend PoincareSeries operator-(const PoincareSeries& a) { return PoincareSeries(-a.num_, a.den_); }
    friend PoincareSeries operator-(const PoincareSeries& a, const PoincareSeries& b) { return a + (-b); }

    friend PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b)
    {
        auto den = a.den_;
        den.insert(den.end(), b.den_.begin(), b.den_.end());
        return PoincareSeries(a.num_ * b.num_, std::move(den));
    }

    /// Exact quotient. Fails with DivisionByZero for b = 0, and with Unsupported
    /// when the quotient has a pole that is not at a root of unity.
    friend PoincareSeries operator/(const PoincareSeries& a, const PoincareSeries& b)
    {
        if (b.is_zero())
            throw Error(ErrorKind::DivisionByZero, "division by the zero series");
        IntPoly top = a.num_ * detail::product_one_minus(b.den_);
        std::vector<int> den = a.den_;
        if (auto q = divide_exact(top, b.num_))
            return PoincareSeries(std::move(*q), std::move(den));

        // Peel cyclotomic factors off b's numerator; Phi_m is replaced by
        // (1 - t^m) in the denominator and the cofactor moves upstairs.
        IntPoly rest = b.num_;
        for (int m = 1; rest.degree() > 0; ++m) {
            if (m > 4 * (b.num_.degree() + 1) * (b.num_.degree() + 1))
                break;
            const IntPoly phi = detail::cyclotomic(m);
            while (rest.degree() > 0) {
                auto q = divide_exact(rest, phi);
                if (!q)
                    break;
                rest = std::move(*q);
                top = top * *divide_exact(-IntPoly::one_minus_t_pow(m), phi);
                top = -top;
                den.push_back(m);
            }
        }
        if (rest.degree() == 0) {
            if (auto q = divide_exact(top, rest))
                return PoincareSeries(std::move(*q), std::move(den));
        }
        throw Error(ErrorKind::Unsupported, "quotient is not of the form N(t)/prod(1 - t^d)");
    }

    /// Mathematical equality (cross-multiplication), independent of representation.
    friend bool operator==(const PoincareSeries& a, const PoincareSeries& b)
    {
        return a.num_ * detail::product_one_minus(b.den_) == b.num_ * detail::product_one_minus(a.den_);
    }

    bool structurally_equal(const PoincareSeries& other) const
    {
        return num_ == other.num_ && den_ == other.den_;
    }

    std::optional<IntPoly> as_polynomial() const
    {
        if (den_.empty())
            return num_;
        return std::nullopt;
    }

    /// Order of the pole at t = 1: denominator factors minus the multiplicity of
    /// t = 1 as a root of the numerator.
    int pole_order_at_one() const
    {
        if (is_zero())
            throw Error(ErrorKind::Validation, "pole order of the zero series");
        int order = static_cast<int>(den_.size());
        IntPoly n = num_;
        const IntPoly one_minus_t = IntPoly::one_minus_t_pow(1);
        while (auto q = divide_exact(n, one_minus_t)) {
            n = std::move(*q);
            --order;
        }
        return order;
    }

    /// Power-series coefficients of t^0 .. t^up_to.
    std::vector<Integer> taylor_coefficients(int up_to) const
    {
        if (up_to < 0)
            throw Error(ErrorKind::Validation, "negative truncation degree");
        std::vector<Integer> c(static_cast<std::size_t>(up_to) + 1, 0);
        for (int i = 0; i <= std::min(up_to, num_.degree()); ++i)
            c[static_cast<std::size_t>(i)] = num_.coefficient(i);
        for (int d : den_)
            for (std::size_t i = static_cast<std::size_t>(d); i < c.size(); ++i)
                c[i] += c[i - static_cast<std::size_t>(d)];
        return c;
    }

    /// "1 / ((1 - t^4)(1 - t^8))", "(1 + t^2) / (1 - t^2)", or a bare polynomial.
    std::string to_string() const
    {
        if (den_.empty())
            return num_.to_string();
        std::string top = num_.to_string();
        const bool single_term =
            std::count_if(num_.coefficients().begin(), num_.coefficients().end(),
                          [](const Integer& v) { return v != 0; }) == 1 &&
            sgn(num_.coefficients().back()) > 0;
        if (!single_term)
            top = "(" + top + ")";
        std::string bottom;
        for (int d : den_)
            bottom += "(1 - t" + (d == 1 ? std::string() : "^" + std::to_string(d)) + ")";
        if (den_.size() > 1)
            bottom = "(" + bottom + ")";
        return top + " / " + bottom;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json num = nlohmann::json::array();
        for (const auto& v : num_.coefficients())
            num.push_back(integer_to_json(v));
        return {{"numerator", num}, {"denominator", den_}};
    }

private:
    // Cancels whole (1 - t^d) factors, largest d first; a factor that does not
    // cancel is lowered to (1 - t^e), e | d, when the numerator absorbs
    // (1 - t^d)/(1 - t^e). Repeats until stable.
    void canonicalize()
    {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        std::sort(den_.begin(), den_.end());
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t idx = den_.size(); idx-- > 0;) {
                const int d = den_[idx];
                if (auto q = divide_exact(num_, IntPoly::one_minus_t_pow(d))) {
                    num_ = std::move(*q);
                    den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(idx));
                    changed = true;
                    break;
                }
                for (int e = 1; e < d && !changed; ++e) {
                    if (d % e != 0)
                        continue;
                    auto block = divide_exact(IntPoly::one_minus_t_pow(d), IntPoly::one_minus_t_pow(e));
                    if (auto q = divide_exact(num_, *block)) {
                        num_ = std::move(*q);
                        den_[idx] = e;
                        changed = true;
                    }
                }
                if (changed)
                    break;
            }
            std::sort(den_.begin(), den_.end());
        }
    }

    IntPoly num_;
    std::vector<int> den_;
};

inline PoincareSeries operator*(const IntPoly& p, const PoincareSeries& s) { return PoincareSeries(p) * s; }

/// Series of H^*(BG): prod over invariant degrees d of 1/(1 - t^{2d}).
inline PoincareSeries classifying_series(const CompactGroupType& g)
{
    std::vector<int> den;
    for (int d : g.invariant_degrees())
        den.push_back(2 * d);
    return PoincareSeries(IntPoly::constant(1), std::move(den));
}

inline std::optional<IntPoly> as_polynomial(const PoincareSeries& s) { return s.as_polynomial(); }
inline int pole_order_at_one(const PoincareSeries& s) { return s.pole_order_at_one(); }
inline std::vector<Integer> taylor_coefficients(const PoincareSeries& s, int up_to)
{
    return s.taylor_coefficients(up_to);
}

/// Coefficients of even powers t^0, t^2, ..., t^{2k} of a polynomial: graded
/// dimensions of an evenly graded space.
inline std::vector<Integer> even_graded_dimensions(const IntPoly& p)
{
    std::vector<Integer> out;
    for (int i = 0; i <= p.degree(); i += 2)
        out.push_back(p.coefficient(i));
    return out;
}

} // namespace cohomone

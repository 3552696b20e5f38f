#pragma once

#include <algorithm>
#include <vector>

#include "cohomone/error.hpp"
#include "cohomone/numeric.hpp"

namespace cohomone::poly {

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n)
{
    if (n < 0)
        n = -n;
    static const Integer limit("1000000000000");
    if (n > limit)
        throw Error(ErrorKind::Unsupported, "coefficient too large for rational-root enumeration");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x)
{
    Rational v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        v = v * x + coeffs[i];
    return v;
}

} // namespace detail

/// Distinct rational roots of sum coeffs[i] x^i, ascending. The zero polynomial
/// is rejected since every value is a root.
inline std::vector<Rational> rational_roots(std::vector<Rational> coeffs)
{
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
    if (coeffs.empty())
        throw Error(ErrorKind::Validation, "rational roots of the zero polynomial");

    std::vector<Rational> roots;
    std::size_t low = 0;
    while (coeffs[low] == 0)
        ++low;
    if (low > 0) {
        roots.emplace_back(0);
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (coeffs.size() == 1)
        return roots;

    Integer den_lcm = 1;
    for (const auto& c : coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    for (const auto& c : coeffs) {
        Rational s = c * den_lcm;
        z.push_back(s.get_num());
    }

    for (const auto& p : detail::positive_divisors(z.front()))
        for (const auto& q : detail::positive_divisors(z.back()))
            for (int sign : {1, -1}) {
                Rational x(p * sign, q);
                x.canonicalize();
                if (detail::evaluate(coeffs, x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace cohomone::poly

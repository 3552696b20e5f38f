#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include <json.hpp>

namespace cohomone {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

inline bool fits_int64(const Integer& z)
{
    static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return z >= lo && z <= hi;
}

inline std::int64_t to_int64(const Integer& z)
{
    return std::stoll(z.get_str());
}

/// Integers within int64 serialize as JSON numbers, larger ones as decimal strings.
inline nlohmann::json integer_to_json(const Integer& z)
{
    if (fits_int64(z))
        return to_int64(z);
    return z.get_str();
}

inline nlohmann::json rational_to_json(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1)
        return integer_to_json(c.get_num());
    return c.get_str();
}

} // namespace cohomone

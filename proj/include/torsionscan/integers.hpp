#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace torsionscan {

// All lattice arithmetic is exact. Intermediate entries of Smith/Hermite
// eliminations can outgrow any fixed width even for tiny inputs, so the
// whole toolkit runs on arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;

inline Int dot(const IntVector& a, const IntVector& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Int gcd_of(const IntVector& v)
{
    Int g = 0;
    for (const Int& x : v)
        g = boost::multiprecision::gcd(g, x);
    return g;
}

// gcd of coordinates is 1 (the zero vector is not primitive)
inline bool is_primitive(const IntVector& v)
{
    return gcd_of(v) == 1;
}

// floor division, divisor must be positive
inline Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

inline std::string to_string(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

} // namespace torsionscan

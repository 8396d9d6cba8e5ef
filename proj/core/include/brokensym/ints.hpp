#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bsym {

// All homological arithmetic is exact; Int never overflows.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

// Quotient minimizing |a - q*b|; ties broken toward zero.
inline Int rounded_div(const Int& a, const Int& b)
{
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs_int(r) > abs_int(b))
        q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

// Floor quotient, used for canonical Hermite reduction.
inline Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// Nonnegative residue mod m > 0.
inline Int pos_mod(const Int& a, const Int& m)
{
    Int r = a % m;
    if (r < 0)
        r += abs_int(m);
    return r;
}

}  // namespace bsym

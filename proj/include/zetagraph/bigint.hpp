#ifndef ZETAGRAPH_BIGINT_HPP
#define ZETAGRAPH_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace zetagraph {

// Exact arbitrary-precision integer. Everything spectral in this library is
// computed over Int; no floating point enters any invariant.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline std::string int_str(const Int& x) { return x.str(); }

}  // namespace zetagraph

#endif

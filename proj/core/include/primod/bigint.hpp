#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace primod {

/// Exact arbitrary-precision integer. Primorials, reconstruction sums and
/// basis coefficients overflow 64 bits well before the level cap is reached,
/// so every value-sized quantity in the library uses this type.
using BigInt = boost::multiprecision::cpp_int;

/// Floor of the integer square root.
inline BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace primod

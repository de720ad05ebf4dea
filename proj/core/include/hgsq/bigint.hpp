#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgsq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// Number of integrality assertions that have failed in this process. Stays
/// zero unless a formula evaluation produced a non-integer count.
std::uint64_t integrality_failures() noexcept;

/// Converts an exact rational that must be an integer. Throws
/// Error(NonIntegralResult) and bumps integrality_failures() otherwise.
BigInt require_integer(const BigRational& value, const char* what);

}  // namespace hgsq

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagtilt {

// Exact integer used for weights, multiplicities and dimensions.
using Int = boost::multiprecision::cpp_int;

// Narrow an Int that is known to be a small non-negative count.
std::size_t to_size(const Int& value);

// Narrow to int64, throwing when the value does not fit.
std::int64_t to_int64(const Int& value);

std::string to_string(const Int& value);

// Binomial coefficient C(n, k); zero when k < 0 or n < k (for n >= 0).
Int binomial(const Int& n, long k);

}  // namespace flagtilt

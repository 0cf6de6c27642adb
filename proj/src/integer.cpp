#include "flagtilt/integer.hpp"

#include <limits>

#include "flagtilt/error.hpp"

namespace flagtilt {

std::size_t to_size(const Int& value) {
  if (value < 0 || value > Int(std::numeric_limits<std::size_t>::max())) {
    throw Error("integer " + value.str() + " is not a valid size");
  }
  return value.convert_to<std::size_t>();
}

std::int64_t to_int64(const Int& value) {
  if (value < Int(std::numeric_limits<std::int64_t>::min()) ||
      value > Int(std::numeric_limits<std::int64_t>::max())) {
    throw Error("integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

std::string to_string(const Int& value) { return value.str(); }

Int binomial(const Int& n, long k) {
  if (k < 0) return 0;
  if (n < 0) {
    // C(n, k) = (-1)^k C(k - n - 1, k)
    Int b = binomial(Int(k) - n - 1, k);
    return (k % 2 == 0) ? b : Int(-b);
  }
  if (n < k) return 0;
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

}  // namespace flagtilt

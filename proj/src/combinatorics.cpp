#include "dicke/combinatorics.hpp"

#include <stdexcept>

namespace dicke {

BigInt binomial(int n, int r) {
  if (n < 0) {
    throw std::invalid_argument("binomial with negative row");
  }
  if (r < 0 || r > n) {
    return 0;
  }
  if (r > n - r) {
    r = n - r;
  }
  BigInt result = 1;
  for (int i = 0; i < r; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

}  // namespace dicke

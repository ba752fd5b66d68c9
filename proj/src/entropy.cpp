#include "bosonic/entropy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bosonic {

double g_entropy(double n) {
  if (!std::isfinite(n) || n < 0.0) {
    throw std::domain_error(
        "g_entropy: mean photon number must be finite and nonnegative, got " +
        std::to_string(n));
  }
  if (n == 0.0) {
    return 0.0;
  }
  // (n+1) log2(n+1) - n log2(n) = [log(1+n) + n log(1 + 1/n)] / log(2).
  // Both summands grow slowly, so no cancellation occurs at large n, and
  // log1p keeps full precision at small n.
  return (std::log1p(n) + n * std::log1p(1.0 / n)) / std::numbers::ln2;
}

double g_inverse(double h) {
  if (!std::isfinite(h) || h < 0.0) {
    throw std::domain_error(
        "g_inverse: entropy must be finite and nonnegative, got " +
        std::to_string(h));
  }
  if (h == 0.0) {
    return 0.0;
  }
  // g(n) > log2(n + 1) > h at n = 2^h, so [0, 2^h] brackets the root.
  double hi = std::exp2(h);
  if (!std::isfinite(hi)) {
    throw std::domain_error(
        "g_inverse: entropy target too large for a representable photon "
        "number");
  }
  double lo = 0.0;
  for (int it = 0; it < 600; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;  // interval exhausted at double precision
    }
    (g_entropy(mid) < h ? lo : hi) = mid;
    if (hi - lo <= 1e-10 * lo) {
      break;  // relative tolerance reached
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace bosonic

#pragma once

namespace bosonic {

// Von Neumann entropy, in bits, of a thermal bosonic state with mean photon
// number n >= 0:
//
//   g(n) = (n + 1) log2(n + 1) - n log2(n)
//
// with g(0) = 0. Evaluated through log1p in a rearranged form that avoids the
// large-argument cancellation of the textbook expression, so it is accurate
// from n ~ 1e-300 up to n ~ 1e300. Throws std::domain_error for negative or
// non-finite input.
double g_entropy(double n);

// Inverse of g_entropy on [0, inf): returns the mean photon number n with
// g_entropy(n) = h, to a relative tolerance of 1e-10 (bracketed bisection; the
// bracket [0, 2^h] always contains the root). Throws std::domain_error for
// negative, non-finite, or unrepresentably large input.
double g_inverse(double h);

}  // namespace bosonic

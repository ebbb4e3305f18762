#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qdepth {

// All correctness-bearing arithmetic is arbitrary precision: sweeps evaluate
// binomials like binom(n+t, t+1) with n in the hundreds, far past 64 bits.
using ExactInt = boost::multiprecision::cpp_int;

// Always normalized: denominator > 0, lowest terms. Comparisons are exact
// integer arithmetic, never floating point.
using ExactRatio = boost::multiprecision::cpp_rational;

// num/den with the sign moved into the numerator; rejects den = 0. The
// underlying rational type insists on a positive denominator at
// construction, so build ratios through this.
ExactRatio make_ratio(ExactInt num, ExactInt den);

inline const char* kVersion = "1.0.0";

// Generalized binomial coefficient via the falling factorial:
//   binom(a, k) = a(a-1)...(a-k+1) / k!  for k >= 0 and any signed a,
//   binom(a, k) = 0                      for k < 0.
// For a >= 0 this is the usual binomial, zero when k > a. The negative-a
// case satisfies binom(-a, k) = (-1)^k binom(a+k-1, k).
ExactInt binom(long long a, long long k);

// ceil(n/d) for n >= 1, d >= 1; anything else is rejected.
long long ceil_div(long long n, long long d);

// Alternating Chu-Vandermonde variants. Each returns whether the two sides
// agree when both are evaluated exactly.
//
//   sum_{j=0}^{k} (-1)^{k-j} binom(d-j, k-j) binom(n, j)      == binom(n-d+k-1, k)
bool identity_magic(long long n, long long d, long long k);

//   sum_{l=0}^{k} (-1)^{k-l} binom(n+l-1, l) binom(d, k-l)    == binom(n-d+k-1, k)
bool identity_magic2(long long n, long long d, long long k);

}  // namespace qdepth

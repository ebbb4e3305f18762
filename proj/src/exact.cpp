#include "qdepth/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdepth {

ExactInt binom(long long a, long long k) {
  if (k < 0) return 0;
  if (a >= 0) {
    if (k > a) return 0;
    k = std::min(k, a - k);  // symmetry, keeps the loop short
  }
  ExactInt acc = 1;
  // Multiply-then-divide: after step i the running value is binom(a, i), so
  // every division is exact.
  for (long long i = 1; i <= k; ++i) {
    acc *= a - i + 1;
    acc /= i;
  }
  return acc;
}

ExactRatio make_ratio(ExactInt num, ExactInt den) {
  if (den == 0) throw std::invalid_argument("make_ratio: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return ExactRatio(std::move(num), std::move(den));
}

long long ceil_div(long long n, long long d) {
  if (n < 1) throw std::invalid_argument("ceil_div: n must be >= 1");
  if (d < 1) throw std::invalid_argument("ceil_div: d must be >= 1");
  return (n + d - 1) / d;
}

bool identity_magic(long long n, long long d, long long k) {
  ExactInt lhs = 0;
  for (long long j = 0; j <= k; ++j) {
    ExactInt term = binom(d - j, k - j) * binom(n, j);
    if ((k - j) & 1)
      lhs -= term;
    else
      lhs += term;
  }
  return lhs == binom(n - d + k - 1, k);
}

bool identity_magic2(long long n, long long d, long long k) {
  ExactInt lhs = 0;
  for (long long l = 0; l <= k; ++l) {
    ExactInt term = binom(n + l - 1, l) * binom(d, k - l);
    if ((k - l) & 1)
      lhs -= term;
    else
      lhs += term;
  }
  return lhs == binom(n - d + k - 1, k);
}

}  // namespace qdepth

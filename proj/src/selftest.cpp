#include "qdepth/selftest.hpp"

#include "qdepth/exact.hpp"
#include "qdepth/monomial.hpp"
#include "qdepth/power.hpp"
#include "qdepth/qdepth_core.hpp"

namespace qdepth {

namespace {

struct Suite {
  SuiteResult result;
  explicit Suite(std::string name) { result.name = std::move(name); }
  void check(bool ok) {
    ++result.checks;
    if (!ok) ++result.failures;
  }
};

SuiteResult identity_alternating(int bound) {
  Suite s("identity_alternating");
  for (int n = 0; n <= bound; ++n)
    for (int d = 0; d <= n; ++d)
      for (int k = 0; k <= d; ++k) s.check(identity_magic(n, d, k));
  return s.result;
}

SuiteResult identity_multiset(int bound) {
  Suite s("identity_multiset");
  for (int n = 0; n <= bound; ++n)
    for (int d = 0; d <= bound; ++d)
      for (int k = 0; k <= bound; ++k) s.check(identity_magic2(n, d, k));
  return s.result;
}

SuiteResult binomial_laws(int bound) {
  Suite s("binomial_laws");
  for (long long a = -bound; a <= bound; ++a)
    for (long long k = 1; k <= bound; ++k)
      s.check(binom(a, k) == binom(a - 1, k - 1) + binom(a - 1, k));
  for (long long a = 0; a <= bound; ++a)
    for (long long k = 0; k <= bound; ++k) {
      ExactInt neg = binom(-a, k);
      ExactInt via = binom(a + k - 1, k);
      s.check(neg == ((k & 1) ? -via : via));
    }
  for (long long a = 0; a <= bound; ++a)
    for (long long k = 0; k <= a; ++k) s.check(binom(a, k) == binom(a, a - k));
  return s.result;
}

SuiteResult oracle_alpha(int grid) {
  Suite s("oracle_alpha");
  for (int n = 2; n * 1 <= grid; ++n)
    for (int t = 1; n * t <= grid; ++t) {
      PolarizationResult pol = polarize(maximal_power_ideal(n, t));
      QuotientPresentation q(pol.ideal, MonomialIdeal::unit(pol.ideal.nvars()));
      AlphaVector alpha = alpha_enumerate(q);
      for (int k = 0; k <= n * t; ++k)
        s.check(alpha.counts[static_cast<size_t>(k)] == alpha_power(n, t, k));
    }
  return s.result;
}

SuiteResult oracle_qdepth(int grid) {
  Suite s("oracle_qdepth");
  for (int n = 2; n * 1 <= grid; ++n)
    for (int t = 1; n * t <= grid; ++t) {
      QDepthResult slow = qdepth_general(MonomialIdeal::zero(n), maximal_power_ideal(n, t));
      QDepthResult fast = qdepth_power_fast(n, t);
      s.check(slow.qdepth == fast.qdepth);
      s.check(slow.polarized_qdepth == fast.polarized_qdepth);
      s.check(slow.added_vars == fast.added_vars);
    }
  return s.result;
}

SuiteResult b_closed_form() {
  Suite s("b_closed_form");
  for (int n = 1; n <= 40; ++n)
    for (int t = 1; t <= 6; ++t)
      for (int k = 1; k <= 10; ++k)
        for (int m = 1; m <= k; ++m) s.check(b_sum(n, m, t, k) == b_closed(n, m, t, k));
  return s.result;
}

SuiteResult b_positivity_low_k() {
  Suite s("b_positivity_low_k");
  for (int n = 1; n <= 60; ++n)
    for (int m = 1; m <= 8; ++m)
      for (int t = 1; t <= 8; ++t)
        for (int k = 1; k <= 8; ++k) {
          if (n < m * (t + 1) + k - 1) continue;
          if (k == 1) s.check(b_sum(n, m, t, 1) >= 0);
          if (m <= k + t) s.check(b_sum(n, m, t, k) >= 0);
        }
  return s.result;
}

SuiteResult b_positivity_window() {
  Suite s("b_positivity_window");
  for (int t = 3; t <= 6; ++t)
    for (int m = t + 3; m <= t + 6; ++m)
      for (int n = m * (t + 1) + 1; n <= (m + 1) * (t + 1); ++n)
        s.check(b_sum(n, m, t, 2) >= 0);
  return s.result;
}

SuiteResult edge_witness() {
  Suite s("edge_witness");
  for (int n = 2; n <= 150; ++n)
    for (int t = 1; t <= 12; ++t) {
      PowerParams p(n, t);
      ExactInt e = beta_edge_plus(n, t);
      s.check(e == binom(n + t, t + 1) - ExactInt(p.m + 1) * binom(n + t - 1, t));
      s.check(e < 0);
    }
  return s.result;
}

}  // namespace

std::vector<SuiteResult> selftest(bool full) {
  const int identity_bound = full ? 30 : 15;
  const int law_bound = full ? 60 : 30;
  const int oracle_grid = full ? 12 : 9;

  std::vector<SuiteResult> out;
  out.push_back(identity_alternating(identity_bound));
  out.push_back(identity_multiset(identity_bound));
  out.push_back(binomial_laws(law_bound));
  out.push_back(oracle_alpha(oracle_grid));
  out.push_back(oracle_qdepth(oracle_grid));
  if (full) {
    out.push_back(b_closed_form());
    out.push_back(b_positivity_low_k());
    out.push_back(b_positivity_window());
    out.push_back(edge_witness());
  }
  return out;
}

}  // namespace qdepth

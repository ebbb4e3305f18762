#include "qdepth/power.hpp"

#include <utility>
#include <vector>

namespace qdepth {

namespace {

void check_power_args(int n, int t) {
  if (n < 2) throw std::invalid_argument("power formulas: n must be >= 2");
  if (t < 1) throw std::invalid_argument("power formulas: t must be >= 1");
}

// binom(n+l-1, l) for l = 0..t-1, the multiset weights shared by every
// power-formula sum
std::vector<ExactInt> quotient_weights(int n, int t) {
  std::vector<ExactInt> w(static_cast<size_t>(t));
  for (int l = 0; l < t; ++l) w[static_cast<size_t>(l)] = binom(n + l - 1, l);
  return w;
}

// Visits beta_k^d(I_t) for k = 0, 1, ... until sink returns false or k
// reaches d. Incremental form of beta_ideal_power: with A = nt-d and
// c = nt-n-d,
//   H_k = binom(A+k-1, k),  G_j = binom(c+j-1, j),
//   beta_k = H_k - sum_l w_l G_{k-l},
// and both H and G extend with one exact multiply-divide per step.
template <class Sink>
void visit_ideal_beta_row(int n, int t, int d, const std::vector<ExactInt>& w, Sink&& sink) {
  const long long nt = static_cast<long long>(n) * t;
  const long long A = nt - d;
  const long long c = nt - n - d;
  ExactInt H = 1;
  std::vector<ExactInt> G;
  G.reserve(static_cast<size_t>(d) + 1);
  G.emplace_back(1);
  for (int k = 0; k <= d; ++k) {
    if (k > 0) {
      H *= A + k - 1;
      H /= k;
      ExactInt g = G[static_cast<size_t>(k - 1)];
      g *= c + k - 1;
      g /= k;
      G.push_back(std::move(g));
    }
    ExactInt beta = H;
    for (int l = 0; l < t && l <= k; ++l) beta -= w[static_cast<size_t>(l)] * G[static_cast<size_t>(k - l)];
    if (!sink(k, std::move(beta))) return;
  }
}

}  // namespace

PowerParams::PowerParams(int n_, int t_) : n(n_), t(t_), m(0) {
  check_power_args(n_, t_);
  m = static_cast<int>(ceil_div(n_, t_ + 1));
}

ExactInt alpha_power(int n, int t, int k) {
  check_power_args(n, t);
  if (k < 0 || k > static_cast<long long>(n) * t)
    throw std::invalid_argument("alpha_power: k out of range 0..nt");
  ExactInt acc = 0;
  for (int j = 0; j < t; ++j)
    acc += binom(static_cast<long long>(n) * t - n - j, k - j) * binom(n + j - 1, j);
  return acc;
}

ExactInt beta_quotient_power(int n, int t, int d, int k) {
  check_power_args(n, t);
  if (k < 0 || k > d || d > static_cast<long long>(n) * t)
    throw std::invalid_argument("beta_quotient_power: need 0 <= k <= d <= nt");
  const long long c = static_cast<long long>(n) * t - n - d;
  ExactInt acc = 0;
  for (int l = 0; l < t; ++l) acc += binom(n + l - 1, l) * binom(c + k - l - 1, k - l);
  return acc;
}

ExactInt beta_ideal_power(int n, int t, int d, int k) {
  check_power_args(n, t);
  if (k < 0 || k > d || d > static_cast<long long>(n) * t)
    throw std::invalid_argument("beta_ideal_power: need 0 <= k <= d <= nt");
  return binom(static_cast<long long>(n) * t - d + k - 1, k) - beta_quotient_power(n, t, d, k);
}

ExactInt beta_edge_plus(int n, int t) {
  PowerParams p(n, t);
  ExactInt acc = binom(n - p.m + t - 1, t + 1);
  for (int l = 0; l < t; ++l) {
    ExactInt term = binom(n + l - 1, l) * binom(p.m + 1, t + 1 - l);
    if ((t - l) & 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

ExactInt beta_edge(int n, int t, int k) {
  PowerParams p(n, t);
  const long long d = static_cast<long long>(n) * t - n + p.m;
  if (k < t + 1 || k > d)
    throw std::invalid_argument("beta_edge: need t+1 <= k <= nt-n+m");
  ExactInt acc = binom(n - p.m + k - 1, k);
  for (int l = 0; l < t; ++l) {
    ExactInt term = binom(n + l - 1, l) * binom(p.m, k - l);
    if ((k - l) & 1)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

ExactInt eqi2_sum(int n, int t, int k) {
  PowerParams p(n, t);
  const long long d = static_cast<long long>(n) * t - n + p.m;
  if (k < t + 1 || k > d)
    throw std::invalid_argument("eqi2_sum: need t+1 <= k <= nt-n+m");
  ExactInt acc = 0;
  for (int j = 0; j <= k - t; ++j) {
    ExactInt term = binom(n + k - j - 1, k - j) * binom(p.m, j);
    if (j & 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

ExactInt b_sum(int n, int m, int t, int k) {
  if (n < 1 || m < 1 || t < 1 || k < 1)
    throw std::invalid_argument("b_sum: all arguments must be >= 1");
  ExactInt acc = 0;
  for (int j = 0; j <= k; ++j) {
    ExactInt term = binom(k + t, j) * binom(n - j, m - j);
    if (j & 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

ExactInt b_sum(const BSumParams& p) { return b_sum(p.n, p.m, p.t, p.k); }

ExactInt b_closed(int n, int m, int t, int k) {
  if (m < 1 || k < 1 || t < 1 || n < 1)
    throw std::invalid_argument("b_closed: all arguments must be >= 1");
  if (m > k) throw std::invalid_argument("b_closed: closed form requires m <= k");
  return binom(n - t - k, m);
}

ExactInt b_closed(const BSumParams& p) { return b_closed(p.n, p.m, p.t, p.k); }

ExactInt f_term(int n, int m, int t, int k, int j) {
  if (j < 0 || j > k) throw std::invalid_argument("f_term: need 0 <= j <= k");
  return binom(k + t, j) * binom(n - j, m - j);
}

bool f_ratio_ge_one(int n, int m, int t, int k, int j) {
  if (j < 0 || j + 1 > k) throw std::invalid_argument("f_ratio_ge_one: need 0 <= j <= k-1");
  return f_term(n, m, t, k, j) >= f_term(n, m, t, k, j + 1);
}

ExactRatio f_ratio_exact(int n, int m, int t, int k, int j) {
  if (j < 0 || j + 1 > k) throw std::invalid_argument("f_ratio_exact: need 0 <= j <= k-1");
  return make_ratio(ExactInt(j + 1) * (n - j), ExactInt(k + t - j) * (m - j));
}

ExactRatio phi(int m, int k, int t, int j) {
  if (j < 0) throw std::invalid_argument("phi: need j >= 0");
  return ExactRatio(m + k + t - 2 * j - 1) +
         make_ratio(ExactInt(m - k) * (k + t + 1), ExactInt(j + 1));
}

QDepthResult qdepth_power_fast(int n, int t) {
  check_power_args(n, t);
  const int nt = n * t;
  const std::vector<ExactInt> w = quotient_weights(n, t);

  std::vector<bool> feasible(static_cast<size_t>(nt) + 1, false);
  for (int d = 0; d <= nt; ++d) {
    bool ok = true;
    visit_ideal_beta_row(n, t, d, w, [&ok](int, ExactInt beta) {
      if (beta < 0) {
        ok = false;
        return false;
      }
      return true;
    });
    feasible[static_cast<size_t>(d)] = ok;
  }
  int best = 0;
  for (int d = 0; d <= nt; ++d)
    if (feasible[static_cast<size_t>(d)]) best = d;

  QDepthResult res;
  res.polarized_qdepth = best;
  res.added_vars = nt - n;
  res.qdepth = best - (nt - n);
  for (int d = 0; d < best; ++d)
    if (!feasible[static_cast<size_t>(d)]) res.gap_below_max = true;
  visit_ideal_beta_row(n, t, best, w, [&res](int, ExactInt beta) {
    res.certificate.push_back(std::move(beta));
    return true;
  });
  if (best < nt) {
    visit_ideal_beta_row(n, t, best + 1, w, [&res, best](int k, ExactInt beta) {
      if (beta < 0) {
        res.witness = BetaWitness{best + 1, k, std::move(beta)};
        return false;
      }
      return true;
    });
  }
  return res;
}

bool criterion_b(int n, int t) {
  PowerParams p(n, t);
  const long long kappa_max = static_cast<long long>(n) * t - n - t + p.m;
  for (long long kappa = 1; kappa <= kappa_max; ++kappa)
    if (b_sum(static_cast<int>(n + t + kappa - 1), p.m, t, static_cast<int>(kappa)) < 0)
      return false;
  return true;
}

VerdictRecord verify_theorem(TheoremId id, int n, int t) {
  PowerParams p(n, t);
  VerdictRecord v;
  v.id = id;
  v.n = n;
  v.t = t;
  switch (id) {
    case TheoremId::upper_bound: {
      QDepthResult r = qdepth_power_fast(n, t);
      ExactInt wb = beta_edge_plus(n, t);
      v.qdepth = r.qdepth;
      v.expected = p.m;
      v.pass = (r.qdepth <= p.m) && (wb < 0);
      v.witness_beta = std::move(wb);
      return v;
    }
    case TheoremId::t_ge_n_minus_1: {
      if (t < n - 1) throw HypothesisError("verify_theorem: t_ge_n_minus_1 needs t >= n-1");
      QDepthResult r = qdepth_power_fast(n, t);
      v.qdepth = r.qdepth;
      v.expected = 1;
      v.pass = (r.qdepth == 1);
      return v;
    }
    case TheoremId::square: {
      if (t != 2) throw HypothesisError("verify_theorem: square needs t = 2");
      QDepthResult r = qdepth_power_fast(n, t);
      v.qdepth = r.qdepth;
      v.expected = static_cast<int>(ceil_div(n, 3));
      v.pass = (r.qdepth == v.expected);
      return v;
    }
    case TheoremId::small_n: {
      if (n > (t + 1) * (t + 3))
        throw HypothesisError("verify_theorem: small_n needs n <= (t+1)(t+3)");
      QDepthResult r = qdepth_power_fast(n, t);
      v.qdepth = r.qdepth;
      v.expected = p.m;
      v.pass = (r.qdepth == p.m);
      return v;
    }
    case TheoremId::remark_zero: {
      const int nt = n * t;
      const int d = nt - n;
      bool ok = true;
      for (int k = 0; k <= d && ok; ++k)
        if (beta_quotient_power(n, t, d, k) < 0) ok = false;
      ExactInt wb = beta_quotient_power(n, t, d + 1, t);
      v.qdepth = 0;
      v.expected = 0;
      v.pass = ok && (wb == -binom(n + t - 2, t - 1)) && (wb < 0);
      v.witness_beta = std::move(wb);
      return v;
    }
  }
  throw std::logic_error("verify_theorem: unknown id");
}

namespace regression {

ExactInt edge_witness_extra_term(int n, int t) {
  PowerParams p(n, t);
  return binom(n + t, t + 1) - ExactInt(p.m + 1) * binom(n + t - 1, t) -
         binom(n - p.m + t - 1, t);
}

ExactInt b_criterion_cell_shifted(int n, int t, int kappa) {
  PowerParams p(n, t);
  return b_sum(n + kappa - 1, p.m, t, kappa);
}

bool criterion_b_shifted(int n, int t) {
  PowerParams p(n, t);
  const long long kappa_max = static_cast<long long>(n) * t - n - t + p.m;
  for (long long kappa = 1; kappa <= kappa_max; ++kappa)
    if (b_criterion_cell_shifted(n, t, static_cast<int>(kappa)) < 0) return false;
  return true;
}

ExactRatio term_ratio_simplified(int n, int m, int t, int k, int j) {
  return make_ratio(ExactInt(n - k + j + 1) * (j + 1), ExactInt(m - k + j + 1) * (k + t - j));
}

}  // namespace regression

}  // namespace qdepth

#include "qdepth/qdepth_core.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace qdepth {

namespace {

uint64_t support_mask(const Monomial& u) {
  uint64_t m = 0;
  for (int j = 0; j < u.nvars(); ++j)
    if (u.exponent(j) > 0) m |= uint64_t{1} << j;
  return m;
}

// squarefree membership is a support-set inclusion test against the minimal
// generators
bool mask_member(const std::vector<uint64_t>& gens, uint64_t u) {
  for (uint64_t g : gens)
    if ((g & ~u) == 0) return true;
  return false;
}

std::vector<uint64_t> gen_masks(const MonomialIdeal& ideal) {
  std::vector<uint64_t> out;
  out.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) out.push_back(support_mask(g));
  return out;
}

}  // namespace

AlphaVector alpha_enumerate(const QuotientPresentation& q) {
  if (!q.is_squarefree())
    throw std::invalid_argument("alpha_enumerate: non-squarefree generators (polarize first)");
  const int n = q.nvars();
  if (n > 63)
    throw std::invalid_argument("alpha_enumerate: enumeration is limited to 63 variables");
  const std::vector<uint64_t> inner = gen_masks(q.inner());
  const std::vector<uint64_t> outer = gen_masks(q.outer());
  const bool inner_zero = q.inner().is_zero();

  AlphaVector alpha;
  alpha.nvars = n;
  alpha.counts.assign(static_cast<size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) {
    SquarefreeStream stream(n, k);
    Monomial u;
    long long count = 0;
    while (stream.next(u)) {
      uint64_t m = support_mask(u);
      if (!mask_member(outer, m)) continue;
      if (!inner_zero && mask_member(inner, m)) continue;
      ++count;
    }
    alpha.counts[static_cast<size_t>(k)] = count;
  }
  return alpha;
}

ExactInt beta_from_alpha(const AlphaVector& alpha, int d, int k) {
  if (k < 0 || k > d || d > alpha.nvars)
    throw std::invalid_argument("beta_from_alpha: need 0 <= k <= d <= nvars");
  ExactInt acc = 0;
  for (int j = 0; j <= k; ++j) {
    ExactInt term = binom(d - j, k - j) * alpha.counts[static_cast<size_t>(j)];
    if ((k - j) & 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

ExactInt alpha_from_beta(std::span<const ExactInt> beta_row, int d, int k) {
  if (k < 0 || k > d) throw std::invalid_argument("alpha_from_beta: need 0 <= k <= d");
  if (beta_row.size() <= static_cast<size_t>(k))
    throw std::invalid_argument("alpha_from_beta: beta row too short");
  ExactInt acc = 0;
  for (int j = 0; j <= k; ++j) acc += binom(d - j, k - j) * beta_row[static_cast<size_t>(j)];
  return acc;
}

BetaTable beta_table(const AlphaVector& alpha) {
  BetaTable table;
  table.nvars = alpha.nvars;
  table.rows.resize(static_cast<size_t>(alpha.nvars) + 1);
  for (int d = 0; d <= alpha.nvars; ++d) {
    auto& row = table.rows[static_cast<size_t>(d)];
    row.reserve(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) row.push_back(beta_from_alpha(alpha, d, k));
  }
  return table;
}

QDepthResult qdepth_squarefree(const QuotientPresentation& q) {
  const AlphaVector alpha = alpha_enumerate(q);
  const int n = q.nvars();

  std::vector<bool> feasible(static_cast<size_t>(n) + 1, false);
  for (int d = 0; d <= n; ++d) {
    bool ok = true;
    for (int k = 0; k <= d && ok; ++k)
      if (beta_from_alpha(alpha, d, k) < 0) ok = false;
    feasible[static_cast<size_t>(d)] = ok;
  }
  int best = 0;  // d = 0 is feasible: beta_0^0 = alpha_0 >= 0
  for (int d = 0; d <= n; ++d)
    if (feasible[static_cast<size_t>(d)]) best = d;

  QDepthResult res;
  res.polarized_qdepth = best;
  res.added_vars = 0;
  res.qdepth = best;
  for (int d = 0; d < best; ++d)
    if (!feasible[static_cast<size_t>(d)]) res.gap_below_max = true;
  for (int k = 0; k <= best; ++k) res.certificate.push_back(beta_from_alpha(alpha, best, k));
  if (best < n) {
    for (int k = 0; k <= best + 1; ++k) {
      ExactInt b = beta_from_alpha(alpha, best + 1, k);
      if (b < 0) {
        res.witness = BetaWitness{best + 1, k, std::move(b)};
        break;
      }
    }
  }
  return res;
}

QDepthResult qdepth_general(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  PolarizedPair pair = polarize_pair(inner, outer);
  // QuotientPresentation rejects inner == outer and inner not inside outer;
  // polarization preserves both containment and strictness
  QuotientPresentation q(pair.inner, pair.outer);
  QDepthResult res = qdepth_squarefree(q);
  res.added_vars = pair.added_vars;
  res.qdepth = res.polarized_qdepth - pair.added_vars;
  return res;
}

}  // namespace qdepth

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qdepth/exact.hpp"
#include "qdepth/monomial.hpp"

namespace qdepth {

// alpha_k(J/I): number of squarefree degree-k monomials lying in J but not
// in I, for k = 0..nvars.
struct AlphaVector {
  int nvars = 0;
  std::vector<ExactInt> counts;  // counts[k] = alpha_k
};

// Alternating binomial transform of an alpha vector:
//   beta_k^d = sum_{j=0}^{k} (-1)^{k-j} binom(d-j, k-j) alpha_j
// for 0 <= k <= d <= nvars. Entries may be negative.
struct BetaTable {
  int nvars = 0;
  std::vector<std::vector<ExactInt>> rows;  // rows[d][k]
};

struct BetaWitness {
  int d = 0;
  int k = 0;
  ExactInt beta;

  bool operator==(const BetaWitness&) const = default;
};

struct QDepthResult {
  // polarized_qdepth - added_vars
  int qdepth = 0;
  // max { d : beta_k^d >= 0 for all 0 <= k <= d } in the squarefree ring
  int polarized_qdepth = 0;
  int added_vars = 0;
  // first negative entry of the row at d = polarized_qdepth + 1; absent only
  // when every d up to nvars is feasible
  std::optional<BetaWitness> witness;
  // the full (nonnegative) beta row at d = polarized_qdepth
  std::vector<ExactInt> certificate;
  // data, not an assertion: whether some d below the returned maximum was
  // infeasible; no run has ever produced true
  bool gap_below_max = false;
};

// Counts by direct enumeration over all squarefree monomials; this is the
// ground-truth oracle, deliberately free of closed-form shortcuts.
// Requires a squarefree presentation (polarize first) with at most 63
// variables.
AlphaVector alpha_enumerate(const QuotientPresentation& q);

ExactInt beta_from_alpha(const AlphaVector& alpha, int d, int k);

// Inverse transform: sum_{j=0}^{k} binom(d-j, k-j) beta_j^d, the alpha value
// recovered from a beta row.
ExactInt alpha_from_beta(std::span<const ExactInt> beta_row, int d, int k);

BetaTable beta_table(const AlphaVector& alpha);

// Definitional quasi depth of a squarefree quotient: tests every d from 0 to
// nvars (no monotonicity of the feasible set is assumed) and returns the
// maximum feasible one.
QDepthResult qdepth_squarefree(const QuotientPresentation& q);

// Quasi depth of an arbitrary quotient: jointly polarizes the pair, runs
// qdepth_squarefree, and subtracts the number of added variables.
QDepthResult qdepth_general(const MonomialIdeal& inner, const MonomialIdeal& outer);

}  // namespace qdepth

#pragma once

#include <optional>
#include <stdexcept>

#include "qdepth/exact.hpp"
#include "qdepth/qdepth_core.hpp"

namespace qdepth {

// Closed-form machinery for qdepth(m^t), where m = (x_1,...,x_n) is the
// maximal graded ideal. Everything here is exact; each formula is
// cross-asserted against the enumeration oracle and against its sibling
// expressions by the test suite.

// Thrown by verify_theorem when (n, t) violates the hypothesis of the
// selected statement.
struct HypothesisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PowerParams {
  int n;  // ring variables, >= 2
  int t;  // power, >= 1
  int m;  // ceil(n / (t+1)), the conjectured qdepth
  PowerParams(int n, int t);
};

// invariant-free parameter bag for the b-sum family
struct BSumParams {
  int n, m, t, k;
};

// alpha_k of the quotient R_t/I_t, where I_t is the polarization of m^t in
// nt variables:
//   sum_{j=0}^{t-1} binom(nt-n-j, k-j) binom(n+j-1, j)
ExactInt alpha_power(int n, int t, int k);

// beta_k^d(R_t/I_t) = sum_{l=0}^{t-1} binom(n+l-1, l) binom(tn-n-d+k-l-1, k-l)
ExactInt beta_quotient_power(int n, int t, int d, int k);

// beta_k^d(I_t) = binom(nt-d+k-1, k) - beta_k^d(R_t/I_t)
ExactInt beta_ideal_power(int n, int t, int d, int k);

// beta_{t+1}^{nt-n+m+1}(I_t), the negative witness one level above the
// expected maximum:
//   binom(n-m+t-1, t+1) + sum_{l=0}^{t-1} (-1)^{t-l} binom(n+l-1, l) binom(m+1, t+1-l)
// Equal to binom(n+t, t+1) - (m+1) binom(n+t-1, t), and strictly negative.
ExactInt beta_edge_plus(int n, int t);

// beta_k^{nt-n+m}(I_t) for t+1 <= k <= nt-n+m:
//   binom(n-m+k-1, k) - sum_{l=0}^{t-1} (-1)^{k-l} binom(n+l-1, l) binom(m, k-l)
ExactInt beta_edge(int n, int t, int k);

// the same edge value as a short alternating sum:
//   sum_{j=0}^{k-t} (-1)^j binom(n+k-j-1, k-j) binom(m, j)
ExactInt eqi2_sum(int n, int t, int k);

// b(n,m,t,k) = sum_{j=0}^{k} (-1)^j binom(k+t, j) binom(n-j, m-j)
ExactInt b_sum(int n, int m, int t, int k);
ExactInt b_sum(const BSumParams& p);

// closed form binom(n-t-k, m), valid for 1 <= m <= k
ExactInt b_closed(int n, int m, int t, int k);
ExactInt b_closed(const BSumParams& p);

// f(n,m,t,k,j) = binom(k+t, j) binom(n-j, m-j), the j-th term of b_sum
// without its sign
ExactInt f_term(int n, int m, int t, int k, int j);

// whether f(...,j) >= f(...,j+1), decided by comparing the two exact terms
bool f_ratio_ge_one(int n, int m, int t, int k, int j);

// exact value of f(...,j) / f(...,j+1) = (j+1)(n-j) / ((k+t-j)(m-j))
ExactRatio f_ratio_exact(int n, int m, int t, int k, int j);

// phi(j) = m+k+t-2j-1 + (m-k)(k+t+1)/(j+1); f descends from f(j) to f(j+1)
// exactly when n >= phi(j), and phi is non-increasing in j for m >= k
ExactRatio phi(int m, int k, int t, int j);

// Quasi depth of m^t by closed form: evaluates beta_k^d(I_t) for every
// 0 <= k <= d <= nt (each row quits at its first negative entry), takes the
// maximum feasible d, and subtracts the nt-n added variables.
QDepthResult qdepth_power_fast(int n, int t);

// Sufficient criterion for qdepth(m^t) = m: checks
//   b(n+t+kappa-1, m, t, kappa) >= 0  for all 1 <= kappa <= nt-n-t+m.
bool criterion_b(int n, int t);

enum class TheoremId {
  upper_bound,      // qdepth(m^t) <= m, with beta_edge_plus < 0 as witness
  t_ge_n_minus_1,   // qdepth(m^t) = 1 when t >= n-1
  square,           // qdepth(m^2) = ceil(n/3)
  small_n,          // qdepth(m^t) = m when n <= (t+1)(t+3)
  remark_zero,      // qdepth(S/m^t) = 0: quotient feasible at d = nt-n, and
                    // beta_t^{nt-n+1}(R_t/I_t) = -binom(n+t-2, t-1) < 0
};

struct VerdictRecord {
  TheoremId id;
  int n = 0;
  int t = 0;
  bool pass = false;
  int qdepth = 0;    // computed value (0 for remark_zero)
  int expected = 0;  // value the statement pins, or the upper bound
  std::optional<ExactInt> witness_beta;
};

VerdictRecord verify_theorem(TheoremId id, int n, int t);

// Intentionally wrong variant formulas, pinned by regression tests. Each is
// a near-miss of the verified form above it; the tests assert the exact
// discrepancy so the difference stays visible.
namespace regression {

// beta_edge_plus with a spurious extra -binom(n-m+t-1, t) term; gives -3
// instead of -2 at (n,t) = (2,2)
ExactInt edge_witness_extra_term(int n, int t);

// criterion_b with the b-sum first argument shifted down by t: checks
// b(n+kappa-1, m, t, kappa) instead of b(n+t+kappa-1, m, t, kappa); already
// fails at (n,t) = (2,2) where qdepth(m^2) = m holds
ExactInt b_criterion_cell_shifted(int n, int t, int kappa);
bool criterion_b_shifted(int n, int t);

// plausible-looking but wrong simplification of f(...,j)/f(...,j+1):
//   (n-k+j+1)(j+1) / ((m-k+j+1)(k+t-j))
ExactRatio term_ratio_simplified(int n, int m, int t, int k, int j);

}  // namespace regression

}  // namespace qdepth

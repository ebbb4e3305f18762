#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qdepth {

// Thrown when a quotient presentation is malformed (inner not strictly
// contained in outer). Kept distinct from std::invalid_argument so callers
// can map it to its own exit code.
struct ContainmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent vector over a fixed ordered variable set. Variables are 0-based
// in code; printed names are 1-based (x1, x2, ...).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int nvars);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  int exponent(int var) const { return exps_[static_cast<size_t>(var)]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const;
  bool is_squarefree() const;

  // "x1^2*x3", identity prints as "1"
  std::string str() const;

  bool operator==(const Monomial&) const = default;
  // degree, then lex on exponents; a total order used for canonical
  // generator lists
  bool operator<(const Monomial& rhs) const;

 private:
  std::vector<int> exps_;
};

// a | b, i.e. every exponent of a is <= the matching exponent of b
bool divides(const Monomial& a, const Monomial& b);

// Removes duplicates and every monomial strictly divisible by another;
// result is sorted, hence independent of input order.
std::vector<Monomial> minimalize(int nvars, std::vector<Monomial> gens);

// Monomial ideal given by its (unique) minimal generating set. The zero
// ideal is a first-class value: empty generator list plus a flag.
class MonomialIdeal {
 public:
  // the zero ideal in a 1-variable ring; a placeholder value
  MonomialIdeal() = default;

  static MonomialIdeal zero(int nvars);
  static MonomialIdeal unit(int nvars);
  // minimalizes; an empty generator list yields the zero ideal
  static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  bool is_zero() const { return zero_; }
  bool is_unit() const;
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_squarefree() const;

  // same ring and same minimal generators; minimal generating sets of
  // monomial ideals are unique, so this is ideal equality
  bool operator==(const MonomialIdeal&) const = default;

 private:
  MonomialIdeal(int nvars, bool zero, std::vector<Monomial> gens);
  int nvars_ = 1;
  bool zero_ = true;
  std::vector<Monomial> gens_;
};

// membership: some generator divides u (the zero ideal contains nothing)
bool contains(const MonomialIdeal& ideal, const Monomial& u);

// inner subseteq outer, tested generator-wise
bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner);

// m^t: the ideal minimally generated by all monomials of degree exactly t
// in n variables (binom(n+t-1, t) generators)
MonomialIdeal maximal_power_ideal(int n, int t);

// Ordered pair I subsetneq J; the object whose quasi depth is computed.
class QuotientPresentation {
 public:
  QuotientPresentation(MonomialIdeal inner, MonomialIdeal outer);

  const MonomialIdeal& inner() const { return inner_; }
  const MonomialIdeal& outer() const { return outer_; }
  int nvars() const { return outer_.nvars(); }
  bool is_squarefree() const;

 private:
  MonomialIdeal inner_;
  MonomialIdeal outer_;
};

struct PolarizationResult {
  MonomialIdeal ideal;  // squarefree, in the enlarged ring
  int added_vars = 0;   // N = enlarged nvars - original nvars
  // var_map[j][s] = index of the level-s copy of original variable j.
  // Level-s copies follow the interleaved layout (copy s of variable j sits
  // at n*s + j) with levels nobody uses compacted away.
  std::vector<std::vector<int>> var_map;
};

// Replaces each factor x_j^a by the product of the a level copies of x_j.
// Rejects the zero ideal.
PolarizationResult polarize(const MonomialIdeal& ideal);

// Joint polarization of a pair into one enlarged ring: the level count per
// variable is the maximum exponent over the generators of both ideals, so N
// is shared. inner may be the zero ideal.
struct PolarizedPair {
  MonomialIdeal inner;
  MonomialIdeal outer;
  int added_vars = 0;
  std::vector<std::vector<int>> var_map;
};
PolarizedPair polarize_pair(const MonomialIdeal& inner, const MonomialIdeal& outer);

// Streams the binom(nvars, k) squarefree monomials of degree k, in
// colexicographic order on support sets.
class SquarefreeStream {
 public:
  SquarefreeStream(int nvars, int k);
  // false once exhausted
  bool next(Monomial& out);

 private:
  int nvars_;
  int k_;
  bool done_;
  std::vector<int> support_;
};

std::vector<Monomial> squarefree_of_degree(int nvars, int k);

}  // namespace qdepth

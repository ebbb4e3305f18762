#include "qdepth/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "qdepth/exact.hpp"

namespace qdepth {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
}

Monomial Monomial::one(int nvars) {
  if (nvars < 0) throw std::invalid_argument("Monomial: nvars must be >= 0");
  return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::string Monomial::str() const {
  std::string s;
  for (int j = 0; j < nvars(); ++j) {
    int e = exps_[static_cast<size_t>(j)];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(j + 1);
    if (e > 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s.empty() ? "1" : s;
}

bool Monomial::operator<(const Monomial& rhs) const {
  if (degree() != rhs.degree()) return degree() < rhs.degree();
  return exps_ < rhs.exps_;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("divides: monomials live in different rings");
  for (int j = 0; j < a.nvars(); ++j)
    if (a.exponent(j) > b.exponent(j)) return false;
  return true;
}

std::vector<Monomial> minimalize(int nvars, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.nvars() != nvars)
      throw std::invalid_argument("minimalize: generator has wrong variable count");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    // sorted by degree, so any divisor of g is already in out
    for (const Monomial& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(int nvars, bool zero, std::vector<Monomial> gens)
    : nvars_(nvars), zero_(zero), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::zero(int nvars) {
  if (nvars < 1) throw std::invalid_argument("MonomialIdeal: nvars must be >= 1");
  return MonomialIdeal(nvars, true, {});
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
  return from_generators(nvars, {Monomial::one(nvars)});
}

MonomialIdeal MonomialIdeal::from_generators(int nvars, std::vector<Monomial> gens) {
  if (nvars < 1) throw std::invalid_argument("MonomialIdeal: nvars must be >= 1");
  std::vector<Monomial> min = minimalize(nvars, std::move(gens));
  if (min.empty()) return MonomialIdeal(nvars, true, {});
  return MonomialIdeal(nvars, false, std::move(min));
}

bool MonomialIdeal::is_unit() const { return !zero_ && gens_.size() == 1 && gens_[0].is_one(); }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) {
  if (ideal.nvars() != u.nvars())
    throw std::invalid_argument("contains: monomial lives in a different ring");
  if (ideal.is_zero()) return false;
  for (const Monomial& g : ideal.generators())
    if (divides(g, u)) return true;
  return false;
}

bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  if (outer.nvars() != inner.nvars())
    throw std::invalid_argument("contains_ideal: ideals live in different rings");
  if (inner.is_zero()) return true;
  if (outer.is_zero()) return false;
  for (const Monomial& g : inner.generators())
    if (!contains(outer, g)) return false;
  return true;
}

MonomialIdeal maximal_power_ideal(int n, int t) {
  if (n < 2) throw std::invalid_argument("maximal_power_ideal: n must be >= 2");
  if (t < 1) throw std::invalid_argument("maximal_power_ideal: t must be >= 1");
  // all exponent vectors of total degree t; none divides another, so the
  // list is already minimal
  std::vector<Monomial> gens;
  std::vector<int> e(static_cast<size_t>(n), 0);
  // lexicographic walk over compositions of t into n parts
  e[0] = t;
  while (true) {
    gens.emplace_back(e);
    // next composition: move one unit from the rightmost positive non-final
    // slot to its right, pulling everything after it back
    int i = n - 2;
    while (i >= 0 && e[static_cast<size_t>(i)] == 0) --i;
    if (i < 0) break;
    --e[static_cast<size_t>(i)];
    int rest = e[static_cast<size_t>(n - 1)] + 1;
    e[static_cast<size_t>(n - 1)] = 0;
    e[static_cast<size_t>(i + 1)] = rest;
    for (int j = i + 2; j < n; ++j) e[static_cast<size_t>(j)] = 0;
  }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

QuotientPresentation::QuotientPresentation(MonomialIdeal inner, MonomialIdeal outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
  if (inner_.nvars() != outer_.nvars())
    throw std::invalid_argument("QuotientPresentation: ideals live in different rings");
  if (!contains_ideal(outer_, inner_))
    throw ContainmentError("QuotientPresentation: inner ideal is not contained in outer");
  if (inner_ == outer_)
    throw ContainmentError("QuotientPresentation: inner and outer ideals coincide");
}

bool QuotientPresentation::is_squarefree() const {
  return inner_.is_squarefree() && outer_.is_squarefree();
}

namespace {

// level count per variable: max exponent across all given generator lists,
// floored at 1 so every original variable keeps its level-0 copy
std::vector<int> level_counts(int nvars, std::initializer_list<const MonomialIdeal*> ideals) {
  std::vector<int> levels(static_cast<size_t>(nvars), 1);
  for (const MonomialIdeal* ideal : ideals)
    for (const Monomial& g : ideal->generators())
      for (int j = 0; j < nvars; ++j)
        levels[static_cast<size_t>(j)] = std::max(levels[static_cast<size_t>(j)], g.exponent(j));
  return levels;
}

// Interleaved layout: copy s of variable j sits at n*s + j, with slots no
// variable reaches dropped and the survivors renumbered in that order. For
// m^t every slot is used and the numbering is exactly n*s + j.
std::vector<std::vector<int>> build_var_map(int nvars, const std::vector<int>& levels,
                                            int* enlarged_nvars) {
  int max_level = *std::max_element(levels.begin(), levels.end());
  std::vector<std::vector<int>> var_map(static_cast<size_t>(nvars));
  for (int j = 0; j < nvars; ++j) var_map[static_cast<size_t>(j)].assign(levels[static_cast<size_t>(j)], -1);
  int next = 0;
  for (int s = 0; s < max_level; ++s)
    for (int j = 0; j < nvars; ++j)
      if (s < levels[static_cast<size_t>(j)]) var_map[static_cast<size_t>(j)][static_cast<size_t>(s)] = next++;
  *enlarged_nvars = next;
  return var_map;
}

Monomial polarize_monomial(const Monomial& g, const std::vector<std::vector<int>>& var_map,
                           int enlarged_nvars) {
  std::vector<int> e(static_cast<size_t>(enlarged_nvars), 0);
  for (int j = 0; j < g.nvars(); ++j)
    for (int s = 0; s < g.exponent(j); ++s)
      e[static_cast<size_t>(var_map[static_cast<size_t>(j)][static_cast<size_t>(s)])] = 1;
  return Monomial(std::move(e));
}

MonomialIdeal polarize_with_map(const MonomialIdeal& ideal,
                                const std::vector<std::vector<int>>& var_map,
                                int enlarged_nvars) {
  if (ideal.is_zero()) return MonomialIdeal::zero(enlarged_nvars);
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    gens.push_back(polarize_monomial(g, var_map, enlarged_nvars));
  return MonomialIdeal::from_generators(enlarged_nvars, std::move(gens));
}

}  // namespace

PolarizationResult polarize(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("polarize: zero ideal");
  std::vector<int> levels = level_counts(ideal.nvars(), {&ideal});
  int enlarged = 0;
  std::vector<std::vector<int>> var_map = build_var_map(ideal.nvars(), levels, &enlarged);
  PolarizationResult res;
  res.ideal = polarize_with_map(ideal, var_map, enlarged);
  res.added_vars = enlarged - ideal.nvars();
  res.var_map = std::move(var_map);
  return res;
}

PolarizedPair polarize_pair(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  if (inner.nvars() != outer.nvars())
    throw std::invalid_argument("polarize_pair: ideals live in different rings");
  if (outer.is_zero()) throw std::invalid_argument("polarize_pair: outer ideal is zero");
  std::vector<int> levels = level_counts(outer.nvars(), {&inner, &outer});
  int enlarged = 0;
  std::vector<std::vector<int>> var_map = build_var_map(outer.nvars(), levels, &enlarged);
  PolarizedPair res;
  res.inner = polarize_with_map(inner, var_map, enlarged);
  res.outer = polarize_with_map(outer, var_map, enlarged);
  res.added_vars = enlarged - outer.nvars();
  res.var_map = std::move(var_map);
  return res;
}

SquarefreeStream::SquarefreeStream(int nvars, int k) : nvars_(nvars), k_(k), done_(false) {
  if (nvars < 0) throw std::invalid_argument("SquarefreeStream: nvars must be >= 0");
  if (k < 0 || k > nvars)
    throw std::invalid_argument("SquarefreeStream: degree out of range");
  support_.resize(static_cast<size_t>(k));
  std::iota(support_.begin(), support_.end(), 0);
}

bool SquarefreeStream::next(Monomial& out) {
  if (done_) return false;
  std::vector<int> e(static_cast<size_t>(nvars_), 0);
  for (int v : support_) e[static_cast<size_t>(v)] = 1;
  out = Monomial(std::move(e));
  // colex successor: bump the lowest slot that has head room, reset the
  // slots below it
  int i = 0;
  while (i < k_) {
    int limit = (i + 1 < k_) ? support_[static_cast<size_t>(i + 1)] : nvars_;
    if (support_[static_cast<size_t>(i)] + 1 < limit) break;
    ++i;
  }
  if (i == k_) {
    done_ = true;
  } else {
    ++support_[static_cast<size_t>(i)];
    std::iota(support_.begin(), support_.begin() + i, 0);
  }
  return true;
}

std::vector<Monomial> squarefree_of_degree(int nvars, int k) {
  SquarefreeStream stream(nvars, k);
  std::vector<Monomial> out;
  Monomial u;
  while (stream.next(u)) out.push_back(u);
  return out;
}

}  // namespace qdepth

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gfl/ffcore/linalg.hpp"

namespace gfl::flag {

using ff::Subspace;
using ff::Vec;
using ff::VecSpace;

/// Coefficient ring of a map: Z or Z/l^m.
struct Ring {
  bool integral = true;
  std::int64_t ell = 0;
  int m = 0;

  static Ring Z() { return {}; }
  static Ring Zl(std::int64_t ell, int m);
  /// 0 for Z.
  std::int64_t modulus() const;
  std::int64_t reduce(std::int64_t v) const;
  bool operator==(const Ring& o) const { return integral == o.integral && ell == o.ell && m == o.m; }
  std::string name() const;
};

/// Points of P(A) in canonical order with a lookup from coordinates to index.
struct PointTable {
  VecSpace space;
  std::vector<Vec> points;
  std::vector<std::int32_t> index;  // by encode(v), -1 for non-normalized vectors
};

std::shared_ptr<const PointTable> point_table(const VecSpace& space);

/// A function on P(A) with values in a ring, stored as a table.
class HomogeneousMap {
 public:
  HomogeneousMap() = default;
  /// `values` indexed like enumerate_proj_points(space); reduced into the ring.
  HomogeneousMap(const VecSpace& space, Ring ring, std::vector<std::int64_t> values);
  static HomogeneousMap from_function(const VecSpace& space, Ring ring,
                                      const std::function<std::int64_t(const Vec&)>& fn);
  static HomogeneousMap constant(const VecSpace& space, Ring ring, std::int64_t c);

  const VecSpace& space() const { return table_->space; }
  const Ring& ring() const { return ring_; }
  const std::vector<Vec>& points() const { return table_->points; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::int64_t at(std::size_t i) const { return values_[i]; }
  /// Value at the class of a nonzero vector.
  std::int64_t operator()(const Vec& v) const;
  std::size_t index_of(const Vec& v) const;

  /// c * this + c2 * other, in the common ring.
  HomogeneousMap combine(std::int64_t c, const HomogeneousMap& other, std::int64_t c2) const;
  /// Post-composition with a value map, landing in `ring`.
  HomogeneousMap compose(const std::function<std::int64_t(std::int64_t)>& h, Ring ring) const;
  HomogeneousMap reduced(Ring ring) const;
  /// Distinct values, ascending.
  std::vector<std::int64_t> value_set() const;

  bool operator==(const HomogeneousMap& o) const { return ring_ == o.ring_ && values_ == o.values_; }

 private:
  std::shared_ptr<const PointTable> table_;
  Ring ring_;
  std::vector<std::int64_t> values_;
};

/// B = chain[0] > chain[1] > ... > chain.back() = 0, each of codimension one in the previous.
struct Flag {
  std::vector<Subspace> chain;
};

/// Product of two vectors of A, or nothing when it falls outside A.
using Multiplication = std::function<std::optional<Vec>(const Vec&, const Vec&)>;

struct LogarithmicReport {
  bool holds = true;
  std::size_t tested = 0;
  std::size_t skipped = 0;
  std::optional<std::pair<Vec, Vec>> witness;
};

LogarithmicReport is_logarithmic(const HomogeneousMap& mu, const Multiplication& mult);

bool is_flag_dim2(const HomogeneousMap& mu, const Subspace& B);

struct FlagMapReport {
  bool holds = true;
  std::optional<Subspace> failing;
};

FlagMapReport check_flag_map(const HomogeneousMap& mu);
bool is_flag_map(const HomogeneousMap& mu);
/// True iff mu restricted to B is constant on P(B) minus P(H) for the subspace H.
bool constant_off(const HomogeneousMap& mu, const Subspace& B, const Subspace& H);
/// Complete flag of B on whose successive differences mu is constant;
/// depth-first over hyperplanes in lexicographic order.
std::optional<Flag> find_flag(const HomogeneousMap& mu, const Subspace& B);
/// Every subspace of dimension <= 2 admits a flag.
bool flags_on_small_subspaces(const HomogeneousMap& mu);

constexpr std::size_t kMaxReductionValues = 16;

struct HReductionReport {
  bool holds = true;
  /// Bit i of the failing mask is h(value_set()[i]).
  std::optional<std::uint32_t> failing_mask;
};

/// Throws std::invalid_argument when mu takes more than kMaxReductionValues values.
HReductionReport h_reduction_holds(const HomogeneousMap& mu);

struct FunctionalEquationReport {
  bool holds = false;
  std::optional<std::pair<Vec, Vec>> basis;  // (c, b)
};

/// Searches a basis (c, b) of C with mu(c) = mu(c + k b) != mu(b) for all scalars k.
FunctionalEquationReport functional_equation_flag(const HomogeneousMap& mu, const Subspace& C);

struct CPairWitness {
  Subspace B;
  std::int64_t s = 0, s1 = 0, s2 = 0;  // s, s', s''
};

struct CPairReport {
  bool holds = true;
  std::vector<Subspace> failing;
  std::vector<CPairWitness> witnesses;
};

/// Solves s mu(b) + s' mu2(b) = s'' on every 2-dimensional B with (s, s') != 0.
CPairReport is_c_pair(const HomogeneousMap& mu, const HomogeneousMap& mu2);

struct CombinationReport {
  std::optional<std::pair<std::int64_t, std::int64_t>> coefficients;
  std::optional<Flag> flag;
  /// Filled when no combination is found.
  std::vector<Subspace> failing;
};

/// Representatives of P^1(Z/l^m): (1, c') for c' in [0, l^m), then (l k, 1) for k in [0, l^(m-1)).
std::vector<std::pair<std::int64_t, std::int64_t>> projective_line_mod(std::int64_t ell, int m);
CombinationReport find_flag_combination(const HomogeneousMap& mu, const HomogeneousMap& mu2);

/// Pairwise c-pair matrix.
std::vector<std::vector<bool>> cpair_graph(const std::vector<HomogeneousMap>& maps);
/// Maximal cliques of the c-pair graph, each sorted, listed lexicographically.
std::vector<std::vector<std::size_t>> maximal_cpair_cliques(const std::vector<HomogeneousMap>& maps);
std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<std::vector<bool>>& adj);
/// mu2 = u * mu + c for a unit u and constant c, or mu = u * mu2 + c.
bool proportional(const HomogeneousMap& mu, const HomogeneousMap& mu2);

std::string to_string(const Flag& flag);

}  // namespace gfl::flag

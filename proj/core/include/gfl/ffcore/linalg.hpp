#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfl/ffcore/field.hpp"

namespace gfl::ff {

using Vec = std::vector<Elem>;

/// The coordinate space GF(q)^n.
struct VecSpace {
  Field field;
  int dim = 1;

  VecSpace() = default;
  VecSpace(Field f, int n);
  /// Number of projective points, (q^n - 1)/(q - 1).
  std::uint64_t num_points() const;
};

/// Scales v so its first nonzero coordinate is 1. Zero vectors are returned unchanged.
Vec normalize(const Field& f, Vec v);
bool is_zero(const Vec& v);
Vec add(const Field& f, const Vec& a, const Vec& b);
Vec scale(const Field& f, const Vec& a, Elem s);
/// Integer code of a coordinate vector, most significant coordinate first.
std::uint64_t encode(const Field& f, const Vec& v);
std::string to_string(const Vec& v);

/// A linear subspace stored by its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of GF(q)^n.
  Subspace(Field f, int ambient) : field_(std::move(f)), ambient_(ambient) {}

  const Field& field() const { return field_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool contains(const Vec& v) const;
  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  Vec coordinates(const Vec& v) const;
  /// Normalized projective points, lexicographic.
  std::vector<Vec> points() const;
  /// Subspaces of codimension one inside this one, lexicographic by basis.
  std::vector<Subspace> hyperplanes() const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const;

  friend Subspace span(const Field& f, int ambient, const std::vector<Vec>& vectors);

 private:
  Field field_;
  int ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

/// Row-reduces in place; returns pivot columns.
std::vector<int> rref(const Field& f, std::vector<Vec>& rows);
int rank(const Field& f, std::vector<Vec> rows);
/// Basis of {x : M x = 0} for a matrix with `cols` columns.
std::vector<Vec> kernel(const Field& f, std::vector<Vec> rows, int cols);

Subspace span(const Field& f, int ambient, const std::vector<Vec>& vectors);
bool in_subspace(const Vec& v, const Subspace& s);
Subspace whole_space(const VecSpace& space);
Subspace intersect(const Subspace& a, const Subspace& b);

std::vector<Vec> enumerate_proj_points(const VecSpace& space);
std::vector<Subspace> enumerate_subspaces(const VecSpace& space, int d);
/// Gaussian binomial coefficient [n choose k]_q.
std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q);

}  // namespace gfl::ff

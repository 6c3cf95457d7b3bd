#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gfl/flagmap/flagmap.hpp"
#include "gfl/valuation/curve.hpp"

namespace gfl::val {

/// Element of Z (rank 1) or Z^2 with the lexicographic order (rank 2).
struct Value {
  std::int64_t a = 0;
  std::int64_t b = 0;
  int rank = 1;

  Value operator+(const Value& o) const { return {a + o.a, b + o.b, std::max(rank, o.rank)}; }
  bool operator==(const Value& o) const { return a == o.a && b == o.b; }
  std::strong_ordering operator<=>(const Value& o) const {
    if (auto c = a <=> o.a; c != 0) return c;
    return b <=> o.b;
  }
  std::string to_string() const;
};

enum class ValKind { Point, Divisorial, Flag };

/// Point valuation on k(t), divisorial valuation nu_C on k(x, y), or the
/// rank-two flag valuation nu_{C,q} for a closed point q of the residue curve.
class Valuation {
 public:
  static Valuation point(const ClosedPoint& p);
  static Valuation divisorial(const PlaneCurve& c);
  /// q is a closed point over c.residue_constants() in the curve parameter.
  static Valuation flag(const PlaneCurve& c, const ClosedPoint& q);

  ValKind kind() const { return kind_; }
  int rank() const { return kind_ == ValKind::Flag ? 2 : 1; }
  /// 1 for point valuations on k(t), 2 otherwise.
  int nvars() const { return kind_ == ValKind::Point ? 1 : 2; }
  const ClosedPoint& point() const { return point_; }
  const PlaneCurve& curve() const { return curve_; }

  bool operator==(const Valuation& o) const;
  std::string to_string() const;

 private:
  ValKind kind_ = ValKind::Point;
  ClosedPoint point_;
  PlaneCurve curve_;
};

/// Throws std::domain_error on the zero function.
Value ord(const Valuation& v, const RatFunc& f);

struct Residue {
  bool trivial = true;
  /// (f^{nu(g)} / g^{nu(f)}) restricted to the curve, numerator and denominator monic.
  URat value;
};

Residue residue(const PlaneCurve& c, const RatFunc& f, const RatFunc& g);
/// Divisorial valuations only.
Residue residue(const Valuation& v, const RatFunc& f, const RatFunc& g);

struct ResidueSweep {
  bool vanish = true;
  std::vector<PlaneCurve> checked;
  std::optional<PlaneCurve> witness;
  std::optional<URat> witness_residue;
};

/// Residues along every component of div f, div g and the line at infinity.
ResidueSweep residues_vanish_all(const RatFunc& f, const RatFunc& g);

struct CompatibilityReport {
  bool compatible = false;
  std::string rule;
  /// For incompatible pairs on distinct curves: sample functions h written as
  /// (1 + m) * u with m in the maximal ideal of the first and u a unit of the second.
  std::size_t samples_checked = 0;
  bool decomposition_verified = false;
};

/// Throws std::invalid_argument when the valuations live on different fields.
CompatibilityReport compatible(const Valuation& v1, const Valuation& v2);

/// Finite-dimensional GF(p)-subspace of a function field, with a fixed basis.
class FunctionSubspace {
 public:
  FunctionSubspace() = default;
  /// Throws std::invalid_argument if the basis is linearly dependent.
  explicit FunctionSubspace(std::vector<RatFunc> basis);

  const ff::VecSpace& space() const { return space_; }
  int dim() const { return space_.dim; }
  const std::vector<RatFunc>& basis() const { return basis_; }
  const Field& field() const { return space_.field; }
  RatFunc element(const ff::Vec& c) const;
  std::optional<ff::Vec> coordinates(const RatFunc& f) const;
  /// Products landing back in the subspace.
  flag::Multiplication multiplication() const;

 private:
  std::vector<RatFunc> basis_;
  ff::VecSpace space_;
  BPoly common_den_;
  std::vector<BPoly> numerators_;
};

/// Values of v on the points of P(B).
std::vector<Value> valuation_table(const FunctionSubspace& B, const Valuation& v);
/// pr_1 (component 0) or pr_2 (component 1) of v on P(B).
flag::HomogeneousMap value_map(const FunctionSubspace& B, const Valuation& v, int component, flag::Ring ring);
/// (a, b) -> a K + b with K chosen so the map is injective on the values of B.
flag::HomogeneousMap packed_value_map(const FunctionSubspace& B, const Valuation& v, flag::Ring ring);

/// Total preorder on P(B) recovered from a flag map.
struct Preorder {
  /// cmp[i][j] = -1, 0, 1 as point i is below, equivalent to, above point j.
  std::vector<std::vector<int>> cmp;
  /// Class index, increasing along the order.
  std::vector<int> level;
  bool total = true;
  bool transitive = true;
  bool product_compatible = true;
  std::size_t product_checks = 0;
  std::vector<std::string> violations;
};

Preorder order_from_flagmap(const flag::HomogeneousMap& alpha, const flag::Multiplication* mult = nullptr);
/// Number of pairs on which the preorder disagrees with the given values.
std::size_t order_mismatches(const Preorder& order, const std::vector<Value>& values);

struct DecompositionReport {
  bool holds = true;
  std::size_t tested = 0;
  std::optional<ff::Vec> witness;
};

/// mu(1 + m) = mu(1) for every m in B with v(m) > 0. Throws if 1 is not in B.
DecompositionReport decomposition_respects(const flag::HomogeneousMap& mu, const Valuation& v, const FunctionSubspace& B);

}  // namespace gfl::val

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gfl/valuation/ratfunc.hpp"

namespace gfl::val {

/// Closed point of the projective line over a finite field: a monic
/// irreducible polynomial, or the point at infinity.
struct ClosedPoint {
  Field field;
  UPoly poly;
  bool infinity = false;

  static ClosedPoint at_infinity(const Field& f);
  /// The rational point t = a.
  static ClosedPoint rational(const Field& f, Elem a);
  /// Throws std::invalid_argument unless p is irreducible.
  static ClosedPoint from_poly(const UPoly& p);

  int degree() const { return infinity ? 1 : poly.degree(); }
  bool operator==(const ClosedPoint& o) const { return infinity == o.infinity && (infinity || poly == o.poly); }
  bool operator!=(const ClosedPoint& o) const { return !(*this == o); }
  /// Finite points by degree then coefficients; infinity last.
  bool operator<(const ClosedPoint& o) const;
  std::string to_string(const std::string& var = "t") const;
};

int ord(const ClosedPoint& P, const UPoly& f);
int ord(const ClosedPoint& P, const URat& f);
/// All closed points of degree <= max_degree, finite ones first in canonical order, then infinity.
std::vector<ClosedPoint> closed_points(const Field& f, int max_degree);

class UnsupportedCurve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CurveForm { Graph, Vertical, Infinity };

/// Irreducible curve on the projective plane from the supported class:
/// graphs v - g(u), irreducible univariate pi(u) of degree >= 2, and the line at infinity.
/// Each carries a residue field K(w): for graphs K is the base field and
/// w = u; for vertical curves K = GF(p)[u]/(pi) and w = v; at infinity w = y/x.
class PlaneCurve {
 public:
  PlaneCurve() = default;
  /// Throws UnsupportedCurve outside the supported class.
  static PlaneCurve from_poly(const BPoly& p);
  static PlaneCurve line_at_infinity(const Field& f);

  CurveForm form() const { return form_; }
  bool is_infinity() const { return form_ == CurveForm::Infinity; }
  /// For graphs, whether the curve is x = g(y); for vertical curves, whether pi is in x.
  bool v_is_x() const { return v_is_x_; }
  const Field& base_field() const { return base_; }
  /// Constant field K of the residue function field.
  const Field& residue_constants() const { return residue_; }
  /// Monic defining polynomial (graph: coefficient of v is 1); zero at infinity.
  const BPoly& poly() const { return poly_; }
  const UPoly& g() const { return g_; }
  const UPoly& pi() const { return pi_; }
  int degree() const;
  /// Name of the coordinate on the residue function field.
  std::string param_name() const;

  /// Order of vanishing of a polynomial along an affine curve.
  int multiplicity(const BPoly& P) const;
  /// Restriction of a polynomial not divisible by the curve (affine only).
  UPoly restrict_poly(const BPoly& P) const;
  /// Valuation nu_C(f).
  int ord(const RatFunc& f) const;
  /// Restriction of f / pi^ord(f) to the curve, where pi is the curve
  /// polynomial (affine) or 1/x (infinity).
  URat leading_restriction(const RatFunc& f) const;
  /// A function with nu_C = 1 and nu_D = 0 for every D in `avoid` (D != C).
  RatFunc uniformizer(const std::vector<PlaneCurve>& avoid = {}) const;

  bool operator==(const PlaneCurve& o) const { return form_ == o.form_ && poly_ == o.poly_; }
  bool operator!=(const PlaneCurve& o) const { return !(*this == o); }
  bool operator<(const PlaneCurve& o) const;
  std::string to_string() const;

 private:
  CurveForm form_ = CurveForm::Infinity;
  bool v_is_x_ = false;
  Field base_;
  Field residue_;
  BPoly poly_;
  UPoly g_;
  UPoly pi_;
};

struct Component {
  PlaneCurve curve;
  int mult = 0;
};

/// Affine irreducible components of a nonzero polynomial with multiplicities,
/// sorted by curve. Throws UnsupportedCurve if a factor lies outside the supported class.
std::vector<Component> factor_components(const BPoly& P);
/// div(f) on the projective plane, including the line at infinity when ord is nonzero.
std::vector<Component> divisor(const RatFunc& f);
/// Curves in the support of div(f), plus the line at infinity.
std::vector<PlaneCurve> support_with_infinity(const RatFunc& f);

}  // namespace gfl::val

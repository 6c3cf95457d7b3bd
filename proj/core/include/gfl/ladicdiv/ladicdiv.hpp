#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfl/lattice/smith.hpp"
#include "gfl/valuation/express.hpp"
#include "gfl/valuation/valuation.hpp"

namespace gfl::ladic {

using val::PlaneCurve;
using val::RatFunc;

/// Finite sum of distinct irreducible curves on P^2 with coefficients in Z/l^m.
struct LadicDivisor {
  lat::Zl ring;
  std::vector<std::pair<PlaneCurve, std::int64_t>> terms;

  /// Merges repeated curves, reduces coefficients and drops zeros; sorted by curve.
  LadicDivisor canonical() const;
  LadicDivisor operator-(const LadicDivisor& o) const;
  bool is_zero() const { return canonical().terms.empty(); }
  std::string to_string() const;
};

/// f_0 f_1^l f_2^(l^2) ...
struct LadicFunction {
  lat::Zl ring;
  std::vector<RatFunc> parts;
};

/// Sum of a_i deg D_i mod l^m (Pic P^2 = Z via degree).
std::int64_t class_map(const LadicDivisor& D);
/// Divisor of a product of powers of the curve polynomials (dehomogenized at the
/// line at infinity, whose exponent is then forced by degree zero).
LadicDivisor divisor_of(const LadicFunction& f);

/// Rational function prod C_j^{e_j} written as exponents over a list of curves.
struct CurveMonomial {
  std::vector<std::int64_t> exponents;
  /// Expands the product; the line at infinity contributes no factor.
  RatFunc to_ratfunc(const std::vector<PlaneCurve>& curves) const;
  std::string to_string(const std::vector<PlaneCurve>& curves) const;
};

struct Decomposition {
  std::vector<PlaneCurve> support;
  /// Integer kernel basis of the degree row, first nonzero entry positive.
  std::vector<CurveMonomial> functions;
  std::vector<std::int64_t> coefficients;
  /// D = g div(F) with F having coprime exponents: a single-term form.
  CurveMonomial regrouped;
  std::int64_t regrouped_coefficient = 0;
  /// Integer rank of the lifted coefficients equals the number of nonzero ones.
  bool basis_lifts_independent = false;
  bool regrouped_lifts_independent = false;
};

/// Throws std::invalid_argument if class_map(D) != 0 or D is not in the span of
/// principal divisors mod l^m.
Decomposition dd_decompose(const LadicDivisor& D);
/// D - sum a_i div(f_i), with each div(f_i) recomputed by factoring f_i.
LadicDivisor reconstruction_residual(const LadicDivisor& D, const Decomposition& dec);
/// Same check for the regrouped single-term form.
LadicDivisor regrouped_residual(const LadicDivisor& D, const Decomposition& dec);

/// Curves whose accumulated coefficient sum l^i ord_D(f_i) is nonzero mod l^m, with that coefficient.
std::vector<std::pair<PlaneCurve, std::int64_t>> supp_x(const LadicFunction& f);

struct SubfieldResult {
  bool ok = false;
  /// x with every nonconstant part of f and g in k(x).
  std::optional<RatFunc> generator;
  /// Each part written as U(x)/V(x): coefficient lists low to high.
  std::vector<std::pair<std::vector<ff::Elem>, std::vector<ff::Elem>>> expressions;
  std::vector<PlaneCurve> shared_support;
  /// Residue certificate on failure.
  std::optional<PlaneCurve> witness_curve;
  std::optional<val::URat> witness_residue;
  std::size_t candidates_tried = 0;
  std::string reason;
};

SubfieldResult gff_subfield(const LadicFunction& f, const LadicFunction& g);
using val::express_in;

}  // namespace gfl::ladic

#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gfl/ffcore/poly.hpp"

namespace gfl::val {

using ff::Elem;
using ff::Field;
using ff::UPoly;

/// Polynomial in x, y over a finite field, stored as sum_j c_j(x) y^j.
class BPoly {
 public:
  BPoly() = default;
  explicit BPoly(Field f) : field_(std::move(f)) {}
  /// Coefficients of y^0, y^1, ... as polynomials in x.
  BPoly(Field f, std::vector<UPoly> ycoeffs);
  /// From (i, j, c) triples meaning c x^i y^j.
  static BPoly from_terms(const Field& f, const std::vector<std::tuple<int, int, Elem>>& terms);
  static BPoly constant(const Field& f, Elem c);
  static BPoly x(const Field& f);
  static BPoly y(const Field& f);
  static BPoly from_x(const UPoly& p);
  static BPoly from_y(const UPoly& p);

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  int deg_y() const { return static_cast<int>(c_.size()) - 1; }
  int deg_x() const;
  int total_degree() const;
  const std::vector<UPoly>& ycoeffs() const { return c_; }
  UPoly ycoeff(int j) const;
  Elem coeff(int i, int j) const;
  /// Coefficients of x^0, x^1, ... as polynomials in y.
  std::vector<UPoly> xcoeffs() const;
  /// Nonzero terms (i, j, c), sorted by (i + j, i) descending.
  std::vector<std::tuple<int, int, Elem>> terms() const;
  /// Leading coefficient under graded lex order with x > y.
  Elem grlex_lead() const;
  /// Homogeneous part of top total degree.
  BPoly top_part() const;

  BPoly operator+(const BPoly& o) const;
  BPoly operator-(const BPoly& o) const;
  BPoly operator-() const;
  BPoly operator*(const BPoly& o) const;
  BPoly scaled(Elem s) const;
  BPoly mul_x(const UPoly& p) const;
  BPoly pow(unsigned n) const;
  BPoly swap_xy() const;

  Elem eval(Elem a, Elem b) const;
  /// P(x, g(x)).
  UPoly subst_y(const UPoly& g) const;
  /// P(g(y), y) as a polynomial in y.
  UPoly subst_x(const UPoly& g) const;

  bool operator==(const BPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BPoly& o) const { return !(*this == o); }
  bool operator<(const BPoly& o) const;

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<UPoly> c_;
};

/// Gcd of the coefficients c_j(x).
UPoly content_y(const BPoly& p);
/// Exact quotient; throws std::domain_error if b does not divide a.
BPoly exact_div(const BPoly& a, const BPoly& b);
/// a / b if b divides a.
std::optional<BPoly> try_div(const BPoly& a, const BPoly& b);
/// Gcd normalized to grlex leading coefficient 1.
BPoly gcd(const BPoly& a, const BPoly& b);
/// Scales so the grlex leading coefficient is 1.
BPoly normalized(const BPoly& p);

}  // namespace gfl::val

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gfl/ffcore/field.hpp"

namespace gfl::ff {

/// Dense univariate polynomial over a finite field; coefficients low-to-high,
/// always trimmed so the leading coefficient is nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Field f) : field_(std::move(f)) {}
  UPoly(Field f, std::vector<Elem> coeffs);

  static UPoly constant(const Field& f, Elem c) { return UPoly(f, {c}); }
  static UPoly monomial(const Field& f, Elem c, int deg);
  static UPoly variable(const Field& f) { return monomial(f, 1, 1); }
  /// u - c
  static UPoly linear(const Field& f, Elem root);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  UPoly monic() const;

  Elem eval(Elem x) const;
  UPoly derivative() const;
  /// this(g)
  UPoly compose(const UPoly& g) const;
  UPoly scaled(Elem s) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly pow(unsigned n) const;

  bool operator==(const UPoly& o) const { return c_ == o.c_ && field_ == o.field_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }
  /// Canonical order: by degree, then coefficients from the top down.
  bool operator<(const UPoly& o) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Field field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly powmod(UPoly base, std::uint64_t e, const UPoly& mod);
/// Multiplicity of the irreducible pi in a (a != 0).
int multiplicity(const UPoly& a, const UPoly& pi);

struct Factorization {
  Elem unit = 1;
  /// Monic irreducible factors with multiplicities, in canonical order.
  std::vector<std::pair<UPoly, int>> factors;
};

/// Complete factorization over the coefficient field. Deterministic.
Factorization factor(const UPoly& f);
bool is_irreducible(const UPoly& f);
/// All monic irreducible polynomials of the given degree, canonical order.
std::vector<UPoly> monic_irreducibles(const Field& f, int degree);
/// GF(p)[u]/(pi) for a monic irreducible pi over a prime field.
Field residue_field(const UPoly& pi);

}  // namespace gfl::ff

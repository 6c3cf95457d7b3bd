#pragma once

#include <string>

#include "gfl/valuation/bpoly.hpp"

namespace gfl::val {

/// Rational function in one variable over a finite field: num/den coprime, den monic.
class URat {
 public:
  URat() = default;
  explicit URat(const UPoly& num);
  URat(const UPoly& num, const UPoly& den);
  static URat constant(const Field& f, Elem c) { return URat(UPoly::constant(f, c)); }
  static URat variable(const Field& f) { return URat(UPoly::variable(f)); }

  const Field& field() const { return num_.field(); }
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// max(deg num, deg den).
  int degree() const;

  URat operator+(const URat& o) const;
  URat operator-(const URat& o) const;
  URat operator*(const URat& o) const;
  URat operator/(const URat& o) const;
  URat pow(int n) const;
  /// this(g)
  URat compose(const URat& g) const;
  /// Representative modulo nonzero constants: numerator made monic.
  URat modulo_constants() const;

  bool operator==(const URat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const URat& o) const { return !(*this == o); }
  bool operator<(const URat& o) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  UPoly num_, den_;
};

/// Element of k(t) (nvars = 1, variable stored as x) or k(x, y) (nvars = 2).
/// Canonical: gcd(num, den) = 1 and den has grlex leading coefficient 1.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const BPoly& num, const BPoly& den, int nvars = 2);
  RatFunc(const BPoly& num, int nvars = 2);  // NOLINT
  static RatFunc constant(const Field& f, Elem c, int nvars = 2);
  static RatFunc x(const Field& f) { return RatFunc(BPoly::x(f)); }
  static RatFunc y(const Field& f) { return RatFunc(BPoly::y(f)); }
  static RatFunc t(const Field& f) { return RatFunc(BPoly::x(f), 1); }
  static RatFunc from_urat(const URat& r);

  const Field& field() const { return num_.field(); }
  int nvars() const { return nvars_; }
  const BPoly& num() const { return num_; }
  const BPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// For nvars = 1.
  URat as_urat() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc scaled(Elem s) const;
  RatFunc pow(int n) const;

  bool operator==(const RatFunc& o) const { return nvars_ == o.nvars_ && num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  int nvars_ = 2;
  BPoly num_, den_;
};

}  // namespace gfl::val

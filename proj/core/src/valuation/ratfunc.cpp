#include "gfl/valuation/ratfunc.hpp"

#include <stdexcept>

namespace gfl::val {

URat::URat(const UPoly& num) : num_(num), den_(UPoly::constant(num.field(), 1)) {}

URat::URat(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = num;
    den_ = UPoly::constant(num.field(), 1);
    return;
  }
  const UPoly g = gcd(num, den);
  num_ = ff::exact_div(num, g);
  den_ = ff::exact_div(den, g);
  const Elem lc = den_.lead();
  if (lc != 1) {
    const Elem inv = num.field().inv(lc);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

int URat::degree() const { return std::max(num_.degree(), den_.degree()); }

URat URat::operator+(const URat& o) const { return URat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
URat URat::operator-(const URat& o) const { return URat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
URat URat::operator*(const URat& o) const { return URat(num_ * o.num_, den_ * o.den_); }

URat URat::operator/(const URat& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return URat(num_ * o.den_, den_ * o.num_);
}

URat URat::pow(int n) const {
  if (n < 0) return URat::constant(field(), 1) / pow(-n);
  return URat(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

URat URat::compose(const URat& g) const {
  // Horner on numerator and denominator separately.
  auto eval = [&](const UPoly& p) {
    URat r = URat::constant(field(), 0);
    for (int i = p.degree(); i >= 0; --i) r = r * g + URat::constant(field(), p.coeff(i));
    return r;
  };
  return eval(num_) / eval(den_);
}

URat URat::modulo_constants() const {
  if (num_.is_zero() || num_.lead() == 1) return *this;
  return URat(num_.monic(), den_);
}

bool URat::operator<(const URat& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

std::string URat::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFunc::RatFunc(const BPoly& num, const BPoly& den, int nvars) : nvars_(nvars) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (nvars == 1 && (num.deg_y() > 0 || den.deg_y() > 0)) throw std::invalid_argument("univariate function mentions y");
  if (num.is_zero()) {
    num_ = num;
    den_ = BPoly::constant(num.field(), 1);
    return;
  }
  const BPoly g = gcd(num, den);
  num_ = exact_div(num, g);
  den_ = exact_div(den, g);
  const Elem lc = den_.grlex_lead();
  if (lc != 1) {
    const Elem inv = num.field().inv(lc);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc::RatFunc(const BPoly& num, int nvars) : RatFunc(num, BPoly::constant(num.field(), 1), nvars) {}

RatFunc RatFunc::constant(const Field& f, Elem c, int nvars) { return RatFunc(BPoly::constant(f, c), nvars); }

RatFunc RatFunc::from_urat(const URat& r) { return RatFunc(BPoly::from_x(r.num()), BPoly::from_x(r.den()), 1); }

URat RatFunc::as_urat() const {
  if (nvars_ != 1) throw std::invalid_argument("not a univariate function");
  return URat(num_.ycoeff(0), den_.ycoeff(0));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_, nvars_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_, nvars_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, nvars_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_, nvars_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_, nvars_);
}

RatFunc RatFunc::scaled(Elem s) const { return RatFunc(num_.scaled(s), den_, nvars_); }

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return RatFunc(den_.pow(static_cast<unsigned>(-n)), num_.pow(static_cast<unsigned>(-n)), nvars_);
  return RatFunc(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), nvars_);
}

std::string RatFunc::to_string() const {
  std::string n = num_.to_string(), d = den_.to_string();
  if (nvars_ == 1) {
    for (auto& c : n) c = c == 'x' ? 't' : c;
    for (auto& c : d) c = c == 'x' ? 't' : c;
  }
  if (den_.is_constant()) return n;
  return "(" + n + ")/(" + d + ")";
}

}  // namespace gfl::val

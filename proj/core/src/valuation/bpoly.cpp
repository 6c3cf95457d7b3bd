#include "gfl/valuation/bpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gfl::val {

BPoly::BPoly(Field f, std::vector<UPoly> ycoeffs) : field_(std::move(f)), c_(std::move(ycoeffs)) { trim(); }

void BPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BPoly BPoly::from_terms(const Field& f, const std::vector<std::tuple<int, int, Elem>>& terms) {
  int dy = -1;
  for (const auto& [i, j, c] : terms) dy = std::max(dy, j);
  std::vector<UPoly> ys(static_cast<std::size_t>(dy + 1), UPoly(f));
  for (const auto& [i, j, c] : terms) ys[j] += UPoly::monomial(f, c, i);
  return BPoly(f, std::move(ys));
}

BPoly BPoly::constant(const Field& f, Elem c) { return BPoly(f, {UPoly::constant(f, c)}); }
BPoly BPoly::x(const Field& f) { return BPoly(f, {UPoly::variable(f)}); }
BPoly BPoly::y(const Field& f) { return BPoly(f, {UPoly(f), UPoly::constant(f, 1)}); }
BPoly BPoly::from_x(const UPoly& p) { return BPoly(p.field(), {p}); }

BPoly BPoly::from_y(const UPoly& p) {
  std::vector<UPoly> ys;
  for (Elem c : p.coeffs()) ys.push_back(UPoly::constant(p.field(), c));
  return BPoly(p.field(), std::move(ys));
}

bool BPoly::is_constant() const { return c_.empty() || (c_.size() == 1 && c_[0].is_constant()); }

int BPoly::deg_x() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

int BPoly::total_degree() const {
  int d = -1;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!c_[j].is_zero()) d = std::max(d, c_[j].degree() + static_cast<int>(j));
  }
  return d;
}

UPoly BPoly::ycoeff(int j) const {
  return j >= 0 && j < static_cast<int>(c_.size()) ? c_[j] : UPoly(field_);
}

Elem BPoly::coeff(int i, int j) const { return ycoeff(j).coeff(i); }

std::vector<UPoly> BPoly::xcoeffs() const {
  const int dx = deg_x();
  std::vector<std::vector<Elem>> cols(static_cast<std::size_t>(dx + 1), std::vector<Elem>(c_.size(), 0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    for (int i = 0; i <= c_[j].degree(); ++i) cols[i][j] = c_[j].coeff(i);
  }
  std::vector<UPoly> out;
  for (auto& col : cols) out.emplace_back(field_, std::move(col));
  return out;
}

std::vector<std::tuple<int, int, Elem>> BPoly::terms() const {
  std::vector<std::tuple<int, int, Elem>> t;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    for (int i = 0; i <= c_[j].degree(); ++i) {
      if (c_[j].coeff(i) != 0) t.emplace_back(i, static_cast<int>(j), c_[j].coeff(i));
    }
  }
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    const int da = std::get<0>(a) + std::get<1>(a), db = std::get<0>(b) + std::get<1>(b);
    if (da != db) return da > db;
    return std::get<0>(a) > std::get<0>(b);
  });
  return t;
}

Elem BPoly::grlex_lead() const {
  const auto t = terms();
  return t.empty() ? 0 : std::get<2>(t.front());
}

BPoly BPoly::top_part() const {
  const int d = total_degree();
  std::vector<std::tuple<int, int, Elem>> top;
  for (const auto& t : terms()) {
    if (std::get<0>(t) + std::get<1>(t) == d) top.push_back(t);
  }
  return from_terms(field_, top);
}

BPoly BPoly::operator+(const BPoly& o) const {
  std::vector<UPoly> r(std::max(c_.size(), o.c_.size()), UPoly(field_));
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (j < c_.size()) r[j] += c_[j];
    if (j < o.c_.size()) r[j] += o.c_[j];
  }
  return BPoly(field_, std::move(r));
}

BPoly BPoly::operator-() const {
  std::vector<UPoly> r;
  for (const auto& c : c_) r.push_back(-c);
  return BPoly(field_, std::move(r));
}

BPoly BPoly::operator-(const BPoly& o) const { return *this + (-o); }

BPoly BPoly::operator*(const BPoly& o) const {
  if (c_.empty() || o.c_.empty()) return BPoly(field_);
  std::vector<UPoly> r(c_.size() + o.c_.size() - 1, UPoly(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return BPoly(field_, std::move(r));
}

BPoly BPoly::scaled(Elem s) const {
  std::vector<UPoly> r;
  for (const auto& c : c_) r.push_back(c.scaled(s));
  return BPoly(field_, std::move(r));
}

BPoly BPoly::mul_x(const UPoly& p) const {
  std::vector<UPoly> r;
  for (const auto& c : c_) r.push_back(c * p);
  return BPoly(field_, std::move(r));
}

BPoly BPoly::pow(unsigned n) const {
  BPoly r = constant(field_, 1), b = *this;
  while (n > 0) {
    if (n & 1U) r = r * b;
    b = b * b;
    n >>= 1U;
  }
  return r;
}

BPoly BPoly::swap_xy() const {
  std::vector<std::tuple<int, int, Elem>> t;
  for (const auto& [i, j, c] : terms()) t.emplace_back(j, i, c);
  return from_terms(field_, t);
}

Elem BPoly::eval(Elem a, Elem b) const {
  Elem r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, b), it->eval(a));
  return r;
}

UPoly BPoly::subst_y(const UPoly& g) const {
  UPoly r(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + *it;
  return r;
}

UPoly BPoly::subst_x(const UPoly& g) const {
  UPoly r(field_);
  const UPoly y = UPoly::variable(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * y + it->compose(g);
  return r;
}

bool BPoly::operator<(const BPoly& o) const {
  if (total_degree() != o.total_degree()) return total_degree() < o.total_degree();
  const auto a = terms(), b = o.terms();
  return a < b;
}

std::string BPoly::to_string() const {
  const auto t = terms();
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, j, c] : t) {
    if (!first) os << " + ";
    first = false;
    const bool unit = c == 1 && (i > 0 || j > 0);
    if (!unit) os << c;
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    if (j > 0) {
      if (!unit || i > 0) os << "*";
      os << "y";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

UPoly content_y(const BPoly& p) {
  UPoly g(p.field());
  for (const auto& c : p.ycoeffs()) g = gcd(g, c);
  return g;
}

std::optional<BPoly> try_div(const BPoly& a, const BPoly& b) {
  if (b.is_zero()) throw std::domain_error("bivariate division by zero");
  const Field& F = a.field();
  if (a.is_zero()) return BPoly(F);
  if (a.deg_y() < b.deg_y()) return std::nullopt;
  BPoly r = a;
  std::vector<UPoly> q(static_cast<std::size_t>(a.deg_y() - b.deg_y() + 1), UPoly(F));
  const UPoly lb = b.ycoeffs().back();
  while (!r.is_zero() && r.deg_y() >= b.deg_y()) {
    auto [qc, rem] = divmod(r.ycoeffs().back(), lb);
    if (!rem.is_zero()) return std::nullopt;
    const int k = r.deg_y() - b.deg_y();
    q[k] = qc;
    std::vector<UPoly> shift(static_cast<std::size_t>(k + 1), UPoly(F));
    shift[k] = qc;
    r = r - BPoly(F, shift) * b;
  }
  if (!r.is_zero()) return std::nullopt;
  return BPoly(F, std::move(q));
}

BPoly exact_div(const BPoly& a, const BPoly& b) {
  auto q = try_div(a, b);
  if (!q) throw std::domain_error("inexact bivariate division");
  return *q;
}

BPoly normalized(const BPoly& p) {
  if (p.is_zero()) return p;
  const Elem lc = p.grlex_lead();
  return lc == 1 ? p : p.scaled(p.field().inv(lc));
}

namespace {

BPoly primitive_part(const BPoly& p) {
  const UPoly c = content_y(p);
  std::vector<UPoly> r;
  for (const auto& cj : p.ycoeffs()) r.push_back(ff::exact_div(cj, c));
  return BPoly(p.field(), std::move(r));
}

BPoly pseudo_remainder(const BPoly& a, const BPoly& b) {
  const Field& F = a.field();
  BPoly r = a;
  const UPoly lb = b.ycoeffs().back();
  while (!r.is_zero() && r.deg_y() >= b.deg_y()) {
    const int k = r.deg_y() - b.deg_y();
    std::vector<UPoly> shift(static_cast<std::size_t>(k + 1), UPoly(F));
    shift[k] = r.ycoeffs().back();
    r = r.mul_x(lb) - BPoly(F, shift) * b;
  }
  return r;
}

}  // namespace

BPoly gcd(const BPoly& a, const BPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const UPoly c = gcd(content_y(a), content_y(b));
  BPoly p = primitive_part(a), q = primitive_part(b);
  if (p.deg_y() < q.deg_y()) std::swap(p, q);
  while (!q.is_zero() && q.deg_y() > 0) {
    BPoly r = pseudo_remainder(p, q);
    p = std::move(q);
    q = r.is_zero() ? r : primitive_part(r);
  }
  // A nonzero remainder of y-degree 0 is a unit after removing content.
  BPoly g = q.is_zero() ? p : BPoly::constant(a.field(), 1);
  return normalized(BPoly::from_x(c) * g);
}

}  // namespace gfl::val

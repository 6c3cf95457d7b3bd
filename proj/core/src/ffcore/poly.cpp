#include "gfl/ffcore/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gfl::ff {

UPoly::UPoly(Field f, std::vector<Elem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(const Field& f, Elem c, int deg) {
  std::vector<Elem> v(static_cast<std::size_t>(deg) + 1, 0);
  v.back() = c;
  return UPoly(f, std::move(v));
}

UPoly UPoly::linear(const Field& f, Elem root) { return UPoly(f, {f.neg(root), 1}); }

UPoly UPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled(field_.inv(c_.back()));
}

Elem UPoly::eval(Elem x) const {
  Elem r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, x), *it);
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(field_);
  std::vector<Elem> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c_[i]);
  return UPoly(field_, std::move(d));
}

UPoly UPoly::compose(const UPoly& g) const {
  UPoly r(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + UPoly::constant(field_, *it);
  return r;
}

UPoly UPoly::scaled(Elem s) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = field_.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  }
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.neg(c_[i]);
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UPoly(field_);
  std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
  }
  return UPoly(field_, std::move(v));
}

UPoly UPoly::pow(unsigned n) const {
  UPoly r = UPoly::constant(field_, 1);
  UPoly b = *this;
  while (n > 0) {
    if (n & 1U) r *= b;
    b *= b;
    n >>= 1U;
  }
  return r;
}

bool UPoly::operator<(const UPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& F = a.field();
  if (a.degree() < b.degree()) return {UPoly(F), a};
  std::vector<Elem> r = a.coeffs();
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const Elem inv_lead = F.inv(b.lead());
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= b.degree(); --k) {
    const Elem c = F.mul(r[k], inv_lead);
    if (c == 0) continue;
    const int shift = k - b.degree();
    q[shift] = c;
    for (int i = 0; i <= b.degree(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, bc[i]));
  }
  return {UPoly(F, std::move(q)), UPoly(F, std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

UPoly powmod(UPoly base, std::uint64_t e, const UPoly& mod) {
  UPoly r = UPoly::constant(mod.field(), 1) % mod;
  base = base % mod;
  while (e > 0) {
    if (e & 1U) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1U;
  }
  return r;
}

int multiplicity(const UPoly& a, const UPoly& pi) {
  if (a.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  int m = 0;
  UPoly x = a;
  while (true) {
    auto [q, r] = divmod(x, pi);
    if (!r.is_zero()) break;
    x = std::move(q);
    ++m;
  }
  return m;
}

namespace {

// p-th root of a polynomial whose derivative vanishes.
UPoly pth_root(const UPoly& f) {
  const Field& F = f.field();
  const std::uint32_t p = F.characteristic();
  // Inverse Frobenius on GF(p^e) is x -> x^(p^(e-1)).
  std::uint64_t exp = 1;
  for (unsigned i = 1; i < F.degree(); ++i) exp *= p;
  std::vector<Elem> c(static_cast<std::size_t>(f.degree() / static_cast<int>(p)) + 1, 0);
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c[i / p] = F.pow(f.coeff(i), exp);
  return UPoly(F, std::move(c));
}

// Squarefree decomposition of a monic polynomial: (factor, multiplicity).
void squarefree(const UPoly& f, int mult, std::vector<std::pair<UPoly, int>>& out) {
  if (f.degree() <= 0) return;
  const Field& F = f.field();
  const UPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<int>(F.characteristic()), out);
    return;
  }
  UPoly c = gcd(f, d);
  UPoly w = exact_div(f, c);
  int i = 1;
  while (!w.is_one()) {
    UPoly y = gcd(w, c);
    UPoly z = exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(z, i * mult);
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) squarefree(pth_root(c), mult * static_cast<int>(F.characteristic()), out);
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<UPoly, int>> distinct_degree(UPoly f) {
  const Field& F = f.field();
  std::vector<std::pair<UPoly, int>> out;
  const UPoly x = UPoly::variable(F);
  UPoly h = x % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, F.order(), f);
    UPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

UPoly random_poly(const Field& F, int max_deg, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(max_deg) + 1);
  for (auto& x : c) x = static_cast<Elem>(rng() % F.order());
  return UPoly(F, std::move(c));
}

// Equal-degree splitting of a product of distinct irreducibles of degree d.
void equal_degree(const UPoly& f, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Field& F = f.field();
  while (true) {
    UPoly a = random_poly(F, f.degree() - 1, rng);
    if (a.degree() <= 0) continue;
    UPoly b;
    if (F.characteristic() == 2) {
      // Trace map a + a^2 + ... + a^(2^(e*d - 1)).
      UPoly t = a % f;
      b = t;
      const unsigned steps = F.degree() * static_cast<unsigned>(d);
      for (unsigned i = 1; i < steps; ++i) {
        t = (t * t) % f;
        b += t;
      }
    } else {
      // a^((q^d - 1)/2) computed as N(a)^((q-1)/2) with N(a) = a^(1 + q + ... + q^(d-1)).
      UPoly t = a % f;
      UPoly norm = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, F.order(), f);
        norm = (norm * t) % f;
      }
      b = powmod(norm, (F.order() - 1) / 2, f) - UPoly::constant(F, 1);
    }
    UPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const UPoly& f) {
  if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");
  Factorization res;
  res.unit = f.lead();
  if (f.degree() == 0) return res;
  std::vector<std::pair<UPoly, int>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (const auto& [g, m] : sqf) {
    for (const auto& [h, d] : distinct_degree(g)) {
      std::vector<UPoly> parts;
      equal_degree(h, d, rng, parts);
      for (auto& pt : parts) res.factors.emplace_back(std::move(pt), m);
    }
  }
  std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  // Merge equal factors arising from different squarefree layers.
  std::vector<std::pair<UPoly, int>> merged;
  for (auto& fm : res.factors) {
    if (!merged.empty() && merged.back().first == fm.first) {
      merged.back().second += fm.second;
    } else {
      merged.push_back(std::move(fm));
    }
  }
  res.factors = std::move(merged);
  return res;
}

bool is_irreducible(const UPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const UPoly m = f.monic();
  if (gcd(m, m.derivative()).degree() != 0) return false;
  auto dd = distinct_degree(m);
  return dd.size() == 1 && dd.front().second == f.degree();
}

std::vector<UPoly> monic_irreducibles(const Field& f, int degree) {
  std::vector<UPoly> out;
  if (degree < 1) return out;
  const std::uint64_t q = f.order();
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= q;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Elem> c(static_cast<std::size_t>(degree) + 1);
    std::uint64_t r = idx;
    for (int i = 0; i < degree; ++i) {
      c[i] = static_cast<Elem>(r % q);
      r /= q;
    }
    c[degree] = 1;
    UPoly p(f, std::move(c));
    if (is_irreducible(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Field residue_field(const UPoly& pi) {
  if (!pi.field().is_prime()) throw std::invalid_argument("residue_field needs a prime base field");
  if (!is_irreducible(pi)) throw std::invalid_argument("residue_field needs an irreducible polynomial");
  return Field::quotient(pi.field().characteristic(), pi.monic().coeffs());
}

}  // namespace gfl::ff

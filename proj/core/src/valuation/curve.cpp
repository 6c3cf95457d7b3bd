#include "gfl/valuation/curve.hpp"

#include <algorithm>
#include <map>

namespace gfl::val {

ClosedPoint ClosedPoint::at_infinity(const Field& f) {
  ClosedPoint p;
  p.field = f;
  p.poly = UPoly(f);
  p.infinity = true;
  return p;
}

ClosedPoint ClosedPoint::rational(const Field& f, Elem a) {
  ClosedPoint p;
  p.field = f;
  p.poly = UPoly::linear(f, a);
  return p;
}

ClosedPoint ClosedPoint::from_poly(const UPoly& q) {
  if (!ff::is_irreducible(q)) throw std::invalid_argument("closed point needs an irreducible polynomial: " + q.to_string());
  ClosedPoint p;
  p.field = q.field();
  p.poly = q.monic();
  return p;
}

bool ClosedPoint::operator<(const ClosedPoint& o) const {
  if (infinity != o.infinity) return !infinity;
  if (infinity) return false;
  return poly < o.poly;
}

std::string ClosedPoint::to_string(const std::string& var) const {
  return infinity ? "inf" : "[" + poly.to_string(var) + "]";
}

int ord(const ClosedPoint& P, const UPoly& f) {
  if (f.is_zero()) throw std::domain_error("order of the zero function");
  if (P.infinity) return -f.degree();
  return ff::multiplicity(f, P.poly);
}

int ord(const ClosedPoint& P, const URat& f) {
  if (f.is_zero()) throw std::domain_error("order of the zero function");
  if (P.infinity) return f.den().degree() - f.num().degree();
  return ff::multiplicity(f.num(), P.poly) - ff::multiplicity(f.den(), P.poly);
}

std::vector<ClosedPoint> closed_points(const Field& f, int max_degree) {
  std::vector<ClosedPoint> out;
  for (int d = 1; d <= max_degree; ++d) {
    for (auto& p : ff::monic_irreducibles(f, d)) {
      ClosedPoint c;
      c.field = f;
      c.poly = std::move(p);
      out.push_back(std::move(c));
    }
  }
  out.push_back(ClosedPoint::at_infinity(f));
  return out;
}

namespace {

// Image of a base-field polynomial evaluated at a point of an extension
// K = GF(p)[u]/(pi); base elements embed as constant digits.
Elem eval_in(const Field& K, const UPoly& p, Elem alpha) {
  Elem r = 0;
  for (int i = p.degree(); i >= 0; --i) r = K.add(K.mul(r, alpha), p.coeff(i));
  return r;
}

}  // namespace

PlaneCurve PlaneCurve::from_poly(const BPoly& p0) {
  if (p0.is_zero() || p0.is_constant()) throw UnsupportedCurve("a curve needs a nonconstant polynomial");
  const Field& F = p0.field();
  PlaneCurve c;
  c.base_ = F;
  c.residue_ = F;
  auto make_vertical = [&](const UPoly& pi, bool in_x) {
    if (!ff::is_irreducible(pi)) throw std::invalid_argument("reducible polynomial is not a curve: " + pi.to_string());
    c.form_ = CurveForm::Vertical;
    c.v_is_x_ = in_x;
    c.pi_ = pi.monic();
    c.poly_ = in_x ? BPoly::from_x(c.pi_) : BPoly::from_y(c.pi_);
    c.residue_ = ff::residue_field(c.pi_);
    c.g_ = UPoly(F);
  };
  auto make_graph = [&](const UPoly& g, bool v_is_x) {
    c.form_ = CurveForm::Graph;
    c.v_is_x_ = v_is_x;
    c.g_ = g;
    c.pi_ = UPoly(F);
    c.poly_ = v_is_x ? BPoly::x(F) - BPoly::from_y(g) : BPoly::y(F) - BPoly::from_x(g);
  };
  if (p0.deg_y() <= 0) {
    const UPoly px = p0.ycoeff(0);
    if (px.degree() == 1) {
      make_graph(UPoly::constant(F, F.neg(F.div(px.coeff(0), px.coeff(1)))), true);
    } else {
      make_vertical(px, true);
    }
    return c;
  }
  const auto xc = p0.xcoeffs();
  if (p0.deg_x() <= 0) {
    const UPoly py = xc[0];
    if (py.degree() == 1) {
      make_graph(UPoly::constant(F, F.neg(F.div(py.coeff(0), py.coeff(1)))), false);
    } else {
      make_vertical(py, false);
    }
    return c;
  }
  if (p0.deg_x() == 1 && xc[1].is_constant()) {
    const Elem a = xc[1].coeff(0);
    make_graph((-xc[0]).scaled(F.inv(a)), true);
    return c;
  }
  if (p0.deg_y() == 1 && p0.ycoeff(1).is_constant()) {
    const Elem b = p0.ycoeff(1).coeff(0);
    make_graph((-p0.ycoeff(0)).scaled(F.inv(b)), false);
    return c;
  }
  throw UnsupportedCurve("curve outside the supported class: " + p0.to_string());
}

PlaneCurve PlaneCurve::line_at_infinity(const Field& f) {
  PlaneCurve c;
  c.form_ = CurveForm::Infinity;
  c.base_ = f;
  c.residue_ = f;
  c.poly_ = BPoly(f);
  c.g_ = UPoly(f);
  c.pi_ = UPoly(f);
  return c;
}

int PlaneCurve::degree() const { return is_infinity() ? 1 : poly_.total_degree(); }

std::string PlaneCurve::param_name() const {
  switch (form_) {
    case CurveForm::Graph:
      return v_is_x_ ? "y" : "x";
    case CurveForm::Vertical:
      return v_is_x_ ? "y" : "x";
    case CurveForm::Infinity:
      return "s";
  }
  return "w";
}

UPoly PlaneCurve::restrict_poly(const BPoly& P) const {
  switch (form_) {
    case CurveForm::Graph:
      return v_is_x_ ? P.subst_x(g_) : P.subst_y(g_);
    case CurveForm::Vertical: {
      const Elem alpha = residue_.generator();
      std::vector<Elem> coeffs;
      for (const auto& c : v_is_x_ ? P.ycoeffs() : P.xcoeffs()) coeffs.push_back(eval_in(residue_, c, alpha));
      return UPoly(residue_, std::move(coeffs));
    }
    case CurveForm::Infinity:
      break;
  }
  throw std::logic_error("restrict_poly on the line at infinity");
}

int PlaneCurve::multiplicity(const BPoly& P) const {
  if (is_infinity()) throw std::logic_error("multiplicity along the line at infinity");
  if (P.is_zero()) throw std::domain_error("multiplicity of the zero polynomial");
  int m = 0;
  BPoly r = P;
  while (restrict_poly(r).is_zero()) {
    r = exact_div(r, poly_);
    ++m;
  }
  return m;
}

int PlaneCurve::ord(const RatFunc& f) const {
  if (f.is_zero()) throw std::domain_error("valuation of the zero function");
  if (is_infinity()) return f.den().total_degree() - f.num().total_degree();
  return multiplicity(f.num()) - multiplicity(f.den());
}

URat PlaneCurve::leading_restriction(const RatFunc& f) const {
  if (f.is_zero()) throw std::domain_error("restriction of the zero function");
  if (is_infinity()) {
    auto top = [&](const BPoly& p) {
      std::vector<Elem> c(static_cast<std::size_t>(p.total_degree()) + 1, 0);
      for (const auto& [i, j, a] : p.top_part().terms()) c[j] = a;
      return UPoly(base_, std::move(c));
    };
    return URat(top(f.num()), top(f.den()));
  }
  auto strip = [&](BPoly p) {
    while (restrict_poly(p).is_zero()) p = exact_div(p, poly_);
    return restrict_poly(p);
  };
  return URat(strip(f.num()), strip(f.den()));
}

RatFunc PlaneCurve::uniformizer(const std::vector<PlaneCurve>& avoid) const {
  const Field& F = base_;
  auto avoided = [&](const PlaneCurve& c) { return c == *this || std::find(avoid.begin(), avoid.end(), c) != avoid.end(); };
  auto line = [&]() -> BPoly {
    for (int var = 0; var < 2; ++var) {
      for (Elem a = 0; a < F.order(); ++a) {
        const UPoly lin = UPoly::linear(F, a);
        const BPoly l = var == 0 ? BPoly::from_x(lin) : BPoly::from_y(lin);
        if (!avoided(from_poly(l))) return l;
      }
    }
    throw std::logic_error("no auxiliary line available");
  };
  if (is_infinity()) return RatFunc(BPoly::constant(F, 1), line());
  const bool avoid_inf = std::any_of(avoid.begin(), avoid.end(), [](const PlaneCurve& c) { return c.is_infinity(); });
  if (!avoid_inf) return RatFunc(poly_);
  return RatFunc(poly_, line().pow(static_cast<unsigned>(degree())));
}

bool PlaneCurve::operator<(const PlaneCurve& o) const {
  if (is_infinity() != o.is_infinity()) return !is_infinity();
  return poly_ < o.poly_;
}

std::string PlaneCurve::to_string() const { return is_infinity() ? "inf" : "{" + poly_.to_string() + " = 0}"; }

namespace {

std::vector<UPoly> candidates(const Field& F, int deg) {
  std::vector<UPoly> out;
  std::uint64_t total = 1;
  for (int i = 0; i < deg; ++i) total *= F.order();
  for (Elem lead = 1; lead < F.order(); ++lead) {
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
      std::uint64_t r = code;
      for (int i = 0; i < deg; ++i) {
        c[i] = static_cast<Elem>(r % F.order());
        r /= F.order();
      }
      c[deg] = lead;
      out.emplace_back(F, std::move(c));
    }
  }
  return out;
}

void add_component(std::map<PlaneCurve, int>& acc, const PlaneCurve& c, int m) { acc[c] += m; }

}  // namespace

std::vector<Component> factor_components(const BPoly& P) {
  if (P.is_zero()) throw std::domain_error("components of the zero polynomial");
  const Field& F = P.field();
  std::map<PlaneCurve, int> acc;
  // Univariate factors in x.
  const UPoly cx = content_y(P);
  for (const auto& [pi, m] : ff::factor(cx).factors) add_component(acc, PlaneCurve::from_poly(BPoly::from_x(pi)), m);
  std::vector<UPoly> ys;
  for (const auto& c : P.ycoeffs()) ys.push_back(ff::exact_div(c, cx));
  BPoly rest(F, ys);
  // Univariate factors in y.
  UPoly cy(F);
  for (const auto& c : rest.xcoeffs()) cy = gcd(cy, c);
  for (const auto& [pi, m] : ff::factor(cy).factors) add_component(acc, PlaneCurve::from_poly(BPoly::from_y(pi)), m);
  rest = exact_div(rest, BPoly::from_y(cy));
  // Graph factors x - g(y), deg g in {1, 2}.
  for (int d = 1; d <= 2 && rest.deg_x() >= 1; ++d) {
    if (d > rest.deg_y()) break;
    for (const auto& g : candidates(F, d)) {
      if (rest.deg_x() < 1) break;
      const BPoly lin = BPoly::x(F) - BPoly::from_y(g);
      int m = 0;
      while (rest.deg_x() >= 1 && rest.subst_x(g).is_zero()) {
        rest = exact_div(rest, lin);
        ++m;
      }
      if (m > 0) add_component(acc, PlaneCurve::from_poly(lin), m);
    }
  }
  // Graph factors y - g(x), deg g = 2.
  if (rest.deg_y() >= 1 && rest.deg_x() >= 2) {
    for (const auto& g : candidates(F, 2)) {
      if (rest.deg_y() < 1) break;
      const BPoly par = BPoly::y(F) - BPoly::from_x(g);
      int m = 0;
      while (rest.deg_y() >= 1 && rest.subst_y(g).is_zero()) {
        rest = exact_div(rest, par);
        ++m;
      }
      if (m > 0) add_component(acc, PlaneCurve::from_poly(par), m);
    }
  }
  if (!rest.is_constant()) throw UnsupportedCurve("factor outside the supported curve class: " + rest.to_string());
  std::vector<Component> out;
  for (const auto& [c, m] : acc) out.push_back({c, m});
  return out;
}

std::vector<Component> divisor(const RatFunc& f) {
  if (f.is_zero()) throw std::domain_error("divisor of the zero function");
  std::map<PlaneCurve, int> acc;
  for (const auto& c : factor_components(f.num())) acc[c.curve] += c.mult;
  for (const auto& c : factor_components(f.den())) acc[c.curve] -= c.mult;
  const int inf = PlaneCurve::line_at_infinity(f.field()).ord(f);
  if (inf != 0) acc[PlaneCurve::line_at_infinity(f.field())] += inf;
  std::vector<Component> out;
  for (const auto& [c, m] : acc) {
    if (m != 0) out.push_back({c, m});
  }
  return out;
}

std::vector<PlaneCurve> support_with_infinity(const RatFunc& f) {
  std::vector<PlaneCurve> out;
  for (const auto& c : divisor(f)) {
    if (!c.curve.is_infinity()) out.push_back(c.curve);
  }
  out.push_back(PlaneCurve::line_at_infinity(f.field()));
  return out;
}

}  // namespace gfl::val

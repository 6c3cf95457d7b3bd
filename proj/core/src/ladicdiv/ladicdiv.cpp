#include "gfl/ladicdiv/ladicdiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gfl::ladic {

using ff::Elem;
using ff::Field;
using val::BPoly;

LadicDivisor LadicDivisor::canonical() const {
  std::map<PlaneCurve, std::int64_t> acc;
  for (const auto& [c, a] : terms) acc[c] = ring.reduce(acc[c] + a);
  LadicDivisor out;
  out.ring = ring;
  for (const auto& [c, a] : acc) {
    if (a != 0) out.terms.emplace_back(c, a);
  }
  return out;
}

LadicDivisor LadicDivisor::operator-(const LadicDivisor& o) const {
  LadicDivisor out = *this;
  for (const auto& [c, a] : o.terms) out.terms.emplace_back(c, -a);
  return out.canonical();
}

std::string LadicDivisor::to_string() const {
  const LadicDivisor c = canonical();
  if (c.terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    if (i) os << " + ";
    os << c.terms[i].second << "*" << c.terms[i].first.to_string();
  }
  return os.str();
}

std::int64_t class_map(const LadicDivisor& D) {
  std::int64_t s = 0;
  for (const auto& [c, a] : D.terms) s = D.ring.reduce(s + D.ring.reduce(a) * c.degree());
  return s;
}

LadicDivisor divisor_of(const LadicFunction& f) {
  LadicDivisor D;
  D.ring = f.ring;
  std::int64_t w = 1;
  for (const auto& part : f.parts) {
    if (part.is_zero()) throw std::domain_error("l-adic function with a zero part");
    for (const auto& comp : val::divisor(part)) D.terms.emplace_back(comp.curve, D.ring.reduce(w * comp.mult));
    w = D.ring.reduce(w * f.ring.ell);
  }
  return D.canonical();
}

RatFunc CurveMonomial::to_ratfunc(const std::vector<PlaneCurve>& curves) const {
  const Field& F = curves.front().base_field();
  BPoly num = BPoly::constant(F, 1), den = BPoly::constant(F, 1);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].is_infinity() || exponents[i] == 0) continue;
    const BPoly p = curves[i].poly().pow(static_cast<unsigned>(std::abs(exponents[i])));
    if (exponents[i] > 0) num = num * p;
    else den = den * p;
  }
  return RatFunc(num, den);
}

std::string CurveMonomial::to_string(const std::vector<PlaneCurve>& curves) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) os << " * ";
    first = false;
    os << "(" << curves[i].to_string() << ")^" << exponents[i];
  }
  return first ? "1" : os.str();
}

namespace {

// Divisor of a curve monomial recomputed by factoring its expansion.
LadicDivisor factored_divisor(const CurveMonomial& f, const std::vector<PlaneCurve>& curves, lat::Zl ring) {
  LadicFunction lf{ring, {f.to_ratfunc(curves)}};
  return divisor_of(lf);
}

LadicDivisor scaled_sum(const std::vector<LadicDivisor>& ds, const std::vector<std::int64_t>& a, lat::Zl ring) {
  LadicDivisor out;
  out.ring = ring;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (const auto& [c, x] : ds[i].terms) out.terms.emplace_back(c, ring.reduce(ring.reduce(a[i]) * x));
  }
  return out.canonical();
}

}  // namespace

Decomposition dd_decompose(const LadicDivisor& D0) {
  const LadicDivisor D = D0.canonical();
  if (class_map(D) != 0) throw std::invalid_argument("divisor class is nonzero");
  const lat::Zl& R = D.ring;
  const std::int64_t M = R.modulus();
  Decomposition dec;
  const std::size_t n = D.terms.size();
  for (const auto& [c, a] : D.terms) dec.support.push_back(c);
  if (n == 0) {
    dec.regrouped.exponents = {};
    dec.basis_lifts_independent = dec.regrouped_lifts_independent = true;
    return dec;
  }
  lat::IMat deg(1, lat::IVec(n));
  for (std::size_t i = 0; i < n; ++i) deg[0][i] = dec.support[i].degree();
  auto kernel = lat::integer_kernel(deg, static_cast<int>(n));
  for (auto& v : kernel) {
    auto first = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (first != v.end() && *first < 0) {
      for (auto& x : v) x = -x;
    }
    dec.functions.push_back({v});
  }
  const std::size_t k = kernel.size();
  lat::IMat A(n, lat::IVec(k));
  lat::IVec b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = D.terms[i].second;
    for (std::size_t j = 0; j < k; ++j) A[i][j] = kernel[j][i];
  }
  const auto sol = k == 0 ? std::nullopt : lat::solve_mod(A, static_cast<int>(k), b, M);
  if (!sol) throw std::invalid_argument("divisor is not a combination of principal divisors mod l^m");
  dec.coefficients = *sol;

  // Integer lift of D inside the degree-zero lattice, then split off the content.
  lat::IVec lift(n, 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) lift[i] += dec.coefficients[j] * kernel[j][i];
  }
  std::int64_t g = 0;
  for (auto x : lift) g = lat::gcd(g, x);
  dec.regrouped.exponents.assign(n, 0);
  if (g != 0) {
    for (std::size_t i = 0; i < n; ++i) dec.regrouped.exponents[i] = lift[i] / g;
  }
  dec.regrouped_coefficient = R.reduce(g);

  std::size_t nonzero = 0;
  lat::IMat row(1);
  for (auto a : dec.coefficients) {
    if (a != 0) {
      row[0].push_back(a);
      ++nonzero;
    }
  }
  dec.basis_lifts_independent = nonzero == 0 || lat::integer_rank(row, static_cast<int>(nonzero)) == static_cast<int>(nonzero);
  dec.regrouped_lifts_independent = true;
  return dec;
}

LadicDivisor reconstruction_residual(const LadicDivisor& D, const Decomposition& dec) {
  std::vector<LadicDivisor> ds;
  for (const auto& f : dec.functions) ds.push_back(factored_divisor(f, dec.support, D.ring));
  return D - scaled_sum(ds, dec.coefficients, D.ring);
}

LadicDivisor regrouped_residual(const LadicDivisor& D, const Decomposition& dec) {
  if (dec.support.empty()) return D.canonical();
  LadicDivisor div;
  div.ring = D.ring;
  // Exponents may be large; accumulate div(F) from the curve list instead of expanding F.
  std::int64_t inf = 0;
  for (std::size_t i = 0; i < dec.support.size(); ++i) {
    const auto e = dec.regrouped.exponents[i];
    if (dec.support[i].is_infinity()) continue;
    div.terms.emplace_back(dec.support[i], e);
    inf -= e * dec.support[i].degree();
  }
  if (inf != 0) div.terms.emplace_back(PlaneCurve::line_at_infinity(dec.support.front().base_field()), inf);
  return D - scaled_sum({div.canonical()}, {dec.regrouped_coefficient}, D.ring);
}

std::vector<std::pair<PlaneCurve, std::int64_t>> supp_x(const LadicFunction& f) { return divisor_of(f).terms; }

using Coeffs = std::vector<Elem>;

namespace {

// Canonical generator of k(P1/P2): reduced echelon basis of span{P1, P2}.
std::optional<RatFunc> canonical_generator(const BPoly& P1, const BPoly& P2) {
  const Field& F = P1.field();
  const auto monos = val::grlex_monomials({P1, P2});
  std::vector<ff::Vec> rows(2, ff::Vec(monos.size(), 0));
  for (std::size_t r = 0; r < monos.size(); ++r) {
    rows[0][r] = P1.coeff(monos[r].first, monos[r].second);
    rows[1][r] = P2.coeff(monos[r].first, monos[r].second);
  }
  ff::rref(F, rows);
  if (rows.size() != 2) return std::nullopt;
  auto to_poly = [&](const ff::Vec& v) {
    std::vector<std::tuple<int, int, Elem>> t;
    for (std::size_t r = 0; r < monos.size(); ++r) {
      if (v[r] != 0) t.emplace_back(monos[r].first, monos[r].second, v[r]);
    }
    return BPoly::from_terms(F, t);
  };
  const RatFunc x(to_poly(rows[0]), to_poly(rows[1]));
  if (x.is_constant()) return std::nullopt;
  return x;
}

std::vector<BPoly> fiber_components(const RatFunc& h) {
  const Field& F = h.field();
  std::vector<BPoly> out;
  auto add = [&](const BPoly& fiber) {
    if (fiber.is_zero()) return;
    try {
      std::vector<BPoly> comps;
      for (const auto& c : val::factor_components(fiber)) comps.push_back(c.curve.poly());
      // Degree deficit of the fiber is carried by the line at infinity.
      const int top = std::max(h.num().total_degree(), h.den().total_degree());
      if (fiber.total_degree() < top) comps.push_back(BPoly::constant(F, 1));
      for (auto& c : comps) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      }
    } catch (const val::UnsupportedCurve&) {
    }
  };
  for (Elem lam = 0; lam < F.order(); ++lam) add(h.num() - h.den().scaled(lam));
  add(h.den());
  return out;
}

}  // namespace

SubfieldResult gff_subfield(const LadicFunction& f, const LadicFunction& g) {
  SubfieldResult res;
  std::vector<RatFunc> parts;
  for (const auto* lf : {&f, &g}) {
    for (const auto& p : lf->parts) {
      if (p.is_zero()) throw std::domain_error("l-adic function with a zero part");
      if (!p.is_constant()) parts.push_back(p);
    }
  }
  try {
    std::set<PlaneCurve> sf;
    for (const auto& [c, a] : supp_x(f)) sf.insert(c);
    for (const auto& [c, a] : supp_x(g)) {
      if (sf.count(c)) res.shared_support.push_back(c);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        const auto sweep = val::residues_vanish_all(parts[i], parts[j]);
        if (!sweep.vanish) {
          res.witness_curve = sweep.witness;
          res.witness_residue = sweep.witness_residue;
          res.reason = "nontrivial residue along " + sweep.witness->to_string();
          return res;
        }
      }
    }
  } catch (const val::UnsupportedCurve& e) {
    res.reason = std::string("unsupported curve: ") + e.what();
    return res;
  }
  if (parts.empty()) {
    res.ok = true;
    res.reason = "all parts are constant";
    return res;
  }

  auto try_generator = [&](const RatFunc& x) {
    ++res.candidates_tried;
    std::vector<std::pair<Coeffs, Coeffs>> ex;
    for (const auto& p : parts) {
      auto e = val::express_in(p, x);
      if (!e) return false;
      ex.push_back(*e);
    }
    res.ok = true;
    res.generator = x;
    res.expressions = ex;
    return true;
  };

  std::vector<std::size_t> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  auto pdeg = [&](std::size_t i) { return std::max(parts[i].num().total_degree(), parts[i].den().total_degree()); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pdeg(a) < pdeg(b); });
  const RatFunc& base = parts[order.front()];
  const auto comps = fiber_components(base);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) pairs.emplace_back(i, j);
  }
  auto cdeg = [&](const std::pair<std::size_t, std::size_t>& p) { return std::max(comps[p.first].total_degree(), comps[p.second].total_degree()); };
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) { return cdeg(a) < cdeg(b); });
  std::set<std::pair<BPoly, BPoly>> seen;
  for (const auto& [i, j] : pairs) {
    const auto x = canonical_generator(comps[i], comps[j]);
    if (!x || !seen.emplace(x->num(), x->den()).second) continue;
    if (try_generator(*x)) return res;
  }
  for (std::size_t i : order) {
    if (try_generator(parts[i])) return res;
  }
  res.reason = "no common generator found among fiber candidates";
  return res;
}

}  // namespace gfl::ladic

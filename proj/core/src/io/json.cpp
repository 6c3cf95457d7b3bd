#include "gfl/io/json.hpp"

#include <stdexcept>

#include "gfl/util/parallel.hpp"

namespace gfl::io {

using ff::Elem;
using ff::Field;
using ff::UPoly;

namespace {

/// Integers of a prime field are reduced; other fields take element labels 0..q-1.
Elem elem_from(const Field& F, const json& v) {
  const auto x = v.get<std::int64_t>();
  if (F.is_prime()) return F.from_int(x);
  if (x < 0 || x >= static_cast<std::int64_t>(F.order())) throw std::invalid_argument("field element out of range");
  return static_cast<Elem>(x);
}

}  // namespace

json field_json(const Field& F) { return {{"p", F.characteristic()}, {"e", F.degree()}}; }

Field field_from(const json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const unsigned e = j.value("e", 1U);
  if (!ff::is_prime_number(p)) throw std::invalid_argument("p must be prime");
  return e == 1 ? Field::prime(p) : Field::galois(p, e);
}

json upoly_json(const UPoly& p) { return p.coeffs(); }

UPoly upoly_from(const Field& F, const json& j) {
  std::vector<Elem> c;
  for (const auto& v : j) c.push_back(elem_from(F, v));
  return UPoly(F, c);
}

json bpoly_json(const val::BPoly& p) {
  json out = json::array();
  for (const auto& [i, k, c] : p.terms()) out.push_back({i, k, c});
  return out;
}

val::BPoly bpoly_from(const Field& F, const json& j) {
  std::vector<std::tuple<int, int, Elem>> terms;
  for (const auto& t : j) terms.emplace_back(t.at(0).get<int>(), t.at(1).get<int>(), elem_from(F, t.at(2)));
  return val::BPoly::from_terms(F, terms);
}

json urat_json(const val::URat& f) { return {{"num", upoly_json(f.num())}, {"den", upoly_json(f.den())}}; }

val::URat urat_from(const Field& F, const json& j) {
  if (j.is_array()) return val::URat(upoly_from(F, j));
  const UPoly den = j.contains("den") ? upoly_from(F, j.at("den")) : UPoly::constant(F, 1);
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return val::URat(upoly_from(F, j.at("num")), den);
}

json ratfunc_json(const val::RatFunc& f) {
  json out = {{"num", bpoly_json(f.num())}, {"den", bpoly_json(f.den())}};
  if (f.nvars() == 1) out["nvars"] = 1;
  return out;
}

val::RatFunc ratfunc_from(const Field& F, const json& j) {
  const int nvars = j.value("nvars", 2);
  const val::BPoly den = j.contains("den") ? bpoly_from(F, j.at("den")) : val::BPoly::constant(F, 1);
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return val::RatFunc(bpoly_from(F, j.at("num")), den, nvars);
}

json point_json(const val::ClosedPoint& P) {
  if (P.infinity) return "inf";
  return upoly_json(P.poly);
}

val::ClosedPoint point_from(const Field& F, const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw std::invalid_argument("unknown point " + j.get<std::string>());
    return val::ClosedPoint::at_infinity(F);
  }
  return val::ClosedPoint::from_poly(upoly_from(F, j));
}

json curve_json(const val::PlaneCurve& C) {
  if (C.is_infinity()) return "inf";
  return bpoly_json(C.poly());
}

val::PlaneCurve curve_from(const Field& F, const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw std::invalid_argument("unknown curve " + j.get<std::string>());
    return val::PlaneCurve::line_at_infinity(F);
  }
  return val::PlaneCurve::from_poly(bpoly_from(F, j));
}

json valuation_json(const val::Valuation& v) {
  switch (v.kind()) {
    case val::ValKind::Point:
      return {{"kind", "point"}, {"point", point_json(v.point())}};
    case val::ValKind::Divisorial:
      return {{"kind", "divisorial"}, {"curve", curve_json(v.curve())}};
    case val::ValKind::Flag:
      return {{"kind", "flag"}, {"curve", curve_json(v.curve())}, {"point", point_json(v.point())}};
  }
  return {};
}

val::Valuation valuation_from(const Field& F, const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "point") return val::Valuation::point(point_from(F, j.at("point")));
  const val::PlaneCurve C = curve_from(F, j.at("curve"));
  if (kind == "divisorial") return val::Valuation::divisorial(C);
  if (kind == "flag") return val::Valuation::flag(C, point_from(C.residue_constants(), j.at("point")));
  throw std::invalid_argument("unknown valuation kind " + kind);
}

json value_json(const val::Value& v) {
  if (v.rank == 1) return v.a;
  return {v.a, v.b};
}

json ring_json(const flag::Ring& R) {
  if (R.integral) return {{"type", "Z"}};
  return {{"type", "Zl"}, {"ell", R.ell}, {"m", R.m}};
}

flag::Ring ring_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Z") return flag::Ring::Z();
  const auto type = j.at("type").get<std::string>();
  if (type == "Z") return flag::Ring::Z();
  if (type == "Zl") return flag::Ring::Zl(j.at("ell").get<std::int64_t>(), j.at("m").get<int>());
  throw std::invalid_argument("unknown ring " + type);
}

json map_json(const flag::HomogeneousMap& mu) {
  json table = json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) table.push_back({mu.points()[i], mu.at(i)});
  json out = {{"p", mu.space().field.characteristic()}, {"n", mu.space().dim}, {"ring", ring_json(mu.ring())}, {"table", table}};
  if (mu.space().field.degree() > 1) out["e"] = mu.space().field.degree();
  return out;
}

flag::HomogeneousMap map_from(const json& j) {
  const Field F = field_from(j);
  const ff::VecSpace V(F, j.at("n").get<int>());
  const flag::Ring R = ring_from(j.at("ring"));
  const auto pts = ff::enumerate_proj_points(V);
  std::vector<std::int64_t> values(pts.size(), 0);
  std::vector<char> seen(pts.size(), 0);
  const auto table = flag::point_table(V);
  for (const auto& row : j.at("table")) {
    ff::Vec v;
    for (const auto& c : row.at(0)) v.push_back(elem_from(F, c));
    if (static_cast<int>(v.size()) != V.dim || ff::is_zero(v)) throw std::invalid_argument("bad point in map table");
    const auto code = ff::encode(F, ff::normalize(F, v));
    const auto idx = table->index.at(code);
    if (idx < 0) throw std::invalid_argument("bad point in map table");
    values[static_cast<std::size_t>(idx)] = row.at(1).get<std::int64_t>();
    seen[static_cast<std::size_t>(idx)] = 1;
  }
  for (char s : seen) {
    if (!s) throw std::invalid_argument("map table does not cover every point");
  }
  return flag::HomogeneousMap(V, R, values);
}

json subspace_json(const ff::Subspace& S) { return S.basis(); }

json flag_json(const flag::Flag& f) {
  json out = json::array();
  for (const auto& S : f.chain) out.push_back(subspace_json(S));
  return out;
}

json galois_json(const curvegal::GaloisElem& mu) {
  json ex = json::array();
  for (const auto& [P, v] : mu.exceptions()) ex.push_back({point_json(P), v});
  return {{"ell", mu.ring().ell}, {"m", mu.ring().m}, {"default", 0}, {"exceptions", ex}};
}

curvegal::GaloisElem galois_from(const Field& F, const lat::Zl& R, const json& j) {
  std::map<val::ClosedPoint, std::int64_t> ex;
  for (const auto& row : j.at("exceptions")) ex[point_from(F, row.at(0))] = row.at(1).get<std::int64_t>();
  return curvegal::GaloisElem(R, j.value("default", std::int64_t{0}), ex);
}

json divisor_json(const curvegal::Divisor& D) {
  json out = json::array();
  for (const auto& [P, c] : D.coeffs) out.push_back({point_json(P), c});
  return out;
}

namespace {

lat::Zl ring_of(const json& j) {
  const auto ell = j.at("ell").get<std::int64_t>();
  const int m = j.at("m").get<int>();
  if (!ff::is_prime_number(static_cast<std::uint64_t>(ell)) || m < 1) throw std::invalid_argument("bad ell or m");
  return lat::Zl(ell, m);
}

json ring_fields(const lat::Zl& R, const Field& F) {
  json out = field_json(F);
  out["ell"] = R.ell;
  out["m"] = R.m;
  return out;
}

}  // namespace

json inertia_json(const curvegal::InertiaData& d, const Field& F) {
  json out = ring_fields(d.ring, F);
  out["points"] = json::array();
  for (const auto& P : d.points) out["points"].push_back(point_json(P));
  out["generators"] = json::array();
  for (const auto& g : d.generators) out["generators"].push_back(galois_json(g));
  return out;
}

curvegal::InertiaData inertia_from(const json& j) {
  const Field F = field_from(j);
  curvegal::InertiaData d;
  d.ring = ring_of(j);
  for (const auto& P : j.at("points")) d.points.push_back(point_from(F, P));
  for (const auto& g : j.at("generators")) d.generators.push_back(galois_from(F, d.ring, g));
  if (d.points.size() != d.generators.size()) throw std::invalid_argument("points and generators differ in number");
  return d;
}

json ladic_divisor_json(const ladic::LadicDivisor& D, const Field& F) {
  json out = ring_fields(D.ring, F);
  out["terms"] = json::array();
  for (const auto& [C, a] : D.terms) out["terms"].push_back({curve_json(C), a});
  return out;
}

ladic::LadicDivisor ladic_divisor_from(const json& j) {
  const Field F = field_from(j);
  ladic::LadicDivisor D{ring_of(j), {}};
  for (const auto& t : j.at("terms")) D.terms.emplace_back(curve_from(F, t.at(0)), t.at(1).get<std::int64_t>());
  return D;
}

json ladic_function_json(const ladic::LadicFunction& f, const Field& F) {
  json out = ring_fields(f.ring, F);
  out["parts"] = json::array();
  for (const auto& p : f.parts) out["parts"].push_back(ratfunc_json(p));
  return out;
}

ladic::LadicFunction ladic_function_from(const json& j) {
  const Field F = field_from(j);
  ladic::LadicFunction f{ring_of(j), {}};
  for (const auto& p : j.at("parts")) f.parts.push_back(ratfunc_from(F, p));
  return f;
}

json incidence_json(const proj::IncidenceStructure& st) {
  json pts = json::array();
  for (std::size_t i = 0; i < st.npoints; ++i) {
    if (st.labels.size() == st.npoints) {
      pts.push_back(st.labels[i]);
    } else {
      pts.push_back(i);
    }
  }
  return {{"points", pts}, {"lines", st.lines}};
}

proj::IncidenceStructure incidence_from(const json& j) {
  proj::IncidenceStructure st;
  const auto& pts = j.at("points");
  st.npoints = pts.size();
  for (const auto& p : pts) st.labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
  for (const auto& l : j.at("lines")) {
    proj::Line line;
    for (const auto& p : l) {
      const auto v = p.get<std::size_t>();
      if (v >= st.npoints) throw std::invalid_argument("line index out of range");
      line.push_back(v);
    }
    st.lines.push_back(std::move(line));
  }
  return st;
}

json coordfield_json(const proj::CoordField& cf) {
  return {{"order", cf.order}, {"field", cf.field.name()}, {"add", cf.add}, {"mul", cf.mul}, {"frame", cf.frame}};
}

std::string digest(const json& j) { return util::hex64(util::fnv1a64(j.dump())); }

}  // namespace gfl::io

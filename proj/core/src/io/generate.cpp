#include "gfl/io/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gfl::gen {

using ff::Elem;
using ff::Field;
using ff::UPoly;
using val::BPoly;
using val::ClosedPoint;
using val::PlaneCurve;
using val::RatFunc;

namespace {

template <class T>
void shuffle(util::Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

PlaneCurve curve(const RatFunc& f) { return PlaneCurve::from_poly(f.num()); }

std::int64_t param_int(const json& params, const char* key, std::int64_t def) {
  return params.contains(key) ? params.at(key).get<std::int64_t>() : def;
}

}  // namespace

val::URat random_urat(util::Rng& rng, const Field& F, int maxdeg) {
  auto poly = [&]() {
    std::vector<Elem> c(static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(maxdeg) + 1)) + 1);
    for (auto& x : c) x = static_cast<Elem>(rng.below(F.order()));
    UPoly p(F, c);
    return p.is_zero() ? UPoly::constant(F, 1) : p;
  };
  const UPoly n = poly();
  return val::URat(n, poly());
}

BPoly random_bpoly(util::Rng& rng, const Field& F, int deg) {
  for (;;) {
    std::vector<std::tuple<int, int, Elem>> terms;
    for (int i = 0; i <= deg; ++i) {
      for (int j = 0; i + j <= deg; ++j) terms.emplace_back(i, j, static_cast<Elem>(rng.below(F.order())));
    }
    BPoly p = BPoly::from_terms(F, terms);
    if (!p.is_zero()) return p;
  }
}

flag::HomogeneousMap random_map(std::uint64_t seed, int n, int values, bool planted) {
  util::Rng rng(seed);
  const ff::VecSpace V(Field::prime(3), n);
  const auto pts = ff::enumerate_proj_points(V);
  std::vector<std::int64_t> vals(pts.size());
  if (!planted) {
    for (auto& v : vals) v = rng.range(0, values - 1);
    return flag::HomogeneousMap(V, flag::Ring::Z(), vals);
  }
  // Random basis b_1..b_n; level k is span(b_1..b_k).
  std::vector<ff::Vec> basis;
  while (static_cast<int>(basis.size()) < n) {
    ff::Vec v(static_cast<std::size_t>(n));
    for (auto& c : v) c = static_cast<Elem>(rng.below(3));
    auto trial = basis;
    trial.push_back(v);
    if (ff::rank(V.field, trial) == static_cast<int>(trial.size())) basis = trial;
  }
  std::vector<ff::Subspace> levels;
  for (int k = 1; k <= n; ++k) levels.push_back(ff::span(V.field, n, std::vector<ff::Vec>(basis.begin(), basis.begin() + k)));
  std::vector<std::int64_t> level_value(static_cast<std::size_t>(n));
  for (auto& c : level_value) c = rng.range(0, values - 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::size_t k = 0;
    while (!levels[k].contains(pts[i])) ++k;
    vals[i] = level_value[k];
  }
  if (rng.coin()) vals[rng.below(vals.size())] = rng.range(0, values - 1);
  return flag::HomogeneousMap(V, flag::Ring::Z(), vals);
}

CPairInstance cpair_instance(std::uint64_t seed, int dim, std::int64_t ell, int m) {
  util::Rng rng(seed);
  const Field F = Field::prime(3);
  const RatFunc X = RatFunc::x(F), Y = RatFunc::y(F);
  auto k = [&](Elem a) { return RatFunc::constant(F, a); };
  const std::vector<PlaneCurve> pool = {curve(X), curve(Y), curve(X - k(1)), curve(Y - k(2)), curve(X + Y - k(1)),
                                        curve(Y - X * X), curve(Y - X * X - k(1)), PlaneCurve::line_at_infinity(F)};
  if (dim == 0) dim = 2 + static_cast<int>(rng.below(2));
  if (m == 0) m = 1 + static_cast<int>(rng.below(3));
  const PlaneCurve& C = pool[rng.below(pool.size())];
  const Elem r = static_cast<Elem>(rng.below(C.residue_constants().order()));
  CPairInstance inst;
  inst.v = val::Valuation::flag(C, ClosedPoint::rational(C.residue_constants(), r));
  for (;;) {
    std::vector<RatFunc> basis;
    for (int i = 0; i < dim; ++i) basis.emplace_back(random_bpoly(rng, F, 2));
    try {
      inst.B = val::FunctionSubspace(basis);
      break;
    } catch (const std::invalid_argument&) {
    }
  }
  inst.ring = flag::Ring::Zl(ell, m);
  inst.mu = val::value_map(inst.B, inst.v, 0, inst.ring);
  inst.mu2 = val::value_map(inst.B, inst.v, 1, inst.ring);
  return inst;
}

ladic::LadicDivisor class_zero_divisor(std::uint64_t seed, int support, lat::Zl ring, std::uint32_t p) {
  if (support < 2 || support > 8) throw std::invalid_argument("support must lie in [2, 8]");
  util::Rng rng(seed);
  const Field F = Field::prime(p);
  const RatFunc X = RatFunc::x(F), Y = RatFunc::y(F);
  auto k = [&](std::int64_t a) { return RatFunc::constant(F, F.from_int(a)); };
  // Lines first: the closing curve is drawn among them.
  const std::vector<PlaneCurve> lines = {curve(X), curve(Y), curve(X + k(1)), curve(Y + X + k(3)), PlaneCurve::line_at_infinity(F)};
  // x^2 + c irreducible: -c is a non-square.
  Elem c = 1;
  for (; c < p; ++c) {
    bool root = false;
    for (Elem r = 0; r < p && !root; ++r) root = F.add(F.mul(r, r), c) == 0;
    if (!root) break;
  }
  const std::vector<PlaneCurve> others = {curve(Y - X * X), curve(X * X + RatFunc::constant(F, c)), curve(X - Y * Y - k(1))};
  const PlaneCurve closing = lines[rng.below(lines.size())];
  std::vector<PlaneCurve> rest;
  for (const auto& c : lines) {
    if (c != closing) rest.push_back(c);
  }
  rest.insert(rest.end(), others.begin(), others.end());
  shuffle(rng, rest);
  for (;;) {
    ladic::LadicDivisor D{ring, {}};
    std::int64_t deg = 0;
    for (int i = 0; i + 1 < support; ++i) {
      const std::int64_t a = rng.range(1, ring.modulus() - 1);
      D.terms.emplace_back(rest[static_cast<std::size_t>(i)], a);
      deg += a * rest[static_cast<std::size_t>(i)].degree();
    }
    if (ring.reduce(deg) == 0) continue;
    D.terms.emplace_back(closing, ring.reduce(-deg));
    return D;
  }
}

curvegal::GaloisElem random_iota(std::uint64_t seed, int support, lat::Zl ring, const Field& F) {
  util::Rng rng(seed);
  auto pts = val::closed_points(F, 2);
  if (support < 0 || static_cast<std::size_t>(support) > pts.size()) throw std::invalid_argument("support exceeds available points");
  shuffle(rng, pts);
  std::map<ClosedPoint, std::int64_t> ex;
  for (int i = 0; i < support; ++i) ex[pts[static_cast<std::size_t>(i)]] = rng.range(1, ring.modulus() - 1);
  return curvegal::GaloisElem(ring, 0, ex);
}

CCInstance cc_instance(std::uint64_t seed, lat::Zl ring, std::uint32_t p, bool corrupt, std::int64_t a) {
  util::Rng rng(seed);
  const Field F = Field::prime(p);
  CCInstance inst;
  inst.A = curvegal::inertia_data(ring, val::closed_points(F, 1));
  if (a != 0) {
    if (!ring.is_unit(a)) throw std::invalid_argument("planted constant must be a unit");
    inst.a = ring.reduce(a);
  } else {
    do {
      inst.a = rng.range(1, ring.modulus() - 1);
    } while (!ring.is_unit(inst.a));
  }
  const auto planted = curvegal::planted(inst.A, inst.a);
  std::vector<std::size_t> perm(planted.points.size());
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(rng, perm);
  inst.B = planted;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    inst.B.points[perm[i]] = planted.points[i];
    inst.B.generators[perm[i]] = planted.generators[i];
  }
  if (corrupt) {
    std::int64_t u = 1;
    while (ring.reduce(u - 1) == 0 || !ring.is_unit(u)) u = rng.range(2, ring.modulus() - 1);
    const std::size_t idx = rng.below(inst.B.generators.size());
    inst.B.generators[idx] = inst.B.generators[idx].scaled(u);
    inst.corrupted = idx;
  }
  return inst;
}

std::vector<std::size_t> match_points(const curvegal::InertiaData& A, const curvegal::InertiaData& B) {
  std::vector<std::size_t> bij(A.points.size());
  std::iota(bij.begin(), bij.end(), 0);
  if (A.points.size() != B.points.size()) return bij;
  std::vector<std::size_t> found;
  for (const auto& P : A.points) {
    const auto it = std::find(B.points.begin(), B.points.end(), P);
    if (it == B.points.end()) return bij;
    found.push_back(static_cast<std::size_t>(it - B.points.begin()));
  }
  return found;
}

SubfieldPair subfield_pair(std::uint64_t seed, bool independent, lat::Zl ring) {
  util::Rng rng(seed);
  const Field F = Field::prime(7);
  const RatFunc X = RatFunc::x(F), Y = RatFunc::y(F);
  auto k = [&](std::int64_t a) { return RatFunc::constant(F, F.from_int(a)); };
  // Products of linear factors in x0 with exponents in {-2, -1, 1, 2}.
  auto product = [&](const RatFunc& x0, int factors) {
    RatFunc f = k(1);
    std::vector<std::int64_t> roots = {0, 1, 2, 3, 4, 5, 6};
    shuffle(rng, roots);
    for (int i = 0; i < factors; ++i) {
      const int e = static_cast<int>(rng.range(1, 2));
      const RatFunc lin = (x0 - k(roots[static_cast<std::size_t>(i)])).pow(e);
      f = (i == 0 || rng.coin()) ? f * lin : f / lin;
    }
    return f * k(rng.range(1, 6));
  };
  SubfieldPair out;
  if (independent) {
    const RatFunc x1 = Y - k(rng.range(0, 6)) * X * X;
    out.f = {ring, {product(X, 1 + static_cast<int>(rng.below(2)))}};
    out.g = {ring, {product(x1, 1 + static_cast<int>(rng.below(2)))}};
    return out;
  }
  const std::vector<RatFunc> gens = {X, Y, X + Y, Y - X * X, Y + k(2) * X, X - Y * Y};
  const RatFunc x0 = gens[rng.below(gens.size())];
  out.generator = x0;
  if (seed % 3 == 0) {
    out.pattern = true;
    // f of degree one in x0 keeps f + a a ratio of linear forms.
    const std::int64_t r = rng.range(0, 6);
    std::int64_t s = rng.range(0, 6);
    while (s == r) s = rng.range(0, 6);
    const RatFunc f = rng.coin() ? x0 - k(r) : (x0 - k(r)) / (x0 - k(s));
    const std::int64_t a = rng.range(0, 6);
    std::int64_t b = rng.range(0, 6);
    while (b == a) b = rng.range(0, 6);
    out.f = {ring, {f}};
    out.g = {ring, {(f + k(a)) * (f + k(b))}};
    return out;
  }
  out.f = {ring, {product(x0, 1 + static_cast<int>(rng.below(2)))}};
  out.g = {ring, {product(x0, 1 + static_cast<int>(rng.below(3)))}};
  if (rng.coin()) out.g.parts.push_back(product(x0, 1));
  return out;
}

Field field_of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!ff::is_prime_number(p)) continue;
    std::uint32_t r = q;
    unsigned e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (e == 0) continue;
    if (r != 1) break;
    return e == 1 ? Field::prime(p) : Field::galois(p, e);
  }
  throw std::invalid_argument("field order must be a prime power");
}

std::vector<std::string> instance_kinds() {
  return {"flagmap-random", "flagmap-cpair", "ladic", "ladic-pair", "curve-iota", "curve-cc", "curve-cc-corrupt", "proj-pg", "proj-hall"};
}

json make_instance(const std::string& kind, std::uint64_t seed, json params) {
  if (params.is_null()) params = json::object();
  if (kind.rfind("proj-", 0) != 0 && params.contains("p")) {
    const auto p = params.at("p").get<std::int64_t>();
    if (p == 2 || !ff::is_prime_number(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 0)))) throw std::invalid_argument("p must be an odd prime");
    if (params.contains("ell") && params.at("ell").get<std::int64_t>() == p) throw std::invalid_argument("l must differ from p");
  }
  json payload;
  if (kind == "flagmap-random") {
    params["n"] = param_int(params, "n", 3);
    params["values"] = param_int(params, "values", 3);
    params["planted"] = params.value("planted", false);
    const auto mu = random_map(seed, static_cast<int>(params["n"].get<std::int64_t>()), static_cast<int>(params["values"].get<std::int64_t>()), params["planted"].get<bool>());
    payload = {{"map", io::map_json(mu)}};
  } else if (kind == "flagmap-cpair") {
    params["ell"] = param_int(params, "ell", 5);
    params["dim"] = param_int(params, "dim", 0);
    params["m"] = param_int(params, "m", 0);
    const auto inst = cpair_instance(seed, static_cast<int>(params["dim"].get<std::int64_t>()), params["ell"].get<std::int64_t>(), static_cast<int>(params["m"].get<std::int64_t>()));
    json basis = json::array();
    for (const auto& f : inst.B.basis()) basis.push_back(io::ratfunc_json(f));
    payload = {{"p", 3}, {"valuation", io::valuation_json(inst.v)}, {"basis", basis}, {"mu", io::map_json(inst.mu)}, {"mu2", io::map_json(inst.mu2)}};
  } else if (kind == "ladic") {
    params["p"] = param_int(params, "p", 5);
    params["ell"] = param_int(params, "ell", 3);
    params["m"] = param_int(params, "m", 3);
    params["support"] = param_int(params, "support", 4);
    const lat::Zl R(params["ell"].get<std::int64_t>(), static_cast<int>(params["m"].get<std::int64_t>()));
    const auto p = static_cast<std::uint32_t>(params["p"].get<std::int64_t>());
    const auto D = class_zero_divisor(seed, static_cast<int>(params["support"].get<std::int64_t>()), R, p);
    payload = io::ladic_divisor_json(D, Field::prime(p));
  } else if (kind == "ladic-pair") {
    params["ell"] = param_int(params, "ell", 3);
    params["m"] = param_int(params, "m", 2);
    params["independent"] = params.value("independent", false);
    const lat::Zl R(params["ell"].get<std::int64_t>(), static_cast<int>(params["m"].get<std::int64_t>()));
    const auto pair = subfield_pair(seed, params["independent"].get<bool>(), R);
    const Field F = Field::prime(7);
    payload = {{"f", io::ladic_function_json(pair.f, F)}, {"g", io::ladic_function_json(pair.g, F)}};
    if (pair.generator) payload["generator"] = io::ratfunc_json(*pair.generator);
  } else if (kind == "curve-iota") {
    params["p"] = param_int(params, "p", 5);
    params["ell"] = param_int(params, "ell", 3);
    params["m"] = param_int(params, "m", 1);
    params["support"] = param_int(params, "support", 6);
    params["s"] = param_int(params, "s", 2);
    const lat::Zl R(params["ell"].get<std::int64_t>(), static_cast<int>(params["m"].get<std::int64_t>()));
    const Field F = Field::prime(static_cast<std::uint32_t>(params["p"].get<std::int64_t>()));
    const auto iota = random_iota(seed, static_cast<int>(params["support"].get<std::int64_t>()), R, F);
    payload = io::field_json(F);
    payload["iota"] = io::galois_json(iota);
    payload["s"] = params["s"];
  } else if (kind == "curve-cc" || kind == "curve-cc-corrupt") {
    params["p"] = param_int(params, "p", 7);
    params["ell"] = param_int(params, "ell", 3);
    params["m"] = param_int(params, "m", 2);
    const lat::Zl R(params["ell"].get<std::int64_t>(), static_cast<int>(params["m"].get<std::int64_t>()));
    const auto p = static_cast<std::uint32_t>(params["p"].get<std::int64_t>());
    params["a"] = param_int(params, "a", 0);
    const auto inst = cc_instance(seed, R, p, kind == "curve-cc-corrupt", params["a"].get<std::int64_t>());
    const Field F = Field::prime(p);
    payload = {{"A", io::inertia_json(inst.A, F)}, {"B", io::inertia_json(inst.B, F)}, {"planted", inst.a}};
    if (inst.corrupted) payload["corrupted"] = *inst.corrupted;
  } else if (kind == "proj-pg") {
    params["n"] = param_int(params, "n", 2);
    params["q"] = param_int(params, "q", 3);
    const Field F = field_of_order(static_cast<std::uint32_t>(params["q"].get<std::int64_t>()));
    payload = io::incidence_json(proj::build_pg(static_cast<int>(params["n"].get<std::int64_t>()), F));
  } else if (kind == "proj-hall") {
    payload = io::incidence_json(proj::hall_plane());
  } else {
    throw std::invalid_argument("unknown instance kind " + kind);
  }
  return {{"kind", kind}, {"seed", seed}, {"params", params}, {"payload", payload}};
}

}  // namespace gfl::gen

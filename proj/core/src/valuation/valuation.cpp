#include "gfl/valuation/valuation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gfl/util/parallel.hpp"

namespace gfl::val {

std::string Value::to_string() const {
  if (rank == 1) return std::to_string(a);
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Valuation Valuation::point(const ClosedPoint& p) {
  Valuation v;
  v.kind_ = ValKind::Point;
  v.point_ = p;
  return v;
}

Valuation Valuation::divisorial(const PlaneCurve& c) {
  Valuation v;
  v.kind_ = ValKind::Divisorial;
  v.curve_ = c;
  return v;
}

Valuation Valuation::flag(const PlaneCurve& c, const ClosedPoint& q) {
  if (q.field != c.residue_constants()) throw std::invalid_argument("flag point must lie over the residue constants of the curve");
  Valuation v;
  v.kind_ = ValKind::Flag;
  v.curve_ = c;
  v.point_ = q;
  return v;
}

bool Valuation::operator==(const Valuation& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case ValKind::Point:
      return point_ == o.point_;
    case ValKind::Divisorial:
      return curve_ == o.curve_;
    case ValKind::Flag:
      return curve_ == o.curve_ && point_ == o.point_;
  }
  return false;
}

std::string Valuation::to_string() const {
  switch (kind_) {
    case ValKind::Point:
      return "ord_" + point_.to_string();
    case ValKind::Divisorial:
      return "nu_" + curve_.to_string();
    case ValKind::Flag:
      return "nu_(" + curve_.to_string() + ", " + point_.to_string(curve_.param_name()) + ")";
  }
  return "";
}

Value ord(const Valuation& v, const RatFunc& f) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero function");
  if (f.nvars() != v.nvars()) throw std::invalid_argument("valuation and function live on different fields");
  switch (v.kind()) {
    case ValKind::Point:
      return {ord(v.point(), f.as_urat()), 0, 1};
    case ValKind::Divisorial:
      return {v.curve().ord(f), 0, 1};
    case ValKind::Flag: {
      const int m = v.curve().ord(f);
      return {m, ord(v.point(), v.curve().leading_restriction(f)), 2};
    }
  }
  return {};
}

Residue residue(const PlaneCurve& c, const RatFunc& f, const RatFunc& g) {
  const int mf = c.ord(f), mg = c.ord(g);
  const URat rf = c.leading_restriction(f), rg = c.leading_restriction(g);
  Residue r;
  r.value = (rf.pow(mg) / rg.pow(mf)).modulo_constants();
  r.trivial = r.value.is_constant();
  return r;
}

Residue residue(const Valuation& v, const RatFunc& f, const RatFunc& g) {
  if (v.kind() != ValKind::Divisorial) throw std::invalid_argument("residue needs a divisorial valuation");
  return residue(v.curve(), f, g);
}

ResidueSweep residues_vanish_all(const RatFunc& f, const RatFunc& g) {
  std::set<PlaneCurve> curves;
  for (const auto& c : support_with_infinity(f)) curves.insert(c);
  for (const auto& c : support_with_infinity(g)) curves.insert(c);
  ResidueSweep sweep;
  sweep.checked.assign(curves.begin(), curves.end());
  const auto res = util::parallel_map<Residue>(sweep.checked.size(), [&](std::size_t i) { return residue(sweep.checked[i], f, g); });
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (!res[i].trivial) {
      sweep.vanish = false;
      sweep.witness = sweep.checked[i];
      sweep.witness_residue = res[i].value;
      break;
    }
  }
  return sweep;
}

namespace {

std::vector<RatFunc> compatibility_samples(const Field& F, const PlaneCurve& c1, const PlaneCurve& c2) {
  const RatFunc x = RatFunc::x(F), y = RatFunc::y(F), one = RatFunc::constant(F, 1);
  std::vector<RatFunc> s = {x, y, x + one, y + one, x + y, x * y, one / x, x * x + y, (x + one + one) / (y + one), x / (y * y + one)};
  if (!c1.is_infinity()) s.emplace_back(c1.poly());
  if (!c2.is_infinity()) s.emplace_back(c2.poly());
  if (!c1.is_infinity() && !c2.is_infinity()) s.push_back(RatFunc(c1.poly()) / RatFunc(c2.poly()).pow(2));
  return s;
}

// Checks K^* = (1 + m_1) o_2^* on samples for distinct curves c1, c2.
std::pair<std::size_t, bool> verify_decomposition(const PlaneCurve& c1, const PlaneCurve& c2) {
  const Field& F = c1.base_field();
  const RatFunc pi1 = c1.uniformizer({c2});
  const RatFunc pi2 = c2.uniformizer({c1});
  const RatFunc one = RatFunc::constant(F, 1);
  std::size_t n = 0;
  bool ok = true;
  for (const auto& h : compatibility_samples(F, c1, c2)) {
    const int e = c2.ord(h);
    RatFunc onem = one;
    if (e > 0) {
      const RatFunc pe = pi2.pow(e);
      onem = pe / (pe + pi1);
    } else if (e < 0) {
      onem = one + pi1 * pi2.pow(e);
    }
    const RatFunc m = onem - one;
    const bool in_ideal = m.is_zero() || c1.ord(m) > 0;
    const bool unit = c2.ord(h / onem) == 0;
    ok = ok && in_ideal && unit;
    ++n;
  }
  return {n, ok};
}

}  // namespace

CompatibilityReport compatible(const Valuation& v1, const Valuation& v2) {
  if (v1.nvars() != v2.nvars()) throw std::invalid_argument("valuations on different fields");
  CompatibilityReport rep;
  if (v1 == v2) {
    rep.compatible = true;
    rep.rule = "equal valuations";
    return rep;
  }
  if (v1.kind() == ValKind::Point) {
    rep.rule = "distinct points of the line";
    return rep;
  }
  const bool same_curve = v1.curve() == v2.curve();
  if (same_curve && v1.kind() != v2.kind()) {
    rep.compatible = true;
    rep.rule = "flag valuation refines the divisorial valuation (first projection)";
    return rep;
  }
  if (same_curve) {
    rep.rule = "flag valuations at distinct points of the same curve";
    return rep;
  }
  rep.rule = "valuations centred on distinct curves";
  auto [n, ok] = verify_decomposition(v1.curve(), v2.curve());
  rep.samples_checked = n;
  rep.decomposition_verified = ok;
  return rep;
}

FunctionSubspace::FunctionSubspace(std::vector<RatFunc> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw std::invalid_argument("function subspace needs a nonempty basis");
  const Field F = basis_.front().field();
  space_ = ff::VecSpace(F, static_cast<int>(basis_.size()));
  common_den_ = BPoly::constant(F, 1);
  for (const auto& b : basis_) {
    const BPoly g = gcd(common_den_, b.den());
    common_den_ = exact_div(common_den_ * b.den(), g);
  }
  for (const auto& b : basis_) numerators_.push_back(exact_div(b.num() * common_den_, b.den()));
  std::vector<ff::Vec> rows;
  std::map<std::pair<int, int>, std::size_t> mono;
  for (const auto& n : numerators_) {
    for (const auto& [i, j, c] : n.terms()) mono.emplace(std::make_pair(i, j), mono.size());
  }
  rows.assign(mono.size(), ff::Vec(basis_.size(), 0));
  for (std::size_t k = 0; k < numerators_.size(); ++k) {
    for (const auto& [i, j, c] : numerators_[k].terms()) rows[mono[{i, j}]][k] = c;
  }
  if (ff::rank(F, rows) != static_cast<int>(basis_.size())) throw std::invalid_argument("function subspace basis is dependent");
}

RatFunc FunctionSubspace::element(const ff::Vec& c) const {
  const Field& F = field();
  BPoly n(F);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) n = n + numerators_[i].scaled(c[i]);
  }
  return RatFunc(n, common_den_, basis_.front().nvars());
}

std::optional<ff::Vec> FunctionSubspace::coordinates(const RatFunc& f) const {
  const Field& F = field();
  if (f.is_zero()) return ff::Vec(basis_.size(), 0);
  const auto target = try_div(f.num() * common_den_, f.den());
  if (!target) return std::nullopt;
  std::map<std::pair<int, int>, std::size_t> mono;
  for (const auto& n : numerators_) {
    for (const auto& [i, j, c] : n.terms()) mono.emplace(std::make_pair(i, j), mono.size());
  }
  for (const auto& [i, j, c] : target->terms()) mono.emplace(std::make_pair(i, j), mono.size());
  const std::size_t k = basis_.size();
  std::vector<ff::Vec> rows(mono.size(), ff::Vec(k + 1, 0));
  for (std::size_t b = 0; b < k; ++b) {
    for (const auto& [i, j, c] : numerators_[b].terms()) rows[mono[{i, j}]][b] = c;
  }
  for (const auto& [i, j, c] : target->terms()) rows[mono[{i, j}]][k] = F.neg(c);
  for (const auto& v : ff::kernel(F, rows, static_cast<int>(k + 1))) {
    if (v[k] == 0) continue;
    const Elem s = F.inv(v[k]);
    ff::Vec out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = F.mul(v[i], s);
    return out;
  }
  return std::nullopt;
}

flag::Multiplication FunctionSubspace::multiplication() const {
  return [this](const ff::Vec& a, const ff::Vec& b) { return coordinates(element(a) * element(b)); };
}

std::vector<Value> valuation_table(const FunctionSubspace& B, const Valuation& v) {
  const auto table = flag::point_table(B.space());
  return util::parallel_map<Value>(table->points.size(), [&](std::size_t i) { return ord(v, B.element(table->points[i])); });
}

flag::HomogeneousMap value_map(const FunctionSubspace& B, const Valuation& v, int component, flag::Ring ring) {
  const auto vals = valuation_table(B, v);
  std::vector<std::int64_t> t;
  for (const auto& x : vals) t.push_back(component == 0 ? x.a : x.b);
  return flag::HomogeneousMap(B.space(), ring, std::move(t));
}

flag::HomogeneousMap packed_value_map(const FunctionSubspace& B, const Valuation& v, flag::Ring ring) {
  const auto vals = valuation_table(B, v);
  std::int64_t bound = 0;
  for (const auto& x : vals) bound = std::max(bound, std::abs(x.b));
  const std::int64_t K = 2 * bound + 1;
  std::vector<std::int64_t> t;
  for (const auto& x : vals) t.push_back(x.a * K + x.b);
  return flag::HomogeneousMap(B.space(), ring, std::move(t));
}

Preorder order_from_flagmap(const flag::HomogeneousMap& alpha, const flag::Multiplication* mult) {
  const auto& pts = alpha.points();
  const ff::Field& F = alpha.space().field;
  const std::size_t n = pts.size();
  Preorder ord;
  ord.cmp.assign(n, std::vector<int>(n, 0));
  std::vector<std::vector<char>> known(n, std::vector<char>(n, 0));
  auto violation = [&](const std::string& s) {
    if (ord.violations.size() < 16) ord.violations.push_back(s);
  };
  // Unequal values: alpha(f + k f') equals alpha(f) exactly when f' lies above f.
  for (std::size_t i = 0; i < n; ++i) {
    ord.cmp[i][i] = 0;
    known[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (alpha.at(i) == alpha.at(j)) continue;
      int verdict = 2;
      for (ff::Elem k = 1; k < F.order(); ++k) {
        const auto s = alpha(ff::add(F, pts[i], ff::scale(F, pts[j], k)));
        int v = 2;
        if (s == alpha.at(i)) v = -1;
        if (s == alpha.at(j)) v = 1;
        if (v == 2 || (verdict != 2 && verdict != v)) {
          verdict = 3;
          break;
        }
        verdict = v;
      }
      if (verdict == 3) {
        ord.total = false;
        violation("no consistent comparison between " + ff::to_string(pts[i]) + " and " + ff::to_string(pts[j]));
        continue;
      }
      ord.cmp[i][j] = verdict;
      ord.cmp[j][i] = -verdict;
      known[i][j] = known[j][i] = 1;
    }
  }
  // Equal values: strictly separated by an intermediate element of another value.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (alpha.at(i) != alpha.at(j)) continue;
      bool above = false, below = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (alpha.at(k) == alpha.at(i) || !known[i][k] || !known[k][j]) continue;
        if (ord.cmp[i][k] == 1 && ord.cmp[k][j] == 1) above = true;
        if (ord.cmp[i][k] == -1 && ord.cmp[k][j] == -1) below = true;
      }
      if (above && below) {
        ord.total = false;
        violation("contradictory separation of " + ff::to_string(pts[i]) + " and " + ff::to_string(pts[j]));
      }
      const int v = above ? 1 : (below ? -1 : 0);
      ord.cmp[i][j] = v;
      ord.cmp[j][i] = -v;
      known[i][j] = known[j][i] = 1;
    }
  }
  // Transitivity of <= and of <.
  for (std::size_t i = 0; i < n && ord.transitive; ++i) {
    for (std::size_t j = 0; j < n && ord.transitive; ++j) {
      if (ord.cmp[i][j] > 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (ord.cmp[j][k] > 0) continue;
        const int expect = (ord.cmp[i][j] < 0 || ord.cmp[j][k] < 0) ? -1 : 0;
        if (ord.cmp[i][k] > 0 || (expect < 0 && ord.cmp[i][k] != -1)) {
          ord.transitive = false;
          violation("transitivity fails on " + ff::to_string(pts[i]) + ", " + ff::to_string(pts[j]) + ", " + ff::to_string(pts[k]));
          break;
        }
      }
    }
  }
  // Levels: count of strictly smaller elements, compressed.
  std::vector<int> below(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) below[i] += ord.cmp[j][i] < 0 ? 1 : 0;
  }
  std::vector<int> distinct = below;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  ord.level.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ord.level[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), below[i]) - distinct.begin());
  }
  if (mult) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::optional<std::size_t>> prod(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto p = (*mult)(pts[i], pts[k]);
        if (p && !ff::is_zero(*p)) prod[i] = alpha.index_of(*p);
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!prod[i] || !prod[j]) continue;
          ++ord.product_checks;
          if (ord.cmp[*prod[i]][*prod[j]] != ord.cmp[i][j]) {
            ord.product_compatible = false;
            violation("product incompatibility with factor " + ff::to_string(pts[k]));
          }
        }
      }
    }
  }
  return ord;
}

std::size_t order_mismatches(const Preorder& order, const std::vector<Value>& values) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      const auto c = values[i] <=> values[j];
      const int expect = c < 0 ? -1 : (c > 0 ? 1 : 0);
      bad += order.cmp[i][j] != expect ? 1 : 0;
    }
  }
  return bad;
}

DecompositionReport decomposition_respects(const flag::HomogeneousMap& mu, const Valuation& v, const FunctionSubspace& B) {
  const Field& F = B.field();
  const auto one = B.coordinates(RatFunc::constant(F, 1, v.nvars()));
  if (!one) throw std::invalid_argument("decomposition_respects needs 1 in the subspace");
  DecompositionReport rep;
  const std::int64_t base = mu(*one);
  const int k = B.dim();
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= F.order();
  const Value zero{0, 0, v.rank()};
  for (std::uint64_t code = 1; code < total; ++code) {
    ff::Vec m(static_cast<std::size_t>(k));
    std::uint64_t r = code;
    for (int i = k - 1; i >= 0; --i) {
      m[i] = static_cast<Elem>(r % F.order());
      r /= F.order();
    }
    if (!(ord(v, B.element(m)) > zero)) continue;
    ++rep.tested;
    if (mu(ff::add(F, *one, m)) != base) {
      rep.holds = false;
      rep.witness = m;
      break;
    }
  }
  return rep;
}

}  // namespace gfl::val

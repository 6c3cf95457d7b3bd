#include "gfl/flagmap/flagmap.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gfl/lattice/smith.hpp"
#include "gfl/util/parallel.hpp"

namespace gfl::flag {

Ring Ring::Zl(std::int64_t ell, int m) {
  if (ell < 2 || m < 1) throw std::invalid_argument("Z/l^m needs l >= 2 and m >= 1");
  return Ring{false, ell, m};
}

std::int64_t Ring::modulus() const { return integral ? 0 : lat::ipow(ell, m); }

std::int64_t Ring::reduce(std::int64_t v) const { return integral ? v : lat::mod(v, modulus()); }

std::string Ring::name() const {
  if (integral) return "Z";
  return "Z/" + std::to_string(ell) + "^" + std::to_string(m);
}

std::shared_ptr<const PointTable> point_table(const VecSpace& space) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::vector<ff::Elem>, int>, std::shared_ptr<const PointTable>> cache;
  const auto key = std::make_tuple(space.field.characteristic(), space.field.modulus(), space.dim);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto t = std::make_shared<PointTable>();
  t->space = space;
  t->points = ff::enumerate_proj_points(space);
  std::uint64_t total = 1;
  for (int i = 0; i < space.dim; ++i) total *= space.field.order();
  t->index.assign(total, -1);
  for (std::size_t i = 0; i < t->points.size(); ++i) {
    t->index[ff::encode(space.field, t->points[i])] = static_cast<std::int32_t>(i);
  }
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(t)).first->second;
}

HomogeneousMap::HomogeneousMap(const VecSpace& space, Ring ring, std::vector<std::int64_t> values)
    : table_(point_table(space)), ring_(ring), values_(std::move(values)) {
  if (values_.size() != table_->points.size()) throw std::invalid_argument("value table size mismatch");
  for (auto& v : values_) v = ring_.reduce(v);
}

HomogeneousMap HomogeneousMap::from_function(const VecSpace& space, Ring ring,
                                             const std::function<std::int64_t(const Vec&)>& fn) {
  const auto table = point_table(space);
  std::vector<std::int64_t> vals;
  vals.reserve(table->points.size());
  for (const auto& p : table->points) vals.push_back(fn(p));
  return HomogeneousMap(space, ring, std::move(vals));
}

HomogeneousMap HomogeneousMap::constant(const VecSpace& space, Ring ring, std::int64_t c) {
  return HomogeneousMap(space, ring, std::vector<std::int64_t>(point_table(space)->points.size(), c));
}

std::size_t HomogeneousMap::index_of(const Vec& v) const {
  const Vec n = ff::normalize(table_->space.field, v);
  if (ff::is_zero(n)) throw std::invalid_argument("homogeneous map evaluated at zero");
  const auto idx = table_->index[ff::encode(table_->space.field, n)];
  return static_cast<std::size_t>(idx);
}

std::int64_t HomogeneousMap::operator()(const Vec& v) const { return values_[index_of(v)]; }

HomogeneousMap HomogeneousMap::combine(std::int64_t c, const HomogeneousMap& other, std::int64_t c2) const {
  if (!(ring_ == other.ring_) || values_.size() != other.values_.size()) {
    throw std::invalid_argument("maps on different domains or rings");
  }
  std::vector<std::int64_t> vals(values_.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = ring_.reduce(c * values_[i] + c2 * other.values_[i]);
  return HomogeneousMap(space(), ring_, std::move(vals));
}

HomogeneousMap HomogeneousMap::compose(const std::function<std::int64_t(std::int64_t)>& h, Ring ring) const {
  std::vector<std::int64_t> vals(values_.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = h(values_[i]);
  return HomogeneousMap(space(), ring, std::move(vals));
}

HomogeneousMap HomogeneousMap::reduced(Ring ring) const {
  return HomogeneousMap(space(), ring, values_);
}

std::vector<std::int64_t> HomogeneousMap::value_set() const {
  std::vector<std::int64_t> v = values_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

LogarithmicReport is_logarithmic(const HomogeneousMap& mu, const Multiplication& mult) {
  LogarithmicReport rep;
  const auto& pts = mu.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      const auto prod = mult(pts[i], pts[j]);
      if (!prod || ff::is_zero(*prod)) {
        ++rep.skipped;
        continue;
      }
      ++rep.tested;
      if (mu(*prod) != mu.ring().reduce(mu.at(i) + mu.at(j)) && rep.holds) {
        rep.holds = false;
        rep.witness = std::make_pair(pts[i], pts[j]);
      }
    }
  }
  return rep;
}

bool constant_off(const HomogeneousMap& mu, const Subspace& B, const Subspace& H) {
  std::optional<std::int64_t> val;
  for (const auto& p : B.points()) {
    if (H.contains(p)) continue;
    const auto v = mu(p);
    if (val && *val != v) return false;
    val = v;
  }
  return true;
}

bool is_flag_dim2(const HomogeneousMap& mu, const Subspace& B) {
  if (B.dim() != 2) throw std::invalid_argument("is_flag_dim2 needs a 2-dimensional subspace");
  std::map<std::int64_t, int> counts;
  const auto pts = B.points();
  for (const auto& p : pts) ++counts[mu(p)];
  if (counts.size() == 1) return true;
  if (counts.size() > 2) return false;
  // Two values: one of them must occur exactly once.
  return counts.begin()->second == 1 || counts.rbegin()->second == 1;
}

FlagMapReport check_flag_map(const HomogeneousMap& mu) {
  FlagMapReport rep;
  if (mu.space().dim < 2) return rep;
  const auto planes = ff::enumerate_subspaces(mu.space(), 2);
  const std::size_t bad = util::parallel_find_first(planes.size(), [&](std::size_t i) { return !is_flag_dim2(mu, planes[i]); });
  if (bad < planes.size()) {
    rep.holds = false;
    rep.failing = planes[bad];
  }
  return rep;
}

bool is_flag_map(const HomogeneousMap& mu) { return check_flag_map(mu).holds; }

namespace {

bool flag_dfs(const HomogeneousMap& mu, const Subspace& B, std::vector<Subspace>& chain) {
  chain.push_back(B);
  if (B.dim() == 0) return true;
  if (B.dim() == 1) {
    chain.emplace_back(B.field(), B.ambient());
    return true;
  }
  for (const auto& H : B.hyperplanes()) {
    if (!constant_off(mu, B, H)) continue;
    if (flag_dfs(mu, H, chain)) return true;
  }
  chain.pop_back();
  return false;
}

}  // namespace

std::optional<Flag> find_flag(const HomogeneousMap& mu, const Subspace& B) {
  Flag f;
  if (!flag_dfs(mu, B, f.chain)) return std::nullopt;
  return f;
}

bool flags_on_small_subspaces(const HomogeneousMap& mu) {
  const int n = mu.space().dim;
  for (int d = 1; d <= std::min(2, n); ++d) {
    for (const auto& B : ff::enumerate_subspaces(mu.space(), d)) {
      if (!find_flag(mu, B)) return false;
    }
  }
  return true;
}

HReductionReport h_reduction_holds(const HomogeneousMap& mu) {
  const auto vals = mu.value_set();
  if (vals.size() > kMaxReductionValues) {
    throw std::invalid_argument("h_reduction_holds: more than 16 distinct values");
  }
  HReductionReport rep;
  const std::uint32_t count = 1U << vals.size();
  const auto results = util::parallel_map<char>(count, [&](std::size_t mask) {
    const auto h = [&](std::int64_t v) {
      const auto pos = std::lower_bound(vals.begin(), vals.end(), v) - vals.begin();
      return static_cast<std::int64_t>((mask >> pos) & 1U);
    };
    return static_cast<char>(is_flag_map(mu.compose(h, Ring::Zl(2, 1))) ? 1 : 0);
  });
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (!results[mask]) {
      rep.holds = false;
      rep.failing_mask = mask;
      break;
    }
  }
  return rep;
}

FunctionalEquationReport functional_equation_flag(const HomogeneousMap& mu, const Subspace& C) {
  if (C.dim() != 2) throw std::invalid_argument("functional_equation_flag needs a 2-dimensional subspace");
  const ff::Field& F = C.field();
  const auto pts = C.points();
  FunctionalEquationReport rep;
  for (const auto& c : pts) {
    for (const auto& b : pts) {
      if (b == c || mu(c) == mu(b)) continue;
      bool ok = true;
      for (ff::Elem k = 0; k < F.order() && ok; ++k) ok = mu(ff::add(F, c, ff::scale(F, b, k))) == mu(c);
      if (ok) {
        rep.holds = true;
        rep.basis = std::make_pair(c, b);
        return rep;
      }
    }
  }
  return rep;
}

namespace {

// Relation s mu + s' mu2 = s'' on the given points, with (s, s') nonzero in the ring.
std::optional<CPairWitness> solve_relation(const HomogeneousMap& mu, const HomogeneousMap& mu2,
                                           const std::vector<Vec>& pts) {
  lat::IMat rows;
  for (const auto& b : pts) rows.push_back({mu(b), mu2(b), -1});
  const Ring& R = mu.ring();
  std::vector<lat::IVec> gens;
  if (R.integral) {
    gens = lat::integer_kernel(rows, 3);
  } else {
    gens = lat::kernel_mod(rows, 3, R.modulus());
  }
  for (auto& g : gens) {
    for (auto& x : g) x = R.reduce(x);
    if (g[0] != 0 || g[1] != 0) {
      CPairWitness w;
      w.s = g[0];
      w.s1 = g[1];
      w.s2 = g[2];
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

CPairReport is_c_pair(const HomogeneousMap& mu, const HomogeneousMap& mu2) {
  if (!(mu.ring() == mu2.ring()) || mu.size() != mu2.size()) {
    throw std::invalid_argument("c-pair test needs maps on the same domain and ring");
  }
  CPairReport rep;
  if (mu.space().dim < 2) return rep;
  const auto planes = ff::enumerate_subspaces(mu.space(), 2);
  const auto sols = util::parallel_map<std::optional<CPairWitness>>(planes.size(), [&](std::size_t i) {
    auto w = solve_relation(mu, mu2, planes[i].points());
    if (w) w->B = planes[i];
    return w;
  });
  for (std::size_t i = 0; i < planes.size(); ++i) {
    if (sols[i]) {
      rep.witnesses.push_back(*sols[i]);
    } else {
      rep.holds = false;
      rep.failing.push_back(planes[i]);
    }
  }
  return rep;
}

std::vector<std::pair<std::int64_t, std::int64_t>> projective_line_mod(std::int64_t ell, int m) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t N = lat::ipow(ell, m);
  for (std::int64_t c = 0; c < N; ++c) out.emplace_back(1, c);
  for (std::int64_t k = 0; k < N / ell; ++k) out.emplace_back(ell * k, 1);
  return out;
}

CombinationReport find_flag_combination(const HomogeneousMap& mu, const HomogeneousMap& mu2) {
  if (mu.ring().integral) throw std::invalid_argument("find_flag_combination needs a Z/l^m ring");
  CombinationReport rep;
  const auto cands = projective_line_mod(mu.ring().ell, mu.ring().m);
  const Subspace A = ff::whole_space(mu.space());
  for (const auto& [c, c2] : cands) {
    const auto comb = mu.combine(c, mu2, c2);
    if (!is_flag_map(comb)) continue;
    rep.coefficients = std::make_pair(c, c2);
    rep.flag = find_flag(comb, A);
    return rep;
  }
  rep.failing = is_c_pair(mu, mu2).failing;
  return rep;
}

bool proportional(const HomogeneousMap& mu, const HomogeneousMap& mu2) {
  return solve_relation(mu, mu2, mu.points()).has_value();
}

std::vector<std::vector<bool>> cpair_graph(const std::vector<HomogeneousMap>& maps) {
  const std::size_t n = maps.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const auto res = util::parallel_map<char>(pairs.size(), [&](std::size_t k) {
    return static_cast<char>(is_c_pair(maps[pairs[k].first], maps[pairs[k].second]).holds ? 1 : 0);
  });
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    adj[pairs[k].first][pairs[k].second] = adj[pairs[k].second][pairs[k].first] = res[k] != 0;
  }
  return adj;
}

namespace {

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& R, std::vector<std::size_t> P,
                   std::vector<std::size_t> X, std::vector<std::vector<std::size_t>>& out) {
  if (P.empty() && X.empty()) {
    auto c = R;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  // Pivot with the most neighbours in P.
  std::size_t pivot = P.empty() ? X.front() : P.front();
  std::size_t best = 0;
  for (const auto* set : {&P, &X}) {
    for (std::size_t u : *set) {
      std::size_t cnt = 0;
      for (std::size_t v : P) cnt += adj[u][v] ? 1 : 0;
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  }
  const std::vector<std::size_t> cand = P;
  for (std::size_t v : cand) {
    if (adj[pivot][v]) continue;
    std::vector<std::size_t> P2, X2;
    for (std::size_t u : P) {
      if (adj[v][u]) P2.push_back(u);
    }
    for (std::size_t u : X) {
      if (adj[v][u]) X2.push_back(u);
    }
    R.push_back(v);
    bron_kerbosch(adj, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<std::vector<bool>>& adj) {
  std::vector<std::vector<std::size_t>> out;
  if (adj.empty()) return out;
  std::vector<std::size_t> R, P(adj.size()), X;
  for (std::size_t i = 0; i < adj.size(); ++i) P[i] = i;
  bron_kerbosch(adj, R, std::move(P), std::move(X), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> maximal_cpair_cliques(const std::vector<HomogeneousMap>& maps) {
  return maximal_cliques(cpair_graph(maps));
}

std::string to_string(const Flag& flag) {
  std::ostringstream os;
  for (std::size_t i = 0; i < flag.chain.size(); ++i) {
    if (i) os << " > ";
    os << "<";
    const auto& b = flag.chain[i].basis();
    for (std::size_t j = 0; j < b.size(); ++j) os << (j ? "," : "") << ff::to_string(b[j]);
    os << ">";
  }
  return os.str();
}

}  // namespace gfl::flag

#include "gfl/projgeom/projgeom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "gfl/util/parallel.hpp"
#include "gfl/valuation/express.hpp"

namespace gfl::proj {

IncidenceStructure IncidenceStructure::canonical() const {
  IncidenceStructure out{npoints, lines, labels};
  for (auto& l : out.lines) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  std::sort(out.lines.begin(), out.lines.end());
  out.lines.erase(std::unique(out.lines.begin(), out.lines.end()), out.lines.end());
  return out;
}

bool IncidenceStructure::same_lines(const IncidenceStructure& o) const {
  return npoints == o.npoints && canonical().lines == o.canonical().lines;
}

Incidence::Incidence(const IncidenceStructure& st) : n_(st.npoints), lines_(st.canonical().lines) {
  const std::size_t L = lines_.size();
  join_.assign(n_ * n_, -1);
  meet_.assign(L * L, -1);
  inc_.assign(L * n_, 0);
  through_.assign(n_, {});
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t p : lines_[l]) {
      if (p >= n_) throw std::invalid_argument("line contains a point out of range");
      inc_[l * n_ + p] = 1;
      through_[p].push_back(l);
    }
    for (std::size_t i = 0; i < lines_[l].size(); ++i) {
      for (std::size_t j = i + 1; j < lines_[l].size(); ++j) {
        const std::size_t p = lines_[l][i], q = lines_[l][j];
        if (join_[p * n_ + q] < 0) join_[p * n_ + q] = join_[q * n_ + p] = static_cast<std::int64_t>(l);
      }
    }
  }
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t m = l + 1; m < L; ++m) {
      for (std::size_t p : lines_[l]) {
        if (inc_[m * n_ + p]) {
          meet_[l * L + m] = meet_[m * L + l] = static_cast<std::int64_t>(p);
          break;
        }
      }
    }
  }
}

bool Incidence::collinear(std::size_t a, std::size_t b, std::size_t c) const {
  if (a == b || a == c || b == c) return true;
  const std::int64_t l = line_of(a, b);
  return l >= 0 && on(c, static_cast<std::size_t>(l));
}

std::size_t Incidence::cross(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
  const std::int64_t l1 = line_of(a, b), l2 = line_of(c, d);
  if (l1 < 0 || l2 < 0 || l1 == l2) throw std::logic_error("intersection undefined");
  const std::int64_t p = meet(static_cast<std::size_t>(l1), static_cast<std::size_t>(l2));
  if (p < 0) throw std::logic_error("lines do not meet");
  return static_cast<std::size_t>(p);
}

AxiomReport check_axioms(const IncidenceStructure& input) {
  const IncidenceStructure st = input.canonical();
  const std::size_t n = st.npoints;
  AxiomReport rep;
  for (const auto& l : st.lines) {
    if (l.size() < n) rep.p1 = true;
  }
  rep.p2 = true;
  for (std::size_t l = 0; l < st.lines.size(); ++l) {
    if (st.lines[l].size() < 3) {
      rep.p2 = false;
      rep.short_line = l;
      break;
    }
  }
  std::vector<std::uint32_t> count(n * n, 0);
  for (const auto& l : st.lines) {
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = i + 1; j < l.size(); ++j) ++count[l[i] * n + l[j]];
    }
  }
  rep.p3 = true;
  for (std::size_t p = 0; p < n && rep.p3; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (count[p * n + q] != 1) {
        rep.p3 = false;
        rep.p3_pair = {p, q};
        rep.p3_count = count[p * n + q];
        break;
      }
    }
  }
  if (!rep.p3) return rep;
  rep.p4_checked = true;
  const Incidence inc(st);
  auto meets = [&](std::size_t l, std::size_t m) { return l == m || inc.meet(l, m) >= 0; };
  auto quad_at = [&](std::size_t s) -> std::optional<std::vector<std::size_t>> {
    for (std::size_t s2 = 0; s2 < n; ++s2) {
      if (s2 == s) continue;
      const auto l1 = static_cast<std::size_t>(inc.line_of(s, s2));
      for (std::size_t t = 0; t < n; ++t) {
        if (t == s || t == s2) continue;
        const auto l3 = static_cast<std::size_t>(inc.line_of(s, t));
        for (std::size_t t2 = 0; t2 < n; ++t2) {
          if (t2 == s || t2 == s2 || t2 == t) continue;
          if (!meets(l1, static_cast<std::size_t>(inc.line_of(t, t2)))) continue;
          if (!meets(l3, static_cast<std::size_t>(inc.line_of(s2, t2)))) return std::vector<std::size_t>{s, s2, t, t2};
        }
      }
    }
    return std::nullopt;
  };
  const std::size_t first = util::parallel_find_first(n, [&](std::size_t s) { return quad_at(s).has_value(); });
  rep.p4 = first == n;
  if (!rep.p4) rep.p4_quad = quad_at(first);
  return rep;
}

std::vector<std::size_t> join_span(const Incidence& inc, const std::vector<std::size_t>& points) {
  const std::size_t n = inc.npoints();
  std::vector<char> S(n, 0);
  for (std::size_t k = points.size(); k-- > 0;) {
    const std::size_t s = points[k];
    std::vector<char> next = S;
    for (std::size_t s2 = 0; s2 < n; ++s2) {
      if (!S[s2] || s2 == s) continue;
      const std::int64_t l = inc.line_of(s, s2);
      if (l < 0) continue;
      for (std::size_t p : inc.line(static_cast<std::size_t>(l))) next[p] = 1;
    }
    next[s] = 1;
    S = std::move(next);
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < n; ++p) {
    if (S[p]) out.push_back(p);
  }
  return out;
}

int dimension(const Incidence& inc, const std::vector<std::size_t>& points) {
  std::vector<std::size_t> basis;
  std::vector<char> span(inc.npoints(), 0);
  for (std::size_t p : points) {
    if (span[p]) continue;
    basis.insert(basis.begin(), p);
    std::fill(span.begin(), span.end(), 0);
    for (std::size_t q : join_span(inc, basis)) span[q] = 1;
  }
  return static_cast<int>(basis.size()) - 1;
}

int dimension(const Incidence& inc) {
  std::vector<std::size_t> all(inc.npoints());
  std::iota(all.begin(), all.end(), 0);
  return dimension(inc, all);
}

namespace {

struct LinePair {
  std::size_t l, m, O;
};

std::optional<PappusWitness> pappus_failure(const Incidence& inc, const LinePair& lp) {
  std::vector<std::size_t> P, Q;
  for (std::size_t p : inc.line(lp.l)) {
    if (p != lp.O) P.push_back(p);
  }
  for (std::size_t p : inc.line(lp.m)) {
    if (p != lp.O) Q.push_back(p);
  }
  for (std::size_t a = 0; a < P.size(); ++a) {
    for (std::size_t b = a + 1; b < P.size(); ++b) {
      for (std::size_t c = b + 1; c < P.size(); ++c) {
        for (std::size_t A2 : Q) {
          for (std::size_t B2 : Q) {
            if (B2 == A2) continue;
            const std::size_t X = inc.cross(P[a], B2, A2, P[b]);
            for (std::size_t C2 : Q) {
              if (C2 == A2 || C2 == B2) continue;
              const std::size_t Y = inc.cross(P[a], C2, A2, P[c]);
              const std::size_t Z = inc.cross(P[b], C2, B2, P[c]);
              if (!inc.collinear(X, Y, Z)) return PappusWitness{lp.l, lp.m, lp.O, P[a], P[b], P[c], A2, B2, C2, X, Y, Z};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PappusReport check_pappus(const IncidenceStructure& st) {
  const Incidence inc(st);
  std::vector<LinePair> pairs;
  for (std::size_t l = 0; l < inc.nlines(); ++l) {
    for (std::size_t m = l + 1; m < inc.nlines(); ++m) {
      const std::int64_t O = inc.meet(l, m);
      if (O >= 0) pairs.push_back({l, m, static_cast<std::size_t>(O)});
    }
  }
  PappusReport rep;
  const std::size_t first =
      util::parallel_find_first(pairs.size(), [&](std::size_t i) { return pappus_failure(inc, pairs[i]).has_value(); });
  rep.line_pairs = first == pairs.size() ? pairs.size() : first + 1;
  if (first < pairs.size()) {
    rep.holds = false;
    rep.witness = pappus_failure(inc, pairs[first]);
  }
  return rep;
}

IncidenceStructure build_pg(int n, const Field& F) {
  const ff::VecSpace space(F, n + 1);
  const auto pts = ff::enumerate_proj_points(space);
  std::unordered_map<std::uint64_t, std::size_t> index;
  IncidenceStructure st;
  st.npoints = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    index[ff::encode(F, pts[i])] = i;
    st.labels.push_back(ff::to_string(pts[i]));
  }
  for (const auto& sub : ff::enumerate_subspaces(space, 2)) {
    Line l;
    for (const auto& v : sub.points()) l.push_back(index.at(ff::encode(F, v)));
    std::sort(l.begin(), l.end());
    st.lines.push_back(std::move(l));
  }
  std::sort(st.lines.begin(), st.lines.end());
  return st;
}

IncidenceStructure fano_plane() { return build_pg(2, Field::prime(2)); }

IncidenceStructure remove_line(const IncidenceStructure& st, std::size_t l) {
  IncidenceStructure out = st;
  out.lines.erase(out.lines.begin() + static_cast<std::ptrdiff_t>(l));
  return out;
}

IncidenceStructure corrupt_line(const IncidenceStructure& st, std::size_t l) {
  IncidenceStructure out = st;
  Line& line = out.lines[l];
  std::size_t outside = 0;
  while (std::binary_search(line.begin(), line.end(), outside)) ++outside;
  line.back() = outside;
  std::sort(line.begin(), line.end());
  return out;
}

IncidenceStructure hall_plane() {
  const Field F = Field::galois(3, 2);
  const std::size_t q = F.order();
  using V2 = std::pair<Elem, Elem>;
  std::vector<std::vector<V2>> spread;
  for (Elem m = 0; m < q; ++m) {
    if (m < 3) continue;
    std::vector<V2> comp;
    for (Elem x = 0; x < q; ++x) comp.emplace_back(x, F.mul(m, x));
    spread.push_back(std::move(comp));
  }
  for (Elem alpha = 1; alpha < q; ++alpha) {
    if (F.mul(2, alpha) < alpha) continue;
    std::vector<V2> comp;
    for (Elem a = 0; a < 3; ++a) {
      for (Elem b = 0; b < 3; ++b) comp.emplace_back(F.mul(a, alpha), F.mul(b, alpha));
    }
    spread.push_back(std::move(comp));
  }
  IncidenceStructure st;
  st.npoints = q * q + spread.size();
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) st.labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  for (std::size_t i = 0; i < spread.size(); ++i) st.labels.push_back("inf" + std::to_string(i));
  for (std::size_t i = 0; i < spread.size(); ++i) {
    std::set<Line> cosets;
    for (Elem a = 0; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) {
        Line l;
        for (const auto& [u, v] : spread[i]) l.push_back(F.add(a, u) * q + F.add(b, v));
        l.push_back(q * q + i);
        std::sort(l.begin(), l.end());
        cosets.insert(l);
      }
    }
    st.lines.insert(st.lines.end(), cosets.begin(), cosets.end());
  }
  Line infinity;
  for (std::size_t i = 0; i < spread.size(); ++i) infinity.push_back(q * q + i);
  st.lines.push_back(infinity);
  std::sort(st.lines.begin(), st.lines.end());
  return st;
}

IncidenceStructure relabel(const IncidenceStructure& st, const std::vector<std::size_t>& perm) {
  IncidenceStructure out;
  out.npoints = st.npoints;
  if (!st.labels.empty()) {
    out.labels.resize(st.npoints);
    for (std::size_t p = 0; p < st.npoints; ++p) out.labels[perm[p]] = st.labels[p];
  }
  for (const auto& l : st.lines) {
    Line m;
    for (std::size_t p : l) m.push_back(perm[p]);
    std::sort(m.begin(), m.end());
    out.lines.push_back(std::move(m));
  }
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

IncidenceStructure restrict_to(const IncidenceStructure& st, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> pts = subset;
  std::sort(pts.begin(), pts.end());
  std::map<std::size_t, std::size_t> index;
  IncidenceStructure out;
  out.npoints = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    index[pts[i]] = i;
    if (!st.labels.empty()) out.labels.push_back(st.labels[pts[i]]);
  }
  for (const auto& l : st.lines) {
    Line m;
    for (std::size_t p : l) {
      auto it = index.find(p);
      if (it == index.end()) break;
      m.push_back(it->second);
    }
    if (m.size() == l.size()) out.lines.push_back(std::move(m));
  }
  return out.canonical();
}

bool verify_field_tables(const std::vector<std::vector<Elem>>& add, const std::vector<std::vector<Elem>>& mul) {
  const std::size_t q = add.size();
  if (q < 2 || mul.size() != q) return false;
  auto identity = [&](const std::vector<std::vector<Elem>>& t) -> std::optional<Elem> {
    for (Elem e = 0; e < q; ++e) {
      bool ok = true;
      for (Elem a = 0; a < q && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
      if (ok) return e;
    }
    return std::nullopt;
  };
  const auto zero = identity(add), one = identity(mul);
  if (!zero || !one || *zero == *one) return false;
  for (Elem a = 0; a < q; ++a) {
    bool neg = false, inv = a == *zero;
    for (Elem b = 0; b < q; ++b) {
      if (add[a][b] >= q || mul[a][b] >= q) return false;
      if (add[a][b] != add[b][a] || mul[a][b] != mul[b][a]) return false;
      if (add[a][b] == *zero) neg = true;
      if (mul[a][b] == *one) inv = true;
      for (Elem c = 0; c < q; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]]) return false;
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) return false;
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) return false;
      }
    }
    if (!neg || !inv) return false;
  }
  return true;
}

namespace {

// Affine frame data of a plane: lines are O X, O Y, X Y; P = (0, 1); I = (1, 0).
struct PlaneFrame {
  std::size_t O, X, Y, E, I, P, D1;
  std::size_t xaxis, yaxis, linf;
  std::vector<std::size_t> elements;
};

std::size_t meet_lines(const Incidence& inc, std::int64_t l, std::int64_t m) {
  if (l < 0 || m < 0 || l == m) throw std::invalid_argument("construction does not close");
  const std::int64_t p = inc.meet(static_cast<std::size_t>(l), static_cast<std::size_t>(m));
  if (p < 0) throw std::invalid_argument("construction does not close");
  return static_cast<std::size_t>(p);
}

PlaneFrame make_frame(const Incidence& inc) {
  const std::size_t n = inc.npoints();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (inc.collinear(a, b, c)) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (inc.collinear(a, b, d) || inc.collinear(a, c, d) || inc.collinear(b, c, d)) continue;
          PlaneFrame f{a, b, c, d, 0, 0, 0, 0, 0, 0, {}};
          f.xaxis = static_cast<std::size_t>(inc.line_of(a, b));
          f.yaxis = static_cast<std::size_t>(inc.line_of(a, c));
          f.linf = static_cast<std::size_t>(inc.line_of(b, c));
          f.I = meet_lines(inc, static_cast<std::int64_t>(f.xaxis), inc.line_of(d, c));
          f.P = meet_lines(inc, static_cast<std::int64_t>(f.yaxis), inc.line_of(d, b));
          f.D1 = meet_lines(inc, inc.line_of(f.P, f.I), static_cast<std::int64_t>(f.linf));
          for (std::size_t p : inc.line(f.xaxis)) {
            if (p != b) f.elements.push_back(p);
          }
          return f;
        }
      }
    }
  }
  throw std::invalid_argument("no frame of four points in general position");
}

std::int64_t L(const Incidence& inc, std::size_t a, std::size_t b) { return inc.line_of(a, b); }

// (a, 1) + direction of (0,1)(b,0) meets the x-axis at a + b.
std::size_t plane_add(const Incidence& inc, const PlaneFrame& f, std::size_t a, std::size_t b) {
  const std::size_t A2 = meet_lines(inc, L(inc, a, f.Y), L(inc, f.P, f.X));
  const std::size_t D = meet_lines(inc, L(inc, f.P, b), static_cast<std::int64_t>(f.linf));
  return meet_lines(inc, L(inc, A2, D), static_cast<std::int64_t>(f.xaxis));
}

// (0, b) + direction of (0,1)(a,0) meets the x-axis at a b.
std::size_t plane_mul(const Incidence& inc, const PlaneFrame& f, std::size_t a, std::size_t b) {
  const std::size_t Qb = meet_lines(inc, static_cast<std::int64_t>(f.yaxis), L(inc, b, f.D1));
  const std::size_t D2 = meet_lines(inc, L(inc, f.P, a), static_cast<std::int64_t>(f.linf));
  return meet_lines(inc, L(inc, Qb, D2), static_cast<std::int64_t>(f.xaxis));
}

std::uint32_t multiplicative_order(const std::vector<std::vector<Elem>>& mul, Elem a, Elem one) {
  Elem x = a;
  std::uint32_t k = 1;
  while (x != one) {
    x = mul[x][a];
    if (++k > mul.size()) return 0;
  }
  return k;
}

}  // namespace

CoordField coordinatize_plane(const IncidenceStructure& st) {
  if (!check_axioms(st).all()) throw std::invalid_argument("projective axioms fail");
  const Incidence inc(st);
  if (dimension(inc) != 2) throw std::invalid_argument("not a plane");
  const PlaneFrame f = make_frame(inc);
  const std::size_t q = f.elements.size();
  std::map<std::size_t, Elem> local;
  for (std::size_t i = 0; i < q; ++i) local[f.elements[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> add(q, std::vector<Elem>(q)), mul(q, std::vector<Elem>(q));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      add[i][j] = local.at(plane_add(inc, f, f.elements[i], f.elements[j]));
      mul[i][j] = local.at(plane_mul(inc, f, f.elements[i], f.elements[j]));
    }
  }
  if (!verify_field_tables(add, mul)) throw std::invalid_argument("constructed operations do not form a field");
  const Elem zero = local.at(f.O), one = local.at(f.I);
  std::uint32_t p = 1;
  for (Elem x = add[one][one];; x = add[x][one]) {
    ++p;
    if (x == zero) break;
  }
  unsigned e = 0;
  for (std::size_t r = 1; r < q; r *= p) ++e;
  const Field F = e == 1 ? Field::prime(p) : Field::galois(p, e);
  Elem g = 0;
  for (Elem a = 0; a < q; ++a) {
    if (a != zero && multiplicative_order(mul, a, one) == q - 1) {
      g = a;
      break;
    }
  }
  for (Elem h = 1; h < q; ++h) {
    std::uint32_t ord = 1;
    for (Elem x = h; x != 1; x = F.mul(x, h)) ++ord;
    if (ord != q - 1) continue;
    std::vector<Elem> phi(q);
    phi[zero] = 0;
    Elem a = one, b = 1;
    for (std::size_t i = 0; i + 1 < q; ++i) {
      phi[a] = b;
      a = mul[a][g];
      b = F.mul(b, h);
    }
    bool additive = true;
    for (Elem x = 0; x < q && additive; ++x) {
      for (Elem y = 0; y < q && additive; ++y) additive = phi[add[x][y]] == F.add(phi[x], phi[y]);
    }
    if (!additive) continue;
    CoordField cf;
    cf.order = static_cast<std::uint32_t>(q);
    cf.field = F;
    cf.add.assign(q, std::vector<Elem>(q));
    cf.mul.assign(q, std::vector<Elem>(q));
    for (Elem x = 0; x < q; ++x) {
      for (Elem y = 0; y < q; ++y) {
        cf.add[x][y] = F.add(x, y);
        cf.mul[x][y] = F.mul(x, y);
      }
    }
    cf.element_point.resize(q);
    for (Elem x = 0; x < q; ++x) cf.element_point[phi[x]] = f.elements[x];
    cf.frame = {f.O, f.X, f.Y, f.E};
    return cf;
  }
  throw std::invalid_argument("no isomorphism to the finite field of this order");
}

std::optional<std::vector<std::size_t>> find_isomorphism(const IncidenceStructure& A, const IncidenceStructure& B) {
  if (A.npoints != B.npoints || A.canonical().lines.size() != B.canonical().lines.size()) return std::nullopt;
  const Incidence ia(A), ib(B);
  const std::size_t n = A.npoints;
  std::vector<std::size_t> f(n, 0);
  std::vector<char> used(n, 0);
  auto consistent = [&](std::size_t p) {
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = a + 1; b < p; ++b) {
        if (ia.collinear(a, b, p) != ib.collinear(f[a], f[b], f[p])) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t p) -> bool {
    if (p == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      f[p] = c;
      if (!consistent(p)) continue;
      used[c] = 1;
      if (self(self, p + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  if (!relabel(A, f).same_lines(B)) return std::nullopt;
  return f;
}

Roundtrip coordinatize_roundtrip(const IncidenceStructure& st) {
  if (!check_axioms(st).all()) throw std::invalid_argument("projective axioms fail");
  const Incidence inc(st);
  Roundtrip rt;
  rt.dimension = dimension(inc);
  if (rt.dimension < 2) throw std::invalid_argument("dimension below two");
  if (rt.dimension > 2) {
    std::size_t c = 2;
    while (inc.collinear(0, 1, c)) ++c;
    const auto plane = join_span(inc, {0, 1, c});
    rt.field = coordinatize_plane(restrict_to(st, plane));
    const IncidenceStructure B = build_pg(rt.dimension, rt.field.field);
    const auto iso = find_isomorphism(st, B);
    if (iso) {
      rt.image = *iso;
      rt.rebuilt_equal = true;
    }
    return rt;
  }
  rt.field = coordinatize_plane(st);
  const CoordField& cf = rt.field;
  const Field& F = cf.field;
  const PlaneFrame f = make_frame(inc);
  std::map<std::size_t, Elem> value;
  for (Elem x = 0; x < cf.order; ++x) value[cf.element_point[x]] = x;
  auto y_coord = [&](std::size_t R) {
    const std::size_t Ry = meet_lines(inc, L(inc, R, f.X), static_cast<std::int64_t>(f.yaxis));
    if (Ry == f.O) return Elem{0};
    return value.at(meet_lines(inc, L(inc, Ry, f.D1), static_cast<std::int64_t>(f.xaxis)));
  };
  const std::size_t unit_vertical = static_cast<std::size_t>(L(inc, f.I, f.Y));
  for (std::size_t R = 0; R < st.npoints; ++R) {
    ff::Vec v;
    if (!inc.on(R, f.linf)) {
      const std::size_t xR = meet_lines(inc, L(inc, R, f.Y), static_cast<std::int64_t>(f.xaxis));
      v = {value.at(xR), y_coord(R), 1};
    } else if (R == f.Y) {
      v = {0, 1, 0};
    } else {
      const std::size_t M = meet_lines(inc, L(inc, f.O, R), static_cast<std::int64_t>(unit_vertical));
      v = {1, y_coord(M), 0};
    }
    rt.coordinates.push_back(ff::normalize(F, v));
  }
  const auto pts = ff::enumerate_proj_points(ff::VecSpace(F, 3));
  std::map<ff::Vec, std::size_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;
  std::vector<char> hit(pts.size(), 0);
  for (const auto& v : rt.coordinates) {
    const std::size_t i = index.at(v);
    rt.image.push_back(i);
    hit[i] = 1;
  }
  const bool bijective = pts.size() == st.npoints && std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  rt.rebuilt_equal = bijective && relabel(st, rt.image).same_lines(build_pg(2, F));
  return rt;
}

GroupStructure field_extension_structure(std::uint32_t p, unsigned e) {
  const Field K = Field::galois(p, e), k = Field::prime(p);
  GroupStructure gs;
  gs.st = build_pg(static_cast<int>(e) - 1, k);
  const auto pts = ff::enumerate_proj_points(ff::VecSpace(k, static_cast<int>(e)));
  std::map<ff::Vec, std::size_t> index;
  std::vector<Elem> rep(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    index[pts[i]] = i;
    rep[i] = K.from_digits(pts[i]);
  }
  auto point_of = [&](Elem a) {
    ff::Vec d = K.digits(a);
    d.resize(e, 0);
    return index.at(ff::normalize(k, d));
  };
  gs.mul.assign(pts.size(), std::vector<std::size_t>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) gs.mul[i][j] = point_of(K.mul(rep[i], rep[j]));
  }
  return gs;
}

TranslationReport mult_compatible(const IncidenceStructure& st, const std::vector<std::vector<std::size_t>>& mul) {
  const IncidenceStructure c = st.canonical();
  const std::set<Line> lines(c.lines.begin(), c.lines.end());
  auto bad_line = [&](std::size_t s) -> std::optional<std::size_t> {
    for (std::size_t l = 0; l < c.lines.size(); ++l) {
      Line t;
      for (std::size_t p : c.lines[l]) t.push_back(mul[s][p]);
      std::sort(t.begin(), t.end());
      if (!lines.count(t)) return l;
    }
    return std::nullopt;
  };
  TranslationReport rep;
  const std::size_t first = util::parallel_find_first(mul.size(), [&](std::size_t s) { return bad_line(s).has_value(); });
  if (first < mul.size()) {
    rep.ok = false;
    rep.witness = std::make_pair(first, *bad_line(first));
  }
  return rep;
}

namespace {

class BitLines {
 public:
  explicit BitLines(const IncidenceStructure& st) : st_(st.canonical()), words_((st.npoints + 63) / 64) {
    through_.assign(st_.npoints, {});
    for (std::size_t l = 0; l < st_.lines.size(); ++l) {
      std::vector<std::uint64_t> b(words_, 0);
      for (std::size_t p : st_.lines[l]) {
        b[p / 64] |= std::uint64_t{1} << (p % 64);
        through_[p].push_back(l);
      }
      bits_.push_back(std::move(b));
    }
  }
  const Line& line(std::size_t l) const { return st_.lines[l]; }
  const std::vector<std::size_t>& through(std::size_t p) const { return through_[p]; }
  bool has(std::size_t l, std::size_t p) const { return (bits_[l][p / 64] >> (p % 64)) & 1U; }
  bool meets(std::size_t l, std::size_t m) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (bits_[l][w] & bits_[m][w]) return true;
    }
    return false;
  }
  std::vector<std::size_t> with(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t l : through_[a]) {
      if (has(l, b)) out.push_back(l);
    }
    return out;
  }

 private:
  IncidenceStructure st_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<std::vector<std::size_t>> through_;
};

struct Half {
  std::size_t x, y, L1, L2;
  // Lines through t and x.
  std::vector<std::size_t> L3s;
};

std::optional<PartialConfig> config_for(const BitLines& bl, std::size_t r, std::size_t s, std::size_t t) {
  std::vector<Half> halves;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto fresh = [&](std::size_t p) { return p != r && p != s && p != t; };
  for (std::size_t L1 : bl.through(r)) {
    for (std::size_t y : bl.line(L1)) {
      if (!fresh(y)) continue;
      const auto L2s = bl.with(y, s);
      if (L2s.empty()) continue;
      for (std::size_t x : bl.line(L1)) {
        if (!fresh(x) || x == y || seen.count({x, y})) continue;
        auto L3s = bl.with(t, x);
        if (L3s.empty()) continue;
        seen.insert({x, y});
        halves.push_back(Half{x, y, L1, L2s.front(), std::move(L3s)});
      }
    }
  }
  for (const Half& a : halves) {
    for (const Half& b : halves) {
      if (b.x == a.x || b.x == a.y || b.y == a.x || b.y == a.y) continue;
      for (std::size_t L7 : bl.with(a.y, b.y)) {
        for (std::size_t L3 : a.L3s) {
          if (bl.meets(L7, L3)) continue;
          for (std::size_t L6 : b.L3s) {
            if (bl.meets(L7, L6)) continue;
            PartialConfig c{r, s, t, a.x, a.y, b.x, b.y, {a.L1, a.L2, L3, b.L1, b.L2, L6, L7}, false};
            c.t_on_line_rs = bl.meets(L3, a.L2) && bl.meets(L6, b.L2);
            return c;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PartialConfig> find_partial_config(const IncidenceStructure& partial, std::size_t r, std::size_t s,
                                                 std::size_t t) {
  if (r == s || r == t || s == t) return std::nullopt;
  return config_for(BitLines(partial), r, s, t);
}

PartialReport check_partial(const IncidenceStructure& partial) {
  PartialReport rep;
  const std::size_t n = partial.npoints;
  if (n < 7) return rep;
  const BitLines bl(partial);
  auto failing = [&](std::size_t r) -> std::optional<std::pair<std::size_t, std::size_t>> {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (s == r || t == r || s == t) continue;
        if (!config_for(bl, r, s, t)) return std::make_pair(s, t);
      }
    }
    return std::nullopt;
  };
  const std::size_t per_r = (n - 1) * (n - 2);
  const std::size_t first = util::parallel_find_first(n, [&](std::size_t r) { return failing(r).has_value(); });
  if (first == n) {
    rep.ok = true;
    rep.triples_checked = n * per_r;
    return rep;
  }
  const auto [s, t] = *failing(first);
  std::size_t within = 0;
  for (std::size_t s2 = 0; s2 < n; ++s2) {
    for (std::size_t t2 = 0; t2 < n; ++t2) {
      if (s2 == first || t2 == first || s2 == t2) continue;
      ++within;
      if (s2 == s && t2 == t) goto done;
    }
  }
done:
  rep.triples_checked = first * per_r + within;
  rep.failing_triple = std::vector<std::size_t>{first, s, t};
  return rep;
}

bool unique_extension_equal(const IncidenceStructure& A, const IncidenceStructure& B, const IncidenceStructure& shared) {
  for (const IncidenceStructure* st : {&A, &B}) {
    if (!check_axioms(*st).all()) throw std::invalid_argument("projective axioms fail");
    if (dimension(Incidence(*st)) < 3) throw std::invalid_argument("dimension below three");
  }
  if (A.npoints != B.npoints || shared.npoints != A.npoints) throw std::invalid_argument("point sets differ");
  const auto la = A.canonical().lines, lb = B.canonical().lines;
  for (const auto& l : shared.canonical().lines) {
    if (!std::binary_search(la.begin(), la.end(), l) || !std::binary_search(lb.begin(), lb.end(), l)) {
      throw std::invalid_argument("shared line missing from a structure");
    }
  }
  if (!check_partial(shared).ok) throw std::invalid_argument("shared lines are not a partial structure");
  return la == lb;
}

namespace {

// All coefficient tuples of length len over GF(q), first index fastest.
template <class Fn>
void for_each_tuple(std::uint32_t q, std::size_t len, Fn fn) {
  std::vector<Elem> c(len, 0);
  while (true) {
    fn(c);
    std::size_t i = 0;
    while (i < len && ++c[i] == q) c[i++] = 0;
    if (i == len) return;
  }
}

}  // namespace

GeneratingReport is_generating(const URat& x) {
  if (x.is_constant()) throw std::invalid_argument("constant function");
  const Field& F = x.field();
  const std::uint32_t q = F.order();
  const int n = x.degree();
  GeneratingReport rep;
  const RatFunc X = RatFunc::from_urat(x);
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    for (int e = 0; e < d; ++e) {
      bool found = false;
      for_each_tuple(q, static_cast<std::size_t>(e), [&](const std::vector<Elem>& dc) {
        if (found) return;
        std::vector<Elem> dcoef = dc;
        dcoef.push_back(1);
        const UPoly D(F, dcoef);
        for_each_tuple(q, static_cast<std::size_t>(d - 1), [&](const std::vector<Elem>& nc) {
          if (found) return;
          std::vector<Elem> ncoef;
          for (int i = 0, k = 0; i < d; ++i) ncoef.push_back(i == e ? 0 : nc[static_cast<std::size_t>(k++)]);
          ncoef.push_back(1);
          const UPoly N(F, ncoef);
          if (!ff::gcd(N, D).is_one()) return;
          const URat y(N, D);
          ++rep.candidates_tried;
          const auto expr = val::express_in(X, RatFunc::from_urat(y));
          if (!expr) return;
          const URat z(UPoly(F, expr->first), UPoly(F, expr->second));
          if (z.compose(y) != x || z.degree() != n / d) return;
          rep.generating = false;
          rep.decomposition = Decomposition{z, y};
          found = true;
        });
      });
      if (found) return rep;
    }
  }
  return rep;
}

std::optional<bool> is_generating_planar(const RatFunc& f) {
  if (f.is_constant()) return false;
  const int dy = std::max(f.num().deg_y(), f.den().deg_y());
  const int dx = std::max(f.num().deg_x(), f.den().deg_x());
  if (dy == 0) return dx == 1;
  if (dx == 0) return dy == 1;
  if (dx == 1 || dy == 1) return true;
  return std::nullopt;
}

URat class_rep(const URat& f) { return f.modulo_constants(); }

PrimaryLines primary_lines(const Field& F, int cap) {
  const std::uint32_t q = F.order();
  std::vector<UPoly> monic;
  for (int d = 0; d <= cap; ++d) {
    for_each_tuple(q, static_cast<std::size_t>(d), [&](const std::vector<Elem>& c) {
      std::vector<Elem> coef = c;
      coef.push_back(1);
      monic.emplace_back(F, coef);
    });
  }
  PrimaryLines out;
  for (const auto& N : monic) {
    for (const auto& D : monic) {
      if (ff::gcd(N, D).is_one()) out.points.emplace_back(N, D);
    }
  }
  std::sort(out.points.begin(), out.points.end());
  std::map<URat, std::size_t> index;
  for (std::size_t i = 0; i < out.points.size(); ++i) index[out.points[i]] = i;
  const std::size_t one = index.at(URat::constant(F, 1));
  std::set<Line> primary;
  const auto verdicts = util::parallel_map<char>(out.points.size(), [&](std::size_t i) {
    const URat& x = out.points[i];
    return static_cast<char>(!x.is_constant() && is_generating(x).generating ? 1 : 0);
  });
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    if (out.points[i].is_constant()) continue;
    if (!verdicts[i]) {
      ++out.excluded_anchors;
      continue;
    }
    Line l{one};
    for (Elem c = 0; c < q; ++c) l.push_back(index.at(class_rep(out.points[i] + URat::constant(F, c))));
    std::sort(l.begin(), l.end());
    primary.insert(l);
  }
  out.primary = primary.size();
  std::set<Line> all = primary;
  for (std::size_t s = 0; s < out.points.size(); ++s) {
    if (s == one) continue;
    for (const Line& l : primary) {
      Line t;
      for (std::size_t p : l) {
        auto it = index.find(class_rep(out.points[s] * out.points[p]));
        if (it == index.end()) break;
        t.push_back(it->second);
      }
      if (t.size() < l.size()) {
        ++out.omitted_translates;
        continue;
      }
      std::sort(t.begin(), t.end());
      all.insert(t);
    }
  }
  out.translates = all.size() - out.primary;
  out.partial.npoints = out.points.size();
  out.partial.lines.assign(all.begin(), all.end());
  for (const auto& p : out.points) out.partial.labels.push_back(p.to_string());
  return out;
}

}  // namespace gfl::proj

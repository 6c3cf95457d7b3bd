#include "gfl/ffcore/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gfl::ff {

VecSpace::VecSpace(Field f, int n) : field(std::move(f)), dim(n) {
  if (n < 1) throw std::invalid_argument("vector space dimension must be >= 1");
}

std::uint64_t VecSpace::num_points() const {
  const std::uint64_t q = field.order();
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) total *= q;
  return (total - 1) / (q - 1);
}

Vec normalize(const Field& f, Vec v) {
  for (Elem x : v) {
    if (x != 0) {
      if (x == 1) return v;
      const Elem s = f.inv(x);
      for (auto& y : v) y = f.mul(y, s);
      return v;
    }
  }
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Vec add(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec scale(const Field& f, const Vec& a, Elem s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], s);
  return r;
}

std::uint64_t encode(const Field& f, const Vec& v) {
  std::uint64_t code = 0;
  for (Elem x : v) code = code * f.order() + x;
  return code;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<int> rref(const Field& f, std::vector<Vec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows.front().size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    rows[r] = scale(f, rows[r], f.inv(rows[r][c]));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem factor = f.neg(rows[i][c]);
      for (int k = 0; k < cols; ++k) rows[i][k] = f.add(rows[i][k], f.mul(factor, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

int rank(const Field& f, std::vector<Vec> rows) { return static_cast<int>(rref(f, rows).size()); }

std::vector<Vec> kernel(const Field& f, std::vector<Vec> rows, int cols) {
  const auto pivots = rref(f, rows);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(static_cast<std::size_t>(cols), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace span(const Field& f, int ambient, const std::vector<Vec>& vectors) {
  Subspace s(f, ambient);
  std::vector<Vec> rows;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient) throw std::invalid_argument("vector length mismatch in span");
    if (!is_zero(v)) rows.push_back(v);
  }
  s.pivots_ = rref(f, rows);
  s.rows_ = std::move(rows);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (c == 0) continue;
    const Elem neg = field_.neg(c);
    for (int k = 0; k < ambient_; ++k) r[k] = field_.add(r[k], field_.mul(neg, rows_[i][k]));
  }
  return is_zero(r);
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<Vec> Subspace::points() const {
  const std::uint64_t q = field_.order();
  const int k = dim();
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= q;
  std::vector<Vec> pts;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec coef(static_cast<std::size_t>(k));
    std::uint64_t r = code;
    for (int i = k - 1; i >= 0; --i) {
      coef[i] = static_cast<Elem>(r % q);
      r /= q;
    }
    // Only normalized coefficient vectors give distinct points.
    auto first = std::find_if(coef.begin(), coef.end(), [](Elem x) { return x != 0; });
    if (*first != 1) continue;
    Vec v(static_cast<std::size_t>(ambient_), 0);
    for (int i = 0; i < k; ++i) {
      if (coef[i] != 0) v = add(field_, v, scale(field_, rows_[i], coef[i]));
    }
    pts.push_back(normalize(field_, std::move(v)));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<Subspace> Subspace::hyperplanes() const {
  std::vector<Subspace> out;
  const int k = dim();
  if (k == 0) return out;
  for (const auto& functional : enumerate_proj_points(VecSpace(field_, k))) {
    std::vector<Vec> ker = kernel(field_, {functional}, k);
    std::vector<Vec> vecs;
    for (const auto& c : ker) {
      Vec v(static_cast<std::size_t>(ambient_), 0);
      for (int i = 0; i < k; ++i) {
        if (c[i] != 0) v = add(field_, v, scale(field_, rows_[i], c[i]));
      }
      vecs.push_back(std::move(v));
    }
    out.push_back(span(field_, ambient_, vecs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Subspace::operator<(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return rows_ < o.rows_;
}

bool in_subspace(const Vec& v, const Subspace& s) { return s.contains(v); }

Subspace whole_space(const VecSpace& space) {
  std::vector<Vec> e;
  for (int i = 0; i < space.dim; ++i) {
    Vec v(static_cast<std::size_t>(space.dim), 0);
    v[i] = 1;
    e.push_back(std::move(v));
  }
  return span(space.field, space.dim, e);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  const Field& f = a.field();
  const int n = a.ambient();
  // Solve sum x_i a_i = sum y_j b_j.
  const int ka = a.dim(), kb = b.dim();
  std::vector<Vec> rows(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(ka + kb), 0));
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < ka; ++i) rows[c][i] = a.basis()[i][c];
    for (int j = 0; j < kb; ++j) rows[c][ka + j] = f.neg(b.basis()[j][c]);
  }
  std::vector<Vec> vecs;
  for (const auto& sol : kernel(f, rows, ka + kb)) {
    Vec v(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < ka; ++i) {
      if (sol[i] != 0) v = add(f, v, scale(f, a.basis()[i], sol[i]));
    }
    vecs.push_back(std::move(v));
  }
  return span(f, n, vecs);
}

std::vector<Vec> enumerate_proj_points(const VecSpace& space) {
  return whole_space(space).points();
}

namespace {

void choose_pivots(int n, int d, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c < n; ++c) {
    cur.push_back(c);
    choose_pivots(n, d, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const VecSpace& space, int d) {
  const int n = space.dim;
  if (d < 0 || d > n) throw std::invalid_argument("subspace dimension out of range");
  const Field& f = space.field;
  std::vector<Subspace> out;
  if (d == 0) {
    out.emplace_back(f, n);
    return out;
  }
  std::vector<std::vector<int>> pivot_sets;
  std::vector<int> cur;
  choose_pivots(n, d, 0, cur, pivot_sets);
  const std::uint64_t q = f.order();
  for (const auto& piv : pivot_sets) {
    // Free entries: row i, column c > piv[i], c not a pivot.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < d; ++i) {
      for (int c = piv[i] + 1; c < n; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
      }
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Vec> rows(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < d; ++i) rows[i][piv[i]] = 1;
      std::uint64_t r = code;
      for (const auto& [i, c] : free) {
        rows[i][c] = static_cast<Elem>(r % q);
        r /= q;
      }
      out.push_back(span(f, n, rows));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (int j = 0; j < n - i; ++j) a *= q;
    for (int j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace gfl::ff

#include "gfl/lattice/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace gfl::lat {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice computation");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice computation");
  return r;
}

IMat identity(int n) {
  IMat I(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

struct Reducer {
  IMat D, U, V;
  int rows, cols;

  // row_i += c * row_j
  void row_op(int i, int j, std::int64_t c) {
    if (c == 0) return;
    for (int k = 0; k < cols; ++k) D[i][k] = checked_add(D[i][k], checked_mul(c, D[j][k]));
    for (int k = 0; k < rows; ++k) U[i][k] = checked_add(U[i][k], checked_mul(c, U[j][k]));
  }
  // col_i += c * col_j
  void col_op(int i, int j, std::int64_t c) {
    if (c == 0) return;
    for (int k = 0; k < rows; ++k) D[k][i] = checked_add(D[k][i], checked_mul(c, D[k][j]));
    for (int k = 0; k < cols; ++k) V[k][i] = checked_add(V[k][i], checked_mul(c, V[k][j]));
  }
  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(D[i], D[j]);
    std::swap(U[i], U[j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& r : D) std::swap(r[i], r[j]);
    for (auto& r : V) std::swap(r[i], r[j]);
  }
  void negate_row(int i) {
    for (auto& x : D[i]) x = -x;
    for (auto& x : U[i]) x = -x;
  }
};

}  // namespace

SmithForm smith(const IMat& A, int cols) {
  const int rows = static_cast<int>(A.size());
  Reducer r{A, identity(rows), identity(cols), rows, cols};
  for (const auto& row : A) {
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged matrix");
  }
  int t = 0;
  for (; t < rows && t < cols; ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (r.D[i][j] != 0 && (pi < 0 || std::llabs(r.D[i][j]) < std::llabs(r.D[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    r.swap_rows(t, pi);
    r.swap_cols(t, pj);
    while (true) {
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (r.D[i][t] == 0) continue;
        r.row_op(i, t, -(r.D[i][t] / r.D[t][t]));
        if (r.D[i][t] != 0) dirty = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (r.D[t][j] == 0) continue;
        r.col_op(j, t, -(r.D[t][j] / r.D[t][t]));
        if (r.D[t][j] != 0) dirty = true;
      }
      if (dirty) {
        int bi = t, bj = t;
        for (int i = t + 1; i < rows; ++i) {
          if (r.D[i][t] != 0 && std::llabs(r.D[i][t]) < std::llabs(r.D[bi][bj])) {
            bi = i;
            bj = t;
          }
        }
        for (int j = t + 1; j < cols; ++j) {
          if (r.D[t][j] != 0 && std::llabs(r.D[t][j]) < std::llabs(r.D[bi][bj])) {
            bi = t;
            bj = j;
          }
        }
        r.swap_rows(t, bi);
        r.swap_cols(t, bj);
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (r.D[i][j] % r.D[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      r.row_op(t, bad, 1);
    }
    if (r.D[t][t] < 0) r.negate_row(t);
  }
  SmithForm s;
  s.rank = t;
  for (int i = 0; i < t; ++i) s.diag.push_back(r.D[i][i]);
  s.D = std::move(r.D);
  s.U = std::move(r.U);
  s.V = std::move(r.V);
  return s;
}

std::vector<IVec> integer_kernel(const IMat& A, int cols) {
  const SmithForm s = smith(A, cols);
  std::vector<IVec> out;
  for (int j = s.rank; j < cols; ++j) {
    IVec v(static_cast<std::size_t>(cols));
    for (int k = 0; k < cols; ++k) v[k] = s.V[k][j];
    out.push_back(std::move(v));
  }
  return out;
}

int integer_rank(const IMat& A, int cols) { return smith(A, cols).rank; }

std::vector<IVec> kernel_mod(const IMat& A, int cols, std::int64_t N) {
  IMat Ar = A;
  for (auto& row : Ar) {
    for (auto& x : row) x = mod(x, N);
  }
  const SmithForm s = smith(Ar, cols);
  std::vector<IVec> out;
  for (int j = 0; j < cols; ++j) {
    std::int64_t step = 1;
    if (j < s.rank) {
      step = N / gcd(s.diag[j], N);
      if (step == N) continue;
    }
    IVec v(static_cast<std::size_t>(cols));
    for (int k = 0; k < cols; ++k) v[k] = mod(checked_mul(mod(s.V[k][j], N), step), N);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<IVec> solve_mod(const IMat& A, int cols, const IVec& b, std::int64_t N) {
  IMat Ar = A;
  for (auto& row : Ar) {
    for (auto& x : row) x = mod(x, N);
  }
  const SmithForm s = smith(Ar, cols);
  const int rows = static_cast<int>(A.size());
  IVec c(static_cast<std::size_t>(rows), 0);
  for (int i = 0; i < rows; ++i) {
    std::int64_t acc = 0;
    for (int k = 0; k < rows; ++k) acc = mod(acc + checked_mul(mod(s.U[i][k], N), mod(b[k], N)), N);
    c[i] = acc;
  }
  IVec y(static_cast<std::size_t>(cols), 0);
  for (int i = 0; i < rows; ++i) {
    if (i < s.rank) {
      const std::int64_t d = mod(s.diag[i], N);
      const std::int64_t g = gcd(d, N);
      if (c[i] % g != 0) return std::nullopt;
      const std::int64_t n2 = N / g;
      y[i] = n2 == 1 ? 0 : mod(checked_mul(c[i] / g, inv_mod(d / g, n2)), n2);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IVec x(static_cast<std::size_t>(cols), 0);
  for (int k = 0; k < cols; ++k) {
    std::int64_t acc = 0;
    for (int j = 0; j < cols; ++j) acc = mod(acc + checked_mul(mod(s.V[k][j], N), y[j]), N);
    x[k] = acc;
  }
  return x;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t n) {
  std::int64_t old_r = mod(a, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("not a unit modulo n");
  return mod(old_s, n);
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

int ell_valuation(std::int64_t a, std::int64_t ell, int cap) {
  if (a == 0) return cap;
  int k = 0;
  while (a % ell == 0 && k < cap) {
    a /= ell;
    ++k;
  }
  return k;
}

Zl::Zl(std::int64_t ell_, int m_) : ell(ell_), m(m_) {
  if (ell_ < 2 || m_ < 1) throw std::invalid_argument("Z/l^m needs l >= 2 and m >= 1");
}

}  // namespace gfl::lat

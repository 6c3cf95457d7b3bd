#include "gfl/valuation/express.hpp"

#include <algorithm>
#include <set>

#include "gfl/ffcore/linalg.hpp"

namespace gfl::val {

using Coeffs = std::vector<Elem>;

std::vector<std::pair<int, int>> grlex_monomials(const std::vector<BPoly>& ps) {
  std::set<std::pair<int, int>> s;
  for (const auto& p : ps) {
    for (const auto& [i, j, c] : p.terms()) s.emplace(i + j, i);
  }
  std::vector<std::pair<int, int>> out(s.rbegin(), s.rend());
  for (auto& m : out) m = {m.second, m.first - m.second};
  return out;
}

namespace {

// Rows indexed by monomials (grlex descending), one column per polynomial.
std::vector<ff::Vec> coefficient_rows(const Field& F, const std::vector<BPoly>& cols, const std::vector<std::pair<int, int>>& monos) {
  std::vector<ff::Vec> rows(monos.size(), ff::Vec(cols.size(), 0));
  for (std::size_t r = 0; r < monos.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) rows[r][c] = cols[c].coeff(monos[r].first, monos[r].second);
  }
  (void)F;
  return rows;
}

BPoly hom_eval(const Coeffs& u, const BPoly& A, const BPoly& B, int n) {
  BPoly s(A.field());
  for (int i = 0; i <= n; ++i) {
    if (static_cast<std::size_t>(i) >= u.size() || u[i] == 0) continue;
    s = s + (A.pow(static_cast<unsigned>(i)) * B.pow(static_cast<unsigned>(n - i))).scaled(u[i]);
  }
  return s;
}

Coeffs trimmed(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace

std::optional<std::pair<Coeffs, Coeffs>> express_in(const RatFunc& h, const RatFunc& x) {
  const Field& F = h.field();
  if (x.is_constant()) return std::nullopt;
  if (h.is_constant()) {
    const Elem c = h.num().coeff(0, 0);
    return std::make_pair(Coeffs{c}, Coeffs{1});
  }
  const BPoly &A = x.num(), &B = x.den(), &N = h.num(), &D = h.den();
  const int bound = std::max(N.total_degree(), D.total_degree());
  for (int n = 1; n <= bound; ++n) {
    std::vector<BPoly> P;
    for (int i = 0; i <= n; ++i) P.push_back(A.pow(static_cast<unsigned>(i)) * B.pow(static_cast<unsigned>(n - i)));
    std::vector<BPoly> cols;
    for (const auto& p : P) cols.push_back(D * p);
    for (const auto& p : P) cols.push_back(-(N * p));
    const auto monos = grlex_monomials(cols);
    for (const auto& v : ff::kernel(F, coefficient_rows(F, cols, monos), static_cast<int>(cols.size()))) {
      Coeffs u(v.begin(), v.begin() + n + 1), w(v.begin() + n + 1, v.end());
      const BPoly Vh = hom_eval(w, A, B, n);
      if (Vh.is_zero()) continue;
      const BPoly Uh = hom_eval(u, A, B, n);
      if (!(RatFunc(Uh, Vh, h.nvars()) == h)) continue;
      u = trimmed(u);
      w = trimmed(w);
      // Normalize V monic in x.
      const Elem inv = F.inv(w.back());
      for (auto& c : u) c = F.mul(c, inv);
      for (auto& c : w) c = F.mul(c, inv);
      return std::make_pair(u, w);
    }
  }
  return std::nullopt;
}


}  // namespace gfl::val

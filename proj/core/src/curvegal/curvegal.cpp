#include "gfl/curvegal/curvegal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "gfl/util/rng.hpp"

namespace gfl::curvegal {

namespace {

// Calls fn on every k-subset of {0..n-1} in lexicographic order until fn returns false.
void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

UPoly power(const UPoly& p, std::int64_t e) { return p.pow(static_cast<unsigned>(e)); }

}  // namespace

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [P, n] : coeffs) d += n * P.degree();
  return d;
}

std::int64_t Divisor::at(const ClosedPoint& P) const {
  auto it = coeffs.find(P);
  return it == coeffs.end() ? 0 : it->second;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [P, n] : o.coeffs) {
    if ((r.coeffs[P] += n) == 0) r.coeffs.erase(P);
  }
  return r;
}

Divisor Divisor::scaled(std::int64_t k) const {
  Divisor r;
  if (k == 0) return r;
  for (const auto& [P, n] : coeffs) r.coeffs[P] = n * k;
  return r;
}

std::string Divisor::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [P, n] : coeffs) {
    if (!first) os << (n < 0 ? " - " : " + ");
    else if (n < 0) os << "-";
    first = false;
    const std::int64_t a = n < 0 ? -n : n;
    if (a != 1) os << a;
    os << P.to_string();
  }
  return os.str();
}

Divisor principal_divisor(const URat& f) {
  if (f.is_zero()) throw std::domain_error("divisor of the zero function");
  Divisor D;
  for (const auto& [p, e] : ff::factor(f.num()).factors) D.coeffs[ClosedPoint::from_poly(p)] += e;
  for (const auto& [p, e] : ff::factor(f.den()).factors) D.coeffs[ClosedPoint::from_poly(p)] -= e;
  const int inf = f.den().degree() - f.num().degree();
  if (inf != 0) D.coeffs[ClosedPoint::at_infinity(f.field())] = inf;
  return D;
}

GaloisElem::GaloisElem(lat::Zl ring, std::int64_t def, std::map<ClosedPoint, std::int64_t> exceptions) : ring_(ring) {
  for (const auto& [P, v] : exceptions) {
    const std::int64_t r = ring_.reduce(v - def);
    if (r != 0) exc_[P] = r;
  }
}

GaloisElem GaloisElem::delta(lat::Zl ring, const ClosedPoint& P) { return GaloisElem(ring, 0, {{P, 1}}); }

std::int64_t GaloisElem::at(const ClosedPoint& P) const {
  auto it = exc_.find(P);
  return it == exc_.end() ? 0 : it->second;
}

GaloisElem GaloisElem::operator+(const GaloisElem& o) const {
  auto e = exc_;
  for (const auto& [P, v] : o.exc_) e[P] += v;
  return GaloisElem(ring_, 0, std::move(e));
}

GaloisElem GaloisElem::operator-(const GaloisElem& o) const { return *this + o.scaled(-1); }

GaloisElem GaloisElem::scaled(std::int64_t k) const {
  auto e = exc_;
  for (auto& [P, v] : e) v = ring_.reduce(ring_.reduce(k) * v);
  return GaloisElem(ring_, 0, std::move(e));
}

std::string GaloisElem::to_string() const {
  std::ostringstream os;
  os << "{default: 0";
  for (const auto& [P, v] : exc_) os << ", " << P.to_string() << ": " << v;
  os << "}";
  return os.str();
}

std::int64_t kummer_pairing_shifted(const GaloisElem& mu, const Divisor& D, std::int64_t shift) {
  const lat::Zl& R = mu.ring();
  std::int64_t s = 0;
  for (const auto& [P, n] : D.coeffs) {
    const std::int64_t w = R.reduce(mu.at(P) + shift);
    s = R.reduce(s + R.reduce(w * R.reduce(n * P.degree())));
  }
  return s;
}

std::int64_t kummer_pairing(const GaloisElem& mu, const Divisor& D) { return kummer_pairing_shifted(mu, D, 0); }

std::int64_t kummer_pairing(const GaloisElem& mu, const URat& f) { return kummer_pairing(mu, principal_divisor(f)); }

GaloisElem inertia_generator(lat::Zl ring, const ClosedPoint& P) { return GaloisElem::delta(ring, P); }

std::size_t support_size(const GaloisElem& mu) { return mu.exceptions().size(); }

Separator cu_separator(const GaloisElem& iota, int s) {
  if (s < 0) throw std::invalid_argument("separator needs s >= 0");
  const std::size_t need = static_cast<std::size_t>(s) + 1;
  if (support_size(iota) <= static_cast<std::size_t>(s)) throw std::invalid_argument("separator needs support size > s");
  const lat::Zl& R = iota.ring();
  auto usable = [&](const ClosedPoint& P) { return P.degree() % R.ell != 0; };
  const ff::Field F = iota.exceptions().begin()->first.field;

  std::vector<ClosedPoint> exc;
  for (const auto& [P, v] : iota.exceptions()) {
    if (usable(P)) exc.push_back(P);
  }
  // Points carrying the default value, smallest degree first.
  std::vector<ClosedPoint> defaults;
  for (int d = 1; defaults.size() < need && d <= 8; ++d) {
    std::vector<ClosedPoint> layer;
    if (d == 1) {
      layer = val::closed_points(F, 1);
    } else {
      for (auto& p : ff::monic_irreducibles(F, d)) layer.push_back(ClosedPoint::from_poly(p));
    }
    for (auto& P : layer) {
      if (defaults.size() < need && usable(P) && iota.at(P) == 0 && !iota.exceptions().count(P)) defaults.push_back(P);
    }
  }

  Separator sep;
  std::map<std::int64_t, ClosedPoint> by_value;
  if (!defaults.empty()) by_value.emplace(0, defaults.front());
  for (const auto& P : exc) by_value.emplace(iota.at(P), P);
  if (by_value.size() >= 2 * need) {
    sep.selection_case = 1;
    std::vector<ClosedPoint> firsts;
    if (!defaults.empty()) firsts.push_back(defaults.front());
    for (const auto& P : exc) {
      if (by_value.at(iota.at(P)) == P) firsts.push_back(P);
    }
    firsts.resize(2 * need);
    sep.Q = firsts;
  } else if (defaults.size() >= need && exc.size() >= need) {
    sep.selection_case = 2;
    sep.Q.assign(defaults.begin(), defaults.begin() + static_cast<std::ptrdiff_t>(need));
    sep.Q.insert(sep.Q.end(), exc.begin(), exc.begin() + static_cast<std::ptrdiff_t>(need));
  } else {
    throw std::invalid_argument("separator needs s+1 support points of degree prime to l");
  }
  std::sort(sep.Q.begin(), sep.Q.end());

  const std::size_t n = sep.Q.size();
  lat::IMat deg(1, lat::IVec(n));
  for (std::size_t i = 0; i < n; ++i) deg[0][i] = sep.Q[i].degree();
  for (const auto& v : lat::integer_kernel(deg, static_cast<int>(n))) {
    Divisor D;
    UPoly num = UPoly::constant(F, 1), den = UPoly::constant(F, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      D.coeffs[sep.Q[i]] = v[i];
      if (sep.Q[i].infinity) continue;
      if (v[i] > 0) num = num * power(sep.Q[i].poly, v[i]);
      else den = den * power(sep.Q[i].poly, -v[i]);
    }
    sep.divisors.push_back(D);
    sep.functions.emplace_back(num, den);
  }

  const std::size_t k = sep.divisors.size();
  for (const auto& D : sep.divisors) sep.psi_iota.push_back(kummer_pairing(iota, D));
  for (const auto& P : sep.Q) {
    std::vector<std::int64_t> row;
    const GaloisElem d = GaloisElem::delta(R, P);
    for (const auto& D : sep.divisors) row.push_back(kummer_pairing(d, D));
    sep.psi_delta.push_back(row);
  }
  sep.separating = true;
  for_each_subset(n, static_cast<std::size_t>(s), [&](const std::vector<std::size_t>& W) {
    ++sep.subsets_checked;
    lat::IMat A(k, lat::IVec(W.size()));
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t c = 0; c < W.size(); ++c) A[j][c] = sep.psi_delta[W[c]][j];
    }
    const bool in_span = W.empty() ? std::all_of(sep.psi_iota.begin(), sep.psi_iota.end(), [](std::int64_t x) { return x == 0; })
                                   : lat::solve_mod(A, static_cast<int>(W.size()), sep.psi_iota, R.modulus()).has_value();
    if (in_span) sep.separating = false;
    return sep.separating;
  });
  return sep;
}

bool verify_separation(const GaloisElem& iota, const Separator& sep, int s) {
  const lat::Zl& R = iota.ring();
  const std::int64_t M = R.modulus();
  std::int64_t combos = 1;
  for (int i = 0; i < s; ++i) {
    combos *= M;
    if (combos > (1 << 24)) throw std::invalid_argument("coefficient space too large for exhaustive verification");
  }
  std::set<ClosedPoint> inQ(sep.Q.begin(), sep.Q.end());
  std::vector<std::int64_t> target;
  std::vector<std::vector<std::int64_t>> cols;
  for (const auto& f : sep.functions) {
    const Divisor D = principal_divisor(f);
    if (D.degree() != 0) return false;
    for (const auto& [P, e] : D.coeffs) {
      if (!inQ.count(P)) return false;
    }
    target.push_back(kummer_pairing(iota, D));
  }
  for (const auto& P : sep.Q) {
    std::vector<std::int64_t> c;
    for (const auto& f : sep.functions) c.push_back(kummer_pairing(GaloisElem::delta(R, P), f));
    cols.push_back(c);
  }
  bool ok = true;
  for_each_subset(sep.Q.size(), static_cast<std::size_t>(s), [&](const std::vector<std::size_t>& W) {
    for (std::int64_t code = 0; code < combos && ok; ++code) {
      std::vector<std::int64_t> a(W.size());
      std::int64_t r = code;
      for (auto& x : a) {
        x = r % M;
        r /= M;
      }
      bool equal = true;
      for (std::size_t j = 0; j < target.size() && equal; ++j) {
        std::int64_t v = 0;
        for (std::size_t c = 0; c < W.size(); ++c) v = R.reduce(v + a[c] * cols[W[c]][j]);
        equal = v == target[j];
      }
      if (equal) ok = false;
    }
    return ok;
  });
  return ok;
}

GenusReport genus_detect(const CurveData& data) {
  GenusReport rep;
  if (data.genus >= 1) {
    rep.positive = data.token_quotient_order > 1;
    rep.reason = rep.positive ? "declared quotient of order " + std::to_string(data.token_quotient_order) + " receives no inertia"
                              : "no nonzero token quotient declared";
    return rep;
  }
  const std::int64_t M = data.ring.modulus();
  for (const auto& f : data.quotient_candidates) {
    ++rep.candidates_scanned;
    if (f.is_zero()) continue;
    const Divisor D = principal_divisor(f);
    bool kills = true, nonzero = false;
    for (const auto& [P, e] : D.coeffs) {
      if (lat::mod(e, M) != 0) {
        kills = false;
        nonzero = true;
      }
    }
    if (kills && nonzero) {
      rep.positive = true;
      rep.reason = "candidate " + f.to_string() + " kills inertia";
      return rep;
    }
  }
  rep.reason = "inertia generates the group: every candidate killing inertia is trivial";
  return rep;
}

std::vector<URat> adversarial_quotients(const ff::Field& F, lat::Zl ring, int count, std::uint64_t seed) {
  util::Rng rng(seed);
  const int M = static_cast<int>(ring.modulus());
  auto random_poly = [&](int deg) {
    std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<Elem>(rng.below(F.order()));
    c.back() = 1;
    return UPoly(F, c);
  };
  std::vector<URat> out;
  for (int i = 0; i < count; ++i) {
    const URat g(random_poly(1 + static_cast<int>(rng.below(2))), random_poly(static_cast<int>(rng.below(2))));
    const Elem c = static_cast<Elem>(1 + rng.below(F.order() - 1));
    switch (i % 3) {
      case 0:
        out.push_back(g.pow(M) * URat::constant(F, c));
        break;
      case 1:
        out.push_back(g.pow(M + 1));
        break;
      default:
        out.push_back(g.pow(M * 2) / URat(UPoly::linear(F, c)).pow(M));
        break;
    }
  }
  return out;
}

InertiaData inertia_data(lat::Zl ring, const std::vector<ClosedPoint>& points) {
  InertiaData d;
  d.ring = ring;
  d.points = points;
  for (const auto& P : points) d.generators.push_back(GaloisElem::delta(ring, P));
  return d;
}

InertiaData planted(const InertiaData& A, std::int64_t a) {
  InertiaData B = A;
  const std::int64_t inv = A.ring.inv(a);
  for (auto& g : B.generators) g = g.scaled(inv);
  return B;
}

ConformalMatch cc_match(const InertiaData& A, const InertiaData& B, const std::vector<std::size_t>& bijection) {
  ConformalMatch r;
  r.bijection = bijection;
  const std::size_t n = A.generators.size();
  if (B.generators.size() != n || bijection.size() != n) {
    r.reason = "generator sets differ in size";
    return r;
  }
  std::vector<char> seen(n, 0);
  for (auto j : bijection) {
    if (j >= n || seen[j]) {
      r.reason = "declared bijection is not a permutation";
      return r;
    }
    seen[j] = 1;
  }
  const lat::Zl R = A.ring;
  GaloisElem sumA = GaloisElem::zero(R), sumB = GaloisElem::zero(R);
  for (std::size_t i = 0; i < n; ++i) {
    sumA = sumA + A.generators[i];
    sumB = sumB + B.generators[bijection[i]];
  }
  std::optional<std::int64_t> a;
  for (const auto& [P, v] : sumB.exceptions()) {
    if (R.is_unit(v)) {
      a = R.reduce(sumA.at(P) * R.inv(v));
      break;
    }
  }
  for (std::size_t i = 0; i < n && !a; ++i) {
    for (const auto& [P, v] : B.generators[bijection[i]].exceptions()) {
      if (R.is_unit(v)) {
        a = R.reduce(A.generators[i].at(P) * R.inv(v));
        break;
      }
    }
  }
  if (!a || !R.is_unit(*a)) {
    r.reason = "no unit solves the diagonal relation";
    return r;
  }
  r.a = *a;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(A.generators[i] == B.generators[bijection[i]].scaled(*a))) {
      r.inconsistent = i;
      r.reason = "generator " + std::to_string(i) + " is not a times its partner";
      return r;
    }
  }
  if (!(sumA == sumB.scaled(*a))) {
    r.reason = "diagonal relation fails";
    return r;
  }
  r.ok = true;
  return r;
}

std::string ladic_digits(std::int64_t a, lat::Zl ring) {
  std::int64_t v = ring.reduce(a);
  if (v == 0) return "0";
  std::string out;
  for (int i = 0; v != 0; ++i, v /= ring.ell) {
    const std::int64_t d = v % ring.ell;
    if (d == 0) continue;
    std::string term;
    if (i == 0) term = std::to_string(d);
    else term = (d == 1 ? "" : std::to_string(d)) + (i == 1 ? "l" : "l^" + std::to_string(i));
    out += (out.empty() ? "" : "+") + term;
  }
  return out;
}

}  // namespace gfl::curvegal

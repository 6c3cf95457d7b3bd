#include <gtest/gtest.h>

#include <set>

#include "gfl/ffcore/field.hpp"
#include "gfl/ffcore/linalg.hpp"
#include "gfl/ffcore/poly.hpp"
#include "gfl/util/rng.hpp"

using namespace gfl::ff;

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

int moebius(int n) {
  int res = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      res = -res;
    }
  }
  if (n > 1) res = -res;
  return res;
}

// Number of monic irreducibles of degree n over GF(q).
std::uint64_t necklace(std::uint64_t q, int n) {
  std::int64_t s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) s += moebius(d) * static_cast<std::int64_t>(ipow(q, n / d));
  }
  return static_cast<std::uint64_t>(s / n);
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_by_trial(const UPoly& f) {
  if (f.degree() <= 0) return false;
  const Field& F = f.field();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    const std::uint64_t total = ipow(F.order(), d);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
      std::uint64_t r = code;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<Elem>(r % F.order());
        r /= F.order();
      }
      c[d] = 1;
      if ((f % UPoly(F, c)).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Field> small_fields() {
  return {Field::prime(2), Field::prime(3), Field::prime(5), Field::prime(7), Field::galois(2, 2),
          Field::galois(2, 3), Field::galois(3, 2), Field::galois(5, 2), Field::galois(3, 3)};
}

}  // namespace

TEST(Field, AxiomsHoldExhaustively) {
  for (const auto& F : small_fields()) {
    const Elem q = F.order();
    if (q > 27) continue;
    for (Elem a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), 0u);
      if (a != 0) EXPECT_EQ(F.mul(a, F.inv(a)), 1u) << F.name() << " a=" << a;
      for (Elem b = 0; b < q; ++b) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        for (Elem c = 0; c < q; ++c) {
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST(Field, ConwayGeneratorIsPrimitive) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}, {7, 3}}) {
    const Field F = Field::galois(p, e);
    const Elem g = F.generator();
    std::set<Elem> seen;
    Elem x = 1;
    for (std::uint32_t i = 0; i + 1 < F.order(); ++i) {
      seen.insert(x);
      x = F.mul(x, g);
    }
    EXPECT_EQ(seen.size(), F.order() - 1) << F.name();
    EXPECT_EQ(x, 1u);
  }
}

TEST(Field, InverseOfZeroThrows) { EXPECT_THROW(Field::prime(5).inv(0), std::domain_error); }

TEST(Field, NonPrimeCharacteristicRejected) { EXPECT_THROW(Field::prime(9), std::invalid_argument); }

TEST(Poly, DivmodReconstructs) {
  gfl::util::Rng rng(11);
  for (const auto& F : small_fields()) {
    for (int it = 0; it < 30; ++it) {
      std::vector<Elem> a(8), b(4);
      for (auto& x : a) x = static_cast<Elem>(rng.below(F.order()));
      for (auto& x : b) x = static_cast<Elem>(rng.below(F.order()));
      b.back() = 1;
      const UPoly A(F, a), B(F, b);
      auto [q, r] = divmod(A, B);
      EXPECT_EQ(q * B + r, A);
      EXPECT_LT(r.degree(), B.degree());
    }
  }
}

TEST(Poly, FactorizationMatchesTrialDivision) {
  gfl::util::Rng rng(5);
  for (const auto& F : small_fields()) {
    for (int it = 0; it < 25; ++it) {
      const int deg = 1 + static_cast<int>(rng.below(7));
      std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = static_cast<Elem>(rng.below(F.order()));
      if (c.back() == 0) c.back() = 1;
      UPoly f(F, c);
      // Force repeated factors sometimes.
      if (it % 3 == 0) f = f * f;
      const auto fac = factor(f);
      UPoly prod = UPoly::constant(F, fac.unit);
      for (const auto& [g, m] : fac.factors) {
        EXPECT_TRUE(g.is_monic());
        EXPECT_TRUE(irreducible_by_trial(g)) << g.to_string() << " over " << F.name();
        prod *= g.pow(static_cast<unsigned>(m));
      }
      EXPECT_EQ(prod, f) << f.to_string() << " over " << F.name();
    }
  }
}

TEST(Poly, PthPowerFactorsInCharacteristicThree) {
  const Field F = Field::prime(3);
  const UPoly x = UPoly::variable(F);
  const UPoly f = (x * x + UPoly::constant(F, 1)).pow(3) * (x + UPoly::constant(F, 1)).pow(4);
  const auto fac = factor(f);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0].first, x + UPoly::constant(F, 1));
  EXPECT_EQ(fac.factors[0].second, 4);
  EXPECT_EQ(fac.factors[1].second, 3);
}

TEST(Poly, IrreducibleCountsMatchNecklaceFormula) {
  for (const auto& F : {Field::prime(2), Field::prime(3), Field::prime(5), Field::galois(2, 2), Field::galois(3, 2)}) {
    for (int n = 1; n <= 4; ++n) {
      if (ipow(F.order(), n) > 7000) continue;
      EXPECT_EQ(monic_irreducibles(F, n).size(), necklace(F.order(), n)) << F.name() << " n=" << n;
    }
  }
}

TEST(Poly, ResidueFieldOfIrreducibleQuadratic) {
  const Field F = Field::prime(3);
  const UPoly pi(F, {1, 0, 1});  // t^2 + 1
  const Field K = residue_field(pi);
  EXPECT_EQ(K.order(), 9u);
  const Elem u = K.generator();
  EXPECT_EQ(K.add(K.mul(u, u), 1), 0u);
  EXPECT_THROW(residue_field(UPoly(F, {2, 0, 1})), std::invalid_argument);
}

TEST(Linalg, ProjectivePointCounts) {
  EXPECT_EQ(enumerate_proj_points(VecSpace(Field::prime(3), 2)).size(), 4u);
  EXPECT_EQ(enumerate_proj_points(VecSpace(Field::prime(2), 3)).size(), 7u);
  EXPECT_EQ(enumerate_proj_points(VecSpace(Field::prime(5), 2)).size(), 6u);
}

TEST(Linalg, PointsAreNormalizedSortedUnique) {
  const VecSpace V(Field::galois(2, 2), 3);
  const auto pts = enumerate_proj_points(V);
  EXPECT_EQ(pts.size(), 21u);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  EXPECT_EQ(std::set<Vec>(pts.begin(), pts.end()).size(), pts.size());
  for (const auto& p : pts) EXPECT_EQ(normalize(V.field, p), p);
}

TEST(Linalg, SubspaceExamples) {
  EXPECT_EQ(enumerate_subspaces(VecSpace(Field::prime(3), 3), 3).size(), 1u);
  EXPECT_EQ(enumerate_subspaces(VecSpace(Field::prime(3), 3), 2).size(), 13u);
  EXPECT_EQ(enumerate_subspaces(VecSpace(Field::prime(2), 3), 2).size(), 7u);
}

TEST(Linalg, SubspaceCountsMatchGaussianBinomials) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int n = 1; n <= 4; ++n) {
      const VecSpace V(Field::prime(p), n);
      EXPECT_EQ(enumerate_proj_points(V).size(), gaussian_binomial(n, 1, p));
      for (int d = 0; d <= n; ++d) {
        const auto subs = enumerate_subspaces(V, d);
        EXPECT_EQ(subs.size(), gaussian_binomial(n, d, p)) << "p=" << p << " n=" << n << " d=" << d;
        EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
        for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_NE(subs[i - 1], subs[i]);
      }
    }
  }
}

TEST(Linalg, SpanExamples) {
  const Field F = Field::prime(3);
  EXPECT_EQ(span(F, 2, {{1, 0}, {0, 1}}), whole_space(VecSpace(F, 2)));
  EXPECT_TRUE(in_subspace({2, 2}, span(F, 2, {{1, 1}})));
  EXPECT_EQ(span(F, 2, {}).dim(), 0);
}

TEST(Linalg, HyperplanesOfSubspace) {
  const Field F = Field::prime(3);
  const auto B = span(F, 3, {{1, 0, 0}, {0, 1, 0}});
  const auto hs = B.hyperplanes();
  EXPECT_EQ(hs.size(), 4u);
  for (const auto& H : hs) {
    EXPECT_EQ(H.dim(), 1);
    for (const auto& v : H.basis()) EXPECT_TRUE(B.contains(v));
  }
}

TEST(Linalg, IntersectionDimension) {
  const Field F = Field::prime(5);
  const auto A = span(F, 3, {{1, 0, 0}, {0, 1, 0}});
  const auto B = span(F, 3, {{0, 1, 0}, {0, 0, 1}});
  const auto C = intersect(A, B);
  EXPECT_EQ(C.dim(), 1);
  EXPECT_TRUE(C.contains({0, 1, 0}));
}

#include <gtest/gtest.h>

#include <set>

#include "gfl/flagmap/flagmap.hpp"
#include "gfl/util/rng.hpp"

using namespace gfl;
using namespace gfl::flag;
using ff::Field;

namespace {

// Index of the first nonzero coordinate: ord_t on span{1, t, t^2, ...}.
std::int64_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return static_cast<std::int64_t>(i);
  }
  return -1;
}

// All complete flags of B, by recursion over the subspaces of the ambient space.
void all_flags(const Subspace& B, std::vector<Subspace>& cur, std::vector<std::vector<Subspace>>& out) {
  cur.push_back(B);
  if (B.dim() == 0) {
    out.push_back(cur);
  } else {
    const VecSpace V(B.field(), B.ambient());
    for (const auto& H : ff::enumerate_subspaces(V, B.dim() - 1)) {
      bool inside = true;
      for (const auto& v : H.basis()) inside = inside && B.contains(v);
      if (inside) all_flags(H, cur, out);
    }
  }
  cur.pop_back();
}

bool flag_witnesses(const HomogeneousMap& mu, const std::vector<Subspace>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!constant_off(mu, chain[i], chain[i + 1])) return false;
  }
  return true;
}

HomogeneousMap map_from_values(const VecSpace& V, std::vector<std::int64_t> vals) {
  return HomogeneousMap(V, Ring::Z(), std::move(vals));
}

}  // namespace

TEST(FlagDim2, Examples) {
  const VecSpace V(Field::prime(3), 2);
  const auto B = ff::whole_space(V);
  EXPECT_TRUE(is_flag_dim2(map_from_values(V, {5, 5, 5, 5}), B));
  EXPECT_TRUE(is_flag_dim2(map_from_values(V, {5, 5, 1, 5}), B));
  EXPECT_FALSE(is_flag_dim2(map_from_values(V, {0, 0, 1, 1}), B));
}

TEST(FlagMap, OneDimensionalSpaceIsAlwaysFlag) {
  const VecSpace V(Field::prime(5), 1);
  EXPECT_TRUE(is_flag_map(map_from_values(V, {7})));
}

TEST(FlagMap, OrdOnPolynomialsHasTheExpectedFlag) {
  const VecSpace V(Field::prime(3), 3);
  const auto mu = HomogeneousMap::from_function(V, Ring::Zl(5, 3), first_nonzero);
  EXPECT_TRUE(is_flag_map(mu));
  const auto flag = find_flag(mu, ff::whole_space(V));
  ASSERT_TRUE(flag.has_value());
  ASSERT_EQ(flag->chain.size(), 4u);
  const Field F = Field::prime(3);
  EXPECT_EQ(flag->chain[1], ff::span(F, 3, {{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(flag->chain[2], ff::span(F, 3, {{0, 0, 1}}));
  EXPECT_EQ(flag->chain[3].dim(), 0);
  // Brute force: this is the only witnessing flag.
  std::vector<std::vector<Subspace>> flags;
  std::vector<Subspace> cur;
  all_flags(ff::whole_space(V), cur, flags);
  EXPECT_EQ(flags.size(), 13u * 4u);
  int witnesses = 0;
  for (const auto& f : flags) witnesses += flag_witnesses(mu, f) ? 1 : 0;
  EXPECT_EQ(witnesses, 1);
}

TEST(FlagMap, ConstantMapGetsLexicographicallyLeastChain) {
  const VecSpace V(Field::prime(3), 3);
  const auto mu = HomogeneousMap::constant(V, Ring::Z(), 2);
  const auto flag = find_flag(mu, ff::whole_space(V));
  ASSERT_TRUE(flag.has_value());
  const auto hs = ff::whole_space(V).hyperplanes();
  EXPECT_EQ(flag->chain[1], hs.front());
}

TEST(FlagMap, FindFlagAgreesWithBruteForceOnRandomMaps) {
  const VecSpace V(Field::prime(3), 3);
  std::vector<std::vector<Subspace>> flags;
  std::vector<Subspace> cur;
  all_flags(ff::whole_space(V), cur, flags);
  util::Rng rng(7);
  int flag_maps = 0;
  for (int it = 0; it < 300; ++it) {
    // Bias towards flag maps: perturb a random flag map.
    std::vector<std::int64_t> vals(13);
    const auto& chain = flags[rng.below(flags.size())];
    const std::int64_t a = rng.range(0, 2), b = rng.range(0, 2), c = rng.range(0, 2);
    const auto pts = ff::enumerate_proj_points(V);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      vals[i] = !chain[1].contains(pts[i]) ? a : (!chain[2].contains(pts[i]) ? b : c);
    }
    if (it % 2 == 1) vals[rng.below(13)] = rng.range(0, 2);
    const auto mu = map_from_values(V, vals);
    bool brute = false;
    for (const auto& f : flags) brute = brute || flag_witnesses(mu, f);
    const auto found = find_flag(mu, ff::whole_space(V));
    EXPECT_EQ(found.has_value(), brute);
    if (found) EXPECT_TRUE(flag_witnesses(mu, found->chain));
    EXPECT_EQ(is_flag_map(mu), brute);
    EXPECT_EQ(flags_on_small_subspaces(mu), brute);
    flag_maps += brute ? 1 : 0;
  }
  EXPECT_GT(flag_maps, 50);
  EXPECT_LT(flag_maps, 300);
}

TEST(HReduction, FlagAndConstantMapsPass) {
  const VecSpace V(Field::prime(3), 2);
  EXPECT_TRUE(h_reduction_holds(map_from_values(V, {1, 1, 1, 1})).holds);
  EXPECT_TRUE(h_reduction_holds(map_from_values(V, {1, 1, 4, 1})).holds);
}

TEST(HReduction, ThreeValueConfigurationFails) {
  // Values (0,0), (0,1), (1,0) encoded as 0, 1, 2 on a plane.
  const VecSpace V(Field::prime(3), 2);
  const auto rep = h_reduction_holds(map_from_values(V, {0, 0, 1, 2}));
  EXPECT_FALSE(rep.holds);
  ASSERT_TRUE(rep.failing_mask.has_value());
}

TEST(HReduction, GuardRejectsTooManyValues) {
  const VecSpace V(Field::prime(5), 3);
  std::vector<std::int64_t> vals(31);
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = static_cast<std::int64_t>(i);
  EXPECT_THROW(h_reduction_holds(map_from_values(V, vals)), std::invalid_argument);
}

TEST(HReduction, FlagMapsSatisfyReductionExhaustivelyInDimensionTwo) {
  const VecSpace V(Field::prime(3), 2);
  for (int code = 0; code < 81; ++code) {
    std::vector<std::int64_t> vals(4);
    int r = code;
    for (auto& v : vals) {
      v = r % 3;
      r /= 3;
    }
    const auto mu = map_from_values(V, vals);
    if (is_flag_map(mu)) EXPECT_TRUE(h_reduction_holds(mu).holds);
  }
}

TEST(FunctionalEquation, Examples) {
  const VecSpace V(Field::prime(3), 2);
  const auto C = ff::whole_space(V);
  const auto pts = ff::enumerate_proj_points(V);
  const auto rep = functional_equation_flag(map_from_values(V, {0, 0, 0, 9}), C);
  ASSERT_TRUE(rep.holds);
  EXPECT_EQ(rep.basis->second, pts[3]);
  EXPECT_FALSE(functional_equation_flag(map_from_values(V, {2, 2, 2, 2}), C).holds);
}

TEST(FunctionalEquation, ImpliesFlagExhaustively) {
  const VecSpace V(Field::prime(3), 2);
  const auto C = ff::whole_space(V);
  for (int code = 0; code < 81; ++code) {
    std::vector<std::int64_t> vals(4);
    int r = code;
    for (auto& v : vals) {
      v = r % 3;
      r /= 3;
    }
    const auto mu = map_from_values(V, vals);
    const bool fe = functional_equation_flag(mu, C).holds;
    if (fe) EXPECT_TRUE(is_flag_dim2(mu, C));
    // Nonconstant flag maps in dimension two are exactly the one-deviant maps.
    const bool nonconstant = mu.value_set().size() > 1;
    EXPECT_EQ(fe, nonconstant && is_flag_dim2(mu, C));
  }
}

TEST(CPair, MapWithItself) {
  const VecSpace V(Field::prime(3), 3);
  util::Rng rng(1);
  std::vector<std::int64_t> vals(13);
  for (auto& v : vals) v = rng.range(0, 10);
  const auto mu = map_from_values(V, vals);
  const auto rep = is_c_pair(mu, mu);
  EXPECT_TRUE(rep.holds);
  for (const auto& w : rep.witnesses) {
    for (const auto& b : w.B.points()) EXPECT_EQ(w.s * mu(b) + w.s1 * mu(b), w.s2);
  }
}

TEST(CPair, PointValuationsAtZeroAndOneFail) {
  // span{t, t - 1} = span{1, t} over F_3; coordinates (c0, c1) of c0 + c1 t.
  const VecSpace V(Field::prime(3), 2);
  const auto ord0 = HomogeneousMap::from_function(V, Ring::Z(), [](const Vec& v) -> std::int64_t { return v[0] == 0 ? 1 : 0; });
  const auto ord1 = HomogeneousMap::from_function(V, Ring::Z(), [](const Vec& v) -> std::int64_t { return (v[0] + v[1]) % 3 == 0 ? 1 : 0; });
  const auto rep = is_c_pair(ord0, ord1);
  EXPECT_FALSE(rep.holds);
  ASSERT_EQ(rep.failing.size(), 1u);
  const auto rep_l = is_c_pair(ord0.reduced(Ring::Zl(5, 2)), ord1.reduced(Ring::Zl(5, 2)));
  EXPECT_FALSE(rep_l.holds);
  const auto combo = find_flag_combination(ord0.reduced(Ring::Zl(5, 2)), ord1.reduced(Ring::Zl(5, 2)));
  // ord_0 alone is a flag map, so the scan still succeeds at (1, 0).
  ASSERT_TRUE(combo.coefficients.has_value());
  EXPECT_EQ(combo.coefficients->first, 1);
  EXPECT_EQ(combo.coefficients->second, 0);
}

TEST(CPair, WitnessesSatisfyRelationModuloLPower) {
  const VecSpace V(Field::prime(3), 3);
  util::Rng rng(9);
  const Ring R = Ring::Zl(5, 2);
  for (int it = 0; it < 20; ++it) {
    std::vector<std::int64_t> a(13), b(13);
    for (auto& v : a) v = rng.range(0, 24);
    for (auto& v : b) v = rng.range(0, 24);
    const HomogeneousMap mu(V, R, a), mu2(V, R, b);
    const auto rep = is_c_pair(mu, mu2);
    for (const auto& w : rep.witnesses) {
      EXPECT_TRUE(R.reduce(w.s) != 0 || R.reduce(w.s1) != 0);
      for (const auto& p : w.B.points()) EXPECT_EQ(R.reduce(w.s * mu(p) + w.s1 * mu2(p) - w.s2), 0);
    }
  }
}

TEST(FlagCombination, LMultipleVanishesAtLevelOne) {
  const VecSpace V(Field::prime(3), 3);
  const Ring R = Ring::Zl(5, 1);
  const auto alpha = HomogeneousMap::from_function(V, R, first_nonzero);
  util::Rng rng(4);
  std::vector<std::int64_t> beta(13);
  for (auto& v : beta) v = rng.range(0, 100);
  const auto second = alpha.combine(1, HomogeneousMap(V, R, beta), 5);
  const auto rep = find_flag_combination(alpha, second);
  ASSERT_TRUE(rep.coefficients.has_value());
  EXPECT_EQ(rep.coefficients->first, 1);
  EXPECT_EQ(rep.coefficients->second, 0);
}

TEST(FlagCombination, ProjectiveLineEnumeration) {
  const auto pts = projective_line_mod(3, 2);
  EXPECT_EQ(pts.size(), 12u);  // |P^1(Z/9)| = 9 + 3
  using P = std::pair<std::int64_t, std::int64_t>;
  EXPECT_EQ(pts.front(), P(1, 0));
  EXPECT_EQ(pts[9], P(0, 1));
}

TEST(Cliques, SingleAndProportionalMaps) {
  const VecSpace V(Field::prime(3), 2);
  const auto mu = map_from_values(V, {0, 1, 2, 3});
  EXPECT_EQ(maximal_cpair_cliques({mu}), (std::vector<std::vector<std::size_t>>{{0}}));
  const auto mu2 = mu.combine(2, mu, 0);
  const auto mu3 = mu.combine(-1, HomogeneousMap::constant(V, Ring::Z(), 4), 1);
  EXPECT_EQ(maximal_cpair_cliques({mu, mu2, mu3}), (std::vector<std::vector<std::size_t>>{{0, 1, 2}}));
  EXPECT_TRUE(proportional(mu, mu3));
}

TEST(Cliques, BronKerboschMatchesBruteForce) {
  util::Rng rng(21);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + rng.below(8);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = rng.coin();
    }
    std::vector<std::uint32_t> cliques;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = i + 1; j < n && ok; ++j) {
          if ((mask >> i & 1U) && (mask >> j & 1U)) ok = adj[i][j];
        }
      }
      if (ok) cliques.push_back(mask);
    }
    std::set<std::vector<std::size_t>> maximal;
    for (auto m : cliques) {
      bool is_max = true;
      for (auto m2 : cliques) is_max = is_max && !(m2 != m && (m2 & m) == m);
      if (!is_max) continue;
      std::vector<std::size_t> c;
      for (std::size_t i = 0; i < n; ++i) {
        if (m >> i & 1U) c.push_back(i);
      }
      maximal.insert(c);
    }
    const auto got = maximal_cliques(adj);
    EXPECT_EQ(std::set<std::vector<std::size_t>>(got.begin(), got.end()), maximal);
    EXPECT_EQ(got.size(), maximal.size());
  }
}

TEST(Logarithmic, OrdOnPolynomialProducts) {
  // span{1, t, t^2} over F_3 with products kept when they stay in the span.
  const VecSpace V(Field::prime(3), 3);
  const auto ord = HomogeneousMap::from_function(V, Ring::Z(), first_nonzero);
  const Multiplication mult = [](const Vec& a, const Vec& b) -> std::optional<Vec> {
    Vec c(5, 0);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % 3;
    }
    if (c[3] != 0 || c[4] != 0) return std::nullopt;
    return Vec{c[0], c[1], c[2]};
  };
  const auto rep = is_logarithmic(ord, mult);
  EXPECT_TRUE(rep.holds);
  EXPECT_GT(rep.tested, 0u);
  EXPECT_GT(rep.skipped, 0u);
  EXPECT_FALSE(is_logarithmic(HomogeneousMap::constant(V, Ring::Z(), 1), mult).holds);
}

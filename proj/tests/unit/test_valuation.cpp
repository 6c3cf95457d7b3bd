#include <gtest/gtest.h>

#include "gfl/util/rng.hpp"
#include "gfl/valuation/valuation.hpp"

using namespace gfl;
using namespace gfl::val;
using flag::Ring;

namespace {

const Field F3 = Field::prime(3);

RatFunc X() { return RatFunc::x(F3); }
RatFunc Y() { return RatFunc::y(F3); }
RatFunc T() { return RatFunc::t(F3); }
RatFunc one(int nvars = 2) { return RatFunc::constant(F3, 1, nvars); }
RatFunc c(Elem a, int nvars = 2) { return RatFunc::constant(F3, a, nvars); }

PlaneCurve curve(const RatFunc& f) { return PlaneCurve::from_poly(f.num()); }

BPoly random_bpoly(util::Rng& rng, const Field& F, int deg) {
  std::vector<std::tuple<int, int, Elem>> terms;
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; i + j <= deg; ++j) terms.emplace_back(i, j, static_cast<Elem>(rng.below(F.order())));
  }
  return BPoly::from_terms(F, terms);
}

RatFunc random_ratfunc(util::Rng& rng, const Field& F, int nvars) {
  for (;;) {
    BPoly n = random_bpoly(rng, F, 3), d = random_bpoly(rng, F, 2);
    if (nvars == 1) {
      n = BPoly::from_x(n.ycoeff(0));
      d = BPoly::from_x(d.ycoeff(0));
    }
    if (!n.is_zero() && !d.is_zero()) return RatFunc(n, d, nvars);
  }
}

std::vector<Valuation> sample_valuations() {
  std::vector<Valuation> vs;
  vs.push_back(Valuation::point(ClosedPoint::rational(F3, 0)));
  vs.push_back(Valuation::point(ClosedPoint::at_infinity(F3)));
  vs.push_back(Valuation::point(ClosedPoint::from_poly(UPoly(F3, {1, 0, 1}))));
  const PlaneCurve cx = curve(X()), parab = curve(Y() - X() * X()), vert = curve(X() * X() + one());
  const PlaneCurve inf = PlaneCurve::line_at_infinity(F3);
  for (const auto& C : {cx, parab, vert, inf}) vs.push_back(Valuation::divisorial(C));
  vs.push_back(Valuation::flag(cx, ClosedPoint::rational(F3, 0)));
  vs.push_back(Valuation::flag(parab, ClosedPoint::rational(F3, 1)));
  vs.push_back(Valuation::flag(inf, ClosedPoint::rational(F3, 0)));
  vs.push_back(Valuation::flag(vert, ClosedPoint::rational(vert.residue_constants(), 1)));
  return vs;
}

}  // namespace

TEST(Ord, PointExamples) {
  const RatFunc f = T() * T() / (T() - one(1));
  EXPECT_EQ(ord(Valuation::point(ClosedPoint::rational(F3, 0)), f), (Value{2, 0, 1}));
  EXPECT_EQ(ord(Valuation::point(ClosedPoint::at_infinity(F3)), f), (Value{-1, 0, 1}));
}

TEST(Ord, FlagExample) {
  const Valuation v = Valuation::flag(curve(X()), ClosedPoint::rational(F3, 0));
  const Value r = ord(v, Y() + X());
  EXPECT_EQ(r.a, 0);
  EXPECT_EQ(r.b, 1);
  EXPECT_EQ(r.rank, 2);
}

TEST(Ord, ZeroRejected) {
  EXPECT_THROW(ord(Valuation::divisorial(curve(X())), c(0)), std::domain_error);
}

TEST(Ord, MultiplicativeAndUltrametric) {
  util::Rng rng(11);
  for (const auto& v : sample_valuations()) {
    const Field& F = F3;
    for (int trial = 0; trial < 100; ++trial) {
      const RatFunc f = random_ratfunc(rng, F, v.nvars());
      const RatFunc g = random_ratfunc(rng, F, v.nvars());
      const Value a = ord(v, f), b = ord(v, g);
      EXPECT_EQ(ord(v, f * g), a + b) << v.to_string() << " " << f.to_string() << " " << g.to_string();
      const RatFunc s = f + g;
      if (!s.is_zero()) EXPECT_GE(ord(v, s), std::min(a, b)) << v.to_string();
    }
  }
}

TEST(Ord, Surjective) {
  for (const auto& v : sample_valuations()) {
    bool hits_one = false;
    for (const auto& f : {X(), Y(), X() - one(), Y() - one(), X() * X() + one(), one() / X(), Y() - X() * X(), T(), one(1) / T(), T() * T() + one(1)}) {
      if (f.nvars() != v.nvars()) continue;
      hits_one = hits_one || ord(v, f).a == 1;
    }
    if (v.kind() != ValKind::Flag) EXPECT_TRUE(hits_one) << v.to_string();
  }
}

TEST(Residue, Examples) {
  const Residue r1 = residue(curve(Y()), X(), Y());
  EXPECT_FALSE(r1.trivial);
  EXPECT_EQ(r1.value.to_string("x"), "x");
  EXPECT_TRUE(residue(curve(X()), Y(), Y() + one()).trivial);
  const Residue r3 = residue(curve(X()), X() * Y(), X());
  EXPECT_FALSE(r3.trivial);
  EXPECT_EQ(r3.value.degree(), 1);
}

TEST(Residue, SweepExamples) {
  EXPECT_TRUE(residues_vanish_all(X(), X() + one()).vanish);
  EXPECT_TRUE(residues_vanish_all(X() * X(), X() * X() * X()).vanish);
  const auto s = residues_vanish_all(X(), Y());
  EXPECT_FALSE(s.vanish);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_TRUE(*s.witness == curve(X()) || *s.witness == curve(Y()) || s.witness->is_infinity());
}

TEST(Residue, FunctionsOfOneVariableHaveVanishingResidues) {
  util::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    RatFunc f = random_ratfunc(rng, F3, 1), g = random_ratfunc(rng, F3, 1);
    if (f.is_constant() || g.is_constant()) continue;
    const RatFunc f2(f.num(), f.den(), 2), g2(g.num(), g.den(), 2);
    EXPECT_TRUE(residues_vanish_all(f2, g2).vanish) << f2.to_string() << " " << g2.to_string();
    const RatFunc fs(f.num().swap_xy(), f.den().swap_xy(), 2), gs(g.num().swap_xy(), g.den().swap_xy(), 2);
    EXPECT_TRUE(residues_vanish_all(fs, gs).vanish);
  }
}

TEST(Compatible, Examples) {
  const PlaneCurve cx = curve(X()), cy = curve(Y());
  const Valuation nx = Valuation::divisorial(cx), ny = Valuation::divisorial(cy);
  EXPECT_TRUE(compatible(nx, Valuation::flag(cx, ClosedPoint::rational(F3, 0))).compatible);
  const auto r = compatible(nx, ny);
  EXPECT_FALSE(r.compatible);
  EXPECT_TRUE(r.decomposition_verified);
  EXPECT_GT(r.samples_checked, 0u);
  EXPECT_TRUE(compatible(nx, nx).compatible);
  EXPECT_FALSE(compatible(Valuation::flag(cx, ClosedPoint::rational(F3, 0)), Valuation::flag(cx, ClosedPoint::rational(F3, 1))).compatible);
  EXPECT_THROW(compatible(nx, Valuation::point(ClosedPoint::rational(F3, 0))), std::invalid_argument);
}

TEST(Compatible, DecompositionAcrossCurveTypes) {
  const std::vector<PlaneCurve> cs = {curve(X()), curve(Y() - X() * X()), curve(X() * X() + one()), PlaneCurve::line_at_infinity(F3)};
  for (const auto& a : cs) {
    for (const auto& b : cs) {
      if (a == b) continue;
      const auto r = compatible(Valuation::divisorial(a), Valuation::divisorial(b));
      EXPECT_FALSE(r.compatible);
      EXPECT_TRUE(r.decomposition_verified) << a.to_string() << " vs " << b.to_string();
    }
  }
}

TEST(FunctionSubspace, Coordinates) {
  const FunctionSubspace B({one(), X(), Y() / (X() + one())});
  const ff::Vec v = {1, 2, 1};
  const auto cs = B.coordinates(B.element(v));
  ASSERT_TRUE(cs.has_value());
  EXPECT_EQ(*cs, v);
  EXPECT_FALSE(B.coordinates(Y()).has_value());
  EXPECT_THROW(FunctionSubspace({X(), X().scaled(2)}), std::invalid_argument);
}

TEST(OrderFromFlagmap, OrdTMatches) {
  const FunctionSubspace B({one(1), T(), T() * T()});
  const Valuation v = Valuation::point(ClosedPoint::rational(F3, 0));
  const auto alpha = value_map(B, v, 0, Ring::Zl(2, 3));
  ASSERT_TRUE(flag::is_flag_map(alpha));
  const auto mult = B.multiplication();
  const Preorder o = order_from_flagmap(alpha, &mult);
  EXPECT_TRUE(o.total);
  EXPECT_TRUE(o.transitive);
  EXPECT_TRUE(o.product_compatible);
  EXPECT_GT(o.product_checks, 0u);
  EXPECT_EQ(order_mismatches(o, valuation_table(B, v)), 0u);
  const std::size_t i1 = alpha.index_of({1, 0, 0}), it = alpha.index_of({0, 1, 0}), it2 = alpha.index_of({0, 0, 1});
  EXPECT_EQ(o.cmp[it2][it], 1);
  EXPECT_EQ(o.cmp[it][i1], 1);
  EXPECT_EQ(o.level[it2], 2);
}

TEST(OrderFromFlagmap, ConstantIsOneClass) {
  const ff::VecSpace V(F3, 3);
  const Preorder o = order_from_flagmap(flag::HomogeneousMap::constant(V, Ring::Z(), 4));
  for (int l : o.level) EXPECT_EQ(l, 0);
}

TEST(OrderFromFlagmap, FirstComponentOfFlagValuation) {
  const FunctionSubspace B({X(), Y()});
  const Valuation v = Valuation::flag(curve(X()), ClosedPoint::rational(F3, 0));
  const auto alpha = value_map(B, v, 0, Ring::Z());
  const Preorder o = order_from_flagmap(alpha);
  std::vector<Value> m;
  for (const auto& x : valuation_table(B, v)) m.push_back({x.a, 0, 1});
  EXPECT_EQ(order_mismatches(o, m), 0u);
}

TEST(OrderFromFlagmap, ReproducesGenuineValuations) {
  const FunctionSubspace B({one(), X(), Y(), X() * Y()});
  for (const auto& v : sample_valuations()) {
    if (v.nvars() != 2) continue;
    const auto alpha = packed_value_map(B, v, Ring::Z());
    const Preorder o = order_from_flagmap(alpha);
    EXPECT_TRUE(o.total && o.transitive) << v.to_string();
    EXPECT_EQ(order_mismatches(o, valuation_table(B, v)), 0u) << v.to_string();
  }
}

TEST(Decomposition, Examples) {
  const FunctionSubspace B({one(), X()});
  const PlaneCurve cx = curve(X());
  const Valuation nu = Valuation::divisorial(cx);
  const auto mu2 = value_map(B, Valuation::flag(cx, ClosedPoint::rational(F3, 0)), 1, Ring::Z());
  EXPECT_TRUE(decomposition_respects(mu2, nu, B).holds);
  const auto mu1 = value_map(B, nu, 0, Ring::Z());
  EXPECT_TRUE(decomposition_respects(mu1, nu, B).holds);

  const FunctionSubspace L({one(1), T()});
  const auto mu = value_map(L, Valuation::point(ClosedPoint::rational(F3, 1)), 0, Ring::Z());
  const auto r = decomposition_respects(mu, Valuation::point(ClosedPoint::rational(F3, 0)), L);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
}

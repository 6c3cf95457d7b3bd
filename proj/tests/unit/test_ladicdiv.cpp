#include <gtest/gtest.h>

#include "gfl/ladicdiv/ladicdiv.hpp"
#include "gfl/util/rng.hpp"

using namespace gfl;
using namespace gfl::ladic;
using val::BPoly;
using ff::Elem;
using ff::Field;

namespace {

const Field F7 = Field::prime(7);

RatFunc X(const Field& F = F7) { return RatFunc::x(F); }
RatFunc Y(const Field& F = F7) { return RatFunc::y(F); }
RatFunc k(Elem a, const Field& F = F7) { return RatFunc::constant(F, a); }
PlaneCurve curve(const RatFunc& f) { return PlaneCurve::from_poly(f.num()); }

// Evaluates U(x)/V(x) for coefficient lists.
RatFunc evaluate(const std::vector<Elem>& u, const std::vector<Elem>& v, const RatFunc& x) {
  auto poly = [&](const std::vector<Elem>& c) {
    RatFunc s = k(0, x.field());
    for (std::size_t i = c.size(); i-- > 0;) s = s * x + k(c[i], x.field());
    return s;
  };
  return poly(u) / poly(v);
}

}  // namespace

TEST(ClassMap, Examples) {
  const lat::Zl R(3, 2);
  const PlaneCurve L = curve(X()), L2 = curve(Y()), Q = curve(Y() - X() * X());
  EXPECT_EQ(class_map({R, {{L, 2}, {Q, -1}}}), 0);
  EXPECT_EQ(class_map({R, {{L, 1}}}), 1);
  EXPECT_EQ(class_map({R, {{L, 4}, {L2, -4}}}), 0);
}

TEST(Decompose, LineSquaredOverConic) {
  const lat::Zl R(3, 2);
  const PlaneCurve L = curve(X()), Q = curve(Y() - X() * X());
  const LadicDivisor D{R, {{L, 2}, {Q, -1}}};
  const auto dec = dd_decompose(D);
  ASSERT_EQ(dec.functions.size(), 1u);
  EXPECT_EQ(dec.functions[0].to_ratfunc(dec.support), X() * X() / (Y() - X() * X()));
  EXPECT_EQ(dec.coefficients, (std::vector<std::int64_t>{1}));
  EXPECT_TRUE(reconstruction_residual(D, dec).is_zero());
}

TEST(Decompose, LinesWithLadicCoefficient) {
  const lat::Zl R(3, 3);
  const PlaneCurve L1 = curve(X()), L2 = curve(Y());
  const LadicDivisor D{R, {{L1, 13}, {L2, -13}}};
  const auto dec = dd_decompose(D);
  ASSERT_EQ(dec.functions.size(), 1u);
  const RatFunc f = dec.functions[0].to_ratfunc(dec.support);
  ASSERT_TRUE(f == X() / Y() || f == Y() / X());
  EXPECT_EQ(dec.coefficients, (std::vector<std::int64_t>{f == X() / Y() ? 13 : 14}));
  EXPECT_TRUE(reconstruction_residual(D, dec).is_zero());
  EXPECT_TRUE(regrouped_residual(D, dec).is_zero());
}

TEST(Decompose, NonzeroClassRejected) {
  EXPECT_THROW(dd_decompose({lat::Zl(3, 2), {{curve(X()), 1}}}), std::invalid_argument);
}

TEST(Decompose, RandomClassZeroDivisors) {
  const Field F5 = Field::prime(5);
  const std::vector<PlaneCurve> pool = {
      curve(X(F5)), curve(Y(F5)), curve(X(F5) + k(1, F5)), curve(Y(F5) - X(F5) * X(F5)), curve(X(F5) * X(F5) + k(2, F5)),
      curve(Y(F5) + X(F5) + k(3, F5)), PlaneCurve::line_at_infinity(F5), curve(X(F5) - Y(F5) * Y(F5) - k(1, F5))};
  util::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const lat::Zl R(3, 1 + static_cast<int>(rng.below(4)));
    const std::size_t n = 2 + rng.below(5);
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
    LadicDivisor D{R, {}};
    std::int64_t deg = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::int64_t a = static_cast<std::int64_t>(rng.below(R.modulus()));
      D.terms.emplace_back(pool[idx[i]], a);
      deg += a * pool[idx[i]].degree();
    }
    // Close the class with a degree-one curve.
    const PlaneCurve& last = pool[idx[n - 1]].degree() == 1 ? pool[idx[n - 1]] : pool[6];
    D.terms.emplace_back(last, -deg);
    ASSERT_EQ(class_map(D), 0);
    const auto dec = dd_decompose(D);
    EXPECT_TRUE(reconstruction_residual(D, dec).is_zero()) << D.to_string();
    EXPECT_TRUE(regrouped_residual(D, dec).is_zero()) << D.to_string();
    EXPECT_TRUE(dec.regrouped_lifts_independent);
  }
}

TEST(SuppX, Examples) {
  const lat::Zl R(3, 2);
  const auto s = supp_x({R, {X()}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(s[0].first == curve(X()) || s[1].first == curve(X()));
  EXPECT_TRUE(supp_x({R, {X().pow(3), k(1) / X()}}).empty());
  EXPECT_TRUE(supp_x({R, {k(3)}}).empty());
}

TEST(SuppX, PrincipalClassIsZero) {
  const lat::Zl R(5, 2);
  util::Rng rng(4);
  const std::vector<RatFunc> atoms = {X(), Y(), X() + k(1), Y() - X() * X(), X() * X() + k(3), X() - Y() + k(2)};
  for (int trial = 0; trial < 30; ++trial) {
    LadicFunction f{R, {}};
    for (int i = 0; i < 2; ++i) {
      RatFunc p = k(1);
      for (int j = 0; j < 3; ++j) {
        const RatFunc& a = atoms[rng.below(atoms.size())];
        p = rng.coin() ? p * a : p / a;
      }
      f.parts.push_back(p);
    }
    EXPECT_EQ(class_map(divisor_of(f)), 0);
  }
}

TEST(Subfield, SatiPattern) {
  const lat::Zl R(3, 2);
  const auto r = gff_subfield({R, {X()}}, {R, {(X() + k(1)) * (X() + k(2))}});
  ASSERT_TRUE(r.ok) << r.reason;
  EXPECT_EQ(*r.generator, X());
  EXPECT_FALSE(r.shared_support.empty());
}

TEST(Subfield, IndependentPairFails) {
  const lat::Zl R(3, 2);
  const auto r = gff_subfield({R, {X()}}, {R, {Y()}});
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.witness_curve.has_value());
}

TEST(Subfield, PowersShareGenerator) {
  const lat::Zl R(3, 2);
  const auto r = gff_subfield({R, {X() * X()}}, {R, {X() * X() * X()}});
  ASSERT_TRUE(r.ok) << r.reason;
  EXPECT_EQ(*r.generator, X());
}

TEST(Subfield, HiddenGeneratorRecovered) {
  const lat::Zl R(3, 2);
  const RatFunc u = Y() - X() * X();
  const RatFunc f = (u + k(1)) / (u + k(3)), g = (u + k(2)) * (u + k(5)) * u;
  const auto r = gff_subfield({R, {f}}, {R, {g}});
  ASSERT_TRUE(r.ok) << r.reason;
  ASSERT_EQ(r.expressions.size(), 2u);
  EXPECT_EQ(evaluate(r.expressions[0].first, r.expressions[0].second, *r.generator), f);
  EXPECT_EQ(evaluate(r.expressions[1].first, r.expressions[1].second, *r.generator), g);
}

TEST(ExpressIn, RoundTrip) {
  const RatFunc x = (X() + Y()) / (X() - k(1));
  const RatFunc h = (x * x + k(3)) / (x + k(2));
  const auto e = express_in(h, x);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(evaluate(e->first, e->second, x), h);
  EXPECT_FALSE(express_in(Y(), X()).has_value());
}

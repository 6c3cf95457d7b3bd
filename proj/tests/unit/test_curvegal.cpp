#include <gtest/gtest.h>

#include "gfl/curvegal/curvegal.hpp"
#include "gfl/util/rng.hpp"

using namespace gfl;
using namespace gfl::curvegal;

namespace {

UPoly lin(const Field& F, Elem root) { return UPoly::linear(F, root); }
ClosedPoint pt(const Field& F, Elem root) { return ClosedPoint::rational(F, root); }

URat random_urat(util::Rng& rng, const Field& F, int maxdeg) {
  auto poly = [&]() {
    std::vector<Elem> c(static_cast<std::size_t>(rng.below(maxdeg + 1)) + 1);
    for (auto& x : c) x = static_cast<Elem>(rng.below(F.order()));
    UPoly p(F, c);
    return p.is_zero() ? UPoly::constant(F, 1) : p;
  };
  return URat(poly(), poly());
}

}  // namespace

TEST(Divisor, Examples) {
  const Field F5 = Field::prime(5);
  const Divisor D = principal_divisor(URat(lin(F5, 1), lin(F5, 2)));
  EXPECT_EQ(D.coeffs.size(), 2u);
  EXPECT_EQ(D.at(pt(F5, 1)), 1);
  EXPECT_EQ(D.at(pt(F5, 2)), -1);
  const Field F3 = Field::prime(3);
  const Divisor E = principal_divisor(URat(UPoly(F3, {1, 0, 1})));
  EXPECT_EQ(E.at(ClosedPoint::from_poly(UPoly(F3, {1, 0, 1}))), 1);
  EXPECT_EQ(E.at(ClosedPoint::at_infinity(F3)), -2);
  EXPECT_EQ(E.degree(), 0);
  EXPECT_TRUE(principal_divisor(URat::constant(F3, 2)).coeffs.empty());
}

TEST(Pairing, Examples) {
  const Field F5 = Field::prime(5);
  const URat f(lin(F5, 1), lin(F5, 2));
  const lat::Zl R(7, 1);
  EXPECT_EQ(kummer_pairing(inertia_generator(R, pt(F5, 1)), f), 1);
  EXPECT_EQ(kummer_pairing(GaloisElem(R, 1, {}), f), 0);
  const GaloisElem mu(R, 0, {{pt(F5, 1), 2}, {pt(F5, 2), 5}});
  EXPECT_EQ(kummer_pairing(mu, f), 4);
}

TEST(Pairing, InertiaGenerators) {
  const Field F5 = Field::prime(5);
  const lat::Zl R(3, 2);
  const URat t = URat::variable(F5);
  EXPECT_EQ(kummer_pairing(inertia_generator(R, pt(F5, 0)), t), 1);
  EXPECT_EQ(kummer_pairing(inertia_generator(R, ClosedPoint::at_infinity(F5)), t), R.reduce(-1));
  EXPECT_EQ(kummer_pairing(inertia_generator(R, pt(F5, 3)), t), 0);
}

TEST(Pairing, DegreeZeroBilinearShiftInvariant) {
  const Field F5 = Field::prime(5);
  const lat::Zl R(3, 2);
  util::Rng rng(17);
  const auto pts = val::closed_points(F5, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const URat f = random_urat(rng, F5, 4), g = random_urat(rng, F5, 4);
    if (f.is_zero() || g.is_zero()) continue;
    std::map<ClosedPoint, std::int64_t> e;
    for (int k = 0; k < 4; ++k) e[pts[rng.below(pts.size())]] = static_cast<std::int64_t>(rng.below(9));
    const GaloisElem mu(R, static_cast<std::int64_t>(rng.below(9)), e);
    EXPECT_EQ(kummer_pairing(GaloisElem(R, 1, {}), f), 0);
    EXPECT_EQ(kummer_pairing(mu, f * g), R.reduce(kummer_pairing(mu, f) + kummer_pairing(mu, g)));
    const Divisor D = principal_divisor(f);
    EXPECT_EQ(kummer_pairing_shifted(mu, D, static_cast<std::int64_t>(rng.below(9))), kummer_pairing(mu, D));
  }
}

TEST(SupportSize, Examples) {
  const Field F5 = Field::prime(5);
  const lat::Zl R(3, 1);
  EXPECT_EQ(support_size(GaloisElem::delta(R, pt(F5, 0))), 1u);
  EXPECT_EQ(support_size(GaloisElem::delta(R, pt(F5, 0)) - GaloisElem::delta(R, pt(F5, 1))), 2u);
  EXPECT_EQ(support_size(GaloisElem(R, 2, {})), 0u);
  EXPECT_EQ(GaloisElem(R, 2, {{pt(F5, 1), 0}}), GaloisElem(R, 0, {{pt(F5, 1), 1}}));
}

TEST(Separator, DistinctValues) {
  const Field F11 = Field::prime(11);
  const lat::Zl R(7, 1);
  std::map<ClosedPoint, std::int64_t> e;
  for (Elem i = 0; i < 6; ++i) e[pt(F11, i)] = static_cast<std::int64_t>(i);
  const GaloisElem iota(R, 0, e);
  const Separator sep = cu_separator(iota, 2);
  EXPECT_EQ(sep.selection_case, 1);
  EXPECT_EQ(sep.Q.size(), 6u);
  EXPECT_TRUE(sep.separating);
  EXPECT_EQ(sep.subsets_checked, 15u);
  EXPECT_TRUE(verify_separation(iota, sep, 2));
}

TEST(Separator, SupportTooSmall) {
  const Field F5 = Field::prime(5);
  EXPECT_THROW(cu_separator(GaloisElem::delta(lat::Zl(7, 1), pt(F5, 0)), 2), std::invalid_argument);
}

TEST(Separator, SharedValue) {
  const Field F11 = Field::prime(11);
  const lat::Zl R(7, 1);
  const GaloisElem iota(R, 0, {{pt(F11, 0), 3}, {pt(F11, 1), 3}, {pt(F11, 2), 3}});
  const Separator sep = cu_separator(iota, 2);
  EXPECT_EQ(sep.selection_case, 2);
  EXPECT_TRUE(sep.separating);
  EXPECT_TRUE(verify_separation(iota, sep, 2));
}

TEST(Separator, VerificationRejectsNonSeparatingData) {
  const Field F11 = Field::prime(11);
  const lat::Zl R(7, 1);
  const GaloisElem iota(R, 0, {{pt(F11, 0), 3}, {pt(F11, 1), 3}, {pt(F11, 2), 3}});
  Separator sep = cu_separator(iota, 2);
  // Two points with nonzero value cannot be separated by two deltas.
  const GaloisElem small(R, 0, {{pt(F11, 0), 3}, {pt(F11, 1), 3}});
  EXPECT_FALSE(verify_separation(small, sep, 2));
}

TEST(Separator, RandomIotaOverGF5) {
  const Field F5 = Field::prime(5);
  const lat::Zl R(3, 1);
  const auto pts = val::closed_points(F5, 2);
  util::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::map<ClosedPoint, std::int64_t> e;
    while (e.size() < 3 + rng.below(4)) e[pts[rng.below(pts.size())]] = static_cast<std::int64_t>(1 + rng.below(2));
    const GaloisElem iota(R, 0, e);
    const Separator sep = cu_separator(iota, 2);
    EXPECT_TRUE(sep.separating);
    EXPECT_TRUE(verify_separation(iota, sep, 2));
  }
}

TEST(Genus, Detection) {
  CurveData p1;
  p1.field = Field::prime(5);
  p1.ring = lat::Zl(3, 1);
  EXPECT_FALSE(genus_detect(p1).positive);
  CurveData g1;
  g1.genus = 1;
  g1.token_quotient_order = 3;
  EXPECT_TRUE(genus_detect(g1).positive);
  p1.quotient_candidates = adversarial_quotients(p1.field, p1.ring, 12, 9);
  const auto r = genus_detect(p1);
  EXPECT_FALSE(r.positive);
  EXPECT_EQ(r.candidates_scanned, 12u);
}

TEST(ConformalMatch, RoundTrip) {
  const Field F7 = Field::prime(7);
  const auto pts = val::closed_points(F7, 1);
  for (std::int64_t ell : {3, 5}) {
    for (int m = 1; m <= 3; ++m) {
      const lat::Zl R(ell, m);
      const InertiaData A = inertia_data(R, pts);
      std::vector<std::size_t> id(pts.size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
      for (std::int64_t a = 1; a < R.modulus(); ++a) {
        if (!R.is_unit(a)) continue;
        const auto r = cc_match(A, planted(A, a), id);
        ASSERT_TRUE(r.ok);
        EXPECT_EQ(r.a, a);
      }
    }
  }
}

TEST(ConformalMatch, Examples) {
  const Field F7 = Field::prime(7);
  const auto pts = val::closed_points(F7, 1);
  const lat::Zl R(3, 2);
  const InertiaData A = inertia_data(R, pts);
  std::vector<std::size_t> id(pts.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  const auto r = cc_match(A, planted(A, 4), id);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(ladic_digits(r.a, R), "1+l");
  EXPECT_EQ(cc_match(A, A, id).a, 1);
  InertiaData B = planted(A, 4);
  B.generators[3] = B.generators[3].scaled(2);
  const auto bad = cc_match(A, B, id);
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.inconsistent.has_value());
}

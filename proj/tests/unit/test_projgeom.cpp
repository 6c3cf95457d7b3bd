#include <gtest/gtest.h>

#include <numeric>

#include "gfl/projgeom/projgeom.hpp"
#include "gfl/util/rng.hpp"
#include "gfl/valuation/express.hpp"

using namespace gfl;
using namespace gfl::proj;

namespace {

URat T(const Field& F) { return URat::variable(F); }
URat k(const Field& F, Elem c) { return URat::constant(F, c); }

std::vector<std::size_t> random_permutation(util::Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

// Random invertible matrix over GF(2) acting on PG(3,2).
std::vector<std::size_t> random_collineation(util::Rng& rng) {
  const Field F2 = Field::prime(2);
  const auto pts = ff::enumerate_proj_points(ff::VecSpace(F2, 4));
  std::vector<ff::Vec> M;
  do {
    M.assign(4, ff::Vec(4));
    for (auto& row : M) {
      for (auto& c : row) c = static_cast<Elem>(rng.below(2));
    }
  } while (ff::rank(F2, M) < 4);
  std::vector<std::size_t> perm;
  for (const auto& v : pts) {
    ff::Vec w(4, 0);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) w[i] = F2.add(w[i], F2.mul(M[i][j], v[j]));
    }
    perm.push_back(static_cast<std::size_t>(std::find(pts.begin(), pts.end(), ff::normalize(F2, w)) - pts.begin()));
  }
  return perm;
}

}  // namespace

TEST(Axioms, FanoPlane) {
  const auto st = fano_plane();
  EXPECT_EQ(st.npoints, 7u);
  EXPECT_EQ(st.lines.size(), 7u);
  EXPECT_TRUE(check_axioms(st).all());
}

TEST(Axioms, FanoMinusLineFailsP3) {
  const auto rep = check_axioms(remove_line(fano_plane(), 0));
  EXPECT_FALSE(rep.p3);
  ASSERT_TRUE(rep.p3_pair.has_value());
  EXPECT_EQ(rep.p3_count, 0u);
  EXPECT_FALSE(rep.p4_checked);
}

TEST(Axioms, ProjectiveThreeSpace) {
  const auto st = build_pg(3, Field::prime(2));
  EXPECT_EQ(st.npoints, 15u);
  EXPECT_EQ(st.lines.size(), 35u);
  EXPECT_TRUE(check_axioms(st).all());
}

TEST(Axioms, CorruptedLineReportedBeforePappus) {
  const auto rep = check_axioms(corrupt_line(build_pg(2, Field::prime(3)), 0));
  EXPECT_FALSE(rep.all());
  EXPECT_FALSE(rep.p3);
}

TEST(Axioms, ShortLine) {
  auto st = fano_plane();
  st.lines.push_back({0, 6});
  const auto rep = check_axioms(st);
  EXPECT_FALSE(rep.p2);
  EXPECT_FALSE(rep.p3);
}

TEST(Span, Examples) {
  const auto pg23 = build_pg(2, Field::prime(3));
  const Incidence inc(pg23);
  const auto line = join_span(inc, {0, 1});
  EXPECT_EQ(line, pg23.lines[static_cast<std::size_t>(inc.line_of(0, 1))]);
  std::size_t c = 2;
  while (inc.collinear(0, 1, c)) ++c;
  EXPECT_EQ(join_span(inc, {0, 1, c}).size(), 13u);
  EXPECT_EQ(dimension(inc), 2);
  EXPECT_EQ(dimension(inc, line), 1);
  EXPECT_EQ(dimension(inc, {5}), 0);

  const auto pg32 = build_pg(3, Field::prime(2));
  const Incidence inc3(pg32);
  // e1, e2, e3, e4 in enumeration order.
  const std::vector<std::size_t> general = {0, 1, 3, 7};
  EXPECT_EQ(join_span(inc3, general).size(), 15u);
  EXPECT_EQ(dimension(inc3, general), 3);
  EXPECT_EQ(dimension(inc3), 3);
}

TEST(Pappus, FieldPlanes) {
  for (auto F : {Field::prime(2), Field::prime(3), Field::galois(2, 2), Field::prime(5)}) {
    const auto rep = check_pappus(build_pg(2, F));
    EXPECT_TRUE(rep.holds) << F.name();
    EXPECT_FALSE(rep.witness.has_value());
  }
  EXPECT_TRUE(check_pappus(build_pg(3, Field::prime(2))).holds);
}

TEST(Pappus, HallPlaneFails) {
  const auto hall = hall_plane();
  EXPECT_EQ(hall.npoints, 91u);
  EXPECT_EQ(hall.lines.size(), 91u);
  for (const auto& l : hall.lines) EXPECT_EQ(l.size(), 10u);
  EXPECT_TRUE(check_axioms(hall).all());
  const auto rep = check_pappus(hall);
  ASSERT_FALSE(rep.holds);
  ASSERT_TRUE(rep.witness.has_value());
  const Incidence inc(hall);
  const auto& w = *rep.witness;
  EXPECT_TRUE(inc.on(w.A, w.l) && inc.on(w.B, w.l) && inc.on(w.C, w.l));
  EXPECT_TRUE(inc.on(w.A2, w.m) && inc.on(w.B2, w.m) && inc.on(w.C2, w.m));
  EXPECT_EQ(w.X, inc.cross(w.A, w.B2, w.A2, w.B));
  EXPECT_FALSE(inc.collinear(w.X, w.Y, w.Z));
  EXPECT_THROW(coordinatize_plane(hall), std::invalid_argument);
}

TEST(Coordinatize, SmallPlanes) {
  for (auto F : {Field::prime(2), Field::prime(3), Field::galois(2, 2), Field::prime(5)}) {
    const auto rt = coordinatize_roundtrip(build_pg(2, F));
    EXPECT_EQ(rt.field.order, F.order());
    EXPECT_TRUE(verify_field_tables(rt.field.add, rt.field.mul));
    EXPECT_TRUE(rt.rebuilt_equal) << F.name();
  }
}

TEST(Coordinatize, RelabeledPlaneRoundTrips) {
  util::Rng rng(5);
  const auto pg = build_pg(2, Field::prime(3));
  for (int trial = 0; trial < 5; ++trial) {
    const auto st = relabel(pg, random_permutation(rng, pg.npoints));
    const auto rt = coordinatize_roundtrip(st);
    EXPECT_EQ(rt.field.order, 3u);
    EXPECT_TRUE(rt.rebuilt_equal);
    EXPECT_TRUE(check_pappus(relabel(st, rt.image)).holds);
  }
}

TEST(Coordinatize, ThreeSpace) {
  const auto rt = coordinatize_roundtrip(build_pg(3, Field::prime(2)));
  EXPECT_EQ(rt.dimension, 3);
  EXPECT_EQ(rt.field.order, 2u);
  EXPECT_TRUE(rt.rebuilt_equal);
}

TEST(Coordinatize, FieldTableVerifier) {
  std::vector<std::vector<Elem>> add = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
  std::vector<std::vector<Elem>> mul = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}};
  EXPECT_FALSE(verify_field_tables(add, mul));
}

TEST(MultCompatible, FieldExtensions) {
  for (auto [p, e] : {std::pair{3u, 2u}, std::pair{3u, 3u}, std::pair{5u, 2u}, std::pair{2u, 3u}}) {
    const auto gs = field_extension_structure(p, e);
    EXPECT_TRUE(mult_compatible(gs.st, gs.mul).ok) << p << "^" << e;
  }
}

TEST(MultCompatible, BrokenLineAndTrivialGroup) {
  const auto gs = field_extension_structure(3, 3);
  auto st = gs.st;
  st.lines[0] = {0, 5, 11};
  const auto rep = mult_compatible(st, gs.mul);
  EXPECT_FALSE(rep.ok);
  ASSERT_TRUE(rep.witness.has_value());
  std::vector<std::vector<std::size_t>> trivial = {{0}};
  EXPECT_TRUE(mult_compatible(IncidenceStructure{1, {}, {}}, trivial).ok);
}

TEST(Partial, ThreeSpaceOverF3) {
  const auto st = build_pg(3, Field::prime(3));
  const auto rep = check_partial(st);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.triples_checked, 40u * 39u * 38u);
  const auto cfg = find_partial_config(st, 0, 1, 2);
  ASSERT_TRUE(cfg.has_value());
  EXPECT_EQ(cfg->lines.size(), 7u);
}

TEST(Partial, ConfigurationDecidesCollinearity) {
  const auto st = build_pg(3, Field::prime(3));
  const Incidence inc(st);
  util::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = rng.below(40), s = rng.below(40), t = rng.below(40);
    if (r == s || r == t || s == t) continue;
    const auto cfg = find_partial_config(st, r, s, t);
    ASSERT_TRUE(cfg.has_value());
    EXPECT_EQ(cfg->t_on_line_rs, inc.collinear(r, s, t));
  }
}

TEST(Partial, PlaneTranslatesTooSmall) {
  const auto gs = field_extension_structure(3, 3);
  // One line and its translates.
  std::set<Line> lines;
  for (std::size_t s = 0; s < gs.mul.size(); ++s) {
    Line t;
    for (std::size_t p : gs.st.lines[0]) t.push_back(gs.mul[s][p]);
    std::sort(t.begin(), t.end());
    lines.insert(t);
  }
  const IncidenceStructure partial{gs.st.npoints, {lines.begin(), lines.end()}, {}};
  const auto rep = check_partial(partial);
  EXPECT_FALSE(rep.ok);
  ASSERT_TRUE(rep.failing_triple.has_value());
  EXPECT_FALSE(check_partial(fano_plane()).ok);
  EXPECT_FALSE(check_partial(IncidenceStructure{6, {{0, 1, 2}}, {}}).ok);
}

TEST(UniqueExtension, CollineationsAgree) {
  const auto A = build_pg(3, Field::prime(2));
  EXPECT_TRUE(unique_extension_equal(A, A, A));
  util::Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const auto B = relabel(A, random_collineation(rng));
    EXPECT_TRUE(unique_extension_equal(A, B, A));
  }
}

TEST(UniqueExtension, RandomRelabelingsNeverShareAPartialStructure) {
  const auto A = build_pg(3, Field::prime(2));
  const auto la = A.canonical().lines;
  util::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto B = relabel(A, random_permutation(rng, A.npoints));
    const auto lb = B.canonical().lines;
    IncidenceStructure shared{A.npoints, {}, {}};
    std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(shared.lines));
    if (!check_partial(shared).ok) continue;
    EXPECT_TRUE(unique_extension_equal(A, B, shared));
  }
  EXPECT_THROW(unique_extension_equal(build_pg(2, Field::prime(2)), fano_plane(), fano_plane()), std::invalid_argument);
}

TEST(Generating, Examples) {
  const Field F3 = Field::prime(3);
  const URat t = T(F3);
  const auto t4 = is_generating(t.pow(4));
  EXPECT_FALSE(t4.generating);
  ASSERT_TRUE(t4.decomposition.has_value());
  EXPECT_EQ(t4.decomposition->outer.compose(t4.decomposition->inner), t.pow(4));
  EXPECT_TRUE(is_generating(t.pow(3) / (t + k(F3, 1))).generating);
  EXPECT_TRUE(is_generating(t).generating);
  EXPECT_TRUE(is_generating(t.pow(2) + t).generating);
  EXPECT_THROW(is_generating(k(F3, 2)), std::invalid_argument);
}

TEST(Generating, PlantedComposite) {
  const Field F3 = Field::prime(3);
  const URat t = T(F3);
  const URat y = (t.pow(2) + k(F3, 1)) / (t + k(F3, 2));
  const URat z = (t.pow(2) + t) / (t + k(F3, 1)).pow(0);
  const URat x = z.compose(y);
  const auto rep = is_generating(x);
  ASSERT_FALSE(rep.generating);
  const auto& d = *rep.decomposition;
  EXPECT_EQ(d.outer.compose(d.inner), x);
  // Same subfield: the planted inner function is a degree-one function of the recovered one.
  const auto e = val::express_in(RatFunc::from_urat(y), RatFunc::from_urat(d.inner));
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(URat(UPoly(F3, e->first), UPoly(F3, e->second)).degree(), 1);
}

TEST(Generating, MoebiusInvariance) {
  const Field F3 = Field::prime(3);
  const URat t = T(F3);
  util::Rng rng(2);
  const std::vector<URat> samples = {t.pow(4), t.pow(3) / (t + k(F3, 1)), (t.pow(2) + t).pow(2) + t,
                                     (t.pow(2) + k(F3, 1)).pow(2) / t.pow(2), t.pow(4) + t};
  for (const URat& x : samples) {
    const bool g = is_generating(x).generating;
    for (int trial = 0; trial < 4; ++trial) {
      Elem a, b, c, d;
      do {
        a = static_cast<Elem>(rng.below(3));
        b = static_cast<Elem>(rng.below(3));
        c = static_cast<Elem>(rng.below(3));
        d = static_cast<Elem>(rng.below(3));
      } while (F3.sub(F3.mul(a, d), F3.mul(b, c)) == 0);
      const URat m = (k(F3, a) * t + k(F3, b)) / (k(F3, c) * t + k(F3, d));
      EXPECT_EQ(is_generating(x.compose(m)).generating, g) << x.to_string();
    }
  }
}

TEST(Generating, PlanarRecipe) {
  const Field F5 = Field::prime(5);
  const RatFunc x = RatFunc::x(F5), y = RatFunc::y(F5);
  const RatFunc t = x * x;
  EXPECT_EQ(is_generating_planar(t), std::optional<bool>(false));
  EXPECT_EQ(is_generating_planar(x), std::optional<bool>(true));
  for (Elem kappa = 0; kappa < 5; ++kappa) {
    const RatFunc c = RatFunc::constant(F5, kappa);
    EXPECT_EQ(is_generating_planar(y), std::optional<bool>(true));
    EXPECT_EQ(is_generating_planar(x * y), std::optional<bool>(true));
    EXPECT_EQ(is_generating_planar(y / (t + c)), std::optional<bool>(true));
    if (kappa != 0) EXPECT_EQ(is_generating_planar((y + c) / t), std::optional<bool>(true));
    EXPECT_EQ(is_generating_planar(x * y / (t + c)), std::optional<bool>(true));
  }
  EXPECT_FALSE(is_generating_planar(x * x * y * y + x * y * y * y).has_value());
}

TEST(PrimaryLines, DegreeOne) {
  const Field F3 = Field::prime(3);
  const auto pl = primary_lines(F3, 1);
  const URat t = T(F3);
  std::map<URat, std::size_t> index;
  for (std::size_t i = 0; i < pl.points.size(); ++i) index[pl.points[i]] = i;
  Line expected = {index.at(k(F3, 1)), index.at(t), index.at(t + k(F3, 1)), index.at(t + k(F3, 2))};
  std::sort(expected.begin(), expected.end());
  const auto& lines = pl.partial.lines;
  EXPECT_NE(std::find(lines.begin(), lines.end(), expected), lines.end());
  EXPECT_EQ(pl.excluded_anchors, 0u);
}

TEST(PrimaryLines, TranslatesWithinCap) {
  const Field F3 = Field::prime(3);
  const auto pl = primary_lines(F3, 2);
  const URat t = T(F3);
  std::map<URat, std::size_t> index;
  for (std::size_t i = 0; i < pl.points.size(); ++i) index[pl.points[i]] = i;
  Line translate;
  for (const URat& m : {t, t.pow(2), t.pow(2) + t, t.pow(2) + k(F3, 2) * t}) translate.push_back(index.at(m));
  std::sort(translate.begin(), translate.end());
  const auto& lines = pl.partial.lines;
  EXPECT_NE(std::find(lines.begin(), lines.end(), translate), lines.end());
  EXPECT_GT(pl.translates, 0u);
  EXPECT_GT(pl.omitted_translates, 0u);
}

TEST(PrimaryLines, NonGeneratingAnchorsExcluded) {
  const Field F2 = Field::prime(2);
  const auto pl = primary_lines(F2, 4);
  EXPECT_GT(pl.excluded_anchors, 0u);
  const URat t = T(F2);
  std::map<URat, std::size_t> index;
  for (std::size_t i = 0; i < pl.points.size(); ++i) index[pl.points[i]] = i;
  Line anchored = {index.at(k(F2, 1)), index.at(t.pow(4)), index.at(t.pow(4) + k(F2, 1))};
  std::sort(anchored.begin(), anchored.end());
  const auto& lines = pl.partial.lines;
  EXPECT_EQ(std::find(lines.begin(), lines.end(), anchored), lines.end());
}

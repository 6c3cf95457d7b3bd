#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfl/ffcore/linalg.hpp"
#include "gfl/valuation/ratfunc.hpp"

namespace gfl::proj {

using ff::Elem;
using ff::Field;
using ff::UPoly;
using val::RatFunc;
using val::URat;

using Line = std::vector<std::size_t>;

/// Points 0..npoints-1 and lines as sorted point lists.
struct IncidenceStructure {
  std::size_t npoints = 0;
  std::vector<Line> lines;
  std::vector<std::string> labels;

  /// Lines sorted internally and as a list, duplicates removed.
  IncidenceStructure canonical() const;
  bool same_lines(const IncidenceStructure& o) const;
};

/// Lookup tables for a structure in which any two points share at most one line.
class Incidence {
 public:
  explicit Incidence(const IncidenceStructure& st);
  std::size_t npoints() const { return n_; }
  std::size_t nlines() const { return lines_.size(); }
  const Line& line(std::size_t l) const { return lines_[l]; }
  /// Index of the line through p != q, or -1.
  std::int64_t line_of(std::size_t p, std::size_t q) const { return join_[p * n_ + q]; }
  /// Common point of distinct lines, or -1.
  std::int64_t meet(std::size_t l, std::size_t m) const { return meet_[l * lines_.size() + m]; }
  bool on(std::size_t p, std::size_t l) const { return inc_[l * n_ + p] != 0; }
  bool collinear(std::size_t a, std::size_t b, std::size_t c) const;
  /// Intersection of l(a, b) and l(c, d); throws std::logic_error if undefined.
  std::size_t cross(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
  const std::vector<std::size_t>& lines_through(std::size_t p) const { return through_[p]; }

 private:
  std::size_t n_ = 0;
  std::vector<Line> lines_;
  std::vector<std::int64_t> join_, meet_;
  std::vector<char> inc_;
  std::vector<std::vector<std::size_t>> through_;
};

struct AxiomReport {
  bool p1 = false, p2 = false, p3 = false, p4 = false;
  /// False when P3 fails, since l(s, s') is then undefined.
  bool p4_checked = false;
  std::optional<std::size_t> short_line;
  /// Pair on no line or on several lines, with the count.
  std::optional<std::pair<std::size_t, std::size_t>> p3_pair;
  std::size_t p3_count = 0;
  /// (s, s', t, t') with l(s,s') meeting l(t,t') but l(s,t) missing l(s',t').
  std::optional<std::vector<std::size_t>> p4_quad;
  bool all() const { return p1 && p2 && p3 && p4; }
};

AxiomReport check_axioms(const IncidenceStructure& st);

/// <s1, ..., sn> = s1 v <s2, ..., sn>, as a sorted point list.
std::vector<std::size_t> join_span(const Incidence& inc, const std::vector<std::size_t>& points);
/// Size of a greedy independent spanning subset of `points`, minus one.
int dimension(const Incidence& inc, const std::vector<std::size_t>& points);
int dimension(const Incidence& inc);

struct PappusWitness {
  std::size_t l = 0, m = 0, O = 0;
  std::size_t A = 0, B = 0, C = 0, A2 = 0, B2 = 0, C2 = 0;
  std::size_t X = 0, Y = 0, Z = 0;
};

struct PappusReport {
  bool holds = true;
  std::size_t line_pairs = 0;
  std::optional<PappusWitness> witness;
};

/// Exhausts hexagons A,B,C on l and A',B',C' on m for every meeting pair l, m;
/// the witness is the first failure in scan order. Requires P3.
PappusReport check_pappus(const IncidenceStructure& st);

/// P(GF(q)^(n+1)) with points in enumerate_proj_points order.
IncidenceStructure build_pg(int n, const Field& F);
IncidenceStructure fano_plane();
IncidenceStructure remove_line(const IncidenceStructure& st, std::size_t l);
/// Replaces line l by its points with one of them swapped for an outside point.
IncidenceStructure corrupt_line(const IncidenceStructure& st, std::size_t l);
/// The Hall plane of order 9: derived from the regular spread of GF(3)^4.
IncidenceStructure hall_plane();
/// Image under a point permutation: point p becomes perm[p].
IncidenceStructure relabel(const IncidenceStructure& st, const std::vector<std::size_t>& perm);
/// Points of a subset together with the lines it contains, renumbered.
IncidenceStructure restrict_to(const IncidenceStructure& st, const std::vector<std::size_t>& subset);

/// A finite field recovered from a plane, in the labelling of ffcore's GF(q).
struct CoordField {
  std::uint32_t order = 0;
  Field field;
  /// Canonical tables indexed by ffcore elements.
  std::vector<std::vector<Elem>> add, mul;
  /// Point of the coordinate line representing each element.
  std::vector<std::size_t> element_point;
  /// Frame: O, X-infinity, Y-infinity, E.
  std::vector<std::size_t> frame;
};

/// Throws std::invalid_argument on axiom failure or when the constructed
/// operations are not a field (non-Pappian input).
CoordField coordinatize_plane(const IncidenceStructure& st);
/// Exhaustive associativity, commutativity, distributivity, identities and inverses.
bool verify_field_tables(const std::vector<std::vector<Elem>>& add, const std::vector<std::vector<Elem>>& mul);

struct Roundtrip {
  int dimension = 0;
  CoordField field;
  /// Homogeneous coordinates of each input point (planes only).
  std::vector<ff::Vec> coordinates;
  /// Input point p maps to point image[p] of build_pg(dimension, field).
  std::vector<std::size_t> image;
  bool rebuilt_equal = false;
};

/// Coordinatizes a plane (or a plane inside a higher space) and compares with
/// build_pg over the recovered field.
Roundtrip coordinatize_roundtrip(const IncidenceStructure& st);
/// Collineation A -> B by backtracking on collinear triples, or empty.
std::optional<std::vector<std::size_t>> find_isomorphism(const IncidenceStructure& A, const IncidenceStructure& B);

/// S = K^*/k^* for K = GF(p^e), k = GF(p), with lines from 2-dimensional
/// k-subspaces and the induced multiplication table.
struct GroupStructure {
  IncidenceStructure st;
  std::vector<std::vector<std::size_t>> mul;
};
GroupStructure field_extension_structure(std::uint32_t p, unsigned e);

struct TranslationReport {
  bool ok = true;
  /// (s, l) with s * l not a line.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};
TranslationReport mult_compatible(const IncidenceStructure& st, const std::vector<std::vector<std::size_t>>& mul);

struct PartialConfig {
  std::size_t r = 0, s = 0, t = 0, x = 0, y = 0, x2 = 0, y2 = 0;
  /// l(y,r), l(y,s), l(t,x), l(y',r), l(y',s), l(t,x'), l(y,y').
  std::vector<std::size_t> lines;
  /// l(t,x) meets l(y,s) and l(t,x') meets l(y',s): in a projective space of
  /// dimension >= 3 this holds iff t lies on l(r, s).
  bool t_on_line_rs = false;
};

struct PartialReport {
  bool ok = false;
  std::size_t triples_checked = 0;
  /// First triple (r, s, t) admitting no configuration.
  std::optional<std::vector<std::size_t>> failing_triple;
};

/// Every ordered triple of distinct points admits seven lines l(y,r) through r, x, y;
/// l(y,s); l(t,x); l(y',r) through r, x', y'; l(y',s); l(t,x'); l(y,y'), with
/// l(y,y') disjoint from l(t,x) and l(t,x').
PartialReport check_partial(const IncidenceStructure& partial);
/// The configuration for one triple, or empty.
std::optional<PartialConfig> find_partial_config(const IncidenceStructure& partial, std::size_t r, std::size_t s, std::size_t t);

/// Throws std::invalid_argument unless both structures satisfy the axioms with
/// dimension >= 3, shared lines lie in both, and check_partial(shared) holds.
bool unique_extension_equal(const IncidenceStructure& A, const IncidenceStructure& B, const IncidenceStructure& shared);

struct Decomposition {
  URat outer, inner;
};

struct GeneratingReport {
  bool generating = true;
  /// x = outer(inner) with both of degree >= 2.
  std::optional<Decomposition> decomposition;
  std::size_t candidates_tried = 0;
};

/// x nonconstant in GF(q)(t); true iff x admits no decomposition.
GeneratingReport is_generating(const URat& x);
/// For f in k(x, y): true if f has degree one in x or in y, the degree test
/// for f in k(x); empty when neither applies.
std::optional<bool> is_generating_planar(const RatFunc& f);

/// Partial structure on classes of t-rational functions of degree <= cap modulo constants.
struct PrimaryLines {
  IncidenceStructure partial;
  std::vector<URat> points;
  std::size_t primary = 0;
  std::size_t translates = 0;
  std::size_t omitted_translates = 0;
  std::size_t excluded_anchors = 0;
};

PrimaryLines primary_lines(const Field& F, int cap);
/// Class representative: numerator and denominator monic and coprime.
URat class_rep(const URat& f);

}  // namespace gfl::proj

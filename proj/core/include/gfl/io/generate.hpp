#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfl/io/json.hpp"
#include "gfl/util/rng.hpp"

namespace gfl::gen {

using io::json;

val::URat random_urat(util::Rng& rng, const ff::Field& F, int maxdeg);
/// Nonzero polynomial of total degree <= deg with uniform coefficients.
val::BPoly random_bpoly(util::Rng& rng, const ff::Field& F, int deg);

/// Values in [0, values) on P(GF(3)^n); planted maps are constant on the
/// differences of a random complete flag, then one point is redrawn half the time.
flag::HomogeneousMap random_map(std::uint64_t seed, int n, int values, bool planted);

/// A flag valuation on F_3(x, y) and its two components on a random subspace
/// of polynomials of degree <= 2.
struct CPairInstance {
  val::Valuation v;
  val::FunctionSubspace B;
  flag::Ring ring;
  flag::HomogeneousMap mu, mu2;
};

/// dim 0 draws 2 or 3; m 0 draws 1..3.
CPairInstance cpair_instance(std::uint64_t seed, int dim = 0, std::int64_t ell = 5, int m = 0);

/// Divisor of class zero with exactly `support` distinct curves over GF(p), support in [2, 8].
ladic::LadicDivisor class_zero_divisor(std::uint64_t seed, int support, lat::Zl ring, std::uint32_t p = 5);

/// Default 0 and exactly `support` nonzero exceptions on points of degree <= 2.
curvegal::GaloisElem random_iota(std::uint64_t seed, int support, lat::Zl ring, const ff::Field& F);

struct CCInstance {
  curvegal::InertiaData A, B;
  std::int64_t a = 1;
  /// Index into B of the rescaled generator.
  std::optional<std::size_t> corrupted;
};

/// Rational points of GF(p); B is planted with the unit a (random when a = 0), then its points shuffled.
CCInstance cc_instance(std::uint64_t seed, lat::Zl ring, std::uint32_t p = 7, bool corrupt = false, std::int64_t a = 0);
/// bijection[i] is the index in B of the point A.points[i], or identity when the points differ.
std::vector<std::size_t> match_points(const curvegal::InertiaData& A, const curvegal::InertiaData& B);

struct SubfieldPair {
  ladic::LadicFunction f, g;
  /// Planted generator of the subfield, absent for independent pairs.
  std::optional<val::RatFunc> generator;
  bool pattern = false;
};

/// Over GF(7): f, g in k(x0) for x0 drawn from a fixed list, the (f, (f+a)(f+b))
/// pattern every third seed; independent pairs take f in k(x) and g in k(y - c x^2).
SubfieldPair subfield_pair(std::uint64_t seed, bool independent, lat::Zl ring);

/// GF(q) for a prime power q; throws std::invalid_argument otherwise.
ff::Field field_of_order(std::uint32_t q);

/// {"kind", "seed", "params", "payload"} with defaults filled into params.
/// Kinds: flagmap-random, flagmap-cpair, ladic, ladic-pair, curve-iota, curve-cc,
/// curve-cc-corrupt, proj-pg, proj-hall.
json make_instance(const std::string& kind, std::uint64_t seed, json params);
std::vector<std::string> instance_kinds();

}  // namespace gfl::gen

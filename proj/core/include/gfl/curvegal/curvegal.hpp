#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfl/lattice/smith.hpp"
#include "gfl/valuation/curve.hpp"

namespace gfl::curvegal {

using val::ClosedPoint;
using val::URat;
using ff::Elem;
using ff::Field;
using ff::UPoly;

/// Finite formal sum of closed points of the projective line.
struct Divisor {
  std::map<ClosedPoint, std::int64_t> coeffs;

  std::int64_t degree() const;
  std::int64_t at(const ClosedPoint& P) const;
  Divisor operator+(const Divisor& o) const;
  Divisor scaled(std::int64_t k) const;
  bool operator==(const Divisor& o) const { return coeffs == o.coeffs; }
  std::string to_string() const;
};

/// div(f), including the point at infinity. Empty for constants.
Divisor principal_divisor(const URat& f);

/// Map from closed points to Z/l^m modulo constant maps: a default value
/// plus finitely many exceptions. Canonical form has default 0 and no zero exceptions.
class GaloisElem {
 public:
  GaloisElem() = default;
  GaloisElem(lat::Zl ring, std::int64_t def, std::map<ClosedPoint, std::int64_t> exceptions);
  static GaloisElem zero(lat::Zl ring) { return GaloisElem(ring, 0, {}); }
  /// The inertia generator delta_P.
  static GaloisElem delta(lat::Zl ring, const ClosedPoint& P);

  const lat::Zl& ring() const { return ring_; }
  /// Value of the canonical representative at P.
  std::int64_t at(const ClosedPoint& P) const;
  const std::map<ClosedPoint, std::int64_t>& exceptions() const { return exc_; }

  GaloisElem operator+(const GaloisElem& o) const;
  GaloisElem operator-(const GaloisElem& o) const;
  GaloisElem scaled(std::int64_t k) const;
  bool operator==(const GaloisElem& o) const { return ring_.modulus() == o.ring_.modulus() && exc_ == o.exc_; }
  std::string to_string() const;

 private:
  lat::Zl ring_;
  std::map<ClosedPoint, std::int64_t> exc_;
};

/// [mu, f] = sum over the support of div f of mu(P) * deg P * ord_P f, mod l^m.
std::int64_t kummer_pairing(const GaloisElem& mu, const URat& f);
std::int64_t kummer_pairing(const GaloisElem& mu, const Divisor& D);
/// Same sum with an arbitrary constant added to mu; equal to kummer_pairing for degree-zero D.
std::int64_t kummer_pairing_shifted(const GaloisElem& mu, const Divisor& D, std::int64_t shift);

GaloisElem inertia_generator(lat::Zl ring, const ClosedPoint& P);
/// Least number of points outside a constant level set.
std::size_t support_size(const GaloisElem& mu);

struct Separator {
  /// 1: pairwise distinct values; 2: s+1 points sharing one value and s+1 others.
  int selection_case = 0;
  std::vector<ClosedPoint> Q;
  /// Degree-zero divisors on Q forming a lattice basis, and functions realizing them.
  std::vector<Divisor> divisors;
  std::vector<URat> functions;
  /// psi(iota) and psi(delta_P) for P in Q.
  std::vector<std::int64_t> psi_iota;
  std::vector<std::vector<std::int64_t>> psi_delta;
  std::size_t subsets_checked = 0;
  bool separating = false;
};

/// Throws std::invalid_argument when support_size(iota) <= s or too few
/// points of degree prime to l are available.
Separator cu_separator(const GaloisElem& iota, int s);
/// Independent check: recomputes all pairings and tries every coefficient
/// vector on every s-subset of Q. Throws if l^(m s) exceeds 2^24.
bool verify_separation(const GaloisElem& iota, const Separator& sep, int s);

/// Galois data of a curve: concrete for genus 0, a symbolic token otherwise.
struct CurveData {
  int genus = 0;
  ff::Field field;
  lat::Zl ring;
  /// Candidate quotients G -> Z/l^m given by Kummer duality as functions f.
  std::vector<URat> quotient_candidates;
  /// Order of the declared token quotient killing inertia (genus >= 1).
  std::int64_t token_quotient_order = 0;
};

struct GenusReport {
  bool positive = false;
  std::size_t candidates_scanned = 0;
  std::string reason;
};

/// True iff a nonzero finite quotient of the data kills every inertia generator.
GenusReport genus_detect(const CurveData& data);
/// Adversarial quotient candidates: l^m-th powers, products with units, and near misses.
std::vector<URat> adversarial_quotients(const ff::Field& F, lat::Zl ring, int count, std::uint64_t seed);

/// Inertia generators of a curve indexed by points, all written in one ambient group.
struct InertiaData {
  lat::Zl ring;
  std::vector<ClosedPoint> points;
  std::vector<GaloisElem> generators;
};

struct ConformalMatch {
  bool ok = false;
  std::int64_t a = 0;
  std::vector<std::size_t> bijection;
  /// First index i with generators_A[i] != a * generators_B[bijection[i]].
  std::optional<std::size_t> inconsistent;
  std::string reason;
};

ConformalMatch cc_match(const InertiaData& A, const InertiaData& B, const std::vector<std::size_t>& bijection);
/// Data with generators delta_P for the given points.
InertiaData inertia_data(lat::Zl ring, const std::vector<ClosedPoint>& points);
/// Generators rescaled by a^{-1}, so that matching recovers a.
InertiaData planted(const InertiaData& A, std::int64_t a);
/// l-adic digit expansion such as "1+2l+l^2".
std::string ladic_digits(std::int64_t a, lat::Zl ring);

}  // namespace gfl::curvegal

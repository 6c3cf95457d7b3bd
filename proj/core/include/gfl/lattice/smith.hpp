#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gfl::lat {

using IVec = std::vector<std::int64_t>;
using IMat = std::vector<IVec>;

/// U * A * V = D with U, V unimodular and D diagonal, d_0 | d_1 | ... (d_i > 0 for i < rank).
struct SmithForm {
  IMat D;
  IMat U;
  IMat V;
  IVec diag;
  int rank = 0;
};

/// Throws std::overflow_error if an intermediate entry leaves int64 range.
SmithForm smith(const IMat& A, int cols);
/// Basis of {x in Z^cols : A x = 0}.
std::vector<IVec> integer_kernel(const IMat& A, int cols);
int integer_rank(const IMat& A, int cols);
/// Generators of {x in (Z/N)^cols : A x = 0 mod N}, entries in [0, N).
std::vector<IVec> kernel_mod(const IMat& A, int cols, std::int64_t N);
/// A solution of A x = b mod N with entries in [0, N), if one exists.
std::optional<IVec> solve_mod(const IMat& A, int cols, const IVec& b, std::int64_t N);

std::int64_t mod(std::int64_t a, std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);
/// Inverse of a modulo n; throws std::domain_error if a is not a unit.
std::int64_t inv_mod(std::int64_t a, std::int64_t n);
std::int64_t ipow(std::int64_t b, int e);
/// Largest k with ell^k | a (a != 0); returns `cap` for a == 0.
int ell_valuation(std::int64_t a, std::int64_t ell, int cap);

/// Truncated l-adic ring Z/l^m.
struct Zl {
  std::int64_t ell = 3;
  int m = 1;

  Zl() = default;
  Zl(std::int64_t ell_, int m_);
  std::int64_t modulus() const { return ipow(ell, m); }
  std::int64_t reduce(std::int64_t a) const { return mod(a, modulus()); }
  bool is_unit(std::int64_t a) const { return mod(a, ell) != 0; }
  std::int64_t inv(std::int64_t a) const { return inv_mod(a, modulus()); }
};

}  // namespace gfl::lat

#include <gtest/gtest.h>

#include <set>

#include "gfl/lattice/smith.hpp"
#include "gfl/util/rng.hpp"

using namespace gfl::lat;

namespace {

IMat mul(const IMat& A, const IMat& B, int inner, int cols) {
  IMat C(A.size(), IVec(static_cast<std::size_t>(cols), 0));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (int k = 0; k < inner; ++k) {
      for (int j = 0; j < cols; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  }
  return C;
}

IMat random_matrix(gfl::util::Rng& rng, int rows, int cols, int bound) {
  IMat A(static_cast<std::size_t>(rows), IVec(static_cast<std::size_t>(cols)));
  for (auto& r : A) {
    for (auto& x : r) x = rng.range(-bound, bound);
  }
  return A;
}

}  // namespace

TEST(Smith, DecompositionIdentityAndDivisibility) {
  gfl::util::Rng rng(3);
  for (int it = 0; it < 200; ++it) {
    const int rows = 1 + static_cast<int>(rng.below(4));
    const int cols = 1 + static_cast<int>(rng.below(5));
    const IMat A = random_matrix(rng, rows, cols, 6);
    const SmithForm s = smith(A, cols);
    const IMat UAV = mul(mul(s.U, A, rows, cols), s.V, cols, cols);
    EXPECT_EQ(UAV, s.D);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (i != j) EXPECT_EQ(s.D[i][j], 0);
      }
    }
    for (int i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.diag[i + 1] % s.diag[i], 0);
    for (auto d : s.diag) EXPECT_GT(d, 0);
  }
}

TEST(Smith, KnownInvariantFactors) {
  const IMat A = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithForm s = smith(A, 3);
  EXPECT_EQ(s.diag, (IVec{2, 6, 12}));
}

TEST(Smith, IntegerKernelIsExactAndSaturated) {
  const IMat A = {{1, 1, -2}};
  const auto K = integer_kernel(A, 3);
  ASSERT_EQ(K.size(), 2u);
  for (const auto& v : K) EXPECT_EQ(v[0] + v[1] - 2 * v[2], 0);
  EXPECT_EQ(integer_rank(A, 3), 1);
}

TEST(Smith, KernelModMatchesBruteForce) {
  gfl::util::Rng rng(17);
  for (int it = 0; it < 60; ++it) {
    const std::int64_t N = (it % 2) ? 9 : 25;
    const IMat A = random_matrix(rng, 3, 3, 30);
    const auto gens = kernel_mod(A, 3, N);
    // Span of the generators versus brute-force solution set.
    std::set<IVec> brute, spanned;
    for (std::int64_t a = 0; a < N; ++a) {
      for (std::int64_t b = 0; b < N; ++b) {
        for (std::int64_t c = 0; c < N; ++c) {
          bool ok = true;
          for (const auto& r : A) ok = ok && mod(r[0] * a + r[1] * b + r[2] * c, N) == 0;
          if (ok) brute.insert({a, b, c});
        }
      }
    }
    spanned.insert({0, 0, 0});
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<IVec> next = spanned;
      for (const auto& v : spanned) {
        for (const auto& g : gens) {
          next.insert({mod(v[0] + g[0], N), mod(v[1] + g[1], N), mod(v[2] + g[2], N)});
        }
      }
      grew = next.size() != spanned.size();
      spanned = std::move(next);
    }
    EXPECT_EQ(spanned, brute);
  }
}

TEST(Smith, SolveModAgreesWithBruteForce) {
  gfl::util::Rng rng(23);
  const std::int64_t N = 27;
  for (int it = 0; it < 100; ++it) {
    const IMat A = random_matrix(rng, 2, 2, 20);
    const IVec b = {rng.range(0, N - 1), rng.range(0, N - 1)};
    bool exists = false;
    for (std::int64_t x = 0; x < N && !exists; ++x) {
      for (std::int64_t y = 0; y < N && !exists; ++y) {
        exists = mod(A[0][0] * x + A[0][1] * y - b[0], N) == 0 && mod(A[1][0] * x + A[1][1] * y - b[1], N) == 0;
      }
    }
    const auto sol = solve_mod(A, 2, b, N);
    EXPECT_EQ(sol.has_value(), exists);
    if (sol) {
      const auto& x = *sol;
      EXPECT_EQ(mod(A[0][0] * x[0] + A[0][1] * x[1] - b[0], N), 0);
      EXPECT_EQ(mod(A[1][0] * x[0] + A[1][1] * x[1] - b[1], N), 0);
    }
  }
}

TEST(Smith, InverseMod) {
  EXPECT_EQ(inv_mod(4, 27) * 4 % 27, 1);
  EXPECT_THROW(inv_mod(3, 27), std::domain_error);
}

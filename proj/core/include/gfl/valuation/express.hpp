#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gfl/valuation/ratfunc.hpp"

namespace gfl::val {

/// Union of the monomials (i, j) of the given polynomials, graded lex descending.
std::vector<std::pair<int, int>> grlex_monomials(const std::vector<BPoly>& ps);

/// Coefficients (U, V), low to high with V monic, such that h = U(x)/V(x).
/// Found by a linear solve over the base field and verified exactly.
std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> express_in(const RatFunc& h, const RatFunc& x);

}  // namespace gfl::val

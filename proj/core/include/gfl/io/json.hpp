#pragma once

#include <nlohmann/json.hpp>

#include "gfl/curvegal/curvegal.hpp"
#include "gfl/flagmap/flagmap.hpp"
#include "gfl/ladicdiv/ladicdiv.hpp"
#include "gfl/projgeom/projgeom.hpp"
#include "gfl/valuation/valuation.hpp"

namespace gfl::io {

using json = nlohmann::json;

/// {"p": p, "e": e}.
json field_json(const ff::Field& F);
ff::Field field_from(const json& j);

/// Coefficients low to high.
json upoly_json(const ff::UPoly& p);
ff::UPoly upoly_from(const ff::Field& F, const json& j);
/// Terms [i, j, c] meaning c x^i y^j.
json bpoly_json(const val::BPoly& p);
val::BPoly bpoly_from(const ff::Field& F, const json& j);
json urat_json(const val::URat& f);
val::URat urat_from(const ff::Field& F, const json& j);
/// {"num", "den"} as term lists, plus "nvars": 1 for functions of t.
json ratfunc_json(const val::RatFunc& f);
val::RatFunc ratfunc_from(const ff::Field& F, const json& j);

/// Coefficient list of the monic polynomial, or "inf".
json point_json(const val::ClosedPoint& P);
val::ClosedPoint point_from(const ff::Field& F, const json& j);
json curve_json(const val::PlaneCurve& C);
val::PlaneCurve curve_from(const ff::Field& F, const json& j);
/// {"kind": "point" | "divisorial" | "flag", "curve", "point"}.
json valuation_json(const val::Valuation& v);
val::Valuation valuation_from(const ff::Field& F, const json& j);
json value_json(const val::Value& v);

/// {"type": "Z"} or {"type": "Zl", "ell", "m"}.
json ring_json(const flag::Ring& R);
flag::Ring ring_from(const json& j);
/// {"p", "n", "ring", "table": [[coords, value], ...]}.
json map_json(const flag::HomogeneousMap& mu);
flag::HomogeneousMap map_from(const json& j);
json subspace_json(const ff::Subspace& S);
json flag_json(const flag::Flag& f);

json galois_json(const curvegal::GaloisElem& mu);
curvegal::GaloisElem galois_from(const ff::Field& F, const lat::Zl& R, const json& j);
json divisor_json(const curvegal::Divisor& D);
/// {"p", "ell", "m", "points", "generators"}.
json inertia_json(const curvegal::InertiaData& d, const ff::Field& F);
curvegal::InertiaData inertia_from(const json& j);

/// {"p", "ell", "m", "terms": [[curve, coefficient], ...]}.
json ladic_divisor_json(const ladic::LadicDivisor& D, const ff::Field& F);
ladic::LadicDivisor ladic_divisor_from(const json& j);
/// {"p", "ell", "m", "parts": [function, ...]}.
json ladic_function_json(const ladic::LadicFunction& f, const ff::Field& F);
ladic::LadicFunction ladic_function_from(const json& j);

/// {"points": labels, "lines": [[indices]]}.
json incidence_json(const proj::IncidenceStructure& st);
proj::IncidenceStructure incidence_from(const json& j);
json coordfield_json(const proj::CoordField& cf);

/// 16 hex digits of FNV-1a over the compact dump.
std::string digest(const json& j);

}  // namespace gfl::io

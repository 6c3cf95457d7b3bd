#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "gfl/io/generate.hpp"
#include "gfl/util/parallel.hpp"

using namespace gfl;
using io::json;

namespace {

/// Property falsified: the command ran and the answer is negative.
constexpr int kFalsified = 2;
constexpr int kUsage = 1;

struct Options {
  std::string file, file_a, file_b, out;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> p, ell, level;
  bool timing = false;
  unsigned threads = 0;
};

struct Report {
  json result = json::object();
  json witnesses = json::array();
  int code = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

/// Instance files carry the payload under "payload"; bare payloads are accepted too.
json payload_of(const json& j) { return j.is_object() && j.contains("payload") ? j.at("payload") : j; }

json overrides(const Options& o) {
  json params = json::object();
  if (o.p) params["p"] = *o.p;
  if (o.ell) params["ell"] = *o.ell;
  if (o.level) params["m"] = *o.level;
  return params;
}

json generated(const Options& o, const std::string& kind, json params = json::object()) {
  params.update(overrides(o));
  return gen::make_instance(kind, o.seed, params).at("payload");
}

json load(const Options& o, const std::function<json()>& fallback) {
  if (!o.file.empty()) return payload_of(read_json(o.file));
  return fallback();
}

/// Function-field instances require p != 2 and p != l.
void check_characteristic(const json& j) {
  const auto p = j.at("p").get<std::int64_t>();
  if (p == 2) throw UsageError("p = 2 is not supported for function fields");
  if (j.contains("ell") && j.at("ell").get<std::int64_t>() == p) throw UsageError("l must differ from p");
}

ff::Field prime_field(const json& j) {
  check_characteristic(j);
  return io::field_from(j);
}

// flagmap

Report flagmap_check(const json& in) {
  const auto mu = io::map_from(in.contains("map") ? in.at("map") : in);
  Report r;
  const auto rep = flag::check_flag_map(mu);
  const auto f = flag::find_flag(mu, ff::whole_space(mu.space()));
  r.result["is_flag_map"] = rep.holds;
  r.result["flag"] = f ? io::flag_json(*f) : json(nullptr);
  if (rep.failing) r.witnesses.push_back(json{{"failing_subspace", io::subspace_json(*rep.failing)}});
  r.code = rep.holds ? 0 : kFalsified;
  return r;
}

Report flagmap_find_combo(const json& in) {
  const auto mu = io::map_from(in.at("mu"));
  const auto mu2 = io::map_from(in.at("mu2"));
  Report r;
  const auto cp = flag::is_c_pair(mu, mu2);
  const auto combo = flag::find_flag_combination(mu, mu2);
  r.result["is_c_pair"] = cp.holds;
  r.result["coefficients"] = combo.coefficients ? json{combo.coefficients->first, combo.coefficients->second} : json(nullptr);
  r.result["flag"] = combo.flag ? io::flag_json(*combo.flag) : json(nullptr);
  for (const auto& B : cp.failing) r.witnesses.push_back(json{{"failing_subspace", io::subspace_json(B)}});
  r.code = combo.coefficients ? 0 : kFalsified;
  return r;
}

Report flagmap_cliques(const json& in) {
  std::vector<flag::HomogeneousMap> maps;
  for (const auto& m : in.at("maps")) maps.push_back(io::map_from(m));
  Report r;
  r.result["cliques"] = flag::maximal_cpair_cliques(maps);
  json graph = json::array();
  for (const auto& row : flag::cpair_graph(maps)) {
    json jr = json::array();
    for (bool b : row) jr.push_back(b ? 1 : 0);
    graph.push_back(jr);
  }
  r.witnesses.push_back(json{{"cpair_graph", graph}});
  return r;
}

json default_cliques(const Options& o) {
  const auto inst = gen::cpair_instance(o.seed, 0, o.ell.value_or(5), static_cast<int>(o.level.value_or(0)));
  const auto other = gen::cpair_instance(o.seed + 1, inst.B.dim(), o.ell.value_or(5), 0);
  const auto third = val::value_map(inst.B, other.v, 0, inst.ring);
  return {{"maps", {io::map_json(inst.mu), io::map_json(inst.mu2), io::map_json(third)}}};
}

// val

val::Valuation example_valuation(util::Rng& rng, const ff::Field& F) {
  const val::RatFunc X = val::RatFunc::x(F), Y = val::RatFunc::y(F);
  const std::vector<val::PlaneCurve> curves = {val::PlaneCurve::from_poly(X.num()), val::PlaneCurve::from_poly(Y.num()),
                                               val::PlaneCurve::from_poly((Y - X * X).num()), val::PlaneCurve::line_at_infinity(F)};
  const auto& C = curves[rng.below(curves.size())];
  if (rng.coin()) return val::Valuation::divisorial(C);
  return val::Valuation::flag(C, val::ClosedPoint::rational(C.residue_constants(), static_cast<ff::Elem>(rng.below(F.order()))));
}

json default_ord(const Options& o) {
  const auto F = ff::Field::prime(static_cast<std::uint32_t>(o.p.value_or(3)));
  util::Rng rng(o.seed);
  const val::RatFunc f(gen::random_bpoly(rng, F, 3), gen::random_bpoly(rng, F, 2));
  return {{"p", F.characteristic()}, {"valuation", io::valuation_json(example_valuation(rng, F))}, {"function", io::ratfunc_json(f)}};
}

Report val_ord(const json& in) {
  const auto F = prime_field(in);
  const auto v = io::valuation_from(F, in.at("valuation"));
  const auto f = io::ratfunc_from(F, in.at("function"));
  if (f.is_zero()) throw UsageError("ord of the zero function");
  Report r;
  r.result["value"] = io::value_json(val::ord(v, f));
  r.result["valuation"] = v.to_string();
  return r;
}

json default_residue(const Options& o) {
  const auto pair = gen::subfield_pair(o.seed, o.seed % 2 == 1, lat::Zl(o.ell.value_or(3), 1));
  return {{"p", 7}, {"f", io::ratfunc_json(pair.f.parts.front())}, {"g", io::ratfunc_json(pair.g.parts.front())}};
}

Report val_residue(const json& in) {
  const auto F = prime_field(in);
  const auto f = io::ratfunc_from(F, in.at("f"));
  const auto g = io::ratfunc_from(F, in.at("g"));
  Report r;
  if (in.contains("curve")) {
    const auto res = val::residue(io::curve_from(F, in.at("curve")), f, g);
    r.result["trivial"] = res.trivial;
    r.result["residue"] = io::urat_json(res.value);
    return r;
  }
  const auto sweep = val::residues_vanish_all(f, g);
  r.result["vanish"] = sweep.vanish;
  json checked = json::array();
  for (const auto& c : sweep.checked) checked.push_back(c.to_string());
  r.result["checked"] = checked;
  if (sweep.witness) {
    r.witnesses.push_back(json{{"curve", io::curve_json(*sweep.witness)}, {"residue", io::urat_json(*sweep.witness_residue)}});
  }
  r.code = sweep.vanish ? 0 : kFalsified;
  return r;
}

Report val_order_from_flag(const json& in) {
  const auto F = prime_field(in);
  std::vector<val::RatFunc> basis;
  for (const auto& b : in.at("basis")) basis.push_back(io::ratfunc_from(F, b));
  const val::FunctionSubspace B(basis);
  const auto v = io::valuation_from(F, in.at("valuation"));
  const auto alpha = val::packed_value_map(B, v, flag::Ring::Z());
  const auto mult = B.multiplication();
  const auto order = val::order_from_flagmap(alpha, &mult);
  const auto mismatches = val::order_mismatches(order, val::valuation_table(B, v));
  Report r;
  r.result["levels"] = order.level;
  r.result["total"] = order.total;
  r.result["transitive"] = order.transitive;
  r.result["product_compatible"] = order.product_compatible;
  r.result["mismatches"] = mismatches;
  for (const auto& s : order.violations) r.witnesses.push_back(s);
  const bool ok = mismatches == 0 && order.total && order.transitive && order.product_compatible;
  r.code = ok ? 0 : kFalsified;
  return r;
}

json default_compatible(const Options& o) {
  const auto F = ff::Field::prime(static_cast<std::uint32_t>(o.p.value_or(3)));
  util::Rng rng(o.seed);
  const auto v1 = example_valuation(rng, F);
  const auto v2 = example_valuation(rng, F);
  return {{"p", F.characteristic()}, {"v1", io::valuation_json(v1)}, {"v2", io::valuation_json(v2)}};
}

Report val_compatible(const json& in) {
  const auto F = prime_field(in);
  const auto rep = val::compatible(io::valuation_from(F, in.at("v1")), io::valuation_from(F, in.at("v2")));
  Report r;
  r.result["compatible"] = rep.compatible;
  r.result["rule"] = rep.rule;
  r.witnesses.push_back(json{{"samples_checked", rep.samples_checked}, {"decomposition_verified", rep.decomposition_verified}});
  r.code = rep.compatible ? 0 : kFalsified;
  return r;
}

// curve

json default_div(const Options& o) {
  const auto F = ff::Field::prime(static_cast<std::uint32_t>(o.p.value_or(5)));
  util::Rng rng(o.seed);
  return {{"p", F.characteristic()}, {"function", io::urat_json(gen::random_urat(rng, F, 4))}};
}

Report curve_div(const json& in) {
  const auto F = prime_field(in);
  const auto f = io::urat_from(F, in.at("function"));
  if (f.is_zero()) throw UsageError("divisor of the zero function");
  const auto D = curvegal::principal_divisor(f);
  Report r;
  r.result["divisor"] = io::divisor_json(D);
  r.result["degree"] = D.degree();
  return r;
}

json default_pair(const Options& o) {
  const auto F = ff::Field::prime(static_cast<std::uint32_t>(o.p.value_or(5)));
  const lat::Zl R(o.ell.value_or(3), static_cast<int>(o.level.value_or(2)));
  util::Rng rng(o.seed);
  const auto mu = gen::random_iota(o.seed, 4, R, F);
  json j = io::field_json(F);
  j["ell"] = R.ell;
  j["m"] = R.m;
  j["mu"] = io::galois_json(mu);
  j["function"] = io::urat_json(gen::random_urat(rng, F, 4));
  return j;
}

lat::Zl zl_of(const json& j) { return lat::Zl(j.at("ell").get<std::int64_t>(), j.at("m").get<int>()); }

Report curve_pair(const json& in) {
  const auto F = prime_field(in);
  const auto R = zl_of(in);
  const auto mu = io::galois_from(F, R, in.at("mu"));
  const auto f = io::urat_from(F, in.at("function"));
  if (f.is_zero()) throw UsageError("pairing with the zero function");
  Report r;
  r.result["pairing"] = curvegal::kummer_pairing(mu, f);
  r.result["diagonal_pairing"] = curvegal::kummer_pairing(curvegal::GaloisElem(R, 1, {}), f);
  r.result["support_size"] = curvegal::support_size(mu);
  return r;
}

Report curve_separator(const json& in) {
  const auto F = prime_field(in);
  const auto R = zl_of(in.at("iota"));
  if (in.contains("ell")) check_characteristic(in);
  if (R.ell == F.characteristic()) throw UsageError("l must differ from p");
  const auto iota = io::galois_from(F, R, in.at("iota"));
  const int s = in.value("s", 2);
  curvegal::Separator sep;
  try {
    sep = curvegal::cu_separator(iota, s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool verified = curvegal::verify_separation(iota, sep, s);
  Report r;
  r.result["separating"] = sep.separating && verified;
  r.result["support_size"] = curvegal::support_size(iota);
  r.result["selection_case"] = sep.selection_case;
  json Q = json::array();
  for (const auto& P : sep.Q) Q.push_back(io::point_json(P));
  r.result["Q"] = Q;
  json fs = json::array();
  for (const auto& f : sep.functions) fs.push_back(io::urat_json(f));
  r.result["functions"] = fs;
  r.result["psi_iota"] = sep.psi_iota;
  r.witnesses.push_back(json{{"psi_delta", sep.psi_delta}, {"subsets_checked", sep.subsets_checked}, {"independently_verified", verified}});
  r.code = sep.separating && verified ? 0 : kFalsified;
  return r;
}

json default_genus(const Options& o) {
  const auto F = ff::Field::prime(static_cast<std::uint32_t>(o.p.value_or(5)));
  const lat::Zl R(o.ell.value_or(3), static_cast<int>(o.level.value_or(1)));
  json j = io::field_json(F);
  j["ell"] = R.ell;
  j["m"] = R.m;
  j["genus"] = 0;
  json c = json::array();
  for (const auto& f : curvegal::adversarial_quotients(F, R, 12, o.seed)) c.push_back(io::urat_json(f));
  j["candidates"] = c;
  return j;
}

Report curve_genus(const json& in) {
  curvegal::CurveData d;
  d.genus = in.value("genus", 0);
  d.token_quotient_order = in.value("token_quotient_order", std::int64_t{0});
  if (in.contains("p")) {
    d.field = prime_field(in);
    d.ring = zl_of(in);
    for (const auto& c : in.value("candidates", json::array())) d.quotient_candidates.push_back(io::urat_from(d.field, c));
  }
  const auto rep = curvegal::genus_detect(d);
  Report r;
  r.result["positive_genus"] = rep.positive;
  r.result["candidates_scanned"] = rep.candidates_scanned;
  r.result["reason"] = rep.reason;
  return r;
}

Report curve_cc_match(const json& A_in, const json& B_in, const json& bijection) {
  check_characteristic(A_in);
  check_characteristic(B_in);
  const auto A = io::inertia_from(A_in);
  const auto B = io::inertia_from(B_in);
  if (A.ring.ell != B.ring.ell || A.ring.m != B.ring.m) throw UsageError("data sets use different rings");
  const auto bij = bijection.is_null() ? gen::match_points(A, B) : bijection.get<std::vector<std::size_t>>();
  const auto m = curvegal::cc_match(A, B, bij);
  Report r;
  r.result["ok"] = m.ok;
  r.result["a"] = m.ok ? json(curvegal::ladic_digits(m.a, A.ring)) : json(nullptr);
  r.result["a_value"] = m.ok ? json(m.a) : json(nullptr);
  r.result["bijection"] = m.bijection;
  if (!m.ok) r.witnesses.push_back(json{{"inconsistent", m.inconsistent ? json(*m.inconsistent) : json(nullptr)}, {"reason", m.reason}});
  r.code = m.ok ? 0 : kFalsified;
  return r;
}

// ladic

Report ladic_class(const json& in) {
  check_characteristic(in);
  const auto D = io::ladic_divisor_from(in);
  Report r;
  r.result["class"] = ladic::class_map(D);
  r.result["divisor"] = D.canonical().to_string();
  return r;
}

Report ladic_decompose(const json& in) {
  check_characteristic(in);
  const auto D = io::ladic_divisor_from(in);
  ladic::Decomposition dec;
  try {
    dec = ladic::dd_decompose(D);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto res = ladic::reconstruction_residual(D, dec);
  const auto res2 = ladic::regrouped_residual(D, dec);
  Report r;
  json fs = json::array();
  for (const auto& f : dec.functions) fs.push_back(f.to_string(dec.support));
  r.result["functions"] = fs;
  r.result["coefficients"] = dec.coefficients;
  r.result["regrouped"] = {{"function", dec.regrouped.to_string(dec.support)}, {"coefficient", dec.regrouped_coefficient}};
  r.result["residual_zero"] = res.is_zero() && res2.is_zero();
  r.result["basis_lifts_independent"] = dec.basis_lifts_independent;
  r.result["regrouped_lifts_independent"] = dec.regrouped_lifts_independent;
  if (!res.is_zero()) r.witnesses.push_back(json{{"residual", res.canonical().to_string()}});
  if (!res2.is_zero()) r.witnesses.push_back(json{{"regrouped_residual", res2.canonical().to_string()}});
  r.code = res.is_zero() && res2.is_zero() ? 0 : kFalsified;
  return r;
}

Report ladic_gff(const json& in) {
  check_characteristic(in.at("f"));
  check_characteristic(in.at("g"));
  const auto f = io::ladic_function_from(in.at("f"));
  const auto g = io::ladic_function_from(in.at("g"));
  const auto res = ladic::gff_subfield(f, g);
  Report r;
  r.result["ok"] = res.ok;
  r.result["generator"] = res.generator ? json(res.generator->to_string()) : json(nullptr);
  json ex = json::array();
  for (const auto& [u, v] : res.expressions) ex.push_back(json{{"num", u}, {"den", v}});
  r.result["expressions"] = ex;
  json shared = json::array();
  for (const auto& c : res.shared_support) shared.push_back(c.to_string());
  r.result["shared_support"] = shared;
  r.result["candidates_tried"] = res.candidates_tried;
  r.result["reason"] = res.reason;
  if (res.witness_curve) {
    r.witnesses.push_back(json{{"curve", io::curve_json(*res.witness_curve)},
                           {"residue", res.witness_residue ? io::urat_json(*res.witness_residue) : json(nullptr)}});
  }
  r.code = res.ok ? 0 : kFalsified;
  return r;
}

// proj

Report proj_axioms(const json& in) {
  const auto rep = proj::check_axioms(io::incidence_from(in));
  Report r;
  r.result = {{"p1", rep.p1}, {"p2", rep.p2}, {"p3", rep.p3}, {"p4", rep.p4}, {"p4_checked", rep.p4_checked}, {"all", rep.all()}};
  if (rep.short_line) r.witnesses.push_back(json{{"short_line", *rep.short_line}});
  if (rep.p3_pair) r.witnesses.push_back(json{{"pair", {rep.p3_pair->first, rep.p3_pair->second}}, {"lines", rep.p3_count}});
  if (rep.p4_quad) r.witnesses.push_back(json{{"quadruple", *rep.p4_quad}});
  r.code = rep.all() ? 0 : kFalsified;
  return r;
}

Report proj_pappus(const json& in) {
  const auto st = io::incidence_from(in);
  if (!proj::check_axioms(st).p3) throw UsageError("two points lie on no line or on several lines");
  const auto rep = proj::check_pappus(st);
  Report r;
  r.result = {{"pappus", rep.holds}, {"line_pairs", rep.line_pairs}};
  if (rep.witness) {
    const auto& w = *rep.witness;
    r.witnesses.push_back(json{{"l", w.l}, {"m", w.m}, {"O", w.O}, {"A", w.A}, {"B", w.B}, {"C", w.C}, {"A2", w.A2}, {"B2", w.B2}, {"C2", w.C2}, {"X", w.X}, {"Y", w.Y}, {"Z", w.Z}});
  }
  r.code = rep.holds ? 0 : kFalsified;
  return r;
}

Report proj_coordinatize(const json& in) {
  const auto st = io::incidence_from(in);
  Report r;
  try {
    const auto rt = proj::coordinatize_roundtrip(st);
    r.result["order"] = rt.field.order;
    r.result["field"] = rt.field.field.name();
    r.result["dimension"] = rt.dimension;
    r.result["tables"] = {{"add", rt.field.add}, {"mul", rt.field.mul}};
    r.result["rebuilt_equal"] = rt.rebuilt_equal;
    r.witnesses.push_back(json{{"frame", rt.field.frame}, {"element_point", rt.field.element_point}, {"image", rt.image}});
    r.code = rt.rebuilt_equal ? 0 : kFalsified;
  } catch (const std::invalid_argument& e) {
    r.result["order"] = nullptr;
    r.result["reason"] = e.what();
    r.code = kFalsified;
  }
  return r;
}

Report proj_partial(const json& in) {
  const auto rep = proj::check_partial(io::incidence_from(in));
  Report r;
  r.result = {{"ok", rep.ok}, {"triples_checked", rep.triples_checked}};
  if (rep.failing_triple) r.witnesses.push_back(json{{"failing_triple", *rep.failing_triple}});
  r.code = rep.ok ? 0 : kFalsified;
  return r;
}

json default_generating(const Options& o) {
  const auto F = ff::Field::prime(static_cast<std::uint32_t>(o.p.value_or(5)));
  util::Rng rng(o.seed);
  val::URat f = gen::random_urat(rng, F, 4);
  while (f.is_constant()) f = gen::random_urat(rng, F, 4);
  return {{"p", F.characteristic()}, {"function", io::urat_json(f)}};
}

Report proj_generating(const json& in) {
  const auto F = prime_field(in);
  const auto f = io::urat_from(F, in.at("function"));
  if (f.is_constant()) throw UsageError("constant function");
  const auto rep = proj::is_generating(f);
  Report r;
  r.result = {{"generating", rep.generating}, {"degree", f.degree()}, {"candidates_tried", rep.candidates_tried}};
  if (rep.decomposition) {
    r.witnesses.push_back(json{{"outer", io::urat_json(rep.decomposition->outer)}, {"inner", io::urat_json(rep.decomposition->inner)}});
  }
  r.code = rep.generating ? 0 : kFalsified;
  return r;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text << '\n';
}

int run(const Options& o, const std::string& operation, const std::function<json()>& input, const std::function<Report(const json&)>& op) {
  const auto start = std::chrono::steady_clock::now();
  const json in = input();
  Report rep = op(in);
  json env = {{"operation", operation}, {"inputs_digest", io::digest(in)}, {"result", rep.result}, {"witnesses", rep.witnesses}};
  if (o.timing) env["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(o, env.dump(2));
  return rep.code;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--file", o.file, "Instance or payload JSON");
  cmd->add_option("--seed", o.seed, "Seed for the generated instance when --file is absent");
  cmd->add_option("--p", o.p, "Characteristic (field order for proj)");
  cmd->add_option("--ell", o.ell, "The prime l");
  cmd->add_option("--level", o.level, "Truncation level m");
  cmd->add_option("--out", o.out, "Write the report here instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag maps, valuations and incidence geometry over finite fields"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--timing", o.timing, "Include elapsed seconds in reports");
  app.add_option("--threads", o.threads, "Worker threads (overrides GFL_THREADS)");

  std::function<int()> action;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& desc, std::function<json()> input,
                  std::function<Report(const json&)> op) {
    auto* cmd = group->add_subcommand(name, desc);
    add_common(cmd, o);
    const std::string operation = group->get_name() + " " + name;
    cmd->callback([&, operation, input, op] { action = [&, operation, input, op] { return run(o, operation, input, op); }; });
    return cmd;
  };

  auto* fm = app.add_subcommand("flagmap", "Homogeneous and flag maps")->require_subcommand(1);
  leaf(fm, "check", "Flag-map test with a witness flag", [&] { return load(o, [&] { return generated(o, "flagmap-random", {{"planted", true}}); }); }, flagmap_check);
  leaf(fm, "find-combo", "c-pair test and flag combination search", [&] { return load(o, [&] { return generated(o, "flagmap-cpair"); }); }, flagmap_find_combo);
  leaf(fm, "cliques", "Maximal c-pair cliques", [&] { return load(o, [&] { return default_cliques(o); }); }, flagmap_cliques);

  auto* vg = app.add_subcommand("val", "Valuations on function fields")->require_subcommand(1);
  leaf(vg, "ord", "Value of a function", [&] { return load(o, [&] { return default_ord(o); }); }, val_ord);
  leaf(vg, "residue", "Residue along a curve, or the sweep over all relevant curves", [&] { return load(o, [&] { return default_residue(o); }); }, val_residue);
  leaf(vg, "order-from-flag", "Order recovered from the packed value map", [&] { return load(o, [&] { return generated(o, "flagmap-cpair"); }); }, val_order_from_flag);
  leaf(vg, "compatible", "Compatibility of two valuations", [&] { return load(o, [&] { return default_compatible(o); }); }, val_compatible);

  auto* cg = app.add_subcommand("curve", "Galois data of the projective line")->require_subcommand(1);
  leaf(cg, "div", "Principal divisor", [&] { return load(o, [&] { return default_div(o); }); }, curve_div);
  leaf(cg, "pair", "Pairing of a Galois element with a function", [&] { return load(o, [&] { return default_pair(o); }); }, curve_pair);
  leaf(cg, "separator", "Separating functions for an element of large support", [&] { return load(o, [&] { return generated(o, "curve-iota"); }); }, curve_separator);
  leaf(cg, "genus", "Genus detection", [&] { return load(o, [&] { return default_genus(o); }); }, curve_genus);
  auto* cc = cg->add_subcommand("cc-match", "Constant relating two inertia generator sets");
  add_common(cc, o);
  cc->add_option("--a", o.file_a, "First data set");
  cc->add_option("--b", o.file_b, "Second data set");
  cc->callback([&] {
    action = [&] {
      return run(
          o, "curve cc-match",
          [&] {
            if (!o.file_a.empty() || !o.file_b.empty()) {
              if (o.file_a.empty() || o.file_b.empty()) throw UsageError("--a and --b go together");
              // A generated cc instance may be passed to both flags.
              json a = payload_of(read_json(o.file_a)), b = payload_of(read_json(o.file_b));
              if (a.contains("A")) a = json(a.at("A"));
              if (b.contains("B")) b = json(b.at("B"));
              return json{{"A", a}, {"B", b}};
            }
            return load(o, [&] { return generated(o, "curve-cc"); });
          },
          [](const json& in) { return curve_cc_match(in.at("A"), in.at("B"), in.value("bijection", json(nullptr))); });
    };
  });

  auto* lg = app.add_subcommand("ladic", "l-adic divisors and functions")->require_subcommand(1);
  leaf(lg, "class", "Class of a divisor", [&] { return load(o, [&] { return generated(o, "ladic"); }); }, ladic_class);
  leaf(lg, "decompose", "Principal decomposition of a class-zero divisor", [&] { return load(o, [&] { return generated(o, "ladic"); }); }, ladic_decompose);
  leaf(lg, "gff", "Common generator of the subfield containing two functions", [&] { return load(o, [&] { return generated(o, "ladic-pair"); }); }, ladic_gff);

  auto pg = [&](int n, std::int64_t q) {
    json params = {{"n", n}, {"q", o.p.value_or(q)}};
    return gen::make_instance("proj-pg", o.seed, params).at("payload");
  };
  auto* pgp = app.add_subcommand("proj", "Incidence geometry")->require_subcommand(1);
  leaf(pgp, "axioms", "Projective space axioms", [&] { return load(o, [&] { return pg(2, 3); }); }, proj_axioms);
  leaf(pgp, "pappus", "Pappus configuration scan", [&] { return load(o, [&] { return pg(2, 3); }); }, proj_pappus);
  leaf(pgp, "coordinatize", "Recover the coordinate field and rebuild", [&] { return load(o, [&] { return pg(2, 3); }); }, proj_coordinatize);
  leaf(pgp, "partial", "Partial structure configurations", [&] { return load(o, [&] { return pg(3, 2); }); }, proj_partial);
  leaf(pgp, "generating", "Generating-element test for a function of one variable", [&] { return load(o, [&] { return default_generating(o); }); }, proj_generating);

  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded instance");
  std::string kind;
  std::vector<std::string> extra;
  gen_cmd->add_option("kind", kind, "Instance kind")->required()->check(CLI::IsMember(gen::instance_kinds()));
  gen_cmd->add_option("--seed", o.seed, "Seed");
  gen_cmd->add_option("--p", o.p, "Characteristic, or field order for proj-pg");
  gen_cmd->add_option("--ell", o.ell, "The prime l");
  gen_cmd->add_option("--level", o.level, "Truncation level m");
  gen_cmd->add_option("--out", o.out, "Output file");
  gen_cmd->add_option("--param", extra, "Extra parameter key=value (integer or true/false)");
  gen_cmd->callback([&] {
    action = [&] {
      json params = overrides(o);
      if (kind == "proj-pg" && params.contains("p")) {
        params["q"] = params["p"];
        params.erase("p");
      }
      for (const auto& kv : extra) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects key=value");
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (value == "true" || value == "false") {
          params[key] = value == "true";
        } else {
          try {
            params[key] = std::stoll(value);
          } catch (const std::exception&) {
            throw UsageError("--param value must be an integer or a boolean");
          }
        }
      }
      const json inst = gen::make_instance(kind, o.seed, params);
      if (inst.at("payload").contains("p") && inst.at("payload").contains("ell")) check_characteristic(inst.at("payload"));
      emit(o, inst.dump(2));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  if (o.threads > 0) util::set_thread_count(o.threads);
  try {
    return action ? action() : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid input: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}

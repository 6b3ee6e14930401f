#pragma once

// JSON jobs and reports for the tanvar CLI, plus the built-in corpus runner.
// Reports use insertion-ordered JSON so identical jobs serialize identically.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

#include "json.hpp"
#include "tanvar/curve.hpp"
#include "tanvar/parametric.hpp"
#include "tanvar/polytope2d.hpp"
#include "tanvar/properties.hpp"

namespace tanvar::cli {

using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kInternal = 1, kVerificationFailed = 2, kBudget = 3, kDegenerateRandomness = 4, kInputError = 5 };

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input: return kInputError;
    case ErrorKind::Budget: return kBudget;
    case ErrorKind::DegenerateRandomness:
    case ErrorKind::NoRationalPoint: return kDegenerateRandomness;
    case ErrorKind::DimensionMismatch:
    case ErrorKind::Verification: return kVerificationFailed;
  }
  return kInternal;
}

struct Options {
  std::optional<FieldSpec> field;  // overrides the job's field when set
  std::optional<std::uint64_t> seed;
  Budget budget;
  bool exact_smoothness = false;
  bool cross_check = false;
  bool properties = false;
  std::string golden_path;
};

struct Outcome {
  json report;
  int exit_code = kOk;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

namespace detail {

inline json quantity(long long value, const char* pipeline) { return json{{"value", value}, {"pipeline", pipeline}}; }

inline json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline json field_json(const FieldSpec& f) {
  json j{{"kind", f.kind == FieldKind::Rationals ? "q" : "fp"}};
  if (f.kind == FieldKind::PrimeField) j["prime"] = f.characteristic;
  return j;
}

inline FieldSpec field_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "q") return FieldSpec::rationals();
    if (s == "fp") return FieldSpec::prime();
    fail(ErrorKind::Input, "field must be \"q\" or \"fp\", got \"" + s + "\"");
  }
  require(j.is_object() && j.contains("kind"), "field must be \"q\", \"fp\" or {\"kind\": ..., \"prime\": p}");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "q") return FieldSpec::rationals();
  require(kind == "fp", "field kind must be \"q\" or \"fp\"");
  return FieldSpec::prime(j.value("prime", kDefaultPrime));
}

template <class Fn>
auto with_field(const FieldSpec& f, Fn&& fn) {
  if (f.kind == FieldKind::Rationals) return fn(Rationals{});
  return fn(PrimeField(f.characteristic));
}

inline std::vector<std::string> string_array(const json& j, const char* what) {
  require(j.is_array(), std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    require(e.is_string(), std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

template <CoefficientField F>
Variety<F> variety_from_json(const json& j, const F& k, const Budget& budget, const std::string& label = "input") {
  require(j.is_object(), "variety must be an object {\"vars\": n, \"generators\": [...]}");
  require(j.contains("vars") && j.at("vars").is_number_unsigned(), "variety.vars must be a positive integer");
  require(j.contains("generators"), "variety.generators is missing");
  std::vector<std::string> names;
  if (j.contains("names")) names = string_array(j.at("names"), "variety.names");
  return make_variety(j.at("vars").get<std::size_t>(), string_array(j.at("generators"), "variety.generators"), k, label,
                      std::move(names), budget);
}

template <CoefficientField F>
Parametrization<F> param_from_json(const json& j, const F& k) {
  require(j.is_object(), "param must be an object {\"vars\": n, \"numerators\": [...], \"denominator\": \"...\"}");
  auto nums = string_array(j.at("numerators"), "param.numerators");
  if (j.contains("vars")) require(j.at("vars").get<std::size_t>() == nums.size(), "param.vars does not match the number of numerators");
  return make_parametrization(k, nums, j.value("denominator", std::string("1")));
}

template <CoefficientField F>
json generators_json(const Variety<F>& v) {
  json out = json::array();
  for (const auto& g : v.ideal.generators) out.push_back(g.to_string(v.names));
  return out;
}

inline json smoothness_json(const SmoothnessVerdict& s) {
  json j{{"verdict", to_string(s.kind)}, {"samples", s.samples}};
  if (s.witness) {
    j["witness"] = *s.witness;
    j["witness_modular"] = s.witness_modular;
  }
  return j;
}

inline json bounds_json(const BoundReport& b) {
  json q;
  q["deg_V"] = quantity(b.deg_V, "hilbert");
  q["deg_TV"] = quantity(b.deg_TV, "hilbert");
  q["deg_Tan"] = quantity(b.deg_Tan, "hilbert");
  json bounds{{"square", big(b.bound_square)},
              {"codim_power", big(b.bound_power)},
              {"codim_product", big(b.bound_product)},
              {"naive", big(b.bound_naive)},
              {"square_applies", b.square_bound_applies}};
  json verdicts{{"square_bound", b.square_bound_ok},   {"codim_bounds", b.codim_bounds_ok},
                {"naive_bound", b.naive_ok},           {"lower_bound", b.lower_bound_ok},
                {"tan_le_tv", b.tan_le_tv},            {"linearity_consistent", b.linearity_consistent}};
  return json{{"n", b.n}, {"d", b.d}, {"quantities", q}, {"bounds", bounds}, {"verdicts", verdicts}};
}

inline bool all_true(const json& verdicts) {
  for (const auto& [k, v] : verdicts.items())
    if (v.is_boolean() && !v.get<bool>()) return false;
  return true;
}

inline std::string identity_text(long long tc, long long c, long long w, long long tan) {
  return std::to_string(tc) + " = " + std::to_string(c) + " + " + std::to_string(w) + "*" + std::to_string(tan);
}

}  // namespace detail

// Single-input commands -------------------------------------------------------

template <CoefficientField F>
json cmd_degree(const Variety<F>& v, const Options& o, std::uint64_t seed) {
  json q{{"dim_V", detail::quantity(v.dimension(), "hilbert")}, {"deg_V", detail::quantity(v.deg(), "hilbert")}};
  json verdicts = json::object();
  if (o.cross_check && !v.is_empty()) {
    const long long s = random_section_degree(v, seed, o.budget);
    q["deg_V_sections"] = detail::quantity(s, "sections");
    verdicts["pipelines_agree"] = s == v.deg();
  }
  return json{{"quantities", q}, {"verdicts", verdicts}};
}

template <CoefficientField F>
json cmd_tangent_bundle(const Variety<F>& v, const Options& o, std::uint64_t seed) {
  auto mode = o.exact_smoothness ? SmoothnessMode::Exact : SmoothnessMode::Probabilistic;
  auto sm = smoothness_probe(v, mode, seed, o.budget);
  auto tb = tangent_bundle(v, o.budget);
  json q{{"dim_V", detail::quantity(v.dimension(), "hilbert")},
         {"deg_V", detail::quantity(v.deg(), "hilbert")},
         {"dim_TV", detail::quantity(tb.total.dimension(), "hilbert")},
         {"deg_TV", detail::quantity(tb.total.deg(), "hilbert")}};
  json verdicts{{"dim_TV_is_2dim_V", tb.total.dimension() == 2 * v.dimension()},
                {"smooth", sm.kind != SmoothnessKind::SingularWitness}};
  if (o.cross_check) {
    const long long s = random_section_degree(tb.total, seed, o.budget);
    q["deg_TV_sections"] = detail::quantity(s, "sections");
    verdicts["pipelines_agree"] = s == tb.total.deg();
  }
  return json{{"quantities", q},
              {"smoothness", detail::smoothness_json(sm)},
              {"ideal", detail::generators_json(tb.total)},
              {"verdicts", verdicts}};
}

template <CoefficientField F>
json cmd_tangential(const Variety<F>& v, const Options& o, std::uint64_t) {
  auto tb = tangent_bundle(v, o.budget);
  auto tan = tangential_variety(tb, o.budget);
  json q{{"dim_Tan", detail::quantity(tan.dimension(), "hilbert")}, {"deg_Tan", detail::quantity(tan.deg(), "hilbert")}};
  return json{{"quantities", q}, {"ideal", detail::generators_json(tan)}, {"verdicts", json::object()}};
}

template <CoefficientField F>
json cmd_omega(const Variety<F>& v, const Options& o, std::uint64_t seed) {
  auto w = omega(v, seed, o.budget);
  json q{{"omega", detail::quantity(w.omega, "sections")}};
  json out{{"quantities", q}};
  if (!w.base_point.empty()) out["sample"] = json{{"modular_evidence", true}, {"prime", w.prime}, {"base_point", w.base_point}, {"direction", w.direction}};
  out["verdicts"] = json{{"omega_bound", w.omega <= v.deg() * (v.deg() - 1)}};
  return out;
}

template <CoefficientField F>
json cmd_verify_identity(const Variety<F>& v, const Options& o, std::uint64_t seed) {
  auto r = verify_curve_identity(v, seed, o.budget);
  if (r.failure_kind) fail(*r.failure_kind, r.failure);
  json q{{"deg_C", detail::quantity(r.deg_C, "hilbert")},
         {"deg_TC", detail::quantity(r.deg_TC, "hilbert")},
         {"deg_Tan", detail::quantity(r.deg_Tan, "hilbert")},
         {"omega", detail::quantity(r.omega, "sections")}};
  json identity{{"statement", detail::identity_text(r.deg_TC, r.deg_C, r.omega, r.deg_Tan)},
                {"holds", r.identity_holds},
                {"pipeline", "theorem-A-components"}};
  json out{{"quantities", q}, {"identity", identity}};
  if (!r.generic_v.empty()) out["sample"] = json{{"modular_evidence", true}, {"prime", r.omega_prime}, {"direction", r.generic_v}};
  out["verdicts"] = json{{"identity", r.identity_holds}, {"omega_bound", r.omega_bound_holds}};
  return out;
}

template <CoefficientField F>
json cmd_bounds(const Variety<F>& v, const Options& o, bool generic_ci) {
  return detail::bounds_json(check_degree_bounds(v, generic_ci, o.budget));
}

template <CoefficientField F>
json cmd_verify_param(const Parametrization<F>& p, const Options& o, std::uint64_t seed) {
  auto pd = param_degree(p, seed);
  auto r = degree_TC_parametric(p, seed);
  auto curve = variety_from_ideal(implicitize_curve(p, o.budget), "implicit", {}, o.budget);
  auto tc = tangent_bundle(curve, o.budget).total;
  json q{{"delta", detail::quantity(pd.delta, "parametric")},
         {"deg_C", detail::quantity(curve.deg(), "hilbert")},
         {"deg_TC", detail::quantity(r.deg_TC, "parametric")},
         {"deg_TC_implicit", detail::quantity(tc.deg(), "hilbert")},
         {"predicted", detail::quantity(r.predicted, "parametric")}};
  json out{{"kind", to_string(p.kind)},
           {"parametrization", p.to_string()},
           {"quantities", q},
           {"certificate", json{{"attempts", pd.attempts}, {"max_attempts", kMaxSeedRetries}}},
           {"proper", r.proper},
           {"fiber", r.fiber},
           {"p2_exclusions", r.p2_exclusions}};
  if (r.dominance)
    out["dominance"] = json{{"shift", r.dominance->shift},
                            {"reversal_degree", r.dominance->reversal_degree},
                            {"translation", r.dominance->translation}};
  out["verdicts"] = json{{p.kind == ParamKind::Polynomial ? "tc_equals_2delta_minus_1" : "tc_at_most_3delta_minus_2", r.matches},
                         {"delta_matches_implicit", pd.delta == curve.deg()},
                         {"pipelines_agree", r.deg_TC == tc.deg()}};
  return out;
}

template <CoefficientField F>
json cmd_bkk(const std::vector<std::string>& polys, const F& k, std::uint64_t seed, const Options& o) {
  require(polys.size() == 2, "bkk takes exactly two polynomials in x, y");
  const std::vector<std::string> xy{"x", "y"};
  auto f = parse_polynomial(polys[0], xy, k), g = parse_polynomial(polys[1], xy, k);
  auto v = bkk_check_2d(f, g);
  // the mixed volume of two lattice polygons is an integer
  json q{{"bound", detail::quantity(v.bound.get_num().get_si(), "mixed-volume")}};
  json out{{"newton_polygons", json::array({newton_polygon(f).to_string(), newton_polygon(g).to_string()})},
           {"attainment", to_string(v.attained)}};
  if (v.witness) out["witness_direction"] = json::array({v.witness->x, v.witness->y});
  json verdicts = json::object();
  if (o.cross_check) {
    // independent count: distinct solutions in the torus (x*y*w = 1 removes the axes)
    const std::vector<std::string> xyw{"x", "y", "w"};
    Ideal<F> I(k, 3, {parse_polynomial(polys[0], xyw, k), parse_polynomial(polys[1], xyw, k), parse_polynomial("x*y*w - 1", xyw, k)});
    auto gb = buchberger(I, MonomialOrder::degrevlex(), o.budget);
    if (is_zero_dimensional(gb)) {
      const long long c = count_points(I, true, seed, o.budget);
      q["torus_solutions"] = detail::quantity(c, "sections");
      if (v.attained == Attainment::Attained) verdicts["count_matches_bound"] = mpq_class(static_cast<long>(c)) == v.bound;
    }
  }
  out["quantities"] = q;
  out["verdicts"] = verdicts;
  return out;
}

inline json cmd_polygons(const json& polys) {
  require(polys.is_array() && polys.size() == 2, "polygons must be an array of two {\"vertices\": [[x, y], ...]}");
  std::vector<Polygon> ps;
  for (const auto& p : polys) {
    std::vector<LatticePoint> pts;
    for (const auto& v : p.at("vertices")) {
      require(v.is_array() && v.size() == 2, "a vertex is [x, y]");
      pts.push_back({v[0].get<long long>(), v[1].get<long long>()});
    }
    require(!pts.empty(), "polygon without vertices");
    ps.push_back(Polygon::hull(pts));
  }
  return json{{"polygons", json::array({ps[0].to_string(), ps[1].to_string()})},
              {"areas", json::array({area(ps[0]).get_str(), area(ps[1]).get_str()})},
              {"quantities", json{{"bound", detail::quantity(mixed_volume_2d(ps[0], ps[1]).get_num().get_si(), "mixed-volume")}}},
              {"verdicts", json::object()}};
}

// Corpus ----------------------------------------------------------------------

enum class EntryKind { Implicit, Param, Product, Bkk, MixedVolumeTable };

inline const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::Implicit: return "implicit";
    case EntryKind::Param: return "param";
    case EntryKind::Product: return "product";
    case EntryKind::Bkk: return "bkk";
    case EntryKind::MixedVolumeTable: return "mixed-volume-table";
  }
  return "?";
}

struct CorpusEntry {
  std::string name;
  EntryKind kind = EntryKind::Implicit;
  std::size_t vars = 0;
  std::vector<std::string> texts;  // generators, numerators or the two bkk polynomials
  std::string denominator = "1";
  std::optional<FieldKind> field;  // pinned field, otherwise the run's field
  bool generic_ci = false;
  bool expect_singular = false;
};

inline std::uint64_t entry_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
  return Xorshift64Star(seed ^ h).next();
}

/// Two dense quadrics in A^4 with coefficients drawn from `seed`.
inline std::vector<std::string> random_quadrics(std::uint64_t seed) {
  Xorshift64Star rng(seed);
  const auto x = indexed_names(4, "x");
  std::vector<std::string> monos{"1"};
  for (const auto& a : x) monos.push_back(a);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) monos.push_back(x[i] + "*" + x[j]);
  std::vector<std::string> out;
  for (int q = 0; q < 2; ++q) {
    std::string s;
    for (const auto& m : monos) s += (s.empty() ? "" : " + ") + std::to_string(rng.between(1, 1000)) + "*" + m;
    out.push_back(s);
  }
  return out;
}

/// Fermat tangency system: f = x^m + y^m - 1 and a random member of the
/// family grad f . (linear forms), whose Newton polygon is the trapezoid.
inline std::vector<std::string> tangency_system(long m, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  auto r = [&] { return std::to_string(rng.between(1, 1000)); };
  const std::string e = std::to_string(m), e1 = std::to_string(m - 1);
  return {"x^" + e + " + y^" + e + " - 1",
          e + "*x^" + e1 + "*(" + r() + "*x + " + r() + "*y + " + r() + ") + " + e + "*y^" + e1 + "*(" + r() + "*x - " + r() +
              "*y + " + r() + ")"};
}

inline std::vector<CorpusEntry> builtin_corpus(std::uint64_t seed) {
  const std::vector<std::string> sigma{"x2 - 1/3*x1^3 + x1", "x3 - 1/4*x1^4 + 1/2*x1^2"};
  auto entry = [](std::string name, EntryKind kind, std::size_t vars, std::vector<std::string> texts) {
    CorpusEntry e;
    e.name = std::move(name);
    e.kind = kind;
    e.vars = vars;
    e.texts = std::move(texts);
    return e;
  };
  auto pinned = [](CorpusEntry e, FieldKind f) {
    e.field = f;
    return e;
  };
  auto ci = entry("generic-ci-a4", EntryKind::Implicit, 4, random_quadrics(entry_seed(seed, "generic-ci-a4")));
  ci.generic_ci = true;
  auto node = entry("nodal-cubic", EntryKind::Implicit, 2, {"x2^2 - x1^2*(x1 + 1)"});
  node.expect_singular = true;
  auto circle_param = entry("circle-param", EntryKind::Param, 2, {"1 - t^2", "2*t"});
  circle_param.denominator = "1 + t^2";
  std::vector<CorpusEntry> c{
      entry("line-a2", EntryKind::Implicit, 2, {"x1 - 2*x2 + 1"}),
      entry("plane-a3", EntryKind::Implicit, 3, {"x1 + 2*x2 - x3 - 1"}),
      entry("parabola", EntryKind::Implicit, 2, {"x2 - x1^2"}),
      entry("circle", EntryKind::Implicit, 2, {"x1^2 + x2^2 - 1"}),
      entry("twisted-cubic", EntryKind::Implicit, 3, {"x2 - x1^2", "x3 - x1^3"}),
      entry("space-curve", EntryKind::Implicit, 3, sigma),
      entry("fermat-2", EntryKind::Implicit, 2, {"x1^2 + x2^2 - 1"}),
      pinned(entry("fermat-3", EntryKind::Implicit, 2, {"x1^3 + x2^3 - 1"}), FieldKind::Rationals),
      pinned(ci, FieldKind::PrimeField),
      node,
      entry("parabola-param", EntryKind::Param, 2, {"t", "t^2"}),
      entry("twisted-cubic-param", EntryKind::Param, 3, {"t", "t^2", "t^3"}),
      entry("space-curve-param", EntryKind::Param, 3, {"t", "1/3*t^3 - t", "1/4*t^4 - 1/2*t^2"}),
      circle_param,
      entry("circle-x-line", EntryKind::Product, 2, {"x1^2 + x2^2 - 1"}),
      entry("parabola-x-line", EntryKind::Product, 2, {"x2 - x1^2"}),
      pinned(entry("fermat-2-tangency", EntryKind::Bkk, 2, tangency_system(2, entry_seed(seed, "fermat-2-tangency"))), FieldKind::Rationals),
      pinned(entry("fermat-3-tangency", EntryKind::Bkk, 2, tangency_system(3, entry_seed(seed, "fermat-3-tangency"))), FieldKind::Rationals),
      entry("trapezoid-mixed-volumes", EntryKind::MixedVolumeTable, 0, {}),
  };
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return c;
}

namespace detail {

template <CoefficientField F>
json run_implicit(const CorpusEntry& e, const F& k, std::uint64_t seed, const Options& o) {
  auto v = make_variety(e.vars, e.texts, k, e.name, {}, o.budget);
  json q{{"dim_V", quantity(v.dimension(), "hilbert")},
         {"deg_V", quantity(v.deg(), "hilbert")},
         {"deg_V_sections", quantity(random_section_degree(v, seed, o.budget), "sections")}};
  json verdicts{{"degree_pipelines_agree", q["deg_V_sections"]["value"] == v.deg()}};
  const auto mode = e.expect_singular || o.exact_smoothness ? SmoothnessMode::Exact : SmoothnessMode::Probabilistic;
  auto sm = smoothness_probe(v, mode, seed, o.budget);
  json out{{"generators", generators_json(v)}, {"smoothness", smoothness_json(sm)}};
  auto tb = tangent_bundle(v, o.budget);
  q["dim_TV"] = quantity(tb.total.dimension(), "hilbert");
  q["deg_TV"] = quantity(tb.total.deg(), "hilbert");
  if (e.expect_singular) {
    verdicts["singularity_detected"] = sm.kind == SmoothnessKind::SingularWitness;
    out["quantities"] = q;
    out["verdicts"] = verdicts;
    return out;
  }
  verdicts["smooth"] = sm.kind == SmoothnessKind::SmoothEvidence;
  verdicts["dim_TV_is_2dim_V"] = tb.total.dimension() == 2 * v.dimension();
  auto b = check_degree_bounds(v, e.generic_ci, o.budget);
  q["deg_Tan"] = quantity(b.deg_Tan, "hilbert");
  if (e.generic_ci || o.cross_check) {
    const long long s = random_section_degree(tb.total, seed ^ 0x5bd1e995ull, o.budget);
    q["deg_TV_sections"] = quantity(s, "sections");
    verdicts["tv_pipelines_agree"] = s == tb.total.deg();
  }
  auto bj = bounds_json(b);
  out["bounds"] = bj["bounds"];
  for (const auto& [name, val] : bj["verdicts"].items()) verdicts[name] = val;
  if (v.dimension() == 1) {
    auto r = verify_curve_identity(v, seed, o.budget);
    if (r.failure_kind) fail(*r.failure_kind, r.failure);
    q["omega"] = quantity(r.omega, "sections");
    out["identity"] = json{{"statement", identity_text(r.deg_TC, r.deg_C, r.omega, r.deg_Tan)},
                           {"holds", r.identity_holds},
                           {"pipeline", "theorem-A-components"}};
    verdicts["identity"] = r.identity_holds;
    verdicts["omega_bound"] = r.omega_bound_holds;
  }
  out["quantities"] = q;
  out["verdicts"] = verdicts;
  return out;
}

template <CoefficientField F>
json run_param(const CorpusEntry& e, const F& k, std::uint64_t seed, const Options& o) {
  auto p = make_parametrization(k, e.texts, e.denominator);
  auto out = cmd_verify_param(p, o, seed);
  if (p.kind == ParamKind::Rational) {
    auto [dom, rec] = enforce_denominator_dominance(p, seed);
    auto moved = variety_from_ideal(implicitize_curve(dom, o.budget), "dominant", {}, o.budget);
    out["quantities"]["deg_C_dominant"] = quantity(moved.deg(), "hilbert");
    out["quantities"]["deg_TC_dominant"] = quantity(tangent_bundle(moved, o.budget).total.deg(), "hilbert");
    out["verdicts"]["dominance_preserves_degrees"] =
        moved.deg() == out["quantities"]["deg_C"]["value"] && out["quantities"]["deg_TC_dominant"]["value"] == out["quantities"]["deg_TC_implicit"]["value"];
  }
  return out;
}

template <CoefficientField F>
json run_product(const CorpusEntry& e, const F& k, const Options& o) {
  auto v = make_variety(e.vars, e.texts, k, e.name, {}, o.budget);
  auto w = product_with_line(v, o.budget);
  const long long a = tangent_bundle(v, o.budget).total.deg(), b = tangent_bundle(w, o.budget).total.deg();
  json q{{"deg_V", quantity(v.deg(), "hilbert")},
         {"deg_V_product", quantity(w.deg(), "hilbert")},
         {"deg_TV", quantity(a, "hilbert")},
         {"deg_TV_product", quantity(b, "hilbert")}};
  return json{{"quantities", q},
              {"verdicts", json{{"product_keeps_deg_V", w.deg() == v.deg()},
                                {"product_keeps_deg_TV", a == b},
                                {"product_adds_dimension", w.dimension() == v.dimension() + 1}}}};
}

inline json run_mv_table() {
  json q = json::object(), verdicts = json::object();
  for (long m = 2; m <= 5; ++m) {
    const auto mv = mixed_volume_2d(simplex2(m), tangency_trapezoid(m));
    q["mv_m" + std::to_string(m)] = quantity(mv.get_num().get_si(), "mixed-volume");
    verdicts["mv_m" + std::to_string(m) + "_is_m_squared"] = mv == m * m;
  }
  return json{{"quantities", q}, {"verdicts", verdicts}};
}

inline json value_of(const json& entry, const std::string& key) {
  if (entry.contains("quantities") && entry["quantities"].contains(key)) return entry["quantities"][key]["value"];
  if (key == "smoothness" && entry.contains("smoothness")) return entry["smoothness"]["verdict"];
  if (key == "attainment" && entry.contains("attainment")) return entry["attainment"];
  return nullptr;
}

}  // namespace detail

inline json run_entry(const CorpusEntry& e, std::uint64_t seed, const FieldSpec& run_field, const Options& o) {
  const std::uint64_t s = entry_seed(seed, e.name);
  FieldSpec f = run_field;
  if (e.field == FieldKind::Rationals) f = FieldSpec::rationals();
  if (e.field == FieldKind::PrimeField && f.kind != FieldKind::PrimeField) f = FieldSpec::prime();
  if (e.kind == EntryKind::MixedVolumeTable) f = FieldSpec::rationals();
  json head{{"name", e.name}, {"kind", to_string(e.kind)}, {"field", detail::field_json(f)},
            {"modular_evidence", f.kind == FieldKind::PrimeField}, {"seed", s}};
  json body;
  try {
    body = detail::with_field(f, [&](const auto& k) -> json {
      switch (e.kind) {
        case EntryKind::Implicit: return detail::run_implicit(e, k, s, o);
        case EntryKind::Param: return detail::run_param(e, k, s, o);
        case EntryKind::Product: return detail::run_product(e, k, o);
        case EntryKind::Bkk: {
          Options forced = o;
          forced.cross_check = true;
          auto out = cmd_bkk(e.texts, k, s, forced);
          out["polynomials"] = e.texts;
          return out;
        }
        case EntryKind::MixedVolumeTable: return detail::run_mv_table();
      }
      return json::object();
    });
  } catch (const Error& err) {
    body = json{{"error", json{{"kind", tanvar::to_string(err.kind())}, {"message", err.what()}}}};
  }
  for (auto& [k, v] : body.items()) head[k] = v;
  return head;
}

inline json load_golden(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open golden file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Input, "golden file " + path + " is malformed at byte " + std::to_string(e.byte));
  }
}

/// Runs every entry, compares against the golden values, and assembles a
/// report sorted by entry name. Entries run concurrently; each owns its data.
inline Outcome run_corpus(const Options& o) {
  json golden = o.golden_path.empty() ? json::object() : load_golden(o.golden_path);
  const std::uint64_t seed = o.seed.value_or(golden.value("seed", kDefaultSeed));
  FieldSpec field = o.field.value_or(golden.contains("field") ? detail::field_from_json(golden["field"]) : FieldSpec::prime());
  auto entries = builtin_corpus(seed);

  std::vector<std::future<json>> jobs;
  for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, [&, e] { return run_entry(e, seed, field, o); }));

  json rows = json::array(), summary = json::array();
  int code = kOk;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    json r = jobs[i].get();
    json mismatches = json::array();
    const json* expected = nullptr;
    if (golden.contains("entries") && golden["entries"].contains(entries[i].name)) expected = &golden["entries"][entries[i].name];
    if (expected) {
      for (const auto& [key, want] : (*expected)["expected"].items()) {
        json got = detail::value_of(r, key);
        if (got != want) mismatches.push_back(json{{"key", key}, {"expected", want}, {"got", got}});
      }
      r["golden"] = json{{"source", (*expected).value("source", "")}, {"mismatches", mismatches}};
    } else if (!o.golden_path.empty()) {
      mismatches.push_back(json{{"key", "*"}, {"expected", "entry in golden file"}, {"got", nullptr}});
      r["golden"] = json{{"source", nullptr}, {"mismatches", mismatches}};
    }
    const bool errored = r.contains("error");
    const bool ok = !errored && mismatches.empty() && detail::all_true(r.value("verdicts", json::object()));
    r["ok"] = ok;
    if (errored) {
      const auto kind = r["error"]["kind"].get<std::string>();
      for (auto k : {ErrorKind::Input, ErrorKind::Budget, ErrorKind::DegenerateRandomness, ErrorKind::DimensionMismatch,
                     ErrorKind::Verification, ErrorKind::NoRationalPoint})
        if (kind == tanvar::to_string(k) && code == kOk) code = exit_code_for(k);
    } else if (!ok && code == kOk) {
      code = kVerificationFailed;
    }
    json row{{"name", entries[i].name}, {"ok", ok}};
    for (const char* key : {"deg_V", "deg_TV", "deg_Tan", "omega", "deg_TC", "deg_TC_implicit"}) {
      json v = detail::value_of(r, key);
      if (!v.is_null()) row[key] = v;
    }
    summary.push_back(row);
    rows.push_back(std::move(r));
  }
  json report{{"command", "corpus"}, {"field", detail::field_json(field)}, {"modular_evidence", field.kind == FieldKind::PrimeField},
              {"seed", seed},        {"summary", summary},                {"entries", rows}};
  if (o.properties) {
    json props = json::array();
    for (const auto& p : run_property_suites(seed)) {
      json pj{{"name", p.name}, {"cases", p.cases}, {"failures", p.failures}, {"ok", p.ok()}};
      if (!p.ok()) {
        pj["first_failure"] = p.first_failure;
        if (code == kOk) code = kVerificationFailed;
      }
      props.push_back(pj);
    }
    report["properties"] = props;
  }
  report["ok"] = code == kOk;
  return {report, code};
}

// Dispatch --------------------------------------------------------------------

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"degree", "tangent-bundle", "tangential", "omega", "verify-theorem-a",
                                              "verify-param", "bounds", "bkk", "corpus"};
  return names;
}

inline Outcome error_outcome(json report, const std::string& kind, const std::string& message, int code) {
  report["error"] = json{{"kind", kind}, {"message", message}};
  report["ok"] = false;
  return {report, code};
}

/// Runs a parsed job. The command argument, when non-empty, overrides the
/// job's "command" field.
inline Outcome run_job(const json& job, std::string command, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  json report;
  auto stamp = [&](Outcome out) {
    out.report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
  };
  try {
    require(job.is_object(), "job must be a JSON object");
    if (command.empty()) {
      require(job.contains("command") && job["command"].is_string(), "job.command is missing");
      command = job["command"].get<std::string>();
    }
    report["command"] = command;
    const auto& names = command_names();
    require(std::find(names.begin(), names.end(), command) != names.end(), "unknown command \"" + command + "\"");

    if (command == "corpus") {
      Options co = o;
      if (!co.seed && job.contains("seed")) co.seed = job["seed"].get<std::uint64_t>();
      if (!co.field && job.contains("field")) co.field = detail::field_from_json(job["field"]);
      co.properties = co.properties || job.value("properties", false);
      return stamp(run_corpus(co));
    }

    const std::uint64_t seed = o.seed.value_or(job.value("seed", kDefaultSeed));
    const FieldSpec field = o.field.value_or(job.contains("field") ? detail::field_from_json(job["field"]) : FieldSpec::rationals());
    report["field"] = detail::field_json(field);
    report["modular_evidence"] = field.kind == FieldKind::PrimeField;
    report["seed"] = seed;

    json body = detail::with_field(field, [&](const auto& k) -> json {
      if (command == "bkk") {
        if (job.contains("polygons")) return cmd_polygons(job["polygons"]);
        require(job.contains("polynomials"), "bkk needs \"polynomials\" or \"polygons\"");
        return cmd_bkk(detail::string_array(job["polynomials"], "polynomials"), k, seed, o);
      }
      if (command == "verify-param") {
        require(job.contains("param") && !job.contains("variety"), "verify-param needs \"param\" (and no \"variety\")");
        return cmd_verify_param(detail::param_from_json(job["param"], k), o, seed);
      }
      require(job.contains("variety") != job.contains("param"), "exactly one of \"variety\" and \"param\" must be present");
      using F = std::decay_t<decltype(k)>;
      Variety<F> v = job.contains("variety") ? detail::variety_from_json(job["variety"], k, o.budget)
                                             : variety_from_ideal(implicitize_curve(detail::param_from_json(job["param"], k), o.budget),
                                                                  "implicit", {}, o.budget);
      if (command == "degree") return cmd_degree(v, o, seed);
      if (command == "tangent-bundle") return cmd_tangent_bundle(v, o, seed);
      if (command == "tangential") return cmd_tangential(v, o, seed);
      if (command == "omega") return cmd_omega(v, o, seed);
      if (command == "verify-theorem-a") return cmd_verify_identity(v, o, seed);
      const bool gci = job.value("generic_complete_intersection", false) ||
                       (job.contains("variety") && job["variety"].value("generic_complete_intersection", false));
      return cmd_bounds(v, o, gci);
    });
    for (auto& [key, val] : body.items()) report[key] = val;
    const bool ok = detail::all_true(report.value("verdicts", json::object()));
    report["ok"] = ok;
    return stamp({report, ok ? kOk : kVerificationFailed});
  } catch (const Error& e) {
    return stamp(error_outcome(report, tanvar::to_string(e.kind()), e.what(), exit_code_for(e.kind())));
  } catch (const json::exception& e) {
    return stamp(error_outcome(report, "input", std::string("job does not match the schema: ") + e.what(), kInputError));
  }
}

/// Parses and runs a job given as text; malformed JSON reports its byte offset.
inline Outcome run_text(const std::string& text, const std::string& command, const Options& o) {
  json job;
  if (command == "corpus" && text.find_first_not_of(" \t\r\n") == std::string::npos) {
    job = json::object();
  } else {
    try {
      job = json::parse(text);
    } catch (const json::parse_error& e) {
      json report{{"command", command.empty() ? json(nullptr) : json(command)}};
      report["error"] = json{{"kind", "input"}, {"message", e.what()}, {"position", e.byte}};
      report["ok"] = false;
      return {report, kInputError};
    }
  }
  return run_job(job, command, o);
}

/// Report JSON with the timing field removed, for determinism comparisons.
inline json without_timing(json report) {
  report.erase("timing_ms");
  return report;
}

}  // namespace tanvar::cli

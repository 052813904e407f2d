#include "indbbw/problem.hpp"

#include "indbbw/errors.hpp"
#include "indbbw/sampling.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace indbbw::cli {

// ---------------------------------------------------------------------------
// Reading

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object())
    throw ProblemError(path, "expected an object");
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& path) {
  for (const auto& [key, value] : j.items())
    if (!allowed.contains(key))
      throw ProblemError(at(path, key), "unknown field");
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key))
    throw ProblemError(at(path, key), "missing required field");
  return j.at(key);
}

std::int64_t read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw ProblemError(path, "expected an integer");
  return j.get<std::int64_t>();
}

int read_small_int(const json& j, const std::string& path, int low) {
  const auto v = read_int(j, path);
  if (v < low || v > (1 << 30))
    throw ProblemError(path, "expected an integer >= " + std::to_string(low));
  return static_cast<int>(v);
}

HalfInt read_half(const json& j, const std::string& path) {
  if (j.is_number_integer())
    return HalfInt(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer() &&
      j[1].get<std::int64_t>() == 2)
    return HalfInt::from_twice(j[0].get<std::int64_t>());
  throw ProblemError(path, "expected an integer or a [numerator, 2] pair");
}

TowerDescriptor read_tower(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, {"kind", "k", "t", "base_rank"}, path);
  const auto& kind = field(j, "kind", path);
  if (!kind.is_string())
    throw ProblemError(at(path, "kind"), "expected a string");
  const auto name = kind.get<std::string>();
  if (name != "DiagonalA" && (j.contains("k") || j.contains("t") || j.contains("base_rank")))
    throw ProblemError(path, "k, t and base_rank only apply to DiagonalA towers");
  if (name == "SL") return TowerDescriptor::sl();
  if (name == "SO") return TowerDescriptor::so();
  if (name == "Sp") return TowerDescriptor::sp();
  if (name == "DiagonalA") {
    const int k = read_small_int(field(j, "k", path), at(path, "k"), 1);
    const int t = j.contains("t") ? read_small_int(j["t"], at(path, "t"), 0) : 0;
    const int base = j.contains("base_rank")
                         ? read_small_int(j["base_rank"], at(path, "base_rank"), 1)
                         : 1;
    try {
      return TowerDescriptor::diagonal(k, t, base);
    } catch (const InvalidInput& e) {
      throw ProblemError(path, e.what());
    }
  }
  throw ProblemError(at(path, "kind"), "unknown tower kind '" + name +
                                           "' (expected SL, SO, Sp or DiagonalA)");
}

ParabolicDescriptor read_parabolic(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, {"levi"}, path);
  ParabolicDescriptor p;
  if (!j.contains("levi"))
    return p;
  const auto& levi = j["levi"];
  if (!levi.is_array())
    throw ProblemError(at(path, "levi"), "expected an array of simple root positions");
  for (std::size_t i = 0; i < levi.size(); ++i)
    p.levi_positions.insert(read_small_int(levi[i], at(at(path, "levi"), i), 1));
  return p;
}

RankedWeight read_weight(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, {"type", "rank", "coeffs"}, path);
  const auto& type_field = field(j, "type", path);
  if (!type_field.is_string())
    throw ProblemError(at(path, "type"), "expected one of A, B, C, D");
  const auto type = parse_classical_type(type_field.get<std::string>());
  if (!type)
    throw ProblemError(at(path, "type"), "expected one of A, B, C, D");
  const auto rank = read_int(field(j, "rank", path), at(path, "rank"));
  if (rank < 1 || rank > 4096)
    throw ProblemError(at(path, "rank"), "rank must be between 1 and 4096");
  const auto& coeffs = field(j, "coeffs", path);
  if (!coeffs.is_array())
    throw ProblemError(at(path, "coeffs"), "expected an array");
  std::vector<HalfInt> values;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    values.push_back(read_half(coeffs[i], at(at(path, "coeffs"), i)));
  try {
    return RankedWeight(*type, static_cast<int>(rank), std::move(values));
  } catch (const InvalidInput& e) {
    throw ProblemError(path, e.what());
  }
}

WeightFamily read_family(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, {"n0", "head", "tail"}, path);
  WeightFamily f;
  if (j.contains("n0"))
    f.n0 = read_small_int(j["n0"], at(path, "n0"), 1);
  if (j.contains("tail"))
    f.tail = read_half(j["tail"], at(path, "tail"));
  if (j.contains("head")) {
    const auto& head = j["head"];
    const auto head_path = at(path, "head");
    if (!head.is_array())
      throw ProblemError(head_path, "expected an array of [p, q] pairs");
    for (std::size_t i = 0; i < head.size(); ++i) {
      const auto entry_path = at(head_path, i);
      if (!head[i].is_array() || head[i].size() != 2)
        throw ProblemError(entry_path, "expected a [p, q] pair meaning p + q*n");
      f.head.push_back({read_half(head[i][0], at(entry_path, 0)),
                        read_int(head[i][1], at(entry_path, 1))});
    }
  }
  return f;
}

ProblemParams read_params(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, {"probe_levels", "n", "k_max", "level", "dim_cap", "seed", "samples"},
                      path);
  ProblemParams p;
  if (j.contains("probe_levels"))
    p.probe_levels = read_small_int(j["probe_levels"], at(path, "probe_levels"), 0);
  if (j.contains("n"))
    p.n = read_small_int(j["n"], at(path, "n"), 1);
  if (j.contains("k_max"))
    p.k_max = read_small_int(j["k_max"], at(path, "k_max"), 1);
  if (j.contains("level"))
    p.level = read_small_int(j["level"], at(path, "level"), 1);
  if (j.contains("dim_cap"))
    p.dim_cap = read_int(j["dim_cap"], at(path, "dim_cap"));
  if (j.contains("seed"))
    p.seed = static_cast<std::uint64_t>(read_int(j["seed"], at(path, "seed")));
  if (j.contains("samples"))
    p.samples = read_small_int(j["samples"], at(path, "samples"), 1);
  return p;
}

} // namespace

ProblemSpec parse_problem(const json& doc) {
  require_object(doc, "");
  reject_unknown_keys(doc, {"tower", "parabolic", "weight", "weights", "families", "params"}, "");
  ProblemSpec spec;
  if (doc.contains("tower"))
    spec.tower = read_tower(doc["tower"], "/tower");
  if (doc.contains("parabolic"))
    spec.parabolic = read_parabolic(doc["parabolic"], "/parabolic");
  if (doc.contains("weight"))
    spec.weights.push_back(read_weight(doc["weight"], "/weight"));
  if (doc.contains("weights")) {
    const auto& ws = doc["weights"];
    if (!ws.is_array())
      throw ProblemError("/weights", "expected an array");
    for (std::size_t i = 0; i < ws.size(); ++i)
      spec.weights.push_back(read_weight(ws[i], at("/weights", i)));
  }
  if (doc.contains("families")) {
    const auto& fs = doc["families"];
    if (!fs.is_array())
      throw ProblemError("/families", "expected an array");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      spec.families.push_back(read_family(fs[i], at("/families", i)));
      if (spec.tower) {
        try {
          validate_family(spec.families.back(), *spec.tower);
        } catch (const InvalidInput& e) {
          throw ProblemError(at("/families", i), e.what());
        }
      }
    }
  }
  if (doc.contains("params"))
    spec.params = read_params(doc["params"], "/params");
  return spec;
}

ProblemSpec parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProblemError("", std::string("not a valid JSON document (") + e.what() + ")");
  }
  return parse_problem(doc);
}

// ---------------------------------------------------------------------------
// Writing

json to_json(HalfInt h) {
  if (h.is_integer())
    return h.as_integer();
  return json::array({h.twice(), 2});
}

json to_json(const RankedWeight& w) {
  const auto canonical = w.canonical();
  json coeffs = json::array();
  for (auto c : canonical.coeffs())
    coeffs.push_back(to_json(c));
  return {{"type", to_string(w.type())}, {"rank", w.rank()}, {"coeffs", coeffs}};
}

json to_json(const TowerDescriptor& tower) {
  json j = {{"kind", to_string(tower.kind())}};
  if (tower.kind() == TowerKind::DiagonalA) {
    j["k"] = tower.multiplicity();
    j["t"] = tower.padding();
    j["base_rank"] = tower.base_rank();
  }
  return j;
}

json to_json(const ParabolicDescriptor& parabolic) {
  return {{"levi", parabolic.levi_positions}};
}

json to_json(const WeightFamily& f) {
  json head = json::array();
  for (const auto& form : f.head)
    head.push_back(json::array({to_json(form.constant), form.slope}));
  return {{"n0", f.n0}, {"head", head}, {"tail", to_json(f.tail)}};
}

json to_json(const BBWOutcome& o) {
  if (o.is_singular())
    return {{"singular", true}};
  return {{"singular", false}, {"degree", o.degree()}, {"weight", to_json(o.weight())}};
}

json to_json(const LimitCohomology& limit) {
  json trace = json::array();
  for (const auto& [level, outcome] : limit.trace)
    trace.push_back({{"level", level}, {"outcome", to_json(outcome)}});
  json j = {{"kind", to_string(limit.kind)},
            {"diagnostic", limit.diagnostic},
            {"stable_from", limit.stable_from},
            {"trace", trace}};
  if (limit.is_stable()) {
    j["degree"] = limit.degree;
    j["family"] = to_json(limit.weight);
  }
  return j;
}

json to_json(const IntegrabilityVerdict& v) {
  json j = {{"status", to_string(v.status)}};
  j["m0"] = v.bound ? json(*v.bound) : json(nullptr);
  j["supremum"] = v.supremum ? to_json(*v.supremum) : json(nullptr);
  return j;
}

json to_json(const Scenario& s) {
  json summands = json::array();
  for (const auto& x : s.summands)
    summands.push_back(
        {{"degree", x.degree}, {"constituent", x.constituent}, {"family", to_json(x.family)}});
  json provenance = json::array();
  for (auto tag : s.provenance)
    provenance.push_back(to_string(tag));
  return {{"summands", summands}, {"provenance", provenance}};
}

json to_json(const ProblemSpec& spec) {
  json j = json::object();
  if (spec.tower)
    j["tower"] = to_json(*spec.tower);
  j["parabolic"] = to_json(spec.parabolic);
  if (!spec.weights.empty()) {
    j["weights"] = json::array();
    for (const auto& w : spec.weights)
      j["weights"].push_back(to_json(w));
  }
  if (!spec.families.empty()) {
    j["families"] = json::array();
    for (const auto& f : spec.families)
      j["families"].push_back(to_json(f));
  }
  json params = {{"probe_levels", spec.params.probe_levels},
                 {"dim_cap", spec.params.dim_cap},
                 {"seed", spec.params.seed},
                 {"samples", spec.params.samples}};
  if (spec.params.n) params["n"] = *spec.params.n;
  if (spec.params.k_max) params["k_max"] = *spec.params.k_max;
  if (spec.params.level) params["level"] = *spec.params.level;
  j["params"] = params;
  return j;
}

// ---------------------------------------------------------------------------
// Commands

namespace {

const TowerDescriptor& need_tower(const ProblemSpec& spec) {
  if (!spec.tower)
    throw ProblemError("/tower", "this command needs a tower");
  return *spec.tower;
}

void need_families(const ProblemSpec& spec) {
  if (spec.families.empty())
    throw ProblemError("/families", "this command needs at least one family");
}

int oracle_cap(ClassicalType type) {
  return type == ClassicalType::A ? kWeylEnumerationCapA : kWeylEnumerationCapBCD;
}

// exact dimensions above this rank run to millions of digits
constexpr int kDimensionCheckRankCap = 128;

json run_bbw(const ProblemSpec& spec) {
  if (spec.weights.empty())
    throw ProblemError("/weights", "bbw needs at least one weight");
  json results = json::array();
  for (const auto& w : spec.weights) {
    const auto outcome = bbw_resolve(w);
    json entry = {{"weight", to_json(w)}, {"outcome", to_json(outcome)}};
    if (!(bbw_resolve_reflection_walk(w) == outcome))
      throw InternalInconsistency("reflection walk disagrees at " + w.to_string());
    if (w.rank() <= oracle_cap(w.type())) {
      if (!(bbw_resolve_oracle(w) == outcome))
        throw InternalInconsistency("Weyl group oracle disagrees at " + w.to_string());
      entry["oracle"] = "agrees";
    } else {
      entry["oracle"] = "skipped: rank above enumeration cap";
    }
    if (outcome.is_regular() && w.rank() > kDimensionCheckRankCap) {
      entry["dimension"] = "skipped: rank above " + std::to_string(kDimensionCheckRankCap);
    } else if (outcome.is_regular()) {
      const BigInt expected =
          (outcome.degree() % 2 == 0 ? 1 : -1) * dim_irrep(outcome.weight());
      if (signed_weyl_dimension(w) != expected)
        throw InternalInconsistency("signed dimension identity fails at " + w.to_string());
      entry["dimension"] = dim_irrep(outcome.weight()).str();
    }
    if (!spec.parabolic.levi_positions.empty())
      entry["levi_dominant"] = parabolic_validity(w, spec.parabolic.levi_positions);
    results.push_back(entry);
  }
  return {{"outcomes", results}};
}

json run_bbw_limit(const ProblemSpec& spec) {
  const auto& tower = need_tower(spec);
  need_families(spec);
  json results = json::array();
  // values are computed before any json literal is built: a throw inside a
  // braced json initializer leaks
  for (const auto& f : spec.families) {
    const bool compatible = check_projective_compatibility(f, tower);
    const auto limit = bbw_limit(f, tower, spec.parabolic, spec.params.probe_levels);
    results.push_back(
        {{"family", to_json(f)}, {"compatible", compatible}, {"limit", to_json(limit)}});
  }
  return {{"limits", results}};
}

json branch_terms(const BranchMultiset& terms) {
  json out = json::array();
  for (const auto& [w, mult] : terms)
    out.push_back({{"weight", to_json(w)}, {"multiplicity", mult}});
  return out;
}

json run_branch(const ProblemSpec& spec) {
  const auto& tower = need_tower(spec);
  json results = json::array();
  if (!spec.weights.empty()) {
    if (!spec.params.level)
      throw ProblemError("/params/level", "branching a weight needs its level");
    const int level = *spec.params.level;
    for (const auto& w : spec.weights) {
      const auto terms = branch_once(w, tower, level);
      BigInt total = 0;
      for (const auto& [lower, mult] : terms)
        total += mult * dim_irrep(lower);
      const BigInt upper = dim_irrep(w);
      if (total != upper)
        throw InternalInconsistency("dimension not conserved branching " + w.to_string());
      results.push_back({{"weight", to_json(w)},
                         {"level", level},
                         {"terms", branch_terms(terms)},
                         {"dimension", upper.str()},
                         {"dimension_conserved", true}});
    }
    return {{"branchings", results}};
  }
  need_families(spec);
  if (!spec.params.n || !spec.params.k_max)
    throw ProblemError("/params", "restricting a family needs n and k_max");
  for (const auto& f : spec.families) {
    const auto terms = restrict_chain(f, tower, *spec.params.n, *spec.params.k_max,
                                      spec.params.dim_cap);
    const auto counts =
        count_isotypic(f, tower, *spec.params.n, *spec.params.k_max, spec.params.dim_cap);
    results.push_back(
        {{"family", to_json(f)}, {"terms", branch_terms(terms)}, {"isotypic_counts", counts}});
  }
  return {{"restrictions", results}};
}

json run_integrable(const ProblemSpec& spec) {
  const auto& tower = need_tower(spec);
  need_families(spec);
  json results = json::array();
  for (const auto& f : spec.families) {
    const bool compatible = check_projective_compatibility(f, tower);
    const auto l1 = check_dual_integrable_diagonal(f, tower);
    json entry = {{"family", to_json(f)}, {"compatible", compatible}, {"l1_condition", to_json(l1)}};
    if (tower.is_finitary()) {
      const auto finitary = check_dual_integrable_finitary(f, tower);
      entry["finitary"] = to_json(finitary);
      if (spec.params.n && spec.params.k_max) {
        const auto cv =
            cross_validate(f, tower, *spec.params.n, *spec.params.k_max, spec.params.dim_cap);
        entry["cross_validation"] = {{"counts", cv.counts},
                                     {"stabilized", cv.counts_stabilized},
                                     {"grows", cv.counts_grow},
                                     {"consistent", true}};
      }
    }
    results.push_back(entry);
  }
  return {{"verdicts", results}};
}

FilteredModule module_of(const ProblemSpec& spec) {
  need_families(spec);
  return {need_tower(spec), spec.parabolic, spec.families};
}

json strong_finiteness_json(const StrongFinitenessReport& report) {
  json constituents = json::array();
  for (const auto& c : report.constituents) {
    json entry = {{"index", c.index}, {"limit", to_json(c.limit)},
                  {"verdict", to_string(c.verdict)}};
    if (c.integrability)
      entry["integrability"] = to_json(*c.integrability);
    constituents.push_back(entry);
  }
  return {{"verdict", to_string(report.verdict)}, {"constituents", constituents}};
}

json euler_json(const EulerCharacteristic& chi) {
  json out = json::array();
  for (const auto& [family, coefficient] : chi)
    out.push_back({{"family", to_json(family)}, {"coefficient", coefficient}});
  return out;
}

json run_strong_finite(const ProblemSpec& spec) {
  return strong_finiteness_json(strong_finiteness_check(module_of(spec), spec.params.probe_levels));
}

json run_decompose(const ProblemSpec& spec) {
  const auto module = module_of(spec);
  const auto report = strong_finiteness_check(module, spec.params.probe_levels);
  json result = {{"strong_finiteness", strong_finiteness_json(report)}};
  const auto scenarios = decompose_enumerate(module, spec.params.probe_levels);
  const auto bounds =
      verify_theorem_bounds(scenarios, static_cast<int>(module.constituents.size()), module.tower);
  json list = json::array();
  for (const auto& s : scenarios) {
    json entry = to_json(s);
    entry["euler_characteristic"] = euler_json(euler_characteristic(s, module.tower));
    list.push_back(entry);
  }
  result["scenarios"] = list;
  result["bounds"] = {{"length", module.constituents.size()},
                      {"scenario_count", bounds.scenarios},
                      {"max_distinct_degrees", bounds.max_distinct_degrees},
                      {"max_summands", bounds.max_summands},
                      {"euler_invariant", bounds.euler_invariant}};
  return result;
}

// --- selfcheck --------------------------------------------------------------

struct SuiteTally {
  std::int64_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && failures.size() < 20)
      failures.push_back(what());
    else if (!ok)
      failures.emplace_back("...");
  }
  json to_json() const {
    return {{"checks", checks}, {"mismatches", failures.size()}, {"failures", failures}};
  }
};

SuiteTally selfcheck_bbw(std::mt19937_64& rng, int samples) {
  SuiteTally tally;
  const std::vector<std::pair<ClassicalType, int>> groups = {
      {ClassicalType::A, 1}, {ClassicalType::B, 1}, {ClassicalType::C, 1}, {ClassicalType::D, 2}};
  for (const auto& [type, min_rank] : groups) {
    for (int i = 0; i < samples; ++i) {
      const int rank = min_rank + i % (5 - min_rank);
      const auto w = random_weight(rng, type, rank, -10, 10);
      const auto fast = bbw_resolve(w);
      tally.expect(fast == bbw_resolve_oracle(w), [&] { return "oracle: " + w.to_string(); });
      tally.expect(fast == bbw_resolve_reflection_walk(w),
                   [&] { return "reflection walk: " + w.to_string(); });
      const BigInt signed_dim = signed_weyl_dimension(w);
      if (fast.is_regular()) {
        const BigInt expected = (fast.degree() % 2 == 0 ? 1 : -1) * dim_irrep(fast.weight());
        tally.expect(signed_dim == expected, [&] { return "signed dimension: " + w.to_string(); });
        tally.expect(bbw_resolve(fast.weight()) == BBWOutcome::regular(0, fast.weight()),
                     [&] { return "idempotence: " + w.to_string(); });
      } else {
        tally.expect(signed_dim == 0, [&] { return "singular dimension: " + w.to_string(); });
      }
    }
  }
  return tally;
}

SuiteTally selfcheck_branching(std::mt19937_64& rng, int samples) {
  SuiteTally tally;
  const std::vector<TowerDescriptor> towers = {TowerDescriptor::sl(), TowerDescriptor::so(),
                                               TowerDescriptor::sp()};
  for (int i = 0; i < samples; ++i) {
    const auto& tower = towers[static_cast<std::size_t>(i) % towers.size()];
    const int level = 2 + i % 4;
    const auto w = random_dominant_weight(rng, tower.type_at(level), tower.rank_at(level), 4);
    if (dim_irrep(w) > 100'000)
      continue;
    BigInt total = 0;
    for (const auto& [lower, mult] : branch_once(w, tower, level)) {
      tally.expect(is_dominant(lower), [&] { return "non-dominant branch of " + w.to_string(); });
      total += mult * dim_irrep(lower);
    }
    tally.expect(total == dim_irrep(w), [&] { return "dimension: " + w.to_string(); });
  }
  return tally;
}

SuiteTally selfcheck_families() {
  SuiteTally tally;
  const auto sl = TowerDescriptor::sl();
  const auto borel = ParabolicDescriptor::borel();

  const auto shifted = bbw_limit(WeightFamily::constant({0, 2}), sl, borel, 4);
  tally.expect(shifted.is_stable() && shifted.degree == 1 &&
                   same_limit(shifted.weight, WeightFamily::constant({1, 1}), sl),
               [] { return "limit of head (0,2) on SL"; });
  tally.expect(bbw_limit(WeightFamily::constant({-2}), sl, borel, 4).kind ==
                   LimitCohomology::Kind::Vanishing,
               [] { return "limit of head (-2) on SL"; });

  const auto natural = cross_validate(WeightFamily::constant({1}), sl, 2, 4);
  tally.expect(natural.counts == std::vector<std::int64_t>{2, 2, 2, 2},
               [] { return "isotypic counts of the natural family"; });
  WeightFamily slope;
  slope.head.push_back({0, 1});
  const auto growing = cross_validate(slope, sl, 1, 3);
  tally.expect(growing.verdict.status == IntegrabilityVerdict::Status::NotIntegrable &&
                   growing.counts_grow,
               [] { return "isotypic counts of the slope-1 family"; });

  const FilteredModule module{
      sl, borel, {WeightFamily::constant({1, 1}), WeightFamily::constant({0, 2})}};
  const auto scenarios = decompose_enumerate(module, 4);
  verify_theorem_bounds(scenarios, 2, sl);
  tally.expect(scenarios.size() == 2, [] { return "two-constituent decomposition"; });
  return tally;
}

json run_selfcheck(const ProblemSpec& spec, bool& clean) {
  std::mt19937_64 rng(spec.params.seed);
  const auto bbw = selfcheck_bbw(rng, spec.params.samples);
  const auto branching = selfcheck_branching(rng, spec.params.samples);
  const auto families = selfcheck_families();
  clean = bbw.failures.empty() && branching.failures.empty() && families.failures.empty();
  return {{"bbw_oracle", bbw.to_json()},
          {"branching", branching.to_json()},
          {"families", families.to_json()},
          {"status", clean ? "ok" : "mismatch"}};
}

} // namespace

RunResult guarded(const std::function<RunResult()>& body) {
  try {
    return body();
  } catch (const InternalInconsistency& e) {
    return {2, "", std::string("internal inconsistency: ") + e.what()};
  } catch (const std::exception& e) {
    return {1, "", std::string("error: ") + e.what()};
  }
}

RunResult run(const std::string& command, const std::optional<std::string>& problem_text,
              const CommandOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  return guarded([&]() -> RunResult {
    if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
      throw InvalidInput("unknown command '" + command + "'");
    ProblemSpec spec;
    if (problem_text)
      spec = parse_problem_text(*problem_text);
    else if (command != "selfcheck")
      throw InvalidInput("command '" + command + "' needs --input");
    if (options.probe_levels)
      spec.params.probe_levels = *options.probe_levels;
    if (options.dim_cap)
      spec.params.dim_cap = *options.dim_cap;

    json report = {{"command", command}, {"input", to_json(spec)}};
    bool clean = true;
    if (command == "bbw") report["result"] = run_bbw(spec);
    else if (command == "bbw-limit") report["result"] = run_bbw_limit(spec);
    else if (command == "branch") report["result"] = run_branch(spec);
    else if (command == "integrable") report["result"] = run_integrable(spec);
    else if (command == "strong-finite") report["result"] = run_strong_finite(spec);
    else if (command == "decompose") report["result"] = run_decompose(spec);
    else report["result"] = run_selfcheck(spec, clean);

    if (options.timing)
      report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - started)
                                .count();
    // selfcheck mismatches still produce a report
    return {clean ? 0 : 2, report.dump(2) + "\n", clean ? "" : "selfcheck found mismatches"};
  });
}

} // namespace indbbw::cli

#include "cffa/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "cffa/dispatch.hpp"
#include "cffa/oracle.hpp"

namespace cffa {

namespace {

Range parse_range(const Json& v, const char* field) {
  if (v.is_number_unsigned()) return {v.get<std::size_t>(), v.get<std::size_t>()};
  if (v.is_array() && v.size() == 2) {
    Range r{v[0].get<std::size_t>(), v[1].get<std::size_t>()};
    if (r.lo <= r.hi) return r;
  }
  throw ParseError(std::string(field) + ": expected an integer or [lo, hi]");
}

Structure parse_structure(const std::string& s) {
  if (s == "free") return Structure::Free;
  if (s == "two-clique") return Structure::TwoClique;
  if (s == "max-degree") return Structure::MaxDegree;
  if (s == "bipartite") return Structure::Bipartite;
  if (s == "triangle-free") return Structure::TriangleFree;
  if (s == "degenerate") return Structure::Degenerate;
  if (s == "diversity-cap") return Structure::DiversityCap;
  if (s == "missing-edges") return Structure::MissingEdges;
  throw ParseError("structure: unknown structure '" + s + "'");
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomProfile parse_profile(const Json& doc) {
  RandomProfile p;
  try {
    if (doc.contains("jobs")) p.jobs = parse_range(doc["jobs"], "jobs").lo;
    if (doc.contains("agents")) p.agents = parse_range(doc["agents"], "agents").lo;
    const std::string variant = doc.value("variant", "partial");
    if (variant == "complete") {
      p.completeness = Completeness::Complete;
    } else if (variant != "partial" && variant != "any") {
      throw ParseError("variant: expected partial, complete or any");
    }
    if (doc.contains("size_bound") && !doc["size_bound"].is_null()) {
      p.size_bound = parse_range(doc["size_bound"], "size_bound").lo;
    }
    p.structure = parse_structure(doc.value("structure", "free"));
    p.param = doc.value("param", std::size_t{0});
    p.edge_probability = doc.value("edge_probability", 0.3);
    if (doc.contains("utility")) {
      const auto r = parse_range(doc["utility"], "utility");
      p.utility_min = r.lo;
      p.utility_max = r.hi;
    }
    if (doc.contains("eta")) {
      const auto r = parse_range(doc["eta"], "eta");
      p.eta_min = r.lo;
      p.eta_max = r.hi;
    }
    p.uniform_utilities = doc.value("uniform", false);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("profile: ") + e.what());
  }
  return p;
}

Suite parse_suite(const Json& doc) {
  if (!doc.is_object()) throw ParseError("$: suite must be an object");
  Suite s;
  try {
    s.seed = doc.value("seed", std::uint64_t{1});
    s.threads = doc.value("threads", std::size_t{0});
    if (doc.contains("solvers")) s.solvers = doc["solvers"].get<std::vector<std::string>>();
    if (doc.contains("budget_nodes")) s.budget.max_nodes = doc["budget_nodes"].get<std::uint64_t>();
    if (doc.contains("profiles")) {
      for (const auto& pd : doc["profiles"]) {
        SuiteProfile sp;
        sp.base = parse_profile(pd);
        sp.count = pd.value("count", std::size_t{1});
        if (pd.contains("jobs")) sp.jobs = parse_range(pd["jobs"], "jobs");
        else sp.jobs = {sp.base.jobs, sp.base.jobs};
        if (pd.contains("agents")) sp.agents = parse_range(pd["agents"], "agents");
        else sp.agents = {sp.base.agents, sp.base.agents};
        if (pd.contains("size_bound") && !pd["size_bound"].is_null()) {
          sp.size_bound = parse_range(pd["size_bound"], "size_bound");
        }
        sp.any_completeness = pd.value("variant", "partial") == "any";
        s.profiles.push_back(std::move(sp));
      }
    }
    if (doc.contains("scaling")) {
      const auto& sd = doc["scaling"];
      ScalingSpec spec;
      spec.solver = sd.value("solver", "hwpoly");
      spec.base = parse_profile(sd.value("profile", Json::object()));
      spec.jobs = sd.at("m").get<std::vector<std::size_t>>();
      spec.reps = sd.value("reps", std::size_t{3});
      s.scaling = std::move(spec);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("suite: ") + e.what());
  }
  for (const auto& name : s.solvers) {
    if (name != "oracle" && std::find(solver_names().begin(), solver_names().end(), name) == solver_names().end()) {
      throw ParseError("solvers: unknown solver '" + name + "'");
    }
  }
  return s;
}

std::vector<std::pair<std::string, Instance>> suite_instances(const Suite& suite) {
  std::vector<std::pair<std::string, Instance>> out;
  for (std::size_t p = 0; p < suite.profiles.size(); ++p) {
    const auto& sp = suite.profiles[p];
    for (std::size_t k = 0; k < sp.count; ++k) {
      const std::uint64_t seed = mix(suite.seed ^ mix(p * 0x10001 + k));
      std::mt19937_64 rng(seed);
      auto draw = [&](Range r) { return std::uniform_int_distribution<std::size_t>(r.lo, r.hi)(rng); };
      RandomProfile prof = sp.base;
      prof.jobs = draw(sp.jobs);
      prof.agents = draw(sp.agents);
      if (sp.size_bound) prof.size_bound = std::min(draw(*sp.size_bound), prof.jobs);
      if (sp.any_completeness) prof.completeness = rng() & 1 ? Completeness::Complete : Completeness::Partial;
      out.emplace_back("p" + std::to_string(p) + "-" + std::to_string(k), gen_random(prof, rng()));
    }
  }
  return out;
}

Json record_to_json(const BenchRecord& r) {
  Json j;
  j["instanceId"] = r.instance_id;
  j["solver"] = r.solver;
  j["answer"] = r.answer;
  j["verified"] = r.verified;
  j["micros"] = r.micros;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

namespace {

struct Outcome {
  BenchRecord record;
  std::optional<SolveResult> result;
};

Outcome run_one(const std::string& id, const std::string& name, const SolverFn& fn, const Instance& inst) {
  Outcome o;
  o.record.instance_id = id;
  o.record.solver = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    o.result = fn(inst);
    o.record.answer = o.result->is_yes() ? "yes" : "no";
    if (o.result->is_yes()) {
      if (o.result->witness) {
        const auto v = verify_assignment(inst, *o.result->witness);
        o.record.verified = v.ok;
        o.record.detail = v.diagnostic;
      } else {
        o.record.detail = "yes without a witness";
      }
    } else {
      o.record.verified = true;
    }
  } catch (const BudgetExceeded& e) {
    o.record.answer = "budget";
    o.record.detail = e.what();
  } catch (const PreconditionError& e) {
    o.record.answer = "precondition";
    o.record.detail = e.what();
  } catch (const std::exception& e) {
    o.record.answer = "error";
    o.record.detail = e.what();
  }
  o.record.micros = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
  return o;
}

struct InstanceOutcome {
  std::vector<BenchRecord> records;
  std::vector<Disagreement> failures;
  bool excluded = false;
  std::size_t misses = 0;
};

}  // namespace

DifferentialReport run_differential(const Suite& suite, const std::map<std::string, SolverFn>& extra) {
  std::map<std::string, SolverFn> registry;
  for (const auto& name : suite.solvers) {
    if (auto it = extra.find(name); it != extra.end()) {
      registry[name] = it->second;
      continue;
    }
    registry[name] = [name, &suite](const Instance& inst) {
      SolveOptions o;
      o.algo = name;
      o.seed = suite.seed;
      o.budget = suite.budget;
      return solve_with(inst, o).result;
    };
  }
  for (const auto& [name, fn] : extra) {
    if (!registry.count(name)) registry[name] = fn;
  }
  std::vector<std::string> order;
  for (const auto& name : suite.solvers) order.push_back(name);
  for (const auto& [name, fn] : extra) {
    if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
  }

  const auto instances = suite_instances(suite);
  std::vector<InstanceOutcome> outcomes(instances.size());
  auto work = [&](std::size_t idx) {
    const auto& [id, inst] = instances[idx];
    InstanceOutcome& out = outcomes[idx];
    const auto truth = run_one(id, "oracle", [&](const Instance& x) { return solve_oracle(x, suite.budget); }, inst);
    const bool decided = truth.result.has_value();
    if (!decided) out.excluded = true;
    for (const auto& name : order) {
      Outcome o = name == "oracle" ? truth : run_one(id, name, registry.at(name), inst);
      auto replay = [&](const std::string& kind) {
        Json r;
        r["instance"] = instance_to_json(inst);
        r["oracle"] = decided ? (truth.result->is_yes() ? "yes" : "no") : "undecided";
        r["solver_result"] = o.result ? result_to_json(*o.result) : Json(o.record.answer);
        r["detail"] = o.record.detail;
        out.failures.push_back({id, name, kind, std::move(r)});
      };
      if (o.record.answer == "precondition") {
        replay("precondition");
      } else if (o.result) {
        if (o.result->is_yes() && !o.record.verified) {
          replay("witness");
        } else if (decided && o.result->is_yes() != truth.result->is_yes()) {
          if (name == "colorcode-rand" && truth.result->is_yes()) {
            ++out.misses;
          } else {
            replay("answer");
          }
        }
      } else if (o.record.answer == "error") {
        replay("error");
      }
      out.records.push_back(std::move(o.record));
    }
  };

  std::size_t threads = suite.threads ? suite.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(instances.size(), 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < instances.size(); i = next++) work(i);
    });
  }
  for (auto& th : pool) th.join();

  DifferentialReport report;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    report.records.insert(report.records.end(), o.records.begin(), o.records.end());
    report.failures.insert(report.failures.end(), o.failures.begin(), o.failures.end());
    if (o.excluded) report.excluded.push_back(instances[i].first);
    report.misses += o.misses;
  }
  return report;
}

double log2_slope(const std::vector<ScalingRow>& rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) {
    if (r.samples > 0 && r.median_micros > 0) pts.emplace_back(static_cast<double>(r.jobs), std::log2(r.median_micros));
  }
  if (pts.size() < 2) return 0;
  double mx = 0, my = 0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double num = 0, den = 0;
  for (auto [x, y] : pts) {
    num += (x - mx) * (y - my);
    den += (x - mx) * (x - mx);
  }
  return den == 0 ? 0 : num / den;
}

ScalingReport run_scaling(const ScalingSpec& spec, std::uint64_t seed, const Budget& budget) {
  ScalingReport report;
  report.solver = spec.solver;
  for (std::size_t m : spec.jobs) {
    ScalingRow row;
    row.jobs = m;
    std::vector<double> times;
    for (std::size_t r = 0; r < spec.reps; ++r) {
      RandomProfile p = spec.base;
      p.jobs = m;
      if (p.size_bound) p.size_bound = std::min(*p.size_bound, m);
      const Instance inst = gen_random(p, mix(seed ^ mix(m * 1000 + r)));
      SolveOptions o;
      o.algo = spec.solver;
      o.seed = seed;
      o.budget = budget;
      const auto start = std::chrono::steady_clock::now();
      try {
        solve_with(inst, o);
      } catch (const BudgetExceeded&) {
        ++row.timeouts;
        continue;
      }
      times.push_back(std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count());
    }
    row.samples = times.size();
    if (!times.empty()) {
      std::sort(times.begin(), times.end());
      const std::size_t h = times.size() / 2;
      row.median_micros = times.size() % 2 ? times[h] : (times[h - 1] + times[h]) / 2;
    }
    report.rows.push_back(row);
  }
  report.slope = log2_slope(report.rows);
  return report;
}

}  // namespace cffa

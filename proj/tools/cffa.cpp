#include <CLI11.hpp>

#include <iostream>

#include "cffa/bench.hpp"
#include "cffa/dispatch.hpp"
#include "cffa/generators.hpp"
#include "cffa/io.hpp"
#include "cffa/kernel.hpp"

using namespace cffa;

namespace {

// Exit codes shared by every subcommand.
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kFailure = 2;

Json kernel_report_json(const KernelReport& r) {
  Json j;
  j["rule"] = kernel_rule_name(r.rule);
  j["parameter"] = r.parameter;
  j["per_agent_budget"] = r.per_agent_budget;
  j["stated_bound"] = r.stated_bound;
  j["surviving_jobs"] = r.surviving_jobs;
  j["trivial_no"] = r.trivial_no;
  j["clique_allowance"] = r.clique_allowance;
  j["job_map"] = r.job_map;
  return j;
}

Graph graph_from_json(const Json& doc) {
  Graph g(doc.at("n_vertices").get<std::size_t>());
  for (const auto& e : doc.value("edges", Json::array())) g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  return g;
}

Instance fixed_answer_instance(bool yes) {
  Instance::Data d;
  d.agents = 1;
  d.jobs = 1;
  d.utilities = {yes ? Value{1} : Value{0}};
  d.completeness = Completeness::Complete;
  return Instance(std::move(d));
}

Instance generate(const std::string& from, const Json& src, std::uint64_t seed) {
  if (from == "partition") {
    return gen_from_partition(src.at("values").get<std::vector<Value>>(), src.value("agents", std::size_t{2}));
  }
  if (from == "coloring") return gen_from_coloring(graph_from_json(src), src.at("k").get<std::size_t>());
  if (from == "is") {
    const std::string flavor = src.value("flavor", "partial");
    if (flavor != "partial" && flavor != "sb-complete") throw ParseError("flavor: expected partial or sb-complete");
    return gen_from_independent_set(graph_from_json(src), src.at("k").get<std::size_t>(),
                                    flavor == "partial" ? IsFlavor::Partial : IsFlavor::SbComplete);
  }
  if (from == "3dm") {
    ThreeDMInstance t;
    t.x_count = src.at("x_count").get<std::size_t>();
    t.y_count = src.at("y_count").get<std::size_t>();
    t.z_count = src.at("z_count").get<std::size_t>();
    for (const auto& tr : src.at("tuples")) {
      t.tuples.push_back({tr.at(0).get<std::size_t>(), tr.at(1).get<std::size_t>(), tr.at(2).get<std::size_t>()});
    }
    const std::string flavor = src.value("flavor", "edgeless");
    if (flavor != "edgeless" && flavor != "two-clique") throw ParseError("flavor: expected edgeless or two-clique");
    const auto pre = preprocess_3dm(t);
    if (pre.decided) {
      std::cerr << "3dm: decided by preprocessing (" << (*pre.decided ? "yes" : "no")
                << "); emitting a one-job instance with the same answer\n";
      return fixed_answer_instance(*pre.decided);
    }
    std::optional<Value> eta_target;
    if (src.contains("eta_target")) eta_target = src["eta_target"].get<Value>();
    return gen_from_3dm(pre.reduced, flavor == "edgeless" ? ThreeDMFlavor::Edgeless : ThreeDMFlavor::TwoClique,
                        eta_target);
  }
  if (from == "random") return gen_random(parse_profile(src), seed);
  throw ParseError("from: unknown generator '" + from + "'");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("$: malformed document: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-free fair allocation solver"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string algo = "auto";
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> repetitions;
  std::string graph_class;
  auto* solve = app.add_subcommand("solve", "Decide an instance; prints a result document");
  solve->add_option("instance", instance_path, "Instance document")->required();
  solve->add_option("--algo", algo, "Solver")->check(CLI::IsMember(solver_names()));
  solve->add_option("--seed", seed, "Random seed");
  solve->add_option("--repetitions", repetitions, "colorcode-rand repetition override");
  solve->add_option("--class", graph_class, "Graph class for sbmwis-route (bipartite, planar, degenerate:d, ...)");

  std::string assignment_path;
  auto* verify = app.add_subcommand("verify", "Check an assignment against an instance");
  verify->add_option("instance", instance_path, "Instance document")->required();
  verify->add_option("assignment", assignment_path, "Result or assignment document")->required();

  std::string rule;
  std::optional<std::size_t> ramsey_r;
  std::string report_path;
  auto* kernelize = app.add_subcommand("kernelize", "Apply a kernel; prints the reduced instance");
  kernelize->add_option("instance", instance_path, "Instance document")->required();
  kernelize->add_option("--rule", rule, "Kernel rule")
      ->required()
      ->check(CLI::IsMember({"nbrdiv", "degree", "chromatic", "ramsey"}));
  kernelize->add_option("--r", ramsey_r, "Forbidden clique size for the ramsey rule");
  kernelize->add_option("--report", report_path, "Write the kernel report to this file");

  std::string from;
  std::string source;
  std::string source_file;
  auto* gen = app.add_subcommand("generate", "Build an instance from a source problem");
  gen->add_option("--from", from, "Generator")
      ->required()
      ->check(CLI::IsMember({"partition", "coloring", "is", "3dm", "random"}));
  gen->add_option("--source", source, "Source document (inline JSON)");
  gen->add_option("--source-file", source_file, "Source document file");
  gen->add_option("--seed", seed, "Random seed");

  std::string suite_path;
  auto* bench = app.add_subcommand("bench", "Run a differential/scaling suite; prints line-JSON records");
  bench->add_option("--suite", suite_path, "Suite document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kFailure;
  }

  try {
    if (*solve) {
      const Instance inst = parse_instance(read_file(instance_path));
      SolveOptions o;
      o.algo = algo;
      o.seed = seed;
      o.repetitions = repetitions;
      o.budget = Budget::from_env();
      if (!graph_class.empty()) o.graph_class = parse_graph_class(graph_class);
      const auto r = solve_with(inst, o);
      std::cerr << "solver: " << r.solver << " seed: " << seed;
      for (const auto& why : r.reasons) std::cerr << " (" << why << ")";
      std::cerr << "\n";
      std::cout << write_result(r.result) << "\n";
      return r.result.is_yes() ? kYes : kNo;
    }
    if (*verify) {
      const Instance inst = parse_instance(read_file(instance_path));
      const Json doc = parse_json(read_file(assignment_path));
      const Assignment a = doc.contains("answer") ? assignment_from_json(doc.value("assignment", Json::object()))
                                                  : assignment_from_json(doc);
      Verdict v;
      try {
        v = verify_assignment(inst, a);
      } catch (const std::out_of_range& e) {
        v = {false, e.what()};
      }
      if (!v) {
        std::cerr << v.diagnostic << "\n";
        return kNo;
      }
      return kYes;
    }
    if (*kernelize) {
      const Instance inst = parse_instance(read_file(instance_path));
      KernelOptions o;
      o.r = ramsey_r;
      const auto r = apply_kernel(inst, parse_kernel_rule(rule), o);
      std::cout << write_instance(r.reduced) << "\n";
      const std::string report = kernel_report_json(r).dump();
      if (!report_path.empty()) write_file(report_path, report + "\n");
      else std::cerr << report << "\n";
      return kYes;
    }
    if (*gen) {
      if (source.empty() == source_file.empty()) throw ParseError("source: give exactly one of --source, --source-file");
      const Json src = parse_json(source.empty() ? read_file(source_file) : source);
      try {
        std::cout << write_instance(generate(from, src, seed)) << "\n";
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("source: ") + e.what());
      }
      return kYes;
    }
    if (*bench) {
      const Suite suite = parse_suite(parse_json(read_file(suite_path)));
      std::cerr << "seed: " << suite.seed << "\n";
      const auto report = run_differential(suite);
      for (const auto& r : report.records) std::cout << record_to_json(r).dump() << "\n";
      for (const auto& f : report.failures) {
        Json j;
        j["failure"] = f.kind;
        j["instanceId"] = f.instance_id;
        j["solver"] = f.solver;
        j["replay"] = f.replay;
        std::cout << j.dump() << "\n";
      }
      if (suite.scaling) {
        const auto s = run_scaling(*suite.scaling, suite.seed, suite.budget);
        for (const auto& row : s.rows) {
          Json j;
          j["scaling"] = s.solver;
          j["m"] = row.jobs;
          j["medianMicros"] = row.median_micros;
          j["samples"] = row.samples;
          j["timeouts"] = row.timeouts;
          std::cout << j.dump() << "\n";
        }
        std::cout << Json{{"scaling", s.solver}, {"log2Slope", s.slope}}.dump() << "\n";
      }
      std::cerr << report.records.size() << " records, " << report.failures.size() << " failures, "
                << report.excluded.size() << " excluded, " << report.misses << " one-sided misses\n";
      return report.ok() ? kYes : kNo;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

#include <doctest.h>

#include "cffa/generators.hpp"
#include "cffa/io.hpp"
#include "support/fixtures.hpp"

using namespace cffa;
using namespace fixtures;

namespace {

std::string doc_with(const std::string& eta, const std::string& edges, const std::string& sb = "null") {
  return R"({"variant":"partial","size_bound":)" + sb + R"(,"n_agents":1,"n_jobs":3,"utilities":[[5,1,2]],"conflict_edges":)" +
         edges + R"(,"eta":)" + eta + "}";
}

std::string parse_error(const std::string& doc) {
  try {
    parse_instance(doc);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse minimal instance") {
  const auto inst = parse_instance(
      R"({"variant":"partial","size_bound":null,"n_agents":1,"n_jobs":1,"utilities":[[5]],"conflict_edges":[],"eta":5})");
  CHECK(inst.agents() == 1);
  CHECK(inst.jobs() == 1);
  CHECK(inst.eta() == 5);
  CHECK(inst.variant().name() == "P-CFFA");
}

TEST_CASE("parse errors carry the field path") {
  CHECK(parse_error(doc_with("1", "[[2,2]]")).find("conflict_edges[0]: self-loop") != std::string::npos);
  CHECK(parse_error(doc_with("0", "[]")).find("eta must be >= 1") != std::string::npos);
  CHECK(parse_error(doc_with("1", "[[0,1],[1,0]]")).find("duplicate edge") != std::string::npos);
  CHECK(parse_error(doc_with("1", "[[0,7]]")).find("out of range") != std::string::npos);
  CHECK(parse_error(doc_with("1", "[]", "4")).find("size_bound") == 0);
  CHECK(parse_error(R"({"variant":"partial","size_bound":null,"n_agents":1,"n_jobs":2,"utilities":[[1,-1]],"conflict_edges":[],"eta":1})")
            .find("utilities[0][1]: negative utility") != std::string::npos);
  CHECK(parse_error(R"({"variant":"partial","size_bound":null,"n_agents":2,"n_jobs":2,"utilities":[[1,1]],"conflict_edges":[],"eta":1})")
            .find("dimension mismatch") != std::string::npos);
  CHECK(parse_error("{not json").find("malformed") != std::string::npos);
}

TEST_CASE("edges are normalized") {
  const auto inst = parse_instance(doc_with("1", "[[2,0],[1,0]]"));
  REQUIRE(inst.conflict_edges().size() == 2);
  CHECK(inst.conflict_edges()[0] == Edge{0, 1});
  CHECK(inst.conflict_edges()[1] == Edge{0, 2});
}

TEST_CASE("verify examples") {
  const auto both = make({{1, 1}}, {}, 2, kComplete);
  Assignment a;
  a.assign(0, 0);
  a.assign(1, 0);
  CHECK(verify_assignment(both, a).ok);
  Assignment b;
  b.assign(0, 0);
  const auto v = verify_assignment(both, b);
  CHECK_FALSE(v.ok);
  CHECK(v.diagnostic.find("unassigned job under Complete") != std::string::npos);

  const auto edge = make({{1, 1}, {1, 1}}, {{0, 1}}, 1);
  const auto w = verify_assignment(edge, a);
  CHECK_FALSE(w.ok);
  CHECK(w.diagnostic.find("bundle not independent") != std::string::npos);

  const auto bounded = make({{1, 1}}, {}, 1, kPartial, 1);
  CHECK(verify_assignment(bounded, a).diagnostic.find("bundle exceeds size bound") != std::string::npos);
  CHECK(verify_assignment(make({{1, 1}}, {}, 3), a).diagnostic.find("utility below eta") != std::string::npos);
  Assignment bad;
  bad.assign(5, 0);
  CHECK_THROWS_AS(verify_assignment(both, bad), std::out_of_range);
}

TEST_CASE("empty bundles fail since eta >= 1") {
  const auto inst = make({{3, 3}, {3, 3}}, {}, 1);
  Assignment a;
  a.assign(0, 0);
  a.assign(1, 0);
  CHECK_FALSE(verify_assignment(inst, a).ok);
}

TEST_CASE("write_result canonical form") {
  CHECK(write_result(SolveResult::no()) == R"({"answer":"no"})");
  Assignment a;
  a.assign(10, 1);
  a.assign(2, 0);
  a.assign(0, 0);
  CHECK(write_result(SolveResult::yes(a)) == R"({"answer":"yes","assignment":{"0":0,"2":0,"10":1}})");
  const auto back = parse_result(write_result(SolveResult::yes(a)));
  CHECK(back.witness == a);
}

TEST_CASE("round trip is byte identical") {
  const std::string minimal =
      R"({"variant":"partial","size_bound":null,"n_agents":1,"n_jobs":1,"utilities":[[5]],"conflict_edges":[],"eta":5})";
  CHECK(write_instance(parse_instance(minimal)) == minimal);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomProfile p;
    p.jobs = 1 + seed % 12;
    p.agents = 1 + seed % 4;
    p.completeness = seed % 2 ? Completeness::Complete : Completeness::Partial;
    if (seed % 3 == 0) p.size_bound = 1 + seed % 5;
    p.utility_max = 1'000'000'000'000ULL;
    const auto inst = gen_random(p, seed);
    const auto text = write_instance(inst);
    const auto again = parse_instance(text);
    CHECK(again == inst);
    CHECK(write_instance(again) == text);
  }
}

TEST_CASE("utility sums are checked") {
  const auto inst = make({{~Value{0}, 1}}, {}, 1);
  CHECK_THROWS_AS(bundle_utility(inst, 0, Mask{3}), OverflowError);
}

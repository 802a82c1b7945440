#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cffa/instance.hpp"

namespace cffa {

using Json = nlohmann::ordered_json;

// Instance document:
//   {"variant":"complete"|"partial","size_bound":int|null,"n_agents":int,
//    "n_jobs":int,"utilities":[[int,...],...],"conflict_edges":[[u,v],...],"eta":int}
// Result document:
//   {"answer":"yes"|"no","assignment":{"<job>":<agent>,...}}   (assignment only on yes)
// Canonical form is compact, keys in the order above, edges sorted with u < v,
// assignment keys in ascending job order.

Instance parse_instance(std::string_view document);
Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& inst);
std::string write_instance(const Instance& inst);

SolveResult parse_result(std::string_view document);
Json result_to_json(const SolveResult& r);
std::string write_result(const SolveResult& r);

Assignment assignment_from_json(const Json& doc);
Json assignment_to_json(const Assignment& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace cffa

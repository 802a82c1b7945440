#include "cffa/io.hpp"

#include <fstream>
#include <sstream>

namespace cffa {

namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("$: document must be an object");
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string(name) + ": missing field");
  return *it;
}

std::uint64_t as_count(const Json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) throw ParseError(path + ": negative value");
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  throw ParseError(path + ": expected a non-negative integer");
}

}  // namespace

Instance instance_from_json(const Json& doc) {
  Instance::Data d;

  const auto& variant = field(doc, "variant");
  if (variant == "complete") {
    d.completeness = Completeness::Complete;
  } else if (variant == "partial") {
    d.completeness = Completeness::Partial;
  } else {
    throw ParseError("variant: expected \"complete\" or \"partial\"");
  }

  const auto& s = field(doc, "size_bound");
  if (!s.is_null()) d.size_bound = as_count(s, "size_bound");

  d.agents = as_count(field(doc, "n_agents"), "n_agents");
  d.jobs = as_count(field(doc, "n_jobs"), "n_jobs");

  const auto& eta = field(doc, "eta");
  if (eta.is_number_integer() && !eta.is_number_unsigned() && eta.get<std::int64_t>() < 1) {
    throw ParseError("eta: eta must be >= 1");
  }
  d.eta = as_count(eta, "eta");
  if (d.eta < 1) throw ParseError("eta: eta must be >= 1");

  const auto& rows = field(doc, "utilities");
  if (!rows.is_array()) throw ParseError("utilities: expected an array of rows");
  if (rows.size() != d.agents) {
    throw ParseError("utilities: dimension mismatch, " + std::to_string(rows.size()) + " rows for " +
                     std::to_string(d.agents) + " agents");
  }
  d.utilities.reserve(d.agents * d.jobs);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_path = "utilities[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != d.jobs) {
      throw ParseError(row_path + ": dimension mismatch, expected " + std::to_string(d.jobs) + " entries");
    }
    for (std::size_t j = 0; j < d.jobs; ++j) {
      const std::string path = row_path + "[" + std::to_string(j) + "]";
      const auto& v = rows[i][j];
      if (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0) {
        throw ParseError(path + ": negative utility");
      }
      d.utilities.push_back(as_count(v, path));
    }
  }

  const auto& edges = field(doc, "conflict_edges");
  if (!edges.is_array()) throw ParseError("conflict_edges: expected an array of pairs");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "conflict_edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) throw ParseError(path + ": expected a pair");
    d.conflict_edges.emplace_back(as_count(edges[i][0], path), as_count(edges[i][1], path));
  }
  return Instance(std::move(d));
}

Instance parse_instance(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("$: malformed document: ") + e.what());
  }
  return instance_from_json(doc);
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["variant"] = inst.complete() ? "complete" : "partial";
  if (auto s = inst.size_bound()) {
    doc["size_bound"] = *s;
  } else {
    doc["size_bound"] = nullptr;
  }
  doc["n_agents"] = inst.agents();
  doc["n_jobs"] = inst.jobs();
  Json rows = Json::array();
  for (std::size_t i = 0; i < inst.agents(); ++i) {
    auto row = inst.utility_row(i);
    rows.push_back(Json(std::vector<Value>(row.begin(), row.end())));
  }
  doc["utilities"] = std::move(rows);
  Json edges = Json::array();
  for (auto [u, v] : inst.conflict_edges()) edges.push_back(Json::array({u, v}));
  doc["conflict_edges"] = std::move(edges);
  doc["eta"] = inst.eta();
  return doc;
}

std::string write_instance(const Instance& inst) { return instance_to_json(inst).dump(); }

Assignment assignment_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("assignment: expected an object");
  Assignment a;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string path = "assignment." + it.key();
    std::size_t job = 0;
    try {
      std::size_t used = 0;
      job = std::stoull(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(path + ": job key must be a non-negative integer");
    }
    a.assign(job, as_count(it.value(), path));
  }
  return a;
}

Json assignment_to_json(const Assignment& a) {
  Json out = Json::object();
  for (auto [job, agent] : a.entries()) out[std::to_string(job)] = agent;
  return out;
}

Json result_to_json(const SolveResult& r) {
  Json doc;
  doc["answer"] = r.is_yes() ? "yes" : "no";
  if (r.is_yes() && r.witness) doc["assignment"] = assignment_to_json(*r.witness);
  return doc;
}

std::string write_result(const SolveResult& r) { return result_to_json(r).dump(); }

SolveResult parse_result(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("$: malformed document: ") + e.what());
  }
  const auto& answer = field(doc, "answer");
  if (answer == "no") return SolveResult::no();
  if (answer != "yes") throw ParseError("answer: expected \"yes\" or \"no\"");
  return SolveResult::yes(assignment_from_json(field(doc, "assignment")));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

}  // namespace cffa

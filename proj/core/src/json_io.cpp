#include "kgc/json_io.hpp"

#include <stdexcept>

namespace kgc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

int read_int(const json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

json graph_to_json(const AerialGraph& g) {
  json deb = json::array();
  for (int v = 0; v < g.size(); ++v) {
    json list = json::array();
    for (Vertex t : g.deb(v)) list.push_back(t + 1);
    deb.push_back(std::move(list));
  }
  return json{{"n", g.size()}, {"deb", std::move(deb)}};
}

AerialGraph graph_from_json(const json& j) {
  if (!j.is_object()) fail("graph must be a JSON object");
  const int n = read_int(j, "n");
  if (n < 1) fail("graph vertex count must be positive");
  if (!j.contains("deb") || !j.at("deb").is_array()) fail("graph needs a 'deb' array");
  const auto& deb = j.at("deb");
  if (static_cast<int>(deb.size()) != n) {
    fail("graph 'deb' has " + std::to_string(deb.size()) + " lists but n = " + std::to_string(n));
  }
  std::vector<std::vector<Vertex>> lists;
  for (const auto& list : deb) {
    if (!list.is_array()) fail("every deb entry must be an array of targets");
    std::vector<Vertex> targets;
    for (const auto& t : list) {
      if (!t.is_number_integer()) fail("arrow targets must be integers");
      const int target = t.get<int>();
      if (target < 1 || target > n) fail("arrow target " + std::to_string(target) + " outside 1.." + std::to_string(n));
      targets.push_back(target - 1);
    }
    lists.push_back(std::move(targets));
  }
  return AerialGraph(std::move(lists));
}

json sum_to_json(const GraphSum& s) {
  json terms = json::array();
  for (const auto& [g, c] : s.terms()) {
    terms.push_back(json{{"coeff", format_coefficient(c)}, {"graph", graph_to_json(g)}});
  }
  return json{{"n", s.vertex_count()}, {"terms", std::move(terms)}};
}

GraphSum sum_from_json(const json& j) {
  if (!j.is_object()) fail("sum must be a JSON object");
  if (!j.contains("terms") || !j.at("terms").is_array()) fail("sum needs a 'terms' array");
  const auto& terms = j.at("terms");
  int n = -1;
  if (j.contains("n")) n = read_int(j, "n");
  std::vector<std::pair<AerialGraph, Coefficient>> parsed;
  for (const auto& term : terms) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("graph")) {
      fail("every term needs 'coeff' and 'graph'");
    }
    const auto& coeff = term.at("coeff");
    Coefficient c;
    if (coeff.is_string()) {
      c = parse_coefficient(coeff.get<std::string>());
    } else if (coeff.is_number_integer()) {
      c = Coefficient(coeff.get<long>());
    } else {
      fail("coefficients must be strings like \"p/q\" or integers");
    }
    AerialGraph g = graph_from_json(term.at("graph"));
    if (n < 0) n = g.size();
    if (g.size() != n) {
      fail("sum mixes vertex counts " + std::to_string(n) + " and " + std::to_string(g.size()));
    }
    parsed.emplace_back(std::move(g), c);
  }
  if (n < 0) fail("empty sum needs an explicit 'n'");
  GraphSum s(n);
  for (const auto& [g, c] : parsed) s.add_term(g, c);
  return s;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace kgc

#ifndef KGC_JSON_IO_HPP
#define KGC_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "kgc/graph.hpp"
#include "kgc/graph_sum.hpp"

namespace kgc {

/*
 * JSON surface. Vertices are 1-based here:
 *
 *   graph: {"n": 3, "deb": [[2], [3], [1]]}
 *   sum:   {"n": 3, "terms": [{"coeff": "3/1", "graph": <graph>}, ...]}
 *
 * "n" on a sum is optional when the sum has at least one term; it is always
 * written so that empty sums keep their vertex count.
 *
 * Every reader throws std::invalid_argument with a readable message on
 * malformed input.
 */

nlohmann::json graph_to_json(const AerialGraph& g);
AerialGraph graph_from_json(const nlohmann::json& j);

nlohmann::json sum_to_json(const GraphSum& s);
GraphSum sum_from_json(const nlohmann::json& j);

/// Parses text and reports syntax errors as std::invalid_argument.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace kgc

#endif  // KGC_JSON_IO_HPP

#pragma once

// JSON encodings shared by the graph, planner and CLI layers.
// Indices are 1-based, Weyl elements are reduced words, rationals are "p/q".

#include "twinv/twist.hpp"

#include <json.hpp>

namespace twinv {

using Json = nlohmann::ordered_json;

Json to_json(LeviSubset s);
Json to_json(const WeylElement& w);
Json to_json(const Vertex& v);
Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);

LeviSubset levi_from_json(const Json& j, int rank);
WeylElement weyl_from_json(const RootSystemPtr& rs, const Json& j);
RationalVector vector_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
/// Validates the vertex invariants; throws InputError.
Vertex vertex_from_json(const DiagramInvolution& theta, const Json& j);

/// Parses "1,3" (1-based, empty = none) into a Levi subset; throws InputError.
LeviSubset parse_levi(const std::string& text, int rank);
/// Parses "1,2,1" (1-based, empty = identity) into a Weyl element; throws InputError.
WeylElement parse_word(const RootSystemPtr& rs, const std::string& text);

}  // namespace twinv

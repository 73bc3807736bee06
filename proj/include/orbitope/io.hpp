#pragma once

#include "orbitope/elab2.hpp"
#include "orbitope/orbit.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace orbitope {

using Json = nlohmann::ordered_json;

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

/// Rational from a JSON string ("-3/7") or integer.
Rational rational_from_json(const Json& j);
MatrixQ matrix_from_json(const Json& rows, Index expected_rows, Index expected_cols);

/// {"dim": d, "generators": [matrix or "(1 2 3)", ...]}, closed into a group.
/// A cycle string stands for its permutation matrix e_i -> e_p(i).
MatrixGroup group_from_json(const Json& j, std::size_t max_order = 10000);
/// {"dim": d, "columns": [[...], ...]} as a d x n matrix.
MatrixQ family_from_json(const Json& j);
/// "2,1" or "1/2, -3".
VectorQ parse_point(std::string_view text);
/// Edge list ("u v" per line, '#' comments) or JSON {"n": ..., "edges": [[u, v], ...]}.
Graph parse_graph(std::string_view text);
/// Rows of '0'/'1' characters; blank lines, spaces and '#' comments ignored.
GF2Matrix parse_gf2_matrix(std::string_view text);

Json to_json(const Rational& q);
Json to_json(const MatrixQ& m);
Json to_json(const VectorQ& v);
Json to_json(const Permutation& p);
Json to_json(const Graph& g);

/// FNV-1a, 64 bit, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace orbitope

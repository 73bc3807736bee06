#include "orbitope/io.hpp"

#include "orbitope/error.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace orbitope {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational as a string or integer, got " + j.dump());
}

MatrixQ matrix_from_json(const Json& rows, Index expected_rows, Index expected_cols) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != expected_rows)
    throw ParseError("matrix must be an array of " + std::to_string(expected_rows) + " rows");
  MatrixQ m(expected_rows, expected_cols);
  for (Index i = 0; i < expected_rows; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != expected_cols)
      throw ParseError("matrix row must have " + std::to_string(expected_cols) + " entries");
    for (Index k = 0; k < expected_cols; ++k) m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

namespace {

int dim_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("expected an object with an integer \"dim\"");
  const int d = j["dim"].get<int>();
  if (d < 0) throw ParseError("\"dim\" must be non-negative");
  return d;
}

}  // namespace

MatrixGroup group_from_json(const Json& j, std::size_t max_order) {
  const int d = dim_from_json(j);
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError("group needs a \"generators\" array");
  std::vector<MatrixQ> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) {
      gens.push_back(matrix_from_json(g, d, d));
      continue;
    }
    const Permutation p = Permutation::from_cycles(g.get<std::string>(), d);
    MatrixQ m = MatrixQ::Zero(d, d);
    for (int i = 0; i < d; ++i) m(p(i), i) = 1;
    gens.push_back(std::move(m));
  }
  return MatrixGroup::close(d, gens, max_order);
}

MatrixQ family_from_json(const Json& j) {
  const int d = dim_from_json(j);
  if (!j.contains("columns") || !j["columns"].is_array()) throw ParseError("family needs a \"columns\" array");
  const auto& cols = j["columns"];
  MatrixQ m(d, static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (!cols[k].is_array() || static_cast<int>(cols[k].size()) != d)
      throw ParseError("every column needs " + std::to_string(d) + " entries");
    for (int i = 0; i < d; ++i) m(i, static_cast<Index>(k)) = rational_from_json(cols[k][static_cast<std::size_t>(i)]);
  }
  return m;
}

VectorQ parse_point(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  bool blank = true;
  for (char c : text) blank = blank && std::isspace(static_cast<unsigned char>(c));
  if (!blank) {
    while (true) {
      const auto comma = text.find(',', start);
      values.push_back(parse_rational(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  VectorQ v(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Index>(i)) = values[i];
  return v;
}

Graph parse_graph(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer() || !j.contains("edges") || !j["edges"].is_array())
      throw ParseError("graph JSON needs integer \"n\" and an \"edges\" array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError("each edge must be a pair of integers");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
      return Graph(j["n"].get<int>(), std::move(edges));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u = 0;
    long long v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) throw ParseError("edge-list line must hold two vertex indices: '" + line + "'");
    if (u < 0 || v < 0 || u > 100000 || v > 100000) throw ParseError("vertex index out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    n = std::max(n, static_cast<int>(std::max(u, v)) + 1);
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

GF2Matrix parse_gf2_matrix(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string row;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) row.push_back(c);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return GF2Matrix::from_strings(rows);
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const VectorQ& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json to_json(const Permutation& p) { return p.images(); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace orbitope

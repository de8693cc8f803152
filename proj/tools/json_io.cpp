#include "json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace wps::io {

json to_json(const Integer& x) { return to_string(x); }

json to_json(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

json to_json(const WeightsVector& q) { return to_json(q.values()); }

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

json to_json(const FanMatrix& f) {
  json cols = json::array();
  for (std::size_t j = 0; j < f.v.cols(); ++j) cols.push_back(to_json(f.v.col(j)));
  return {{"n", f.dim()}, {"columns", cols}, {"weights", to_json(f.weights)}};
}

json to_json(const LatticeSimplex& s) {
  json pts = json::array();
  for (const auto& p : s.vertices()) pts.push_back(to_json(p));
  return {{"vertices", pts}};
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (j.is_number_integer()) return parse_integer(j.dump());
  throw InputError("expected an integer (string or number), got " + j.dump());
}

std::vector<Integer> integers_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers, got " + j.dump());
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

namespace {

std::vector<std::vector<Integer>> vectors_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw InputError(std::string("expected a nonempty array of ") + what);
  std::vector<std::vector<Integer>> out;
  for (const auto& r : j) out.push_back(integers_from_json(r));
  for (const auto& r : out)
    if (r.size() != out[0].size()) throw InputError(std::string("ragged array of ") + what);
  return out;
}

}  // namespace

IntMatrix matrix_from_rows(const json& rows) {
  auto v = vectors_from_json(rows, "rows");
  IntMatrix m(v.size(), v[0].size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v[i].size(); ++j) m(i, j) = v[i][j];
  return m;
}

IntMatrix fan_matrix_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("columns")) throw InputError("fan object needs a \"columns\" field");
    return IntMatrix::from_columns(vectors_from_json(j.at("columns"), "columns"));
  }
  return matrix_from_rows(j);
}

LatticeSimplex simplex_from_json(const json& j) {
  const json& pts = j.is_object() ? (j.contains("vertices") ? j.at("vertices") : throw InputError("simplex object needs a \"vertices\" field")) : j;
  try {
    return LatticeSimplex(vectors_from_json(pts, "vertices"));
  } catch (const DimensionError& e) {
    throw InputError(e.what());
  }
}

json parse_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

}  // namespace wps::io

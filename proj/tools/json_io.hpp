#pragma once

#include <wps/fan.hpp>
#include <wps/matrix.hpp>
#include <wps/polytope.hpp>
#include <wps/weights.hpp>

#include <json.hpp>

#include <stdexcept>
#include <vector>

namespace wps::io {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Integer& x);
json to_json(const std::vector<Integer>& xs);
json to_json(const WeightsVector& q);
json to_json(const IntMatrix& a);  // array of rows
json to_json(const FanMatrix& f);
json to_json(const LatticeSimplex& s);

// Integers may be given as decimal strings or JSON integers.
Integer integer_from_json(const json& j);
std::vector<Integer> integers_from_json(const json& j);
IntMatrix matrix_from_rows(const json& rows);
// {"columns": [...]} or a bare array of rows.
IntMatrix fan_matrix_from_json(const json& j);
// {"vertices": [...]} or a bare array of points.
LatticeSimplex simplex_from_json(const json& j);

json parse_file(const std::string& path);  // "-" reads standard input

}  // namespace wps::io

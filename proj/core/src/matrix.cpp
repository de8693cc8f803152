#include "wps/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace wps {

IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1) throw DimensionError("matrix entry is not an integer: " + to_string(a(i, j)));
      r(i, j) = a(i, j).get_num();
    }
  return r;
}

std::string to_string(const IntMatrix& a) {
  std::vector<std::size_t> width(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) width[j] = std::max(width[j], to_string(a(i, j)).size());
  std::ostringstream out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto s = to_string(a(i, j));
      out << (j ? " " : "") << std::string(width[j] - s.size(), ' ') << s;
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace wps

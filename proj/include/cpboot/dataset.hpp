#pragma once

#include <vector>

namespace cpboot {

// Paired observations (z_i, y_i); vectors always have equal length.
struct DataSet {
  std::vector<double> z;
  std::vector<double> y;

  std::size_t size() const { return z.size(); }
};

}  // namespace cpboot

#pragma once

#include <numeric>
#include <vector>

#include "popwilf/core.hpp"

namespace popwilf::testdata {

// Transversal of (8,8,8,6,6,6,4,4) used across the occurrence tests.
inline Transversal wide_staircase() {
  return Transversal(YoungDiagram({8, 8, 8, 6, 6, 6, 4, 4}), {8, 4, 7, 2, 5, 6, 1, 3});
}

// The 10-row shape the map examples run on, with the transversal that phi
// sends through [3,5,10,9,7,8,6,1,4,2] to [7,8,10,9,3,5,6,1,4,2] in two steps.
inline YoungDiagram map_shape() { return YoungDiagram({10, 10, 10, 10, 8, 8, 6, 6, 5, 5}); }

inline Transversal map_input() { return Transversal(map_shape(), {1, 5, 10, 9, 7, 8, 6, 3, 2, 4}); }

inline std::vector<int> map_mid_cols() { return {3, 5, 10, 9, 7, 8, 6, 1, 4, 2}; }
inline std::vector<int> map_final_cols() { return {7, 8, 10, 9, 3, 5, 6, 1, 4, 2}; }

inline Transversal square(std::vector<int> cols) {
  const int n = static_cast<int>(cols.size());
  return Transversal(YoungDiagram(std::vector<int>(n, n)), std::move(cols));
}

inline Transversal identity(int n) {
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 1);
  return square(std::move(cols));
}

inline const std::vector<std::uint64_t>& catalan() {
  static const std::vector<std::uint64_t> c{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  return c;
}

}  // namespace popwilf::testdata

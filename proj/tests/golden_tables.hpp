#pragma once

// Expanded coefficient rows of R_n(x) for 1 <= n <= 20, transcribed from the
// published tables; row k holds c_n(0), ..., c_n(n-1). The T_n rows are the
// absolute values, which the published T table confirms entry by entry.
#include <cstdint>
#include <vector>

inline const std::vector<std::vector<std::int64_t>>& golden_r_rows() {
  static const std::vector<std::vector<std::int64_t>> rows = {
      {1},
      {1, -1},
      {2, -1, -1},
      {2, 0, -2, 0},
      {4, -1, -1, -1, -1},
      {2, 1, -1, -2, -1, 1},
      {6, -1, -1, -1, -1, -1, -1},
      {4, 0, 0, 0, -4, 0, 0, 0},
      {6, 0, 0, -3, 0, 0, -3, 0, 0},
      {4, 1, -1, 1, -1, -4, -1, 1, -1, 1},
      {10, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1},
      {4, 0, 2, 0, -2, 0, -4, 0, -2, 0, 2, 0},
      {12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1},
      {6, 1, -1, 1, -1, 1, -1, -6, -1, 1, -1, 1, -1, 1},
      {8, 1, 1, -2, 1, -4, -2, 1, 1, -2, -4, 1, -2, 1, 1},
      {8, 0, 0, 0, 0, 0, 0, 0, -8, 0, 0, 0, 0, 0, 0, 0},
      {16, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1},
      {6, 0, 0, 3, 0, 0, -3, 0, 0, -6, 0, 0, -3, 0, 0, 3, 0, 0},
      {18, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
       -1},
      {8, 0, 2, 0, -2, 0, 2, 0, -2, 0, -8, 0, -2, 0, 2, 0, -2, 0, 2, 0},
  };
  return rows;
}

inline std::vector<std::vector<std::int64_t>> golden_t_rows() {
  auto rows = golden_r_rows();
  for (auto& row : rows)
    for (auto& v : row)
      if (v < 0) v = -v;
  return rows;
}

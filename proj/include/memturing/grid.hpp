#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "memturing/params.hpp"

namespace memturing::fdm {

/// Two-segment cell-centred grid. Segment l covers [0, x_m] with N_l + 1
/// cells, segment r covers [x_m, L] with N_r + 1 cells; x_m is the right edge
/// of the last left cell and the left edge of the first right cell, so each
/// side carries its own membrane trace.
struct Grid {
  int N_l = 0;
  int N_r = 0;
  double dx = 0.0;
  double x_m = 0.0;
  double L = 0.0;
  std::vector<double> centers;

  std::size_t size() const { return static_cast<std::size_t>(N_l + N_r + 2); }
  std::size_t left_size() const { return static_cast<std::size_t>(N_l + 1); }
  /// Global indices of the two cells adjacent to the membrane.
  std::pair<std::size_t, std::size_t> membrane_index() const {
    return {static_cast<std::size_t>(N_l), static_cast<std::size_t>(N_l + 1)};
  }
  bool is_left(std::size_t i) const { return i <= static_cast<std::size_t>(N_l); }
};

Grid build_grid(const ModelParams& p);

}  // namespace memturing::fdm

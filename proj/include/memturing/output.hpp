#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "memturing/grid.hpp"

namespace memturing::cli {

/// `x,side,u,v` rows: left cell centres, the left membrane trace at x_m, the
/// right membrane trace at x_m, then the right cell centres.
std::string profile_csv(const fdm::Grid& grid, std::span<const double> U, std::span<const double> V);

/// Two stacked panels (u, v), one polyline per side, membrane as a vertical rule.
std::string profile_svg(const fdm::Grid& grid, std::span<const double> U, std::span<const double> V,
                        std::string_view title);

/// Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view text);
void ensure_directory(const std::filesystem::path& dir);

/// %.12g
std::string fmt(double value);

}  // namespace memturing::cli

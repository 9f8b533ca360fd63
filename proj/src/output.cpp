#include "memturing/output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "memturing/errors.hpp"

namespace memturing::cli {

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string profile_csv(const fdm::Grid& grid, std::span<const double> U, std::span<const double> V) {
  std::string out = "x,side,u,v\n";
  const auto row = [&](double x, char side, std::size_t i) {
    out += fmt(x);
    out += ',';
    out += side;
    out += ',';
    out += fmt(U[i]);
    out += ',';
    out += fmt(V[i]);
    out += '\n';
  };
  const auto [ml, mr] = grid.membrane_index();
  for (std::size_t i = 0; i <= ml; ++i) row(grid.centers[i], 'l', i);
  // Membrane traces: the adjacent cell values carry them in this scheme.
  row(grid.x_m, 'l', ml);
  row(grid.x_m, 'r', mr);
  for (std::size_t i = mr; i < grid.size(); ++i) row(grid.centers[i], 'r', i);
  return out;
}

namespace {

void panel(std::ostringstream& os, const fdm::Grid& grid, std::span<const double> Y, double top,
           double height, double width, const char* label, const char* colour) {
  double lo = *std::min_element(Y.begin(), Y.end());
  double hi = *std::max_element(Y.begin(), Y.end());
  if (hi - lo < 1e-12) {
    lo -= 0.5e-3;
    hi += 0.5e-3;
  }
  const double margin = 40.0;
  const auto px = [&](double x) { return margin + (width - 2 * margin) * x / grid.L; };
  const auto py = [&](double y) { return top + height - (height * (y - lo) / (hi - lo)); };

  os << "<rect x=\"" << margin << "\" y=\"" << top << "\" width=\"" << width - 2 * margin
     << "\" height=\"" << height << "\" fill=\"none\" stroke=\"#999\"/>\n";
  os << "<text x=\"4\" y=\"" << top + 14 << "\" font-size=\"12\">" << label << "</text>\n";
  os << "<text x=\"4\" y=\"" << top + height << "\" font-size=\"9\">" << fmt(lo) << "</text>\n";
  os << "<text x=\"4\" y=\"" << top + 26 << "\" font-size=\"9\">" << fmt(hi) << "</text>\n";
  os << "<line x1=\"" << px(grid.x_m) << "\" y1=\"" << top << "\" x2=\"" << px(grid.x_m)
     << "\" y2=\"" << top + height << "\" stroke=\"#000\" stroke-dasharray=\"4 3\"/>\n";

  const auto polyline = [&](std::size_t from, std::size_t to) {
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = from; i < to; ++i) {
      os << fmt(px(grid.centers[i])) << ',' << fmt(py(Y[i])) << ' ';
    }
    os << "\"/>\n";
  };
  polyline(0, grid.left_size());
  polyline(grid.left_size(), grid.size());
}

}  // namespace

std::string profile_svg(const fdm::Grid& grid, std::span<const double> U, std::span<const double> V,
                        std::string_view title) {
  const double width = 640;
  const double height = 200;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << 2 * height + 80 << "\">\n";
  os << "<text x=\"40\" y=\"20\" font-size=\"14\">" << title << "</text>\n";
  panel(os, grid, U, 30, height, width, "u", "#c0392b");
  panel(os, grid, V, 60 + height, height, width, "v", "#2563eb");
  os << "</svg>\n";
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create directory '" + dir.string() + "'" +
                  (ec ? ": " + ec.message() : std::string()));
  }
}

}  // namespace memturing::cli

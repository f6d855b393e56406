#include <algorithm>
#include <sstream>

#include "pinclass/pimap.hpp"

namespace pinclass {

namespace {

constexpr int kCell = 28;
constexpr int kMargin = 20;

int px(int rank) { return kMargin + kCell / 2 + rank * kCell; }

}  // namespace

std::string render_svg(const PinDiagram& d) {
  const int n = static_cast<int>(d.point_count());
  const int side = 2 * kMargin + n * kCell;
  auto sy = [&](int rank) { return side - px(rank); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side << "\" viewBox=\"0 0 "
      << side << ' ' << side << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const int ox = px(d.x[0]);
  const int oy = sy(d.y[0]);
  out << "<g stroke=\"#999\" stroke-dasharray=\"4 3\">\n"
      << "<line x1=\"" << ox << "\" y1=\"" << kMargin / 2 << "\" x2=\"" << ox << "\" y2=\"" << side - kMargin / 2 << "\"/>\n"
      << "<line x1=\"" << kMargin / 2 << "\" y1=\"" << oy << "\" x2=\"" << side - kMargin / 2 << "\" y2=\"" << oy << "\"/>\n"
      << "</g>\n";

  // Each pin runs from its point back across the bounding box of the earlier points.
  out << "<g stroke=\"#c33\" stroke-width=\"1.5\">\n";
  int xlo = d.x[0], xhi = d.x[0], ylo = d.y[0], yhi = d.y[0];
  for (int k = 1; k < n; ++k) {
    const int kx = d.x[k], ky = d.y[k];
    const bool horizontal_move = kx < xlo || kx > xhi;
    const bool vertical_move = ky < ylo || ky > yhi;
    if (k >= 2) {
      if (vertical_move && !horizontal_move) {
        const int far = ky > yhi ? ylo : yhi;
        out << "<line x1=\"" << px(kx) << "\" y1=\"" << sy(ky) << "\" x2=\"" << px(kx) << "\" y2=\"" << sy(far) << "\"/>\n";
      } else if (horizontal_move && !vertical_move) {
        const int far = kx > xhi ? xlo : xhi;
        out << "<line x1=\"" << px(kx) << "\" y1=\"" << sy(ky) << "\" x2=\"" << px(far) << "\" y2=\"" << sy(ky) << "\"/>\n";
      }
    }
    xlo = std::min(xlo, kx);
    xhi = std::max(xhi, kx);
    ylo = std::min(ylo, ky);
    yhi = std::max(yhi, ky);
  }
  out << "</g>\n";

  for (int k = 0; k < n; ++k) {
    const int cx = px(d.x[k]), cy = sy(d.y[k]);
    if (k == 0)
      out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    else
      out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"black\"/>\n";
    out << "<text x=\"" << cx + 6 << "\" y=\"" << cy - 6 << "\" font-size=\"9\" font-family=\"sans-serif\">p" << k
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const PinDiagram& d) {
  const int n = static_cast<int>(d.point_count());
  std::vector<std::string> grid(n, std::string(n, '.'));
  for (int r = 0; r < n; ++r) grid[r][d.x[0]] = '|';
  std::fill(grid[n - 1 - d.y[0]].begin(), grid[n - 1 - d.y[0]].end(), '-');
  for (int k = 0; k < n; ++k) grid[n - 1 - d.y[k]][d.x[k]] = k == 0 ? 'o' : '*';
  std::string out;
  for (const auto& row : grid) out += row + "\n";
  return out;
}

}  // namespace pinclass

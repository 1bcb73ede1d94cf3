#include "geotree/svg.hpp"

#include <algorithm>
#include <sstream>

namespace geotree {

std::string render_svg(const PointSet& s, const Tree& t, std::span<const int> assignment,
                       const EdgeSet& forbidden) {
  constexpr double kCanvas = 1000.0;
  constexpr double kMargin = 60.0;
  std::int64_t min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (s.size() > 0) {
    min_x = max_x = s[0].x;
    min_y = max_y = s[0].y;
  }
  for (const Point& p : s.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = static_cast<double>(std::max<std::int64_t>({max_x - min_x, max_y - min_y, 1}));
  const double scale = (kCanvas - 2 * kMargin) / span;
  auto sx = [&](int i) { return kMargin + static_cast<double>(s[i].x - min_x) * scale; };
  // SVG's y axis points down.
  auto sy = [&](int i) { return kCanvas - kMargin - static_cast<double>(s[i].y - min_y) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n"
      << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  if (s.size() >= 3) {
    out << "<polygon fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\" points=\"";
    for (int i : convex_hull(s)) out << sx(i) << ',' << sy(i) << ' ';
    out << "\"/>\n";
  }
  auto line = [&](Edge e, const char* style) {
    out << "<line x1=\"" << sx(e.a) << "\" y1=\"" << sy(e.a) << "\" x2=\"" << sx(e.b)
        << "\" y2=\"" << sy(e.b) << "\" " << style << "/>\n";
  };
  if (!assignment.empty()) {
    for (auto [u, v] : t.edges())
      line(Edge(assignment[u], assignment[v]), "stroke=\"black\" stroke-width=\"3\"");
  }
  for (const Edge& e : forbidden)
    line(e, "stroke=\"#d62728\" stroke-width=\"2\" stroke-dasharray=\"10,8\"");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int p = static_cast<int>(i);
    out << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"7\" fill=\"#1f77b4\"/>\n"
        << "<text x=\"" << sx(p) + 10 << "\" y=\"" << sy(p) - 10
        << "\" font-family=\"sans-serif\" font-size=\"18\">" << p << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace geotree

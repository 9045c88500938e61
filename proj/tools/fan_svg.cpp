#include "fan_svg.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace dualbraid {

namespace {

// Euclidean embedding of the simple-root basis: columns of a matrix E with
// E^T E = B, built by Cholesky. Plot-only; all report data stays exact.
std::vector<std::vector<double>> embedding(const CoxeterGroup& g) {
  const int n = g.rank();
  std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b[i][j] = g.bilinear_form().at(i, j).get_d();
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = b[i][j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      l[i][j] = (i == j) ? std::sqrt(s) : s / l[j][j];
    }
  // alpha_i embeds as the i-th row of L
  return l;
}

std::vector<double> embed_root(const std::vector<std::vector<double>>& l,
                               const std::vector<long>& root) {
  const int n = static_cast<int>(l.size());
  std::vector<double> v(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) v[k] += root[i] * l[i][k];
  return v;
}

std::string pt(double x, double y) {
  std::ostringstream ss;
  ss.precision(5);
  ss << std::fixed << x << "," << y;
  return ss.str();
}

}  // namespace

void emit_fan_svg(const GroupContext& ctx, const std::string& path) {
  const CoxeterGroup& g = *ctx.g;
  const int n = g.rank();
  require(n <= 3, "fan plots support rank <= 3 only");
  const double W = 560, H = 560, cx = W / 2, cy = H / 2, R = 230;
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='"
      << H << "' viewBox='0 0 " << W << " " << H << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n";
  auto l = embedding(g);

  if (n <= 2) {
    // rays at the positive roots, sectors = facet cones
    std::vector<std::pair<double, int>> angles;  // (angle, reflection)
    for (int t = 0; t < g.num_reflections(); ++t) {
      auto v = embed_root(l, g.root(t));
      double a = (n == 1) ? 0.0 : std::atan2(v[1], v[0]);
      angles.emplace_back(a, t);
    }
    std::sort(angles.begin(), angles.end());
    auto ray_end = [&](double a) {
      return std::make_pair(cx + R * std::cos(-a), cy + R * std::sin(-a));
    };
    const char* fills[2] = {"#dce9f7", "#f7e8dc"};
    if (n == 2) {
      int shade = 0;
      for (int fid : ctx.C->facet_ids()) {
        const auto& verts = ctx.C->face(fid).verts;
        auto v0 = embed_root(l, g.root(verts[0]));
        auto v1 = embed_root(l, g.root(verts[1]));
        auto [x0, y0] = ray_end(std::atan2(v0[1], v0[0]));
        auto [x1, y1] = ray_end(std::atan2(v1[1], v1[0]));
        svg << "<path d='M " << pt(cx, cy) << " L " << pt(x0, y0) << " L "
            << pt(x1, y1) << " Z' fill='" << fills[shade++ % 2]
            << "' stroke='none'/>\n";
      }
    }
    for (auto [a, t] : angles) {
      auto [x, y] = ray_end(a);
      svg << "<line x1='" << cx << "' y1='" << cy << "' x2='" << x << "' y2='"
          << y << "' stroke='#333' stroke-width='1.5'/>\n";
      svg << "<text x='" << cx + (x - cx) * 1.08 << "' y='"
          << cy + (y - cy) * 1.08 << "' font-size='12' text-anchor='middle'>"
          << reflection_name(g, t) << "</text>\n";
    }
  } else {
    // rank 3: project unit root directions onto the plane orthogonal to the
    // barycentre of the simple-root directions
    std::vector<double> center(3, 0.0);
    for (int i = 0; i < 3; ++i) {
      std::vector<long> a(3, 0);
      a[i] = 1;
      auto v = embed_root(l, a);
      double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      for (int k = 0; k < 3; ++k) center[k] += v[k] / norm;
    }
    double cn = std::sqrt(center[0] * center[0] + center[1] * center[1] +
                          center[2] * center[2]);
    for (auto& x : center) x /= cn;
    // orthonormal basis of the projection plane
    std::vector<double> e1 = {center[1] - center[2], center[2] - center[0],
                              center[0] - center[1]};
    double e1n = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
    for (auto& x : e1) x /= e1n;
    std::vector<double> e2 = {center[1] * e1[2] - center[2] * e1[1],
                              center[2] * e1[0] - center[0] * e1[2],
                              center[0] * e1[1] - center[1] * e1[0]};
    auto project = [&](int t) {
      auto v = embed_root(l, g.root(t));
      double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      double px = 0, py = 0;
      for (int k = 0; k < 3; ++k) {
        px += v[k] / norm * e1[k];
        py += v[k] / norm * e2[k];
      }
      return std::make_pair(cx + R * 1.35 * px, cy - R * 1.35 * py);
    };
    svg << "<circle cx='" << cx << "' cy='" << cy << "' r='" << R
        << "' fill='none' stroke='#bbb' stroke-dasharray='4 3'/>\n";
    for (int fid : ctx.C->facet_ids()) {
      const auto& verts = ctx.C->face(fid).verts;
      auto [x0, y0] = project(verts[0]);
      auto [x1, y1] = project(verts[1]);
      auto [x2, y2] = project(verts[2]);
      svg << "<path d='M " << pt(x0, y0) << " L " << pt(x1, y1) << " L "
          << pt(x2, y2) << " Z' fill='#dce9f7' fill-opacity='0.45' "
          << "stroke='#369' stroke-width='1'/>\n";
    }
    for (int t = 0; t < g.num_reflections(); ++t) {
      auto [x, y] = project(t);
      svg << "<circle cx='" << x << "' cy='" << y
          << "' r='3' fill='#a33'/>\n"
          << "<text x='" << x + 6 << "' y='" << y - 6
          << "' font-size='11'>" << reflection_name(g, t) << "</text>\n";
    }
  }
  svg << "</svg>\n";
  std::ofstream out(path);
  require(out.good(), "cannot open SVG output path: " + path);
  out << svg.str();
}

}  // namespace dualbraid

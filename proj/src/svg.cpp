#include "minkcell/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace minkcell {
namespace {

const char* kLayers[] = {"body", "cell", "lattice"};

std::string fmt(double v) {
  char buf[64];
  if (v == 0.0) v = 0.0;  // normalize -0
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

void SvgScene::add_polygon(const std::string& layer, const std::vector<Vec>& pts,
                           const std::string& stroke, const std::string& fill) {
  elements_.push_back({layer, "polygon", stroke, fill, pts, 0.0});
}

void SvgScene::add_polyline(const std::string& layer, const std::vector<Vec>& pts,
                            const std::string& stroke) {
  elements_.push_back({layer, "polyline", stroke, "none", pts, 0.0});
}

void SvgScene::add_point(const std::string& layer, const Vec& p, double radius,
                         const std::string& fill) {
  elements_.push_back({layer, "circle", "none", fill, {p}, radius});
}

std::string SvgScene::render() const {
  double lo_x = -1.0, lo_y = -1.0, hi_x = 1.0, hi_y = 1.0;
  bool any = false;
  for (const Element& e : elements_)
    for (const Vec& p : e.pts) {
      if (!any) {
        lo_x = hi_x = p.c[0];
        lo_y = hi_y = p.c[1];
        any = true;
      }
      lo_x = std::min(lo_x, p.c[0] - e.radius);
      hi_x = std::max(hi_x, p.c[0] + e.radius);
      lo_y = std::min(lo_y, p.c[1] - e.radius);
      hi_y = std::max(hi_y, p.c[1] + e.radius);
    }
  const double cx = 0.5 * (lo_x + hi_x), cy = 0.5 * (lo_y + hi_y);
  const double half = 0.55 * std::max({hi_x - lo_x, hi_y - lo_y, 1e-6});  // 1.1x bbox

  // y flips so the scene reads with the usual orientation
  auto px = [&](const Vec& p) { return fmt((p.c[0] - cx) + half); };
  auto py = [&](const Vec& p) { return fmt(half - (p.c[1] - cy)); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt(2.0 * half) + " " +
         fmt(2.0 * half) + "\">\n";
  for (const char* layer : kLayers) {
    out += "  <g id=\"" + std::string(layer) + "\">\n";
    for (const Element& e : elements_) {
      if (e.layer != layer) continue;
      if (e.kind == "circle") {
        out += "    <circle cx=\"" + px(e.pts[0]) + "\" cy=\"" + py(e.pts[0]) + "\" r=\"" +
               fmt(e.radius) + "\" fill=\"" + e.fill + "\"/>\n";
        continue;
      }
      out += "    <" + e.kind + " points=\"";
      for (size_t i = 0; i < e.pts.size(); ++i) {
        if (i) out += " ";
        out += px(e.pts[i]) + "," + py(e.pts[i]);
      }
      out += "\" stroke=\"" + e.stroke + "\" fill=\"" + e.fill + "\" stroke-width=\"" +
             fmt(half / 100.0) + "\"/>\n";
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

void SvgScene::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << render();
}

}  // namespace minkcell

#pragma once

#include <string>
#include <vector>

#include "minkcell/vec.hpp"

namespace minkcell {

// Deterministic SVG scene: fixed layer order (body, cell, lattice), fixed
// 6-decimal coordinates, viewport fitted to 1.1x the scene bounding box.
// An empty scene renders as a frame only.
class SvgScene {
 public:
  void add_polygon(const std::string& layer, const std::vector<Vec>& pts,
                   const std::string& stroke, const std::string& fill = "none");
  void add_polyline(const std::string& layer, const std::vector<Vec>& pts,
                    const std::string& stroke);
  void add_point(const std::string& layer, const Vec& p, double radius,
                 const std::string& fill);
  std::string render() const;
  void write(const std::string& path) const;

 private:
  struct Element {
    std::string layer, kind, stroke, fill;
    std::vector<Vec> pts;
    double radius = 0.0;
  };
  std::vector<Element> elements_;
};

}  // namespace minkcell

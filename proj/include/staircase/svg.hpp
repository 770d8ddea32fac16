#pragma once

#include <string>
#include <vector>

#include "staircase/convex_analysis.hpp"
#include "staircase/grid.hpp"
#include "staircase/ortho_path.hpp"
#include "staircase/rect_complex.hpp"
#include "staircase/routing.hpp"

namespace staircase {

// World-to-screen mapping flips the y axis so that +y points up on screen.
class SvgCanvas {
 public:
  explicit SvgCanvas(Box world, double pixels_per_unit = 0);

  void polygon(const std::vector<Point2>& points, const std::string& style);
  void polyline(const std::vector<Point2>& points, const std::string& style);
  void rect(const Box& box, const std::string& style);
  void dot(const Point2& p, double radius_px, const std::string& style);
  void label(const Point2& p, const std::string& text);

  std::string str() const;
  // Throws std::runtime_error when the file cannot be written.
  void save(const std::string& path) const;

 private:
  double sx(const Scalar& x) const;
  double sy(const Scalar& y) const;
  std::string coords(const std::vector<Point2>& points) const;

  Box world_;
  double scale_;
  double width_;
  double height_;
  std::vector<std::string> body_;
};

SvgCanvas draw_grid(const GridSet& grid, const OrthoPath* path = nullptr);
SvgCanvas draw_polygons(const std::vector<ConvexPolygon>& polygons, const std::vector<Point2>& marks = {});
SvgCanvas draw_complex(const RectComplex& complex);
SvgCanvas draw_scene(const Box& window, const std::vector<ConvexPolygon>& obstacles, const OrthoPath* route);
SvgCanvas draw_profiles(const StepFunction& f_plus, const StepFunction& f_minus);

}  // namespace staircase

#include "staircase/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace staircase {

namespace {

constexpr double kPad = 20;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

Box grow(Box b) {
  if (b.xmin == b.xmax) {
    b.xmin -= 1;
    b.xmax += 1;
  }
  if (b.ymin == b.ymax) {
    b.ymin -= 1;
    b.ymax += 1;
  }
  return b;
}

void include(Box& b, const Point2& p) {
  if (p.x < b.xmin) b.xmin = p.x;
  if (p.x > b.xmax) b.xmax = p.x;
  if (p.y < b.ymin) b.ymin = p.y;
  if (p.y > b.ymax) b.ymax = p.y;
}

}  // namespace

SvgCanvas::SvgCanvas(Box world, double pixels_per_unit) : world_(grow(std::move(world))) {
  const double w = Scalar(world_.xmax - world_.xmin).get_d();
  const double h = Scalar(world_.ymax - world_.ymin).get_d();
  scale_ = pixels_per_unit > 0 ? pixels_per_unit : 600.0 / std::max(w, h);
  width_ = w * scale_ + 2 * kPad;
  height_ = h * scale_ + 2 * kPad;
}

double SvgCanvas::sx(const Scalar& x) const { return kPad + Scalar(x - world_.xmin).get_d() * scale_; }
double SvgCanvas::sy(const Scalar& y) const { return kPad + Scalar(world_.ymax - y).get_d() * scale_; }

std::string SvgCanvas::coords(const std::vector<Point2>& points) const {
  std::string out;
  for (const Point2& p : points) {
    if (!out.empty()) out += ' ';
    out += fmt(sx(p.x)) + "," + fmt(sy(p.y));
  }
  return out;
}

void SvgCanvas::polygon(const std::vector<Point2>& points, const std::string& style) {
  body_.push_back("<polygon points=\"" + coords(points) + "\" style=\"" + style + "\"/>");
}

void SvgCanvas::polyline(const std::vector<Point2>& points, const std::string& style) {
  body_.push_back("<polyline points=\"" + coords(points) + "\" style=\"fill:none;" + style + "\"/>");
}

void SvgCanvas::rect(const Box& box, const std::string& style) {
  body_.push_back("<rect x=\"" + fmt(sx(box.xmin)) + "\" y=\"" + fmt(sy(box.ymax)) + "\" width=\"" +
                  fmt(Scalar(box.xmax - box.xmin).get_d() * scale_) + "\" height=\"" +
                  fmt(Scalar(box.ymax - box.ymin).get_d() * scale_) + "\" style=\"" + style + "\"/>");
}

void SvgCanvas::dot(const Point2& p, double radius_px, const std::string& style) {
  body_.push_back("<circle cx=\"" + fmt(sx(p.x)) + "\" cy=\"" + fmt(sy(p.y)) + "\" r=\"" + fmt(radius_px) +
                  "\" style=\"" + style + "\"/>");
}

void SvgCanvas::label(const Point2& p, const std::string& text) {
  body_.push_back("<text x=\"" + fmt(sx(p.x) + 4) + "\" y=\"" + fmt(sy(p.y) - 4) +
                  "\" font-size=\"11\" font-family=\"monospace\">" + text + "</text>");
}

std::string SvgCanvas::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!-- y axis flipped: world +y points up on screen -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width_) + "\" height=\"" + fmt(height_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const std::string& line : body_) out += line + "\n";
  out += "</svg>\n";
  return out;
}

void SvgCanvas::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << str();
}

SvgCanvas draw_grid(const GridSet& grid, const OrthoPath* path) {
  const Cell o = grid.origin();
  SvgCanvas canvas({Scalar(o.col), Scalar(o.row), Scalar(o.col + grid.width()), Scalar(o.row + grid.height())});
  for (const Cell& c : grid.cells()) {
    canvas.rect({Scalar(c.col), Scalar(c.row), Scalar(c.col + 1), Scalar(c.row + 1)},
                "fill:#9ecae1;stroke:#3182bd;stroke-width:1");
  }
  if (path) {
    std::vector<Point2> centers;
    for (const Point2& v : path->vertices()) centers.push_back({v.x + Scalar(1, 2), v.y + Scalar(1, 2)});
    canvas.polyline(centers, "stroke:#e6550d;stroke-width:3");
  }
  return canvas;
}

SvgCanvas draw_polygons(const std::vector<ConvexPolygon>& polygons, const std::vector<Point2>& marks) {
  Box world = polygons.front().bounds();
  for (const ConvexPolygon& p : polygons) {
    include(world, {p.bounds().xmin, p.bounds().ymin});
    include(world, {p.bounds().xmax, p.bounds().ymax});
  }
  for (const Point2& m : marks) include(world, m);
  SvgCanvas canvas(world);
  const char* fills[] = {"#c6dbef", "#fdd0a2", "#c7e9c0", "#dadaeb"};
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    canvas.polygon(polygons[i].vertices(),
                   std::string("fill:") + fills[i % 4] + ";fill-opacity:0.7;stroke:#333;stroke-width:1");
  }
  for (const Point2& m : marks) canvas.dot(m, 4, "fill:#d62728");
  return canvas;
}

SvgCanvas draw_complex(const RectComplex& complex) {
  const Rect& r0 = complex.rects().front();
  Box world{r0.xmin, r0.ymin, r0.xmax, r0.ymax};
  for (const Rect& r : complex.rects()) {
    include(world, {r.xmin, r.ymin});
    include(world, {r.xmax, r.ymax});
  }
  SvgCanvas canvas(world);
  for (const Rect& r : complex.rects()) {
    if (r.degenerate()) {
      canvas.polyline({{r.xmin, r.ymin}, {r.xmax, r.ymax}}, "stroke:#3182bd;stroke-width:3");
    } else {
      canvas.rect({r.xmin, r.ymin, r.xmax, r.ymax}, "fill:#9ecae1;fill-opacity:0.6;stroke:#3182bd");
    }
  }
  return canvas;
}

SvgCanvas draw_scene(const Box& window, const std::vector<ConvexPolygon>& obstacles, const OrthoPath* route) {
  SvgCanvas canvas(window);
  canvas.rect(window, "fill:none;stroke:#999;stroke-dasharray:4");
  for (const ConvexPolygon& k : obstacles) canvas.polygon(k.vertices(), "fill:#bdbdbd;stroke:#333");
  if (route) {
    canvas.polyline(route->vertices(), "stroke:#e6550d;stroke-width:2");
    canvas.dot(route->front(), 4, "fill:#31a354");
    canvas.dot(route->back(), 4, "fill:#d62728");
  }
  return canvas;
}

SvgCanvas draw_profiles(const StepFunction& f_plus, const StepFunction& f_minus) {
  auto steps = [](const StepFunction& f) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      pts.push_back({f.breakpoints[i], f.values[i]});
      pts.push_back({f.breakpoints[i + 1], f.values[i]});
    }
    return pts;
  };
  const std::vector<Point2> upper = steps(f_plus), lower = steps(f_minus);
  Box world{upper.front().x, upper.front().y, upper.front().x, upper.front().y};
  for (const Point2& p : upper) include(world, p);
  for (const Point2& p : lower) include(world, p);
  SvgCanvas canvas(world);
  canvas.polyline(upper, "stroke:#3182bd;stroke-width:2");
  canvas.polyline(lower, "stroke:#e6550d;stroke-width:2");
  return canvas;
}

}  // namespace staircase

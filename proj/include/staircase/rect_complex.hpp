#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "staircase/geometry.hpp"

namespace staircase {

// Closed axis-aligned rectangle. xmin == xmax or ymin == ymax gives a
// segment or a point.
struct Rect {
  Scalar xmin, ymin, xmax, ymax;

  bool degenerate() const { return xmin == xmax || ymin == ymax; }
  bool contains(const Point2& p) const {
    return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
  }
  bool intersects(const Rect& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }
  friend bool operator==(const Rect& a, const Rect& b) {
    return a.xmin == b.xmin && a.ymin == b.ymin && a.xmax == b.xmax && a.ymax == b.ymax;
  }
};

// Finite union of closed rectangles; overlaps are allowed.
class RectComplex {
 public:
  // Throws PreconditionError for an empty list or a reversed rectangle.
  explicit RectComplex(std::vector<Rect> rects);

  const std::vector<Rect>& rects() const { return rects_; }
  bool contains(const Point2& p) const;
  bool has_degenerate() const;

  friend bool operator==(const RectComplex& a, const RectComplex& b) { return a.rects_ == b.rects_; }

 private:
  std::vector<Rect> rects_;
};

// The grid cut out by every rectangle edge line (and optionally extra
// points). Elements live on a doubled index grid: (u, v) with u even is on
// the vertical line xs[u/2], u odd lies strictly between xs[u/2] and
// xs[u/2 + 1]; likewise for v. Hence even/even is a vertex, odd/odd a face,
// and mixed parity an open edge.
class Arrangement {
 public:
  explicit Arrangement(const RectComplex& complex, std::span<const Point2> extra = {});

  const std::vector<Scalar>& xs() const { return xs_; }
  const std::vector<Scalar>& ys() const { return ys_; }
  int columns() const { return cols_; }
  int rows() const { return rows_; }

  bool in_complex(int u, int v) const {
    return u >= 0 && v >= 0 && u < cols_ && v < rows_ && member_[static_cast<std::size_t>(v) * cols_ + u];
  }
  std::optional<int> x_index(const Scalar& x) const;
  std::optional<int> y_index(const Scalar& y) const;
  Point2 vertex(int i, int j) const { return {xs_[i], ys_[j]}; }

  // Arrangement vertices that lie in the complex, ordered by (x, y).
  std::vector<Point2> vertices_in_complex() const;

 private:
  std::vector<Scalar> xs_;
  std::vector<Scalar> ys_;
  int cols_ = 0;
  int rows_ = 0;
  std::vector<char> member_;
};

// Exact length of the component of R ∩ (line through p) containing p.
// Throws PreconditionError if p is not in R.
Scalar hw_at(const RectComplex& complex, const Point2& p);
Scalar vw_at(const RectComplex& complex, const Point2& p);

// The closed rectangles form a connected intersection graph.
bool is_connected(const RectComplex& complex);

// Every horizontal and vertical line meets R in one interval or not at all.
bool is_orthogonally_convex_exact(const RectComplex& complex);

// Every vertical line meets R in one interval or not at all.
bool is_vertically_convex_exact(const RectComplex& complex);

struct CutStructure {
  Point2 point;
  int piece_count = 0;
  std::vector<RectComplex> pieces;
};

// Arrangement vertices whose removal disconnects R, with the closures of
// the components. Vertices in the middle of a straight zero-width
// corridor are omitted; the corridor endpoints stand for them.
// Throws PreconditionError for disconnected R.
std::vector<CutStructure> cut_structures(const RectComplex& complex);

enum class StaircaseClause { Pass, OrthogonalConvexity, Width, PieceWidth };

std::string_view to_string(StaircaseClause clause);

struct StaircaseCertificate {
  bool staircase_connected = false;
  StaircaseClause clause = StaircaseClause::Pass;
  std::optional<Point2> point;  // the failing point, when there is one
  std::string detail;
};

// Orthogonal convexity, then hw or vw nonzero at every arrangement vertex,
// then the same width test inside every piece of every cut structure. A
// single-point complex passes. Throws PreconditionError for disconnected R.
StaircaseCertificate is_staircase_connected_exact(const RectComplex& complex);

// Oracle: a doubly monotone path from p to q along the arrangement graph
// (with p and q added as extra points). Throws PreconditionError if either
// point is outside R.
bool staircase_oracle(const RectComplex& complex, const Point2& p, const Point2& q);

// Oracle over every ordered pair of vertices of the arrangement refined by
// interval midpoints, so every edge and face has a representative. One
// quadrant sweep per source.
bool staircase_oracle_all_pairs(const RectComplex& complex);

// Piecewise constant function on [x_0, x_n]; values[i] holds on
// [x_i, x_{i+1}).
struct StepFunction {
  std::vector<Scalar> breakpoints;
  std::vector<Scalar> values;

  // Throws PreconditionError when breakpoints are not increasing or the
  // value count does not match the piece count.
  void validate() const;
  StepFunction negated() const;
  // Header "breakpoint,value"; the last row repeats the last value at x_n.
  std::string to_csv() const;

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.breakpoints == b.breakpoints && a.values == b.values;
  }
};

struct Profiles {
  StepFunction f_plus;
  StepFunction f_minus;
  Scalar f_plus_left, f_minus_left, f_plus_right, f_minus_right;  // values at a and b
  bool normal = false;
  bool vertically_convex = false;
};

// Upper and lower boundary profiles. Requires R connected with no
// degenerate rectangle; throws PreconditionError otherwise.
Profiles associated_profiles(const RectComplex& complex);

// Never strictly increases after a strict decrease.
bool is_unimodal(const StepFunction& f);

class HypothesisError : public PreconditionError {
 public:
  HypothesisError(std::string clause, const std::string& message)
      : PreconditionError(message), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

enum class HypothesisPolicy { Strict, WaiveNormality };

struct UnimodalCheck {
  bool lhs = false;  // exact staircase decision
  bool rhs = false;  // f+ and -f- unimodal
  bool agree = false;
};

// Requires connected, non-degenerate, vertically convex and (unless
// waived) normal input. Throws HypothesisError naming the failed clause:
// "connected", "non-degenerate", "vertically-convex" or "normal".
UnimodalCheck thm_unimodal_check(const RectComplex& complex,
                                 HypothesisPolicy policy = HypothesisPolicy::Strict);

}  // namespace staircase

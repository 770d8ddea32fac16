#include "staircase/rect_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace staircase {

RectComplex::RectComplex(std::vector<Rect> rects) : rects_(std::move(rects)) {
  if (rects_.empty()) throw PreconditionError("rectangle complex needs at least one rectangle");
  for (const Rect& r : rects_) {
    if (r.xmin > r.xmax || r.ymin > r.ymax) throw PreconditionError("rectangle has reversed bounds");
  }
}

bool RectComplex::contains(const Point2& p) const {
  return std::any_of(rects_.begin(), rects_.end(), [&](const Rect& r) { return r.contains(p); });
}

bool RectComplex::has_degenerate() const {
  return std::any_of(rects_.begin(), rects_.end(), [](const Rect& r) { return r.degenerate(); });
}

namespace {

void sort_unique(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

int index_of(const std::vector<Scalar>& v, const Scalar& s) {
  return static_cast<int>(std::lower_bound(v.begin(), v.end(), s) - v.begin());
}

}  // namespace

Arrangement::Arrangement(const RectComplex& complex, std::span<const Point2> extra) {
  for (const Rect& r : complex.rects()) {
    xs_.push_back(r.xmin);
    xs_.push_back(r.xmax);
    ys_.push_back(r.ymin);
    ys_.push_back(r.ymax);
  }
  for (const Point2& p : extra) {
    xs_.push_back(p.x);
    ys_.push_back(p.y);
  }
  sort_unique(xs_);
  sort_unique(ys_);
  cols_ = 2 * static_cast<int>(xs_.size()) - 1;
  rows_ = 2 * static_cast<int>(ys_.size()) - 1;
  member_.assign(static_cast<std::size_t>(cols_) * rows_, 0);
  for (const Rect& r : complex.rects()) {
    const int u0 = 2 * index_of(xs_, r.xmin), u1 = 2 * index_of(xs_, r.xmax);
    const int v0 = 2 * index_of(ys_, r.ymin), v1 = 2 * index_of(ys_, r.ymax);
    for (int v = v0; v <= v1; ++v) {
      for (int u = u0; u <= u1; ++u) member_[static_cast<std::size_t>(v) * cols_ + u] = 1;
    }
  }
}

std::optional<int> Arrangement::x_index(const Scalar& x) const {
  const int i = index_of(xs_, x);
  if (i < static_cast<int>(xs_.size()) && xs_[i] == x) return i;
  return std::nullopt;
}

std::optional<int> Arrangement::y_index(const Scalar& y) const {
  const int j = index_of(ys_, y);
  if (j < static_cast<int>(ys_.size()) && ys_[j] == y) return j;
  return std::nullopt;
}

std::vector<Point2> Arrangement::vertices_in_complex() const {
  std::vector<Point2> out;
  for (int i = 0; i < static_cast<int>(xs_.size()); ++i) {
    for (int j = 0; j < static_cast<int>(ys_.size()); ++j) {
      if (in_complex(2 * i, 2 * j)) out.push_back(vertex(i, j));
    }
  }
  return out;
}

namespace {

// Merges the closed intervals [lo, hi] into the component containing t.
Scalar component_length(std::vector<std::pair<Scalar, Scalar>> intervals, const Scalar& t) {
  std::sort(intervals.begin(), intervals.end());
  std::pair<Scalar, Scalar> run = intervals.front();
  for (const auto& iv : intervals) {
    if (iv.first <= run.second) {
      if (iv.second > run.second) run.second = iv.second;
      continue;
    }
    if (run.first <= t && t <= run.second) break;
    run = iv;
  }
  return run.second - run.first;
}

Scalar width_at(const RectComplex& complex, const Point2& p, bool horizontal) {
  if (!complex.contains(p)) throw PreconditionError("point is not in the rectangle complex");
  std::vector<std::pair<Scalar, Scalar>> intervals;
  for (const Rect& r : complex.rects()) {
    if (horizontal && r.ymin <= p.y && p.y <= r.ymax) intervals.push_back({r.xmin, r.xmax});
    if (!horizontal && r.xmin <= p.x && p.x <= r.xmax) intervals.push_back({r.ymin, r.ymax});
  }
  return component_length(std::move(intervals), horizontal ? p.x : p.y);
}

// Each fixed-v row (or fixed-u column) of elements must be one run.
bool element_runs_contiguous(const Arrangement& arr, bool check_rows, bool check_columns) {
  auto runs_ok = [&](int count, auto&& at) {
    int runs = 0;
    bool prev = false;
    for (int k = 0; k < count; ++k) {
      const bool cur = at(k);
      if (cur && !prev) ++runs;
      prev = cur;
    }
    return runs <= 1;
  };
  if (check_rows) {
    for (int v = 0; v < arr.rows(); ++v) {
      if (!runs_ok(arr.columns(), [&](int u) { return arr.in_complex(u, v); })) return false;
    }
  }
  if (check_columns) {
    for (int u = 0; u < arr.columns(); ++u) {
      if (!runs_ok(arr.rows(), [&](int v) { return arr.in_complex(u, v); })) return false;
    }
  }
  return true;
}

void require_connected(const RectComplex& complex) {
  if (!is_connected(complex)) throw PreconditionError("rectangle complex is not connected");
}

// Closure of a set of elements, one rectangle per maximal row run.
RectComplex closure_of(const Arrangement& arr, const std::vector<int>& label, int which) {
  auto lo_coord = [](const std::vector<Scalar>& c, int k) -> const Scalar& { return c[k / 2]; };
  auto hi_coord = [](const std::vector<Scalar>& c, int k) -> const Scalar& { return c[(k + 1) / 2]; };
  std::vector<Rect> rects;
  for (int v = 0; v < arr.rows(); ++v) {
    int u = 0;
    while (u < arr.columns()) {
      if (label[static_cast<std::size_t>(v) * arr.columns() + u] != which) {
        ++u;
        continue;
      }
      int end = u;
      while (end + 1 < arr.columns() && label[static_cast<std::size_t>(v) * arr.columns() + end + 1] == which) {
        ++end;
      }
      rects.push_back({lo_coord(arr.xs(), u), lo_coord(arr.ys(), v), hi_coord(arr.xs(), end),
                       hi_coord(arr.ys(), v)});
      u = end + 1;
    }
  }
  return RectComplex(std::move(rects));
}

constexpr int kDu[4] = {1, 0, -1, 0};
constexpr int kDv[4] = {0, 1, 0, -1};

bool has_zero_width_vertex(const RectComplex& complex, const Point2& extra_point, Point2& where) {
  const Point2 extra[1] = {extra_point};
  const Arrangement arr(complex, extra);
  for (const Point2& x : arr.vertices_in_complex()) {
    if (hw_at(complex, x) == 0 && vw_at(complex, x) == 0) {
      where = x;
      return true;
    }
  }
  return false;
}

// Cells reachable from vertex (i0, j0) by steps of sign (sx, sy) along
// arrangement edges in R. Indexed by i * ny + j.
std::vector<char> quadrant_reach(const Arrangement& arr, int i0, int j0, int sx, int sy) {
  const int nx = static_cast<int>(arr.xs().size());
  const int ny = static_cast<int>(arr.ys().size());
  std::vector<char> reach(static_cast<std::size_t>(nx) * ny, 0);
  auto at = [&](int i, int j) -> char& { return reach[static_cast<std::size_t>(i) * ny + j]; };
  at(i0, j0) = 1;
  for (int i = i0; i >= 0 && i < nx; i += sx) {
    for (int j = j0; j >= 0 && j < ny; j += sy) {
      if (i == i0 && j == j0) continue;
      const bool from_x = i != i0 && at(i - sx, j) && arr.in_complex(2 * i - sx, 2 * j);
      const bool from_y = j != j0 && at(i, j - sy) && arr.in_complex(2 * i, 2 * j - sy);
      at(i, j) = from_x || from_y;
    }
  }
  return reach;
}

}  // namespace

Scalar hw_at(const RectComplex& complex, const Point2& p) { return width_at(complex, p, true); }
Scalar vw_at(const RectComplex& complex, const Point2& p) { return width_at(complex, p, false); }

bool is_connected(const RectComplex& complex) {
  const auto& rects = complex.rects();
  std::vector<std::size_t> parent(rects.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::size_t groups = rects.size();
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      if (!rects[i].intersects(rects[j])) continue;
      const std::size_t a = find(i), b = find(j);
      if (a != b) {
        parent[a] = b;
        --groups;
      }
    }
  }
  return groups == 1;
}

bool is_orthogonally_convex_exact(const RectComplex& complex) {
  return element_runs_contiguous(Arrangement(complex), true, true);
}

bool is_vertically_convex_exact(const RectComplex& complex) {
  return element_runs_contiguous(Arrangement(complex), false, true);
}

std::vector<CutStructure> cut_structures(const RectComplex& complex) {
  require_connected(complex);
  const Arrangement arr(complex);
  const int cols = arr.columns(), rows = arr.rows();
  std::vector<CutStructure> out;
  std::vector<int> label;
  std::vector<std::pair<int, int>> stack;
  for (int pu = 0; pu < cols; pu += 2) {
    for (int pv = 0; pv < rows; pv += 2) {
      if (!arr.in_complex(pu, pv)) continue;
      bool nb[4];
      for (int k = 0; k < 4; ++k) nb[k] = arr.in_complex(pu + kDu[k], pv + kDv[k]);
      const int degree = nb[0] + nb[1] + nb[2] + nb[3];
      if (degree < 2) continue;
      if (degree == 2 && ((nb[0] && nb[2]) || (nb[1] && nb[3]))) continue;  // straight corridor
      label.assign(static_cast<std::size_t>(cols) * rows, -1);
      label[static_cast<std::size_t>(pv) * cols + pu] = -2;
      int components = 0;
      for (int k = 0; k < 4; ++k) {
        const int su = pu + kDu[k], sv = pv + kDv[k];
        if (!nb[k] || label[static_cast<std::size_t>(sv) * cols + su] >= 0) continue;
        label[static_cast<std::size_t>(sv) * cols + su] = components;
        stack.push_back({su, sv});
        while (!stack.empty()) {
          const auto [u, v] = stack.back();
          stack.pop_back();
          for (int d = 0; d < 4; ++d) {
            const int nu = u + kDu[d], nv = v + kDv[d];
            if (!arr.in_complex(nu, nv) || label[static_cast<std::size_t>(nv) * cols + nu] != -1) continue;
            label[static_cast<std::size_t>(nv) * cols + nu] = components;
            stack.push_back({nu, nv});
          }
        }
        ++components;
      }
      if (components < 2) continue;
      CutStructure cut{arr.vertex(pu / 2, pv / 2), components, {}};
      for (int c = 0; c < components; ++c) {
        RectComplex piece = closure_of(arr, label, c);
        cut.pieces.push_back(piece);
      }
      out.push_back(std::move(cut));
    }
  }
  return out;
}

std::string_view to_string(StaircaseClause clause) {
  switch (clause) {
    case StaircaseClause::Pass: return "pass";
    case StaircaseClause::OrthogonalConvexity: return "orthogonal-convexity";
    case StaircaseClause::Width: return "width";
    case StaircaseClause::PieceWidth: return "piece-width";
  }
  return "?";
}

StaircaseCertificate is_staircase_connected_exact(const RectComplex& complex) {
  require_connected(complex);
  const Arrangement arr(complex);
  if (!element_runs_contiguous(arr, true, true)) {
    // Name a witness line: the first element row or column with two runs.
    StaircaseCertificate cert{false, StaircaseClause::OrthogonalConvexity, std::nullopt,
                              "a horizontal or vertical line meets the complex in more than one interval"};
    return cert;
  }
  if (arr.xs().size() == 1 && arr.ys().size() == 1) {
    return {true, StaircaseClause::Pass, std::nullopt, "single point"};
  }
  for (const Point2& x : arr.vertices_in_complex()) {
    if (hw_at(complex, x) == 0 && vw_at(complex, x) == 0) {
      return {false, StaircaseClause::Width, x, "hw = vw = 0"};
    }
  }
  for (const CutStructure& cut : cut_structures(complex)) {
    for (const RectComplex& piece : cut.pieces) {
      Point2 where;
      if (has_zero_width_vertex(piece, cut.point, where)) {
        std::ostringstream os;
        os << "hw = vw = 0 inside the piece at cut point " << cut.point;
        return {false, StaircaseClause::PieceWidth, where, os.str()};
      }
    }
  }
  return {true, StaircaseClause::Pass, std::nullopt, "all clauses hold"};
}

bool staircase_oracle(const RectComplex& complex, const Point2& p, const Point2& q) {
  if (!complex.contains(p) || !complex.contains(q)) {
    throw PreconditionError("oracle endpoints must lie in the rectangle complex");
  }
  const Point2 extra[2] = {p, q};
  const Arrangement arr(complex, extra);
  const int pi = *arr.x_index(p.x), pj = *arr.y_index(p.y);
  const int qi = *arr.x_index(q.x), qj = *arr.y_index(q.y);
  const int sx = qi >= pi ? 1 : -1;
  const int sy = qj >= pj ? 1 : -1;
  const auto reach = quadrant_reach(arr, pi, pj, sx, sy);
  return reach[static_cast<std::size_t>(qi) * arr.ys().size() + qj] != 0;
}

bool staircase_oracle_all_pairs(const RectComplex& complex) {
  // Midpoints give every edge and face of the coarse arrangement a vertex.
  const Arrangement coarse(complex);
  std::vector<Point2> mids;
  const std::size_t n = std::max(coarse.xs().size(), coarse.ys().size());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t i = std::min(k, coarse.xs().size() - 1), j = std::min(k, coarse.ys().size() - 1);
    const std::size_t i1 = std::min(k + 1, coarse.xs().size() - 1), j1 = std::min(k + 1, coarse.ys().size() - 1);
    mids.push_back({Scalar((coarse.xs()[i] + coarse.xs()[i1]) / 2), Scalar((coarse.ys()[j] + coarse.ys()[j1]) / 2)});
  }
  const Arrangement arr(complex, mids);
  const int nx = static_cast<int>(arr.xs().size());
  const int ny = static_cast<int>(arr.ys().size());
  for (int i0 = 0; i0 < nx; ++i0) {
    for (int j0 = 0; j0 < ny; ++j0) {
      if (!arr.in_complex(2 * i0, 2 * j0)) continue;
      for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
          const auto reach = quadrant_reach(arr, i0, j0, sx, sy);
          for (int i = i0; i >= 0 && i < nx; i += sx) {
            for (int j = j0; j >= 0 && j < ny; j += sy) {
              if (arr.in_complex(2 * i, 2 * j) && !reach[static_cast<std::size_t>(i) * ny + j]) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

void StepFunction::validate() const {
  if (breakpoints.size() < 2) throw PreconditionError("step function needs at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) throw PreconditionError("breakpoints must increase strictly");
  }
  if (values.size() + 1 != breakpoints.size()) throw PreconditionError("one value per piece expected");
}

StepFunction StepFunction::negated() const {
  StepFunction out{breakpoints, {}};
  for (const Scalar& v : values) out.values.push_back(-v);
  return out;
}

std::string StepFunction::to_csv() const {
  std::string out = "breakpoint,value\n";
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const Scalar& v = i < values.size() ? values[i] : values.back();
    out += format_scalar(breakpoints[i]) + "," + format_scalar(v) + "\n";
  }
  return out;
}

namespace {

StepFunction merged(const std::vector<Scalar>& xs, const std::vector<Scalar>& values) {
  StepFunction f{{xs.front()}, {}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!f.values.empty() && f.values.back() == values[i]) {
      f.breakpoints.back() = xs[i + 1];
      continue;
    }
    f.values.push_back(values[i]);
    f.breakpoints.push_back(xs[i + 1]);
  }
  return f;
}

}  // namespace

Profiles associated_profiles(const RectComplex& complex) {
  if (complex.has_degenerate()) {
    throw PreconditionError("profiles need a complex without degenerate rectangles");
  }
  require_connected(complex);
  const Arrangement arr(complex);
  const auto& xs = arr.xs();
  std::vector<Scalar> upper, lower;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    std::optional<Scalar> hi, lo;
    for (const Rect& r : complex.rects()) {
      if (r.xmin <= xs[i] && xs[i + 1] <= r.xmax) {
        if (!hi || r.ymax > *hi) hi = r.ymax;
        if (!lo || r.ymin < *lo) lo = r.ymin;
      }
    }
    upper.push_back(*hi);
    lower.push_back(*lo);
  }
  Profiles out{merged(xs, upper), merged(xs, lower), 0, 0, 0, 0, false, false};
  auto end_values = [&](const Scalar& x, Scalar& hi, Scalar& lo) {
    bool first = true;
    for (const Rect& r : complex.rects()) {
      if (r.xmin > x || r.xmax < x) continue;
      if (first || r.ymax > hi) hi = r.ymax;
      if (first || r.ymin < lo) lo = r.ymin;
      first = false;
    }
  };
  end_values(xs.front(), out.f_plus_left, out.f_minus_left);
  end_values(xs.back(), out.f_plus_right, out.f_minus_right);
  out.normal = out.f_plus_left == out.f_minus_left && out.f_plus_right == out.f_minus_right;
  out.vertically_convex = element_runs_contiguous(arr, false, true);
  return out;
}

bool is_unimodal(const StepFunction& f) {
  bool decreased = false;
  for (std::size_t i = 1; i < f.values.size(); ++i) {
    if (f.values[i] < f.values[i - 1]) decreased = true;
    if (f.values[i] > f.values[i - 1] && decreased) return false;
  }
  return true;
}

UnimodalCheck thm_unimodal_check(const RectComplex& complex, HypothesisPolicy policy) {
  if (!is_connected(complex)) throw HypothesisError("connected", "complex is not connected");
  if (complex.has_degenerate()) {
    throw HypothesisError("non-degenerate", "complex is not the closure of its interior");
  }
  const Profiles profiles = associated_profiles(complex);
  if (!profiles.vertically_convex) {
    throw HypothesisError("vertically-convex", "a vertical line meets the complex in two intervals");
  }
  if (policy == HypothesisPolicy::Strict && !profiles.normal) {
    throw HypothesisError("normal", "f+ and f- differ at an end of the x-range");
  }
  UnimodalCheck out;
  out.lhs = is_staircase_connected_exact(complex).staircase_connected;
  out.rhs = is_unimodal(profiles.f_plus) && is_unimodal(profiles.f_minus.negated());
  out.agree = out.lhs == out.rhs;
  return out;
}

}  // namespace staircase

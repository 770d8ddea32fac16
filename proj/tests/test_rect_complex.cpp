#include <doctest.h>

#include "staircase/generators.hpp"
#include "staircase/grid.hpp"
#include "test_util.hpp"

using namespace staircase;
using namespace staircase::test;

namespace {

const RectComplex kCornerTouch = complex_of({R(0, 0, 1, 1), R(1, 1, 2, 2)});
const RectComplex kCorridor = complex_of({R(0, 0, 1, 1), R(1, 1, 2, 1), R(2, 1, 3, 2)});
const RectComplex kU = complex_of({R(0, 0, 3, 1), R(0, 1, 1, 2), R(2, 1, 3, 2)});
const RectComplex kTent = complex_of({R(0, 0, 1, 1), R(1, 0, 2, 2), R(2, 0, 3, 1)});
const RectComplex kDip = complex_of({R(0, 0, 1, 2), R(1, 0, 2, 1), R(2, 0, 3, 2)});

StepFunction step(std::vector<long> xs, std::vector<long> vs) {
  StepFunction f;
  for (long x : xs) f.breakpoints.push_back(Scalar(x));
  for (long v : vs) f.values.push_back(Scalar(v));
  return f;
}

// Unit cells of an integer complex without degenerate rectangles.
GridSet cells_of(const RectComplex& c) {
  std::vector<Cell> cells;
  for (const Rect& r : c.rects()) {
    for (long x = floor_to_long(r.xmin); x < floor_to_long(r.xmax); ++x) {
      for (long y = floor_to_long(r.ymin); y < floor_to_long(r.ymax); ++y) {
        cells.push_back({static_cast<int>(x), static_cast<int>(y)});
      }
    }
  }
  return GridSet::from_cells(cells);
}

}  // namespace

TEST_CASE("complex validation") {
  CHECK_THROWS_AS(RectComplex({}), PreconditionError);
  CHECK_THROWS_AS(complex_of({R(1, 0, 0, 1)}), PreconditionError);
  CHECK(complex_of({R(0, 0, 0, 0)}).has_degenerate());
  CHECK(kCorridor.has_degenerate());
  CHECK_FALSE(kU.has_degenerate());
  CHECK(kU.contains(P(1, 1)));
  CHECK_FALSE(kU.contains(P("3/2", "3/2")));
}

TEST_CASE("widths on lines") {
  const RectComplex r = complex_of({R(0, 0, 2, 1)});
  CHECK(hw_at(r, P("1", "1/2")) == 2);
  CHECK(vw_at(r, P("1", "1/2")) == 1);
  // The touching edges merge along x = 1 and along y = 1.
  CHECK(hw_at(kCornerTouch, P(1, 1)) == 2);
  CHECK(vw_at(kCornerTouch, P(1, 1)) == 2);
  const RectComplex tail{{{S(0), S(0), S(1), S(1)}, {S(1), S("1/2"), S(2), S("1/2")}}};
  CHECK(hw_at(tail, P("3/2", "1/2")) == 2);
  CHECK(vw_at(tail, P("3/2", "1/2")) == 0);
  const RectComplex dot = complex_of({R(5, 5, 5, 5)});
  CHECK(hw_at(dot, P(5, 5)) == 0);
  CHECK(vw_at(dot, P(5, 5)) == 0);
  CHECK_THROWS_AS(hw_at(r, P(3, 3)), PreconditionError);
}

TEST_CASE("connectivity of complexes") {
  CHECK(is_connected(complex_of({R(0, 0, 1, 1)})));
  CHECK_FALSE(is_connected(complex_of({R(0, 0, 1, 1), R(2, 2, 3, 3)})));
  CHECK(is_connected(kCornerTouch));
}

TEST_CASE("exact orthogonal convexity") {
  CHECK(is_orthogonally_convex_exact(complex_of({R(0, 0, 4, 1)})));
  CHECK_FALSE(is_orthogonally_convex_exact(kU));
  CHECK(is_orthogonally_convex_exact(complex_of({R(0, 0, 2, 2), R(1, 1, 3, 3), R(2, 2, 4, 4)})));
  // Two horizontal segments on one line with a gap.
  CHECK_FALSE(is_orthogonally_convex_exact(complex_of({R(0, 0, 1, 0), R(2, 0, 3, 0), R(1, 0, 1, 1), R(1, 1, 2, 1), R(2, 0, 2, 1)})));
  CHECK(is_vertically_convex_exact(kDip));
  CHECK_FALSE(is_orthogonally_convex_exact(kDip));
}

TEST_CASE("cut structures") {
  CHECK(cut_structures(complex_of({R(0, 0, 2, 1)})).empty());
  const auto corner = cut_structures(kCornerTouch);
  REQUIRE(corner.size() == 1);
  CHECK(corner[0].point == P(1, 1));
  CHECK(corner[0].piece_count == 2);
  // Four quadrant squares fill a square, so nothing is cut.
  CHECK(cut_structures(complex_of({R(0, 0, 1, 1), R(-1, 0, 0, 1), R(-1, -1, 0, 0), R(0, -1, 1, 0)})).empty());
  // Four segments meeting at the origin.
  const auto four = cut_structures(complex_of({R(0, 0, 1, 0), R(-1, 0, 0, 0), R(0, -1, 0, 0), R(0, 0, 0, 1)}));
  REQUIRE(four.size() == 1);
  CHECK(four[0].point == P(0, 0));
  CHECK(four[0].piece_count == 4);
  CHECK(four[0].pieces.size() == 4);
  for (const RectComplex& piece : four[0].pieces) CHECK(piece.contains(P(0, 0)));
  // Corridor: both attachment points are cut points.
  const auto corridor = cut_structures(kCorridor);
  CHECK(corridor.size() == 2);
  CHECK_THROWS_AS(cut_structures(complex_of({R(0, 0, 1, 1), R(3, 3, 4, 4)})), PreconditionError);
}

TEST_CASE("exact staircase decision") {
  CHECK(is_staircase_connected_exact(complex_of({R(0, 0, 3, 2)})).staircase_connected);
  const StaircaseCertificate corner = is_staircase_connected_exact(kCornerTouch);
  CHECK(corner.staircase_connected);
  CHECK(corner.clause == StaircaseClause::Pass);
  CHECK(is_staircase_connected_exact(kCorridor).staircase_connected);
  const StaircaseCertificate u = is_staircase_connected_exact(kU);
  CHECK_FALSE(u.staircase_connected);
  CHECK(u.clause == StaircaseClause::OrthogonalConvexity);
  CHECK(is_staircase_connected_exact(complex_of({R(2, 2, 2, 2)})).staircase_connected);
  CHECK_THROWS_AS(is_staircase_connected_exact(complex_of({R(0, 0, 1, 1), R(3, 3, 4, 4)})), PreconditionError);
}

TEST_CASE("arrangement oracle examples") {
  const RectComplex r = complex_of({R(0, 0, 3, 2)});
  CHECK(staircase_oracle(r, P(1, 1), P(1, 1)));
  CHECK(staircase_oracle(r, P(0, 0), P(3, 2)));
  CHECK(staircase_oracle(r, P(3, 0), P(0, 2)));
  CHECK(staircase_oracle(kCornerTouch, P("1/2", "1/2"), P("3/2", "3/2")));
  CHECK_FALSE(staircase_oracle(kU, P(0, 2), P(3, 2)));
  CHECK(staircase_oracle(kU, P(0, 2), P(3, 0)));
  CHECK_THROWS_AS(staircase_oracle(kU, P("3/2", "3/2"), P(0, 0)), PreconditionError);
}

TEST_CASE("profiles") {
  const Profiles one = associated_profiles(complex_of({R(0, 0, 2, 1)}));
  CHECK(one.f_plus == step({0, 2}, {1}));
  CHECK(one.f_minus == step({0, 2}, {0}));
  CHECK_FALSE(one.normal);
  CHECK(one.vertically_convex);
  const Profiles pyramid = associated_profiles(complex_of({R(0, 0, 6, 1), R(1, 1, 5, 2), R(2, 2, 4, 3)}));
  CHECK(pyramid.f_plus == step({0, 1, 2, 4, 5, 6}, {1, 2, 3, 2, 1}));
  CHECK(pyramid.f_minus == step({0, 6}, {0}));
  CHECK_FALSE(pyramid.normal);
  CHECK(is_unimodal(pyramid.f_plus));
  CHECK(is_unimodal(pyramid.f_minus.negated()));
  CHECK(pyramid.f_plus_left == 1);
  CHECK(pyramid.f_minus_right == 0);
  CHECK_THROWS_AS(associated_profiles(kCorridor), PreconditionError);
  CHECK_THROWS_AS(associated_profiles(complex_of({R(0, 0, 1, 1), R(3, 3, 4, 4)})), PreconditionError);
  CHECK(one.f_plus.to_csv() == "breakpoint,value\n0,1\n2,1\n");
}

TEST_CASE("unimodality") {
  CHECK(is_unimodal(step({0, 1, 2, 3, 4, 5}, {1, 3, 5, 4, 2})));
  CHECK_FALSE(is_unimodal(step({0, 1, 2, 3, 4}, {1, 3, 2, 3})));
  CHECK(is_unimodal(step({0, 1, 2, 3}, {5, 5, 5})));
  CHECK(is_unimodal(step({0, 1, 2, 3}, {5, 4, 3})));
}

TEST_CASE("unimodal check hypotheses") {
  try {
    thm_unimodal_check(kTent);
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(e.clause() == "normal");
  }
  try {
    thm_unimodal_check(kCorridor, HypothesisPolicy::WaiveNormality);
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(e.clause() == "non-degenerate");
  }
  try {
    thm_unimodal_check(complex_of({R(0, 0, 3, 1), R(1, 2, 2, 3), R(0, 0, 1, 3)}), HypothesisPolicy::WaiveNormality);
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(e.clause() == "vertically-convex");
  }
  const UnimodalCheck tent = thm_unimodal_check(kTent, HypothesisPolicy::WaiveNormality);
  CHECK(tent.lhs);
  CHECK(tent.rhs);
  CHECK(tent.agree);
  const UnimodalCheck dip = thm_unimodal_check(kDip, HypothesisPolicy::WaiveNormality);
  CHECK_FALSE(dip.lhs);
  CHECK_FALSE(dip.rhs);
  CHECK(dip.agree);
}

TEST_CASE("column complexes are never normal") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Profiles p = associated_profiles(random_column_complex(rng));
    CHECK(p.vertically_convex);
    CHECK(p.f_plus_left > p.f_minus_left);
    CHECK(p.f_plus_right > p.f_minus_right);
    CHECK_FALSE(p.normal);
  }
}

TEST_CASE("exact decision agrees with the arrangement oracle") {
  Rng rng(99);
  for (int i = 0; i < 120; ++i) {
    const RectComplex c = random_connected_complex(rng, 6);
    CHECK(is_staircase_connected_exact(c).staircase_connected == staircase_oracle_all_pairs(c));
  }
}

TEST_CASE("exact decision agrees with unit cells for edge-connected integer complexes") {
  Rng rng(4);
  int compared = 0;
  for (int i = 0; i < 400 && compared < 120; ++i) {
    const RectComplex c = random_connected_complex(rng, 5);
    if (c.has_degenerate()) continue;
    const GridSet g = cells_of(c);
    if (!is_orthogonally_connected(g)) continue;
    ++compared;
    CHECK(is_staircase_connected_exact(c).staircase_connected == is_staircase_connected(g));
  }
  CHECK(compared >= 50);
}

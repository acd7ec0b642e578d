#include "doctest.h"
#include "downset/classify.hpp"
#include "downset/oracle.hpp"

using namespace downset;

TEST_CASE("classify_rect: segment kinds") {
  GridShape m35({3, 5});
  CHECK(classify_rect(m35, DownSet2D(m35, {5, 2, 0})).kind == SegmentKind::LexSegment);

  GridShape m33({3, 3});
  // The reflected lex segment is the colex segment; tie-break reports the
  // segment kind rather than the symmetrization.
  PointSet lex4 = initial_segment(m33, DominationOrder::lex(2), 4);
  PointSet reflected;
  for (const GridPoint& p : lex4) reflected.insert({p[1], p[0]});
  RectClassification c = classify_rect(m33, DownSet2D::from_points(m33, reflected));
  CHECK(c.kind == SegmentKind::ColexSegment);
  // The two descriptions coincide: the reflected lex segment is the colex one.
  CHECK(reflected == initial_segment(m33, DominationOrder::colex(2), 4));

  GridShape m44({4, 4});
  CHECK(classify_rect(m44, DownSet2D(m44, {3, 2, 2, 1})).kind ==
        SegmentKind::Unstructured);
}

TEST_CASE("predicted_packed_box degenerate sizes") {
  GridShape m47({4, 7});
  for (const DominationOrder& order : DominationOrder::all(2)) {
    for (BoxVariant v : {BoxVariant::T21, BoxVariant::T22}) {
      CHECK_FALSE(predicted_packed_box(m47, order, 0, v).has_value());
      CHECK_FALSE(predicted_packed_box(m47, order, m47.size(), v).has_value());
    }
  }
}

TEST_CASE("predicted boxes symmetrize segments into optimal downsets") {
  GridShape m47({4, 7});
  WeightFn w = weight_fn(RankWeight::standard(m47));
  auto by_size = optimal_downsets_by_size(m47, w);
  DominationOrder lex = DominationOrder::lex(2);
  // A lex segment ending mid-column with a valid box: m = 9 ends with two
  // points of column 1, so p = 2 and q = 2.
  auto box = predicted_packed_box(m47, lex, 9, BoxVariant::T21);
  REQUIRE(box.has_value());
  PointSet seg = initial_segment(m47, lex, 9);
  PointSet sym = symmetrize_set(*box, seg, 0, 1);
  CHECK(sym != seg);
  CHECK(is_downset(m47, sym));
  const auto& argmax = by_size[9].argmax;
  CHECK(std::count(argmax.begin(), argmax.end(), sym) == 1);
}

TEST_CASE("exact segment-optimality criteria") {
  CHECK(colex_segment_is_optimal(3, 4, 6));   // 6 = 2*3 in the l2 = l1+1 regime
  CHECK_FALSE(colex_segment_is_optimal(3, 5, 6));
  CHECK(lex_segment_is_optimal(3, 5, 7));
  CHECK(colex_segment_is_optimal(4, 4, 11));  // squares: both always optimal
  CHECK(lex_segment_is_optimal(4, 4, 11));
  CHECK(colex_segment_is_optimal(1, 9, 5));   // degenerate chain
  CHECK(colex_segment_is_optimal(3, 5, 2));   // m <= l1
  CHECK(colex_segment_is_optimal(3, 5, 13));  // m >= l1(l2-1)
  CHECK_THROWS_AS(colex_segment_is_optimal(3, 5, 16), std::domain_error);
}

TEST_CASE("the two criteria are coordinate-swap mirrors") {
  for (int l1 = 1; l1 <= 6; ++l1) {
    for (int l2 = 1; l2 <= 6; ++l2) {
      for (long long m = 0; m <= static_cast<long long>(l1) * l2; ++m) {
        CHECK(lex_segment_is_optimal(l1, l2, m) == colex_segment_is_optimal(l2, l1, m));
      }
    }
  }
}

TEST_CASE("nested solution orders") {
  CHECK(nested_solution_orders(4, 4) == std::set<OrderTag>{OrderTag::Lex, OrderTag::Colex});
  CHECK(nested_solution_orders(3, 5) == std::set<OrderTag>{OrderTag::Lex});
  CHECK(nested_solution_orders(5, 3) == std::set<OrderTag>{OrderTag::Colex});
  CHECK(nested_solution_orders(1, 7) ==
        std::set<OrderTag>{OrderTag::Lex, OrderTag::Colex});
}

TEST_CASE("on squares, lex and colex segments have equal weight") {
  GridShape shape({6, 6});
  RankWeight w = RankWeight::squares(shape.max_rank());
  for (long long m = 0; m <= shape.size(); ++m) {
    CHECK(initial_segment_2d(shape, DominationOrder::lex(2), m).weight(w) ==
          initial_segment_2d(shape, DominationOrder::colex(2), m).weight(w));
  }
}

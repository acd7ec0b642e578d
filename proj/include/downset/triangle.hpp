#pragma once

#include "downset/classify.hpp"

namespace downset {

/// The right triangle poset: points (x, y) with 0 <= x <= y < ell, ordered
/// coordinatewise (induced from the ell x ell grid).
class TriangleShape {
 public:
  explicit TriangleShape(int ell);

  int ell() const { return ell_; }
  long long size() const { return static_cast<long long>(ell_) * (ell_ + 1) / 2; }
  GridShape ambient() const { return GridShape({ell_, ell_}); }

  bool contains(const GridPoint& p) const;
  void require(const GridPoint& p) const;
  std::vector<GridPoint> all_points() const;

  bool operator==(const TriangleShape& o) const { return ell_ == o.ell_; }

 private:
  int ell_;
};

bool triangle_is_downset(const TriangleShape& shape, const PointSet& s);

/// Canonical profile form of a triangle downset: weakly decreasing tops
/// t_0 >= t_1 >= ..., column x occupying {(x, y) : x <= y < t_x} when t_x > 0.
class TriangleDownSet {
 public:
  TriangleDownSet(TriangleShape shape, std::vector<int> tops);

  static TriangleDownSet from_points(const TriangleShape& shape, const PointSet& s);

  const TriangleShape& shape() const { return shape_; }
  const std::vector<int>& tops() const { return tops_; }
  long long size() const;
  PointSet points() const;
  bool contains(const GridPoint& p) const;

  bool operator==(const TriangleDownSet& o) const { return tops_ == o.tops_; }

 private:
  TriangleShape shape_;
  std::vector<int> tops_;
};

/// The (x, x) in A with (x+1, x+1) not in A; A must be nonempty.
GridPoint diagonal_point(const TriangleShape& shape, const PointSet& a);

/// The largest packed box inside the triangle cornered at the diagonal point
/// p = (y, y): coordinates [0, y] x [y, ell-1].
PackedBox diagonal_lattice(const TriangleShape& shape, const GridPoint& p);
PackedBox diagonal_lattice_of(const TriangleShape& shape, const PointSet& a);

/// First m points of the induced domination order on the triangle.
PointSet triangle_initial_segment(const TriangleShape& shape,
                                  const DominationOrder& order, long long m);

/// As classify_rect, with segments taken in the induced triangle orders and
/// symmetrizations searched over every packed box contained in the triangle.
RectClassification classify_triangle(const TriangleShape& shape, const PointSet& a);

struct BestSegment {
  double weight = 0;
  enum class Which { Lex, Colex, Both } which = Which::Both;
};

BestSegment best_segment_weight(const TriangleShape& shape, const RankWeight& w,
                                long long m);

/// Repeatedly replaces the diagonal lattice's intersection with A by the
/// equal-size initial segment of the chosen order inside it; returns the
/// whole sequence, ending at the fixed point (an initial segment).
std::vector<PointSet> diagonal_rectify(const TriangleShape& shape, const PointSet& a,
                                       OrderTag direction);

}  // namespace downset

#pragma once

#include <map>
#include <optional>

#include "downset/grid.hpp"

namespace downset {

/// An axis-aligned product of chain intervals inside a grid: the packed
/// subposets, the only kind the structure theorems symmetrize over.
class PackedBox {
 public:
  PackedBox(GridShape ambient, GridPoint lo, GridPoint hi);

  static PackedBox full(const GridShape& ambient);

  const GridShape& ambient() const { return ambient_; }
  const GridPoint& lo() const { return lo_; }
  const GridPoint& hi() const { return hi_; }
  /// Side length along coordinate i: hi[i] - lo[i] + 1.
  int side(int i) const { return hi_[i] - lo_[i] + 1; }

  bool contains(const GridPoint& p) const;
  long long size() const;

  bool operator==(const PackedBox& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

 private:
  GridShape ambient_;
  GridPoint lo_, hi_;
};

/// Whether a point set is packed: equal to the full product of intervals it
/// spans. Non-packed isomorphic copies of lattices are recognized here but
/// never symmetrized.
bool is_packed(const GridShape& shape, const PointSet& s);

/// Swaps f's offsets from the box lo-corner along c1 and c2.
/// Requires f inside the box and equal side lengths along c1 and c2.
GridPoint reflect_point(const PackedBox& box, int c1, int c2, const GridPoint& f);

/// Reflects iff the offset along c1 is smaller than the offset along c2,
/// so the result always has offset(c1) >= offset(c2).
GridPoint symmetrize_point(const PackedBox& box, int c1, int c2, const GridPoint& f);

/// Symmetrization of a set about (c1,c2) with respect to the box; points
/// outside the box pass through untouched. Preserves cardinality.
PointSet symmetrize_set(const PackedBox& box, const PointSet& a, int c1, int c2);

/// The data of one reflect-push step: remove O from the downset A, reflect it
/// inside the box to R, and push R onto fresh positions P through the
/// weight-nondecreasing bijection sigma.
struct ReflectPushMove {
  PointSet a;
  PackedBox box;
  int c1 = 0, c2 = 1;
  PointSet removal;                     // O
  PointSet insertion;                   // P
  std::map<GridPoint, GridPoint> sigma;  // reflections of O -> P
};

struct ReflectPushResult {
  PointSet result;  // (A \ O) u P
  double delta;     // weight gain, >= 0 whenever the hypotheses hold
};

/// Validates every hypothesis of the move before applying it; a violation
/// raises std::domain_error naming the failed hypothesis (1-6).
ReflectPushResult apply_reflect_push(const ReflectPushMove& m, const RankWeight& w);

}  // namespace downset

#pragma once

#include "downset/grid.hpp"

namespace downset {

enum class Ordering { LT, EQ, GT };

/// A total order on a grid given by a coordinate priority permutation:
/// points are compared lexicographically on (p[pi[0]], p[pi[1]], ...).
/// The identity permutation is the lexicographic order, the reversal the
/// colexicographic order.
class DominationOrder {
 public:
  explicit DominationOrder(std::vector<int> pi);

  static DominationOrder lex(int d);
  static DominationOrder colex(int d);
  /// All d! domination orders on a d-dimensional grid.
  static std::vector<DominationOrder> all(int d);

  int dim() const { return static_cast<int>(pi_.size()); }
  const std::vector<int>& pi() const { return pi_; }
  bool is_lex() const;
  bool is_colex() const;

  Ordering compare(const GridPoint& a, const GridPoint& b) const;
  bool less(const GridPoint& a, const GridPoint& b) const {
    return compare(a, b) == Ordering::LT;
  }

 private:
  std::vector<int> pi_;  // 0-based coordinate indices, highest priority first
};

/// 0-based position of p in the total order (closed-form mixed-radix count).
long long index_of(const GridShape& shape, const DominationOrder& order,
                   const GridPoint& p);

/// The first m points of the order; always a downset.
PointSet initial_segment(const GridShape& shape, const DominationOrder& order,
                         long long m);

/// Canonical-profile form of a 2D initial segment.
DownSet2D initial_segment_2d(const GridShape& shape, const DominationOrder& order,
                             long long m);

}  // namespace downset

#pragma once

#include <functional>

#include "downset/grid.hpp"
#include "downset/triangle.hpp"

namespace downset {

using WeightFn = std::function<double(const GridPoint&)>;

WeightFn weight_fn(const RankWeight& w);

/// Every weakly decreasing column-height profile of an l1 x l2 grid, exactly
/// once; the count equals binomial(l1 + l2, l1).
void enumerate_downsets_2d(int l1, int l2,
                           const std::function<void(const std::vector<int>&)>& fn);

/// Every downset of a 3D box as a stack of 2D profiles, weakly decreasing by
/// containment along the last coordinate. Guard: every side <= 4.
void enumerate_downsets_3d(
    const GridShape& shape,
    const std::function<void(const std::vector<std::vector<int>>&)>& fn);

/// Include/exclude branching along a fixed linear extension with
/// downward-closure pruning; works for any explicit point list.
void enumerate_downsets_generic(const GridShape& ambient,
                                const std::vector<GridPoint>& points,
                                const std::function<void(const PointSet&)>& fn);

/// Every downset of a right triangle, exactly once. Guard: <= 40 elements.
void enumerate_downsets_triangle(const TriangleShape& shape,
                                 const std::function<void(const PointSet&)>& fn);

struct SizeOptima {
  double max_weight = 0;
  std::vector<PointSet> argmax;  // the complete list, canonically ordered
};

/// Exact per-size maxima with complete argmax lists, by exhaustive enumeration.
/// Supports d = 2 and d = 3 grids (d = 3 within the side guard).
std::vector<SizeOptima> optimal_downsets_by_size(const GridShape& shape,
                                                 const WeightFn& w);
std::vector<SizeOptima> optimal_downsets_by_size(const TriangleShape& shape,
                                                 const WeightFn& w);

SizeOptima optimal_downsets(const GridShape& shape, const WeightFn& w, long long m);
SizeOptima optimal_downsets(const TriangleShape& shape, const WeightFn& w, long long m);

struct NestedChainResult {
  bool exists = false;
  std::vector<PointSet> chain;     // witness: one optimal set per size, nested
  long long obstruction_size = -1;  // smallest size no chain can pass, if none exists
  long long full_chain_count = 0;   // number of distinct full chains
};

/// Searches the inclusion DAG over per-size optimal sets for a chain hitting
/// every size.
NestedChainResult nested_chain(const std::vector<SizeOptima>& by_size);

NestedChainResult nested_chain_exists(const GridShape& shape, const WeightFn& w);

}  // namespace downset

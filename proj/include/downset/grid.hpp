#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace downset {

/// A point of a product of chains, 0-based in each coordinate.
using GridPoint = std::vector<int>;
using PointSet = std::set<GridPoint>;

/// Raised when a computation exceeds the oracle's explicit size guards.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// A finite product of chains: side lengths (l_1, ..., l_d), all >= 1.
class GridShape {
 public:
  explicit GridShape(std::vector<int> lengths);

  int dim() const { return static_cast<int>(lengths_.size()); }
  int length(int i) const { return lengths_.at(i); }
  const std::vector<int>& lengths() const { return lengths_; }

  long long size() const;
  /// Largest attainable rank: sum of (l_i - 1).
  int max_rank() const;

  bool contains(const GridPoint& p) const;
  void require(const GridPoint& p) const;

  /// Visits every point of the grid, row-major (last coordinate fastest).
  void for_each_point(const std::function<void(const GridPoint&)>& fn) const;
  std::vector<GridPoint> all_points() const;

  bool operator==(const GridShape& o) const { return lengths_ == o.lengths_; }

 private:
  std::vector<int> lengths_;
};

/// Sum of coordinates.
int rank(const GridPoint& p);

bool is_downset(const GridShape& shape, const PointSet& s);

/// Points obtained by decrementing exactly one nonzero coordinate.
PointSet lower_shadow(const GridShape& shape, const GridPoint& p);
/// Points obtained by incrementing exactly one coordinate still inside the shape.
PointSet upper_shadow(const GridShape& shape, const GridPoint& p);

/// All points agreeing with `anchor` outside the coordinate set `coords`.
/// `coords` holds 0-based coordinate indices; `anchor` lists values for the
/// complementary coordinates in increasing coordinate order.
PointSet subproduct_at(const GridShape& shape, const std::set<int>& coords,
                       const GridPoint& anchor);

/// A weight depending only on rank, strictly increasing in rank.
class RankWeight {
 public:
  /// values[r] is the weight of every rank-r point; must be strictly increasing.
  explicit RankWeight(std::vector<double> values);

  static RankWeight standard(const GridShape& shape);   // w_r = r
  static RankWeight standard(int max_rank);             // w_r = r
  static RankWeight squares(int max_rank);              // w_r = r^2
  static RankWeight powers_of_two(int max_rank);        // w_r = 2^r

  double at(int r) const { return values_.at(r); }
  double of(const GridPoint& p) const { return values_.at(rank(p)); }
  int max_rank() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

double weight_of(const RankWeight& w, const PointSet& s);

/// Weight comparisons: exact for the integral tables used throughout, a
/// relative 1e-9 tolerance otherwise.
bool weight_eq(double a, double b);
bool weight_le(double a, double b);
bool weight_lt(double a, double b);

/// A 2D downset in canonical Young-diagram form: weakly decreasing column
/// heights h_0 >= h_1 >= ... >= h_{l1-1}, column x occupying {(x,y) : y < h_x}.
class DownSet2D {
 public:
  DownSet2D(GridShape shape, std::vector<int> heights);

  static DownSet2D from_points(const GridShape& shape, const PointSet& s);

  const GridShape& shape() const { return shape_; }
  const std::vector<int>& heights() const { return heights_; }
  long long size() const;
  PointSet points() const;
  bool contains(const GridPoint& p) const;
  double weight(const RankWeight& w) const;

  bool operator==(const DownSet2D& o) const {
    return shape_ == o.shape_ && heights_ == o.heights_;
  }
  bool operator<(const DownSet2D& o) const { return heights_ < o.heights_; }

 private:
  GridShape shape_;
  std::vector<int> heights_;
};

}  // namespace downset

#include "downset/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace downset {

GridShape::GridShape(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw std::domain_error("GridShape: dimension must be >= 1");
  for (int l : lengths_) {
    if (l < 1) throw std::domain_error("GridShape: every side length must be >= 1");
  }
}

long long GridShape::size() const {
  long long n = 1;
  for (int l : lengths_) n *= l;
  return n;
}

int GridShape::max_rank() const {
  int r = 0;
  for (int l : lengths_) r += l - 1;
  return r;
}

bool GridShape::contains(const GridPoint& p) const {
  if (static_cast<int>(p.size()) != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (p[i] < 0 || p[i] >= lengths_[i]) return false;
  }
  return true;
}

void GridShape::require(const GridPoint& p) const {
  if (!contains(p)) throw std::domain_error("point outside grid shape");
}

void GridShape::for_each_point(const std::function<void(const GridPoint&)>& fn) const {
  GridPoint p(dim(), 0);
  while (true) {
    fn(p);
    int i = dim() - 1;
    while (i >= 0 && p[i] + 1 == lengths_[i]) p[i--] = 0;
    if (i < 0) return;
    ++p[i];
  }
}

std::vector<GridPoint> GridShape::all_points() const {
  std::vector<GridPoint> out;
  out.reserve(static_cast<size_t>(size()));
  for_each_point([&](const GridPoint& p) { out.push_back(p); });
  return out;
}

int rank(const GridPoint& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_downset(const GridShape& shape, const PointSet& s) {
  for (const GridPoint& p : s) {
    shape.require(p);
    for (const GridPoint& q : lower_shadow(shape, p)) {
      if (!s.count(q)) return false;
    }
  }
  return true;
}

PointSet lower_shadow(const GridShape& shape, const GridPoint& p) {
  shape.require(p);
  PointSet out;
  for (int i = 0; i < shape.dim(); ++i) {
    if (p[i] > 0) {
      GridPoint q = p;
      --q[i];
      out.insert(std::move(q));
    }
  }
  return out;
}

PointSet upper_shadow(const GridShape& shape, const GridPoint& p) {
  shape.require(p);
  PointSet out;
  for (int i = 0; i < shape.dim(); ++i) {
    if (p[i] + 1 < shape.length(i)) {
      GridPoint q = p;
      ++q[i];
      out.insert(std::move(q));
    }
  }
  return out;
}

PointSet subproduct_at(const GridShape& shape, const std::set<int>& coords,
                       const GridPoint& anchor) {
  const int d = shape.dim();
  std::vector<int> fixed;  // complementary coordinates, increasing
  for (int i = 0; i < d; ++i) {
    if (!coords.count(i)) fixed.push_back(i);
  }
  if (anchor.size() != fixed.size())
    throw std::domain_error("subproduct_at: anchor arity mismatch");
  for (size_t k = 0; k < fixed.size(); ++k) {
    if (anchor[k] < 0 || anchor[k] >= shape.length(fixed[k]))
      throw std::domain_error("subproduct_at: anchor coordinate out of range");
  }
  for (int c : coords) {
    if (c < 0 || c >= d) throw std::domain_error("subproduct_at: coordinate out of range");
  }

  PointSet out;
  shape.for_each_point([&](const GridPoint& p) {
    for (size_t k = 0; k < fixed.size(); ++k) {
      if (p[fixed[k]] != anchor[k]) return;
    }
    out.insert(p);
  });
  return out;
}

RankWeight::RankWeight(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::domain_error("RankWeight: empty table");
  for (size_t r = 1; r < values_.size(); ++r) {
    if (!(values_[r - 1] < values_[r]))
      throw std::domain_error("RankWeight: table must be strictly increasing");
  }
}

RankWeight RankWeight::standard(const GridShape& shape) { return standard(shape.max_rank()); }

RankWeight RankWeight::standard(int max_rank) {
  std::vector<double> v(max_rank + 1);
  for (int r = 0; r <= max_rank; ++r) v[r] = r;
  return RankWeight(std::move(v));
}

RankWeight RankWeight::squares(int max_rank) {
  std::vector<double> v(max_rank + 1);
  for (int r = 0; r <= max_rank; ++r) v[r] = static_cast<double>(r) * r;
  return RankWeight(std::move(v));
}

RankWeight RankWeight::powers_of_two(int max_rank) {
  std::vector<double> v(max_rank + 1);
  for (int r = 0; r <= max_rank; ++r) v[r] = std::ldexp(1.0, r);
  return RankWeight(std::move(v));
}

double weight_of(const RankWeight& w, const PointSet& s) {
  double total = 0;
  for (const GridPoint& p : s) total += w.of(p);
  return total;
}

namespace {
constexpr double kRelTol = 1e-9;
}

bool weight_eq(double a, double b) {
  if (a == b) return true;
  double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  return std::fabs(a - b) <= kRelTol * scale;
}

bool weight_le(double a, double b) { return a < b || weight_eq(a, b); }

bool weight_lt(double a, double b) { return a < b && !weight_eq(a, b); }

DownSet2D::DownSet2D(GridShape shape, std::vector<int> heights)
    : shape_(std::move(shape)), heights_(std::move(heights)) {
  if (shape_.dim() != 2) throw std::domain_error("DownSet2D: shape must be 2D");
  if (static_cast<int>(heights_.size()) != shape_.length(0))
    throw std::domain_error("DownSet2D: one height per column required");
  for (size_t x = 0; x < heights_.size(); ++x) {
    if (heights_[x] < 0 || heights_[x] > shape_.length(1))
      throw std::domain_error("DownSet2D: column height out of range");
    if (x > 0 && heights_[x] > heights_[x - 1])
      throw std::domain_error("DownSet2D: heights must be weakly decreasing");
  }
}

DownSet2D DownSet2D::from_points(const GridShape& shape, const PointSet& s) {
  if (!is_downset(shape, s)) throw std::domain_error("DownSet2D: point set is not a downset");
  std::vector<int> h(shape.length(0), 0);
  for (const GridPoint& p : s) h[p[0]] = std::max(h[p[0]], p[1] + 1);
  return DownSet2D(shape, std::move(h));
}

long long DownSet2D::size() const {
  long long n = 0;
  for (int h : heights_) n += h;
  return n;
}

PointSet DownSet2D::points() const {
  PointSet out;
  for (int x = 0; x < shape_.length(0); ++x) {
    for (int y = 0; y < heights_[x]; ++y) out.insert({x, y});
  }
  return out;
}

bool DownSet2D::contains(const GridPoint& p) const {
  return shape_.contains(p) && p[1] < heights_[p[0]];
}

double DownSet2D::weight(const RankWeight& w) const {
  double total = 0;
  for (int x = 0; x < shape_.length(0); ++x) {
    for (int y = 0; y < heights_[x]; ++y) total += w.at(x + y);
  }
  return total;
}

}  // namespace downset

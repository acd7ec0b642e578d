#include "downset/orders.hpp"

#include <algorithm>
#include <numeric>

namespace downset {

DominationOrder::DominationOrder(std::vector<int> pi) : pi_(std::move(pi)) {
  std::vector<int> sorted = pi_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i))
      throw std::domain_error("DominationOrder: pi must be a permutation of 0..d-1");
  }
}

DominationOrder DominationOrder::lex(int d) {
  std::vector<int> pi(d);
  std::iota(pi.begin(), pi.end(), 0);
  return DominationOrder(std::move(pi));
}

DominationOrder DominationOrder::colex(int d) {
  std::vector<int> pi(d);
  for (int i = 0; i < d; ++i) pi[i] = d - 1 - i;
  return DominationOrder(std::move(pi));
}

std::vector<DominationOrder> DominationOrder::all(int d) {
  std::vector<int> pi(d);
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<DominationOrder> out;
  do {
    out.emplace_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

bool DominationOrder::is_lex() const {
  for (int i = 0; i < dim(); ++i) {
    if (pi_[i] != i) return false;
  }
  return true;
}

bool DominationOrder::is_colex() const {
  for (int i = 0; i < dim(); ++i) {
    if (pi_[i] != dim() - 1 - i) return false;
  }
  return true;
}

Ordering DominationOrder::compare(const GridPoint& a, const GridPoint& b) const {
  for (int c : pi_) {
    if (a[c] < b[c]) return Ordering::LT;
    if (a[c] > b[c]) return Ordering::GT;
  }
  return Ordering::EQ;
}

long long index_of(const GridShape& shape, const DominationOrder& order,
                   const GridPoint& p) {
  shape.require(p);
  long long idx = 0;
  long long place = 1;
  const auto& pi = order.pi();
  for (int i = shape.dim() - 1; i >= 0; --i) {
    idx += p[pi[i]] * place;
    place *= shape.length(pi[i]);
  }
  return idx;
}

namespace {

GridPoint point_at(const GridShape& shape, const DominationOrder& order, long long k) {
  const auto& pi = order.pi();
  GridPoint p(shape.dim(), 0);
  for (int i = shape.dim() - 1; i >= 0; --i) {
    int l = shape.length(pi[i]);
    p[pi[i]] = static_cast<int>(k % l);
    k /= l;
  }
  return p;
}

}  // namespace

PointSet initial_segment(const GridShape& shape, const DominationOrder& order,
                         long long m) {
  if (m < 0 || m > shape.size())
    throw std::domain_error("initial_segment: size out of range");
  PointSet out;
  for (long long k = 0; k < m; ++k) out.insert(point_at(shape, order, k));
  return out;
}

DownSet2D initial_segment_2d(const GridShape& shape, const DominationOrder& order,
                             long long m) {
  if (shape.dim() != 2) throw std::domain_error("initial_segment_2d: 2D shapes only");
  if (m < 0 || m > shape.size())
    throw std::domain_error("initial_segment_2d: size out of range");
  const int l1 = shape.length(0), l2 = shape.length(1);
  std::vector<int> h(l1, 0);
  if (order.is_lex()) {
    long long full = m / l2, rest = m % l2;
    for (int x = 0; x < full; ++x) h[x] = l2;
    if (full < l1) h[full] = static_cast<int>(rest);
  } else {
    long long full = m / l1, rest = m % l1;
    for (int x = 0; x < l1; ++x) h[x] = static_cast<int>(full) + (x < rest ? 1 : 0);
  }
  return DownSet2D(shape, std::move(h));
}

}  // namespace downset

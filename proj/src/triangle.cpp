#include "downset/triangle.hpp"

#include <algorithm>

namespace downset {

TriangleShape::TriangleShape(int ell) : ell_(ell) {
  if (ell < 1) throw std::domain_error("TriangleShape: side must be >= 1");
}

bool TriangleShape::contains(const GridPoint& p) const {
  return p.size() == 2 && 0 <= p[0] && p[0] <= p[1] && p[1] < ell_;
}

void TriangleShape::require(const GridPoint& p) const {
  if (!contains(p)) throw std::domain_error("point outside triangle");
}

std::vector<GridPoint> TriangleShape::all_points() const {
  std::vector<GridPoint> out;
  out.reserve(static_cast<size_t>(size()));
  for (int x = 0; x < ell_; ++x) {
    for (int y = x; y < ell_; ++y) out.push_back({x, y});
  }
  return out;
}

bool triangle_is_downset(const TriangleShape& shape, const PointSet& s) {
  for (const GridPoint& p : s) {
    shape.require(p);
    GridPoint left{p[0] - 1, p[1]};
    if (shape.contains(left) && !s.count(left)) return false;
    GridPoint below{p[0], p[1] - 1};
    if (shape.contains(below) && !s.count(below)) return false;
  }
  return true;
}

TriangleDownSet::TriangleDownSet(TriangleShape shape, std::vector<int> tops)
    : shape_(shape), tops_(std::move(tops)) {
  if (static_cast<int>(tops_.size()) != shape_.ell())
    throw std::domain_error("TriangleDownSet: one top per column required");
  for (size_t x = 0; x < tops_.size(); ++x) {
    int t = tops_[x];
    if (t != 0 && (t < static_cast<int>(x) + 1 || t > shape_.ell()))
      throw std::domain_error("TriangleDownSet: top out of range");
    if (x > 0 && t > tops_[x - 1])
      throw std::domain_error("TriangleDownSet: tops must be weakly decreasing");
  }
}

TriangleDownSet TriangleDownSet::from_points(const TriangleShape& shape,
                                             const PointSet& s) {
  if (!triangle_is_downset(shape, s))
    throw std::domain_error("TriangleDownSet: point set is not a downset");
  std::vector<int> tops(shape.ell(), 0);
  for (const GridPoint& p : s) tops[p[0]] = std::max(tops[p[0]], p[1] + 1);
  return TriangleDownSet(shape, std::move(tops));
}

long long TriangleDownSet::size() const {
  long long n = 0;
  for (size_t x = 0; x < tops_.size(); ++x) {
    if (tops_[x] > 0) n += tops_[x] - static_cast<int>(x);
  }
  return n;
}

PointSet TriangleDownSet::points() const {
  PointSet out;
  for (int x = 0; x < shape_.ell(); ++x) {
    for (int y = x; y < tops_[x]; ++y) out.insert({x, y});
  }
  return out;
}

bool TriangleDownSet::contains(const GridPoint& p) const {
  return shape_.contains(p) && p[1] < tops_[p[0]];
}

GridPoint diagonal_point(const TriangleShape& shape, const PointSet& a) {
  if (a.empty()) throw std::domain_error("diagonal_point: empty downset");
  for (int x = shape.ell() - 1; x >= 0; --x) {
    if (a.count(GridPoint{x, x})) return {x, x};
  }
  throw std::domain_error("diagonal_point: downset misses (0,0)");
}

PackedBox diagonal_lattice(const TriangleShape& shape, const GridPoint& p) {
  shape.require(p);
  if (p[0] != p[1]) throw std::domain_error("diagonal_lattice: point off the diagonal");
  const int y = p[0];
  return PackedBox(shape.ambient(), {0, y}, {y, shape.ell() - 1});
}

PackedBox diagonal_lattice_of(const TriangleShape& shape, const PointSet& a) {
  return diagonal_lattice(shape, diagonal_point(shape, a));
}

PointSet triangle_initial_segment(const TriangleShape& shape,
                                  const DominationOrder& order, long long m) {
  if (m < 0 || m > shape.size())
    throw std::domain_error("triangle_initial_segment: size out of range");
  std::vector<GridPoint> pts = shape.all_points();
  std::sort(pts.begin(), pts.end(),
            [&](const GridPoint& a, const GridPoint& b) { return order.less(a, b); });
  return PointSet(pts.begin(), pts.begin() + m);
}

namespace {

// Packed boxes with equal sides lying entirely inside the triangle.
std::vector<PackedBox> triangle_square_boxes(const TriangleShape& shape) {
  std::vector<PackedBox> out;
  const int ell = shape.ell();
  GridShape ambient = shape.ambient();
  for (int s = 2; s <= ell; ++s) {
    for (int a0 = 0; a0 + s - 1 < ell; ++a0) {
      for (int b0 = a0 + s - 1; b0 + s - 1 < ell; ++b0) {
        out.emplace_back(ambient, GridPoint{a0, b0}, GridPoint{a0 + s - 1, b0 + s - 1});
      }
    }
  }
  return out;
}

}  // namespace

RectClassification classify_triangle(const TriangleShape& shape, const PointSet& a) {
  const long long m = static_cast<long long>(a.size());
  const PointSet lex_seg = triangle_initial_segment(shape, DominationOrder::lex(2), m);
  if (a == lex_seg) return {SegmentKind::LexSegment, {}, {}};
  const PointSet colex_seg = triangle_initial_segment(shape, DominationOrder::colex(2), m);
  if (a == colex_seg) return {SegmentKind::ColexSegment, {}, {}};

  // No explicit box catalogue exists for triangles; search every packed box.
  for (const PackedBox& box : triangle_square_boxes(shape)) {
    for (const auto* seg : {&lex_seg, &colex_seg}) {
      for (auto [c1, c2] : {std::pair{0, 1}, std::pair{1, 0}}) {
        if (symmetrize_set(box, *seg, c1, c2) == a) {
          SegmentKind kind = seg == &lex_seg ? SegmentKind::SymOfLex
                                             : SegmentKind::SymOfColex;
          return {kind, box, std::pair{c1, c2}};
        }
      }
    }
  }
  return {SegmentKind::Unstructured, {}, {}};
}

BestSegment best_segment_weight(const TriangleShape& shape, const RankWeight& w,
                                long long m) {
  double lex_w =
      weight_of(w, triangle_initial_segment(shape, DominationOrder::lex(2), m));
  double colex_w =
      weight_of(w, triangle_initial_segment(shape, DominationOrder::colex(2), m));
  if (weight_eq(lex_w, colex_w)) return {lex_w, BestSegment::Which::Both};
  if (lex_w > colex_w) return {lex_w, BestSegment::Which::Lex};
  return {colex_w, BestSegment::Which::Colex};
}

std::vector<PointSet> diagonal_rectify(const TriangleShape& shape, const PointSet& a,
                                       OrderTag direction) {
  if (!triangle_is_downset(shape, a))
    throw std::domain_error("diagonal_rectify: not a triangle downset");
  const DominationOrder order = direction == OrderTag::Lex
                                    ? DominationOrder::lex(2)
                                    : DominationOrder::colex(2);
  std::vector<PointSet> seq{a};
  if (a.empty()) return seq;

  for (int guard = 0; guard <= shape.ell() + 1; ++guard) {
    const PointSet& cur = seq.back();
    PackedBox box = diagonal_lattice_of(shape, cur);
    std::vector<GridPoint> box_points;
    PointSet next;
    for (const GridPoint& p : cur) {
      if (box.contains(p)) {
        box_points.push_back(p);  // placeholder for count
      } else {
        next.insert(p);
      }
    }
    // Replace the box intersection by the equal-size initial segment of the
    // order restricted to the box.
    std::vector<GridPoint> all_in_box;
    GridShape ambient = shape.ambient();
    for (int x = box.lo()[0]; x <= box.hi()[0]; ++x) {
      for (int y = box.lo()[1]; y <= box.hi()[1]; ++y) all_in_box.push_back({x, y});
    }
    std::sort(all_in_box.begin(), all_in_box.end(),
              [&](const GridPoint& p, const GridPoint& q) { return order.less(p, q); });
    next.insert(all_in_box.begin(), all_in_box.begin() + box_points.size());

    if (next == cur) return seq;
    if (!triangle_is_downset(shape, next))
      throw std::logic_error("diagonal_rectify: step left the downset lattice");
    seq.push_back(std::move(next));
  }
  throw std::logic_error("diagonal_rectify: failed to stabilize");
}

}  // namespace downset

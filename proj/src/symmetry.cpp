#include "downset/symmetry.hpp"

#include <algorithm>

namespace downset {

PackedBox::PackedBox(GridShape ambient, GridPoint lo, GridPoint hi)
    : ambient_(std::move(ambient)), lo_(std::move(lo)), hi_(std::move(hi)) {
  const int d = ambient_.dim();
  if (static_cast<int>(lo_.size()) != d || static_cast<int>(hi_.size()) != d)
    throw std::domain_error("PackedBox: bound arity mismatch");
  for (int i = 0; i < d; ++i) {
    if (lo_[i] < 0 || lo_[i] > hi_[i] || hi_[i] >= ambient_.length(i))
      throw std::domain_error("PackedBox: bounds out of range");
  }
}

PackedBox PackedBox::full(const GridShape& ambient) {
  GridPoint lo(ambient.dim(), 0);
  GridPoint hi(ambient.dim());
  for (int i = 0; i < ambient.dim(); ++i) hi[i] = ambient.length(i) - 1;
  return PackedBox(ambient, std::move(lo), std::move(hi));
}

bool PackedBox::contains(const GridPoint& p) const {
  for (int i = 0; i < ambient_.dim(); ++i) {
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  }
  return true;
}

long long PackedBox::size() const {
  long long n = 1;
  for (int i = 0; i < ambient_.dim(); ++i) n *= side(i);
  return n;
}

bool is_packed(const GridShape& shape, const PointSet& s) {
  if (s.empty()) return false;
  const int d = shape.dim();
  GridPoint lo(d, 0), hi(d, 0);
  bool first = true;
  for (const GridPoint& p : s) {
    shape.require(p);
    for (int i = 0; i < d; ++i) {
      lo[i] = first ? p[i] : std::min(lo[i], p[i]);
      hi[i] = first ? p[i] : std::max(hi[i], p[i]);
    }
    first = false;
  }
  long long span = 1;
  for (int i = 0; i < d; ++i) span *= hi[i] - lo[i] + 1;
  return span == static_cast<long long>(s.size());
}

namespace {

void check_reflection_args(const PackedBox& box, int c1, int c2, const GridPoint& f) {
  const int d = box.ambient().dim();
  if (c1 < 0 || c1 >= d || c2 < 0 || c2 >= d || c1 == c2)
    throw std::domain_error("reflect_point: bad coordinate pair");
  if (box.side(c1) != box.side(c2))
    throw std::domain_error("reflect_point: box side lengths differ along c1, c2");
  if (!box.contains(f)) throw std::domain_error("reflect_point: point outside box");
}

}  // namespace

GridPoint reflect_point(const PackedBox& box, int c1, int c2, const GridPoint& f) {
  check_reflection_args(box, c1, c2, f);
  int o1 = f[c1] - box.lo()[c1];
  int o2 = f[c2] - box.lo()[c2];
  GridPoint g = f;
  g[c1] = box.lo()[c1] + o2;
  g[c2] = box.lo()[c2] + o1;
  return g;
}

GridPoint symmetrize_point(const PackedBox& box, int c1, int c2, const GridPoint& f) {
  check_reflection_args(box, c1, c2, f);
  int o1 = f[c1] - box.lo()[c1];
  int o2 = f[c2] - box.lo()[c2];
  return o1 < o2 ? reflect_point(box, c1, c2, f) : f;
}

PointSet symmetrize_set(const PackedBox& box, const PointSet& a, int c1, int c2) {
  PointSet out;
  for (const GridPoint& f : a) {
    if (!box.contains(f)) {
      out.insert(f);
      continue;
    }
    if (a.count(reflect_point(box, c1, c2, f))) out.insert(f);
    out.insert(symmetrize_point(box, c1, c2, f));
  }
  return out;
}

ReflectPushResult apply_reflect_push(const ReflectPushMove& m, const RankWeight& w) {
  const GridShape& shape = m.box.ambient();

  // Hypothesis 1: A is a downset.
  if (!is_downset(shape, m.a))
    throw std::domain_error("reflect-push hypothesis 1 failed: A is not a downset");

  // Hypothesis 2 holds by construction of PackedBox.

  // Hypothesis 3: O inside A n Q, and A \ O still a downset.
  PointSet stripped = m.a;
  for (const GridPoint& p : m.removal) {
    if (!m.a.count(p) || !m.box.contains(p))
      throw std::domain_error("reflect-push hypothesis 3 failed: O not inside A n Q");
    stripped.erase(p);
  }
  if (!is_downset(shape, stripped))
    throw std::domain_error("reflect-push hypothesis 3 failed: A \\ O is not a downset");

  // Hypothesis 4: reflections of O are defined inside the box.
  PointSet reflections;
  for (const GridPoint& p : m.removal)
    reflections.insert(reflect_point(m.box, m.c1, m.c2, p));

  // Hypothesis 5: P disjoint from A, and (A \ O) u P a downset.
  PointSet result = stripped;
  for (const GridPoint& p : m.insertion) {
    if (m.a.count(p))
      throw std::domain_error("reflect-push hypothesis 5 failed: P intersects A");
    shape.require(p);
    result.insert(p);
  }
  if (!is_downset(shape, result))
    throw std::domain_error("reflect-push hypothesis 5 failed: (A \\ O) u P is not a downset");

  // Hypothesis 6: sigma is a weight-nondecreasing bijection from R onto P.
  if (m.sigma.size() != reflections.size() || m.insertion.size() != reflections.size())
    throw std::domain_error("reflect-push hypothesis 6 failed: sigma is not a bijection R -> P");
  PointSet image;
  for (const auto& [r, p] : m.sigma) {
    if (!reflections.count(r) || !m.insertion.count(p))
      throw std::domain_error("reflect-push hypothesis 6 failed: sigma is not a bijection R -> P");
    if (!weight_le(w.of(r), w.of(p)))
      throw std::domain_error("reflect-push hypothesis 6 failed: sigma decreases weight");
    image.insert(p);
  }
  if (image.size() != m.insertion.size())
    throw std::domain_error("reflect-push hypothesis 6 failed: sigma is not a bijection R -> P");

  double delta = weight_of(w, result) - weight_of(w, m.a);
  return ReflectPushResult{std::move(result), delta};
}

}  // namespace downset

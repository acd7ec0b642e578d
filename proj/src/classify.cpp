#include "downset/classify.hpp"

#include <algorithm>

namespace downset {

const char* to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::LexSegment: return "lex-segment";
    case SegmentKind::ColexSegment: return "colex-segment";
    case SegmentKind::SymOfLex: return "symmetrized-lex";
    case SegmentKind::SymOfColex: return "symmetrized-colex";
    case SegmentKind::Unstructured: return "unstructured";
  }
  return "?";
}

std::optional<PackedBox> predicted_packed_box(const GridShape& shape,
                                              const DominationOrder& order,
                                              long long m, BoxVariant variant) {
  if (shape.dim() != 2) throw std::domain_error("predicted_packed_box: 2D shapes only");
  if (m < 0 || m > shape.size())
    throw std::domain_error("predicted_packed_box: size out of range");
  const int u = order.pi()[0];  // primary coordinate of the order
  const int v = order.pi()[1];
  const int lu = shape.length(u), lv = shape.length(v);

  if (variant == BoxVariant::T21) {
    if (m == 0) return std::nullopt;
    // f: last element of the segment. k full u-columns plus r extra points.
    long long k = m / lv, r = m % lv;
    int fu = static_cast<int>(r > 0 ? k : k - 1);
    int p = static_cast<int>(r > 0 ? r : lv);  // |u-column of f n segment|
    long long q = lu - fu - 1;                  // |v = 0 row \ segment|
    if (!(0 < p - 1 && p - 1 <= q)) return std::nullopt;
    GridPoint lo(2), hi(2);
    lo[v] = 0;
    hi[v] = p - 1;
    lo[u] = fu;
    hi[u] = fu + p - 1;
    return PackedBox(shape, std::move(lo), std::move(hi));
  }

  // T22. f: first element outside the segment.
  if (m == shape.size()) return std::nullopt;
  long long k = m / lv, r = m % lv;
  int fu = static_cast<int>(k);
  int fv = static_cast<int>(r);
  int p = lv - fv;        // |u-column of f \ segment|
  long long q = k;        // |v = lv-1 row n segment|
  if (!(0 < p - 1 && p - 1 <= q)) return std::nullopt;
  GridPoint lo(2), hi(2);
  lo[v] = fv;
  hi[v] = lv - 1;
  lo[u] = fu - p + 1;
  hi[u] = fu;
  return PackedBox(shape, std::move(lo), std::move(hi));
}

std::vector<RectClassification> classify_rect_all(const GridShape& shape,
                                                  const DownSet2D& a) {
  const long long m = a.size();
  std::vector<RectClassification> matches;

  const DownSet2D lex_seg = initial_segment_2d(shape, DominationOrder::lex(2), m);
  const DownSet2D colex_seg = initial_segment_2d(shape, DominationOrder::colex(2), m);
  if (a == lex_seg) matches.push_back({SegmentKind::LexSegment, {}, {}});
  if (a == colex_seg) matches.push_back({SegmentKind::ColexSegment, {}, {}});

  const PointSet target = a.points();
  for (const DominationOrder& order : DominationOrder::all(2)) {
    const SegmentKind kind =
        order.is_lex() ? SegmentKind::SymOfLex : SegmentKind::SymOfColex;
    const PointSet seg =
        (order.is_lex() ? lex_seg : colex_seg).points();
    for (BoxVariant variant : {BoxVariant::T21, BoxVariant::T22}) {
      auto box = predicted_packed_box(shape, order, m, variant);
      if (!box) continue;
      for (auto [c1, c2] : {std::pair{0, 1}, std::pair{1, 0}}) {
        PointSet sym = symmetrize_set(*box, seg, c1, c2);
        if (sym == seg || sym != target) continue;
        bool dup = false;
        for (const auto& prev : matches) {
          if (prev.kind == kind && prev.box == box) dup = true;
        }
        if (!dup) matches.push_back({kind, box, std::pair{c1, c2}});
      }
    }
  }
  std::stable_sort(matches.begin(), matches.end(),
                   [](const RectClassification& x, const RectClassification& y) {
                     return static_cast<int>(x.kind) < static_cast<int>(y.kind);
                   });
  return matches;
}

RectClassification classify_rect(const GridShape& shape, const DownSet2D& a) {
  auto matches = classify_rect_all(shape, a);
  if (matches.empty()) return {SegmentKind::Unstructured, {}, {}};
  return matches.front();
}

bool colex_segment_is_optimal(int l1, int l2, long long m) {
  if (l1 < 1 || l2 < 1) throw std::domain_error("colex_segment_is_optimal: bad shape");
  if (m < 0 || m > static_cast<long long>(l1) * l2)
    throw std::domain_error("colex_segment_is_optimal: size out of range");
  if (l1 == l2 || l1 == 1 || l2 == 1) return true;
  if (l2 < l1) return true;  // mirrored regime: colex plays the long-order role
  if (l1 == l2 - 1)
    return m <= l1 || m >= static_cast<long long>(l1) * (l2 - 1) || m % l1 == 0;
  return m <= l1 || m >= static_cast<long long>(l1) * (l2 - 1);
}

bool lex_segment_is_optimal(int l1, int l2, long long m) {
  return colex_segment_is_optimal(l2, l1, m);
}

std::set<OrderTag> nested_solution_orders(int l1, int l2) {
  if (l1 < 1 || l2 < 1) throw std::domain_error("nested_solution_orders: bad shape");
  if (l1 == l2 || l1 == 1 || l2 == 1) return {OrderTag::Lex, OrderTag::Colex};
  if (l1 < l2) return {OrderTag::Lex};
  return {OrderTag::Colex};
}

}  // namespace downset

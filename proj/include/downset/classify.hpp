#pragma once

#include <optional>
#include <utility>

#include "downset/orders.hpp"
#include "downset/symmetry.hpp"

namespace downset {

enum class SegmentKind { LexSegment, ColexSegment, SymOfLex, SymOfColex, Unstructured };

const char* to_string(SegmentKind k);

struct RectClassification {
  SegmentKind kind = SegmentKind::Unstructured;
  std::optional<PackedBox> box;
  std::optional<std::pair<int, int>> coords;  // (c1, c2) of the symmetrization
};

enum class BoxVariant { T21, T22 };

/// The packed box that symmetrizes the size-m initial segment of the given
/// domination order into the alternative optimal shape, when the side
/// condition 0 < p-1 <= q holds; absent otherwise.
///
/// T21 reflects the partial column at the end of the segment into a partial
/// row; T22 reflects the missing top of the first incomplete column into a
/// missing row. The T22 interval arithmetic is the oracle-reconciled form
/// ([f(pi(2)), l-1] x [f(pi(1))-p+1, f(pi(1))]); the literal one does not
/// produce a square box for any input.
std::optional<PackedBox> predicted_packed_box(const GridShape& shape,
                                              const DominationOrder& order,
                                              long long m, BoxVariant variant);

/// Decides which of the structure theorem's shapes a downset has. Ties break
/// LexSegment > ColexSegment > SymOfLex > SymOfColex.
RectClassification classify_rect(const GridShape& shape, const DownSet2D& a);

/// Every matching classification, in tie-break order.
std::vector<RectClassification> classify_rect_all(const GridShape& shape,
                                                  const DownSet2D& a);

/// Closed-form optimality of the size-m colex / lex initial segment of
/// M(l1, l2) under any rank increasing, rank constant weight.
bool colex_segment_is_optimal(int l1, int l2, long long m);
bool lex_segment_is_optimal(int l1, int l2, long long m);

enum class OrderTag { Lex, Colex };

/// Which domination orders give nested solutions on M(l1, l2).
std::set<OrderTag> nested_solution_orders(int l1, int l2);

}  // namespace downset

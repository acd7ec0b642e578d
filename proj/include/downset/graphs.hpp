#pragma once

#include "downset/oracle.hpp"

namespace downset {

/// A simple undirected graph on vertices 0..n-1.
struct SimpleGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // always stored with first < second

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  int degree(int v) const;
  bool is_regular(int* degree_out = nullptr) const;
};

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& h);

/// J(n, 2): vertices are the 2-subsets of {1..n}, adjacent iff they intersect.
/// Vertex v of the graph corresponds to johnson_vertex_pair(n, v).
SimpleGraph johnson_graph(int n);
std::pair<int, int> johnson_vertex_pair(int n, int v);
int johnson_pair_vertex(int n, int a1, int a2);

/// Edges with both ends / exactly one end in A.
std::set<std::pair<int, int>> induced_edges(const SimpleGraph& g,
                                            const std::set<int>& a);
std::set<std::pair<int, int>> boundary_edges(const SimpleGraph& g,
                                             const std::set<int>& a);

/// 2|I(A)| + |Theta(A)| = k|A| on a k-regular graph; non-regular input is a
/// domain error.
bool check_regular_identity(const SimpleGraph& g, const std::set<int>& a);

/// The pair {a1, a2} with 1 <= a1 < a2 <= n, sent to (a1-1, a2-2) in the
/// triangle of side n-1.
GridPoint sigma_bridge(int a1, int a2);

/// Unordered pairs of distinct edges sharing a vertex.
long long adjacent_pairs(const SimpleGraph& g);

/// Best adjacent-pair count over m-edge graphs on n labeled vertices:
/// closed form (best of the two segment weights in the side-(n-1) triangle,
/// standard weight) and exhaustive search (guard n <= 7).
long long ak_optimum(int n, long long m);
long long ak_bruteforce(int n, long long m);

struct DeltaSequence {
  std::vector<double> values;  // values[i-1] = delta(i), i = 1..n
};

/// Successive induced-edge increments of the vertex order (a permutation of
/// 0..n-1, highest priority first).
DeltaSequence delta_sequence(const SimpleGraph& g, const std::vector<int>& order);

/// Additive weight wt(x_1, ..., x_d) = sum_i delta_i(x_i + 1) on the grid whose
/// side i has length |delta_i|.
WeightFn product_weight_table(const std::vector<DeltaSequence>& deltas);

/// A set function on subsets of {0..n-1}, tabulated densely by bitmask.
struct SetFunction {
  int n = 0;
  std::vector<double> table;  // table[mask], size 2^n

  double operator()(unsigned mask) const { return table.at(mask); }
  static SetFunction from(int n, const std::function<double(unsigned)>& f);
};

/// phi^d(A) = sum over all axis-parallel lines L of the d-dimensional grid
/// [n]^d of phi(coordinates of L meeting A).
double phi_power(const SetFunction& phi, int d, const PointSet& a);

struct PushDownCheck {
  bool ok = true;
  std::string violation;  // first failed instance, empty when ok
};

/// Exhaustively checks phi(empty) = 0, nestedness phi(A) <= phi({0..|A|-1}),
/// and submodularity phi(A) + phi(B) <= phi(AuB) + phi(AnB). Guard n <= 5.
PushDownCheck is_push_down(const SetFunction& phi);

/// delta_phi(i) = phi({0..i-1}) - phi({0..i-2}).
DeltaSequence delta_of_phi(const SetFunction& phi);

/// Pushing-down compression: within every fiber of the coordinates in `coords`
/// (0-based), the intersection with A is replaced by the equal-size initial
/// segment of `order` on the fiber. Preserves cardinality; idempotent.
PointSet push_down_compress(const GridShape& shape, const PointSet& a,
                            const std::set<int>& coords,
                            const DominationOrder& order);

struct AgreementReport {
  std::vector<bool> agree;  // indexed by m
  bool all_agree = true;
};

/// Lex initial segments of the d-fold power grid of side n versus the oracle
/// maximum under the standard weight, per size.
AgreementReport verify_local_global(int n, int d);

/// Lex initial segments versus the oracle maximum for a product of cliques
/// K_{dims[0]} x ... under the induced-edge weight, per size.
AgreementReport lindsay_check(const std::vector<int>& dims);

}  // namespace downset

#include "downset/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace downset {

void SimpleGraph::add_edge(int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= n || b >= n)
    throw std::domain_error("SimpleGraph: bad edge");
  edges.insert({std::min(a, b), std::max(a, b)});
}

bool SimpleGraph::has_edge(int a, int b) const {
  return edges.count({std::min(a, b), std::max(a, b)}) > 0;
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

bool SimpleGraph::is_regular(int* degree_out) const {
  if (n == 0) return true;
  int k = degree(0);
  for (int v = 1; v < n; ++v) {
    if (degree(v) != k) return false;
  }
  if (degree_out) *degree_out = k;
  return true;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g{n, {}};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.edges.insert({a, b});
  }
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw std::domain_error("cycle_graph: need at least 3 vertices");
  SimpleGraph g{n, {}};
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& h) {
  SimpleGraph out{g.n * h.n, {}};
  auto id = [&](int u, int v) { return u * h.n + v; };
  for (int u = 0; u < g.n; ++u) {
    for (const auto& [a, b] : h.edges) out.add_edge(id(u, a), id(u, b));
  }
  for (int v = 0; v < h.n; ++v) {
    for (const auto& [a, b] : g.edges) out.add_edge(id(a, v), id(b, v));
  }
  return out;
}

std::pair<int, int> johnson_vertex_pair(int n, int v) {
  if (n < 2) throw std::domain_error("johnson_vertex_pair: n must be >= 2");
  int idx = 0;
  for (int a1 = 1; a1 <= n; ++a1) {
    for (int a2 = a1 + 1; a2 <= n; ++a2) {
      if (idx == v) return {a1, a2};
      ++idx;
    }
  }
  throw std::domain_error("johnson_vertex_pair: vertex out of range");
}

int johnson_pair_vertex(int n, int a1, int a2) {
  if (!(1 <= a1 && a1 < a2 && a2 <= n))
    throw std::domain_error("johnson_pair_vertex: malformed pair");
  int idx = 0;
  for (int x = 1; x < a1; ++x) idx += n - x;
  return idx + (a2 - a1 - 1);
}

SimpleGraph johnson_graph(int n) {
  if (n < 2) throw std::domain_error("johnson_graph: n must be >= 2");
  const int nv = n * (n - 1) / 2;
  SimpleGraph g{nv, {}};
  for (int u = 0; u < nv; ++u) {
    auto [a1, a2] = johnson_vertex_pair(n, u);
    for (int v = u + 1; v < nv; ++v) {
      auto [b1, b2] = johnson_vertex_pair(n, v);
      int common = (a1 == b1) + (a1 == b2) + (a2 == b1) + (a2 == b2);
      if (common == 1) g.add_edge(u, v);
    }
  }
  return g;
}

std::set<std::pair<int, int>> induced_edges(const SimpleGraph& g,
                                            const std::set<int>& a) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : g.edges) {
    if (a.count(e.first) && a.count(e.second)) out.insert(e);
  }
  return out;
}

std::set<std::pair<int, int>> boundary_edges(const SimpleGraph& g,
                                             const std::set<int>& a) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : g.edges) {
    if (a.count(e.first) + a.count(e.second) == 1) out.insert(e);
  }
  return out;
}

bool check_regular_identity(const SimpleGraph& g, const std::set<int>& a) {
  int k = 0;
  if (!g.is_regular(&k)) throw std::domain_error("check_regular_identity: graph not regular");
  long long i = static_cast<long long>(induced_edges(g, a).size());
  long long t = static_cast<long long>(boundary_edges(g, a).size());
  return 2 * i + t == static_cast<long long>(k) * static_cast<long long>(a.size());
}

GridPoint sigma_bridge(int a1, int a2) {
  if (!(1 <= a1 && a1 < a2)) throw std::domain_error("sigma_bridge: malformed pair");
  return {a1 - 1, a2 - 2};
}

long long adjacent_pairs(const SimpleGraph& g) {
  long long total = 0;
  for (int v = 0; v < g.n; ++v) {
    long long d = g.degree(v);
    total += d * (d - 1) / 2;
  }
  return total;
}

long long ak_optimum(int n, long long m) {
  if (n < 2) throw std::domain_error("ak_optimum: n must be >= 2");
  TriangleShape tri(n - 1);
  if (m < 0 || m > tri.size()) throw std::domain_error("ak_optimum: size out of range");
  RankWeight w = RankWeight::standard(2 * (n - 2));
  return std::llround(best_segment_weight(tri, w, m).weight);
}

long long ak_bruteforce(int n, long long m) {
  if (n < 2) throw std::domain_error("ak_bruteforce: n must be >= 2");
  if (n > 7) throw resource_error("ak_bruteforce: n above 7 is out of reach");
  std::vector<std::pair<int, int>> all_edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) all_edges.push_back({a, b});
  }
  const int ne = static_cast<int>(all_edges.size());
  if (m < 0 || m > ne) throw std::domain_error("ak_bruteforce: size out of range");

  long long best = 0;
  std::vector<int> deg(n, 0);
  // Walk all m-combinations of edge indices.
  std::vector<int> idx(m);
  for (long long i = 0; i < m; ++i) idx[i] = static_cast<int>(i);
  auto evaluate = [&]() {
    std::fill(deg.begin(), deg.end(), 0);
    for (int i : idx) {
      ++deg[all_edges[i].first];
      ++deg[all_edges[i].second];
    }
    long long p = 0;
    for (int v = 0; v < n; ++v) p += static_cast<long long>(deg[v]) * (deg[v] - 1) / 2;
    best = std::max(best, p);
  };
  if (m == 0) return 0;
  while (true) {
    evaluate();
    long long i = m - 1;
    while (i >= 0 && idx[i] == ne - static_cast<int>(m - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (long long j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

DeltaSequence delta_sequence(const SimpleGraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n)
    throw std::domain_error("delta_sequence: order must list every vertex once");
  DeltaSequence out;
  std::set<int> seen;
  for (int v : order) {
    if (v < 0 || v >= g.n || !seen.insert(v).second)
      throw std::domain_error("delta_sequence: order must list every vertex once");
    int gained = 0;
    for (int u : seen) {
      if (u != v && g.has_edge(u, v)) ++gained;
    }
    out.values.push_back(gained);
  }
  return out;
}

WeightFn product_weight_table(const std::vector<DeltaSequence>& deltas) {
  return [deltas](const GridPoint& p) {
    if (p.size() != deltas.size())
      throw std::domain_error("product_weight_table: arity mismatch");
    double wt = 0;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= static_cast<int>(deltas[i].values.size()))
        throw std::domain_error("product_weight_table: coordinate out of range");
      wt += deltas[i].values[p[i]];
    }
    return wt;
  };
}

SetFunction SetFunction::from(int n, const std::function<double(unsigned)>& f) {
  SetFunction phi{n, {}};
  phi.table.resize(1u << n);
  for (unsigned mask = 0; mask < phi.table.size(); ++mask) phi.table[mask] = f(mask);
  return phi;
}

double phi_power(const SetFunction& phi, int d, const PointSet& a) {
  if (d < 1) throw std::domain_error("phi_power: dimension must be >= 1");
  const int n = phi.n;
  for (const GridPoint& p : a) {
    if (static_cast<int>(p.size()) != d)
      throw std::domain_error("phi_power: point arity mismatch");
    for (int c : p) {
      if (c < 0 || c >= n) throw std::domain_error("phi_power: coordinate out of range");
    }
  }
  double total = 0;
  GridPoint p(d, 0);
  for (int i = 0; i < d; ++i) {
    // Anchors: every assignment of the other d-1 coordinates.
    std::vector<int> anchor(d - 1, 0);
    while (true) {
      unsigned mask = 0;
      for (int k = 0, j = 0; k < d; ++k) p[k] = (k == i) ? 0 : anchor[j++];
      for (int x = 0; x < n; ++x) {
        p[i] = x;
        if (a.count(p)) mask |= 1u << x;
      }
      total += phi(mask);
      int j = d - 2;
      while (j >= 0 && anchor[j] == n - 1) anchor[j--] = 0;
      if (j < 0) break;
      ++anchor[j];
    }
  }
  return total;
}

namespace {

std::string mask_str(unsigned mask, int n) {
  std::ostringstream s;
  s << '{';
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) {
      if (!first) s << ',';
      s << i;
      first = false;
    }
  }
  s << '}';
  return s.str();
}

}  // namespace

PushDownCheck is_push_down(const SetFunction& phi) {
  if (phi.n > 5) throw resource_error("is_push_down: ground sets above 5 are out of reach");
  const unsigned full = 1u << phi.n;
  if (!weight_eq(phi(0), 0.0)) return {false, "phi(empty) != 0"};
  for (unsigned mask = 0; mask < full; ++mask) {
    unsigned prefix = (1u << std::popcount(mask)) - 1;
    if (!weight_le(phi(mask), phi(prefix)))
      return {false, "nestedness fails on " + mask_str(mask, phi.n)};
  }
  for (unsigned a = 0; a < full; ++a) {
    for (unsigned b = 0; b < full; ++b) {
      if (!weight_le(phi(a) + phi(b), phi(a | b) + phi(a & b)))
        return {false, "submodularity fails on " + mask_str(a, phi.n) + ", " +
                           mask_str(b, phi.n)};
    }
  }
  return {true, ""};
}

DeltaSequence delta_of_phi(const SetFunction& phi) {
  DeltaSequence out;
  for (int i = 1; i <= phi.n; ++i) {
    unsigned cur = (1u << i) - 1, prev = (1u << (i - 1)) - 1;
    out.values.push_back(phi(cur) - phi(prev));
  }
  return out;
}

PointSet push_down_compress(const GridShape& shape, const PointSet& a,
                            const std::set<int>& coords,
                            const DominationOrder& order) {
  if (order.dim() != static_cast<int>(coords.size()))
    throw std::domain_error("push_down_compress: order arity must match coords");
  for (const GridPoint& p : a) shape.require(p);
  auto project = [&](const GridPoint& p) {
    GridPoint q;
    for (int c : coords) q.push_back(p[c]);
    return q;
  };

  // Group A by its complementary coordinates, then rebuild each fiber.
  std::map<GridPoint, long long> fiber_counts;
  auto anchor_of = [&](const GridPoint& p) {
    GridPoint anchor;
    for (int c = 0; c < shape.dim(); ++c) {
      if (!coords.count(c)) anchor.push_back(p[c]);
    }
    return anchor;
  };
  for (const GridPoint& p : a) ++fiber_counts[anchor_of(p)];

  PointSet out;
  for (const auto& [anchor, count] : fiber_counts) {
    std::vector<GridPoint> fiber;
    for (const GridPoint& p : subproduct_at(shape, coords, anchor)) fiber.push_back(p);
    std::sort(fiber.begin(), fiber.end(), [&](const GridPoint& p, const GridPoint& q) {
      return order.less(project(p), project(q));
    });
    for (long long i = 0; i < count; ++i) out.insert(fiber[static_cast<size_t>(i)]);
  }
  return out;
}

namespace {

AgreementReport check_lex_against_oracle(const GridShape& shape, const WeightFn& w) {
  AgreementReport report;
  std::vector<SizeOptima> by_size = optimal_downsets_by_size(shape, w);
  DominationOrder lex = DominationOrder::lex(shape.dim());
  for (long long m = 0; m <= shape.size(); ++m) {
    PointSet seg = initial_segment(shape, lex, m);
    double seg_w = 0;
    for (const GridPoint& p : seg) seg_w += w(p);
    bool ok = weight_eq(seg_w, by_size[static_cast<size_t>(m)].max_weight);
    report.agree.push_back(ok);
    report.all_agree = report.all_agree && ok;
  }
  return report;
}

}  // namespace

AgreementReport verify_local_global(int n, int d) {
  if (n < 1 || d < 2 || d > 3)
    throw std::domain_error("verify_local_global: supported shapes are 2D and 3D");
  GridShape shape(std::vector<int>(d, n));
  RankWeight w = RankWeight::standard(shape);
  return check_lex_against_oracle(shape, weight_fn(w));
}

AgreementReport lindsay_check(const std::vector<int>& dims) {
  if (dims.empty() || dims.size() > 3)
    throw std::domain_error("lindsay_check: 1 to 3 clique factors");
  std::vector<DeltaSequence> deltas;
  for (int k : dims) {
    if (k < 1) throw std::domain_error("lindsay_check: factor sizes must be >= 1");
    DeltaSequence d;
    for (int i = 0; i < k; ++i) d.values.push_back(i);
    deltas.push_back(std::move(d));
  }
  WeightFn w = product_weight_table(deltas);
  if (dims.size() == 1) {
    // A chain: the only downset of each size is the lex segment.
    AgreementReport report;
    report.agree.assign(static_cast<size_t>(dims[0]) + 1, true);
    return report;
  }
  return check_lex_against_oracle(GridShape(dims), w);
}

}  // namespace downset

#include "downset/oracle.hpp"

#include <algorithm>

namespace downset {

WeightFn weight_fn(const RankWeight& w) {
  return [w](const GridPoint& p) { return w.of(p); };
}

namespace {

void rec_profiles_2d(int x, int l1, int bound,
                     std::vector<int>& heights,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (x == l1) {
    fn(heights);
    return;
  }
  for (int h = bound; h >= 0; --h) {
    heights[x] = h;
    rec_profiles_2d(x + 1, l1, h, heights, fn);
  }
}

}  // namespace

void enumerate_downsets_2d(int l1, int l2,
                           const std::function<void(const std::vector<int>&)>& fn) {
  if (l1 < 1 || l2 < 1) throw std::domain_error("enumerate_downsets_2d: bad shape");
  std::vector<int> heights(l1, 0);
  rec_profiles_2d(0, l1, l2, heights, fn);
}

void enumerate_downsets_3d(
    const GridShape& shape,
    const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  if (shape.dim() != 3) throw std::domain_error("enumerate_downsets_3d: 3D shapes only");
  for (int i = 0; i < 3; ++i) {
    if (shape.length(i) > 4)
      throw resource_error("enumerate_downsets_3d: sides above 4 are out of reach");
  }
  const int l1 = shape.length(0), l2 = shape.length(1), l3 = shape.length(2);
  // layers[z][x] is the column height over (x, z); layer 0 is capped by l2 and
  // each later layer by the one below it.
  std::vector<std::vector<int>> layers(l3 + 1, std::vector<int>(l1, l2));
  std::vector<std::vector<int>> out(l3);
  std::function<void(int)> go = [&](int z) {
    if (z == l3) {
      fn(out);
      return;
    }
    const std::vector<int>& cap = layers[z];
    std::function<void(int, int, std::vector<int>&)> cols =
        [&](int x, int col_bound, std::vector<int>& cur) {
          if (x == l1) {
            layers[z + 1] = cur;
            out[z] = cur;
            go(z + 1);
            return;
          }
          int hi = std::min(col_bound, cap[x]);
          for (int h = hi; h >= 0; --h) {
            cur[x] = h;
            cols(x + 1, h, cur);
          }
        };
    std::vector<int> cur(l1, 0);
    cols(0, l2, cur);
  };
  go(0);
}

void enumerate_downsets_generic(const GridShape& ambient,
                                const std::vector<GridPoint>& points,
                                const std::function<void(const PointSet&)>& fn) {
  // Process along a linear extension so every point's shadow precedes it.
  std::vector<GridPoint> order = points;
  std::sort(order.begin(), order.end(), [](const GridPoint& a, const GridPoint& b) {
    int ra = rank(a), rb = rank(b);
    return ra != rb ? ra < rb : a < b;
  });
  PointSet domain(order.begin(), order.end());
  PointSet chosen;
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == order.size()) {
      fn(chosen);
      return;
    }
    const GridPoint& p = order[i];
    go(i + 1);  // exclude p
    for (const GridPoint& q : lower_shadow(ambient, p)) {
      if (domain.count(q) && !chosen.count(q)) return;
    }
    chosen.insert(p);
    go(i + 1);
    chosen.erase(p);
  };
  go(0);
}

void enumerate_downsets_triangle(const TriangleShape& shape,
                                 const std::function<void(const PointSet&)>& fn) {
  if (shape.size() > 40)
    throw resource_error("enumerate_downsets_triangle: more than 40 elements");
  enumerate_downsets_generic(shape.ambient(), shape.all_points(), fn);
}

namespace {

void record(std::vector<SizeOptima>& by_size, long long m, double wt, PointSet pts) {
  SizeOptima& slot = by_size[static_cast<size_t>(m)];
  if (slot.argmax.empty() || weight_lt(slot.max_weight, wt)) {
    slot.max_weight = wt;
    slot.argmax.clear();
    slot.argmax.push_back(std::move(pts));
  } else if (weight_eq(slot.max_weight, wt)) {
    slot.argmax.push_back(std::move(pts));
  }
}

void finalize(std::vector<SizeOptima>& by_size) {
  for (SizeOptima& slot : by_size) {
    std::sort(slot.argmax.begin(), slot.argmax.end());
    slot.argmax.erase(std::unique(slot.argmax.begin(), slot.argmax.end()),
                      slot.argmax.end());
  }
}

}  // namespace

std::vector<SizeOptima> optimal_downsets_by_size(const GridShape& shape,
                                                 const WeightFn& w) {
  std::vector<SizeOptima> by_size(static_cast<size_t>(shape.size()) + 1);
  if (shape.dim() == 2) {
    const int l1 = shape.length(0);
    enumerate_downsets_2d(l1, shape.length(1), [&](const std::vector<int>& h) {
      long long m = 0;
      double wt = 0;
      PointSet pts;
      GridPoint p(2);
      for (int x = 0; x < l1; ++x) {
        m += h[x];
        p[0] = x;
        for (int y = 0; y < h[x]; ++y) {
          p[1] = y;
          wt += w(p);
          pts.insert(p);
        }
      }
      record(by_size, m, wt, std::move(pts));
    });
  } else if (shape.dim() == 3) {
    const int l1 = shape.length(0), l3 = shape.length(2);
    enumerate_downsets_3d(shape, [&](const std::vector<std::vector<int>>& layers) {
      long long m = 0;
      double wt = 0;
      PointSet pts;
      GridPoint p(3);
      for (int z = 0; z < l3; ++z) {
        p[2] = z;
        for (int x = 0; x < l1; ++x) {
          m += layers[z][x];
          p[0] = x;
          for (int y = 0; y < layers[z][x]; ++y) {
            p[1] = y;
            wt += w(p);
            pts.insert(p);
          }
        }
      }
      record(by_size, m, wt, std::move(pts));
    });
  } else {
    throw std::domain_error("optimal_downsets_by_size: only 2D and 3D grids");
  }
  finalize(by_size);
  return by_size;
}

std::vector<SizeOptima> optimal_downsets_by_size(const TriangleShape& shape,
                                                 const WeightFn& w) {
  std::vector<SizeOptima> by_size(static_cast<size_t>(shape.size()) + 1);
  enumerate_downsets_triangle(shape, [&](const PointSet& pts) {
    double wt = 0;
    for (const GridPoint& p : pts) wt += w(p);
    record(by_size, static_cast<long long>(pts.size()), wt, pts);
  });
  finalize(by_size);
  return by_size;
}

SizeOptima optimal_downsets(const GridShape& shape, const WeightFn& w, long long m) {
  if (m < 0 || m > shape.size())
    throw std::domain_error("optimal_downsets: size out of range");
  return optimal_downsets_by_size(shape, w)[static_cast<size_t>(m)];
}

SizeOptima optimal_downsets(const TriangleShape& shape, const WeightFn& w,
                            long long m) {
  if (m < 0 || m > shape.size())
    throw std::domain_error("optimal_downsets: size out of range");
  return optimal_downsets_by_size(shape, w)[static_cast<size_t>(m)];
}

NestedChainResult nested_chain(const std::vector<SizeOptima>& by_size) {
  const size_t levels = by_size.size();
  NestedChainResult res;
  if (levels == 0) return res;

  // forward[m][i]: some chain from size 0 reaches argmax i at size m;
  // chains[m][i]: how many.
  std::vector<std::vector<long long>> chains(levels);
  chains[0].assign(by_size[0].argmax.size(), 1);
  for (size_t m = 1; m < levels; ++m) {
    const auto& cur = by_size[m].argmax;
    const auto& prev = by_size[m - 1].argmax;
    chains[m].assign(cur.size(), 0);
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = 0; j < prev.size(); ++j) {
        if (chains[m - 1][j] == 0) continue;
        if (std::includes(cur[i].begin(), cur[i].end(), prev[j].begin(),
                          prev[j].end())) {
          chains[m][i] += chains[m - 1][j];
        }
      }
    }
  }
  for (long long c : chains[levels - 1]) res.full_chain_count += c;
  res.exists = res.full_chain_count > 0;

  if (!res.exists) {
    for (size_t m = 0; m < levels; ++m) {
      bool reachable = false;
      for (long long c : chains[m]) reachable = reachable || c > 0;
      if (!reachable) {
        res.obstruction_size = static_cast<long long>(m);
        break;
      }
    }
    return res;
  }

  // Extract one witness by walking backwards from a reachable top node.
  std::vector<size_t> pick(levels);
  for (size_t i = 0; i < chains[levels - 1].size(); ++i) {
    if (chains[levels - 1][i] > 0) pick[levels - 1] = i;
  }
  for (size_t m = levels - 1; m > 0; --m) {
    const PointSet& cur = by_size[m].argmax[pick[m]];
    const auto& prev = by_size[m - 1].argmax;
    for (size_t j = 0; j < prev.size(); ++j) {
      if (chains[m - 1][j] > 0 &&
          std::includes(cur.begin(), cur.end(), prev[j].begin(), prev[j].end())) {
        pick[m - 1] = j;
        break;
      }
    }
  }
  for (size_t m = 0; m < levels; ++m) res.chain.push_back(by_size[m].argmax[pick[m]]);
  return res;
}

NestedChainResult nested_chain_exists(const GridShape& shape, const WeightFn& w) {
  return nested_chain(optimal_downsets_by_size(shape, w));
}

}  // namespace downset

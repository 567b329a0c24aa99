// Copyright 2026 The symilp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symilp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symilp/errors.hpp"

namespace symilp {

int LabeledGraph::add_node(int label) {
  labels_.push_back(label);
  adj_.emplace_back();
  return node_count() - 1;
}

void LabeledGraph::add_edge(int u, int v) {
  if (u == v) throw std::logic_error("loops are not allowed");
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
  ++edges_;
  sorted_ = false;
}

void LabeledGraph::finalize() {
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::logic_error("repeated edge");
    }
  }
  sorted_ = true;
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (!sorted_) throw std::logic_error("graph is not finalized");
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

int LabeledGraph::label_count() const {
  std::vector<int> l(labels_);
  std::sort(l.begin(), l.end());
  return static_cast<int>(std::unique(l.begin(), l.end()) - l.begin());
}

std::vector<std::vector<int>> LabeledGraph::label_classes() const {
  std::vector<int> order(labels_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return label(a) < label(b); });
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || label(order[i]) != label(order[i - 1])) out.emplace_back();
    out.back().push_back(order[i]);
  }
  return out;
}

bool is_automorphism(const LabeledGraph& g, const std::vector<int>& map) {
  const int n = g.node_count();
  if (static_cast<int>(map.size()) != n) return false;
  std::vector<bool> hit(map.size(), false);
  for (int v = 0; v < n; ++v) {
    const int w = map[static_cast<std::size_t>(v)];
    if (w < 0 || w >= n || hit[static_cast<std::size_t>(w)]) return false;
    hit[static_cast<std::size_t>(w)] = true;
    if (g.label(v) != g.label(w)) return false;
    if (g.neighbors(v).size() != g.neighbors(w).size()) return false;
  }
  for (int v = 0; v < n; ++v) {
    const int w = map[static_cast<std::size_t>(v)];
    for (int u : g.neighbors(v)) {
      if (u < v) continue;
      if (!g.has_edge(w, map[static_cast<std::size_t>(u)])) return false;
    }
  }
  return true;
}

namespace {

// An equitable ordered partition: colour[v] in [0, cells), numbered
// canonically so that isomorphic configurations get matching colours.
struct Partition {
  std::vector<int> colour;
  int cells = 0;
  std::uint64_t invariant = 0;

  bool discrete() const { return cells == static_cast<int>(colour.size()); }
};

class Search {
 public:
  Search(const LabeledGraph& g, std::size_t budget) : g_(g), budget_(budget) {}

  AutomorphismGroup run() {
    const int n = g_.node_count();
    AutomorphismGroup out;
    out.order = 1;
    if (n == 0) return out;

    Partition root;
    root.colour.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) root.colour[static_cast<std::size_t>(v)] = g_.label(v);
    refine(root);

    // First path down to a leaf, always individualizing the smallest vertex of
    // the first non-singleton cell.
    path_.push_back(root);
    while (!path_.back().discrete()) {
      const int cell = target_cell(path_.back());
      const int v = first_in_cell(path_.back(), cell);
      base_.push_back(v);
      path_.push_back(individualize(path_.back(), v));
    }
    leaf_ = path_.back().colour;

    parent_.resize(static_cast<std::size_t>(n));
    std::iota(parent_.begin(), parent_.end(), 0);

    for (int level = static_cast<int>(base_.size()) - 1; level >= 0; --level) {
      const Partition& here = path_[static_cast<std::size_t>(level)];
      const int cell = target_cell(here);
      const int base = base_[static_cast<std::size_t>(level)];
      std::vector<int> members;
      for (int v = 0; v < n; ++v) {
        if (here.colour[static_cast<std::size_t>(v)] == cell) members.push_back(v);
      }
      // Orbits under the generators found so far, which all fix the earlier
      // base points.
      rebuild_orbits(out.generators, n);
      std::vector<bool> failed(static_cast<std::size_t>(n), false);
      for (int w : members) {
        if (w == base || find(w) == find(base) || failed[static_cast<std::size_t>(w)]) continue;
        std::vector<int> found;
        if (explore(individualize(here, w), level + 1, found)) {
          out.generators.push_back(std::move(found));
          rebuild_orbits(out.generators, n);
        } else {
          const int root = find(w);
          for (int v : members) {
            if (find(v) == root) failed[static_cast<std::size_t>(v)] = true;
          }
        }
      }
      long orbit = 0;
      for (int w : members) orbit += find(w) == find(base) ? 1 : 0;
      out.order *= orbit;
    }
    out.search_nodes = nodes_;
    return out;
  }

 private:
  void rebuild_orbits(const std::vector<std::vector<int>>& gens, int n) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const auto& g : gens) {
      for (int v = 0; v < n; ++v) unite(v, g[static_cast<std::size_t>(v)]);
    }
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[static_cast<std::size_t>(a)] = b;
  }

  bool explore(const Partition& p, int depth, std::vector<int>& found) {
    if (p.cells != path_[static_cast<std::size_t>(depth)].cells ||
        p.invariant != path_[static_cast<std::size_t>(depth)].invariant) {
      return false;
    }
    if (p.discrete()) {
      const int n = g_.node_count();
      std::vector<int> at_colour(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) at_colour[static_cast<std::size_t>(p.colour[static_cast<std::size_t>(v)])] = v;
      std::vector<int> map(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        map[static_cast<std::size_t>(v)] = at_colour[static_cast<std::size_t>(leaf_[static_cast<std::size_t>(v)])];
      }
      if (!is_automorphism(g_, map)) return false;
      found = std::move(map);
      return true;
    }
    const int cell = target_cell(p);
    for (int v = 0; v < g_.node_count(); ++v) {
      if (p.colour[static_cast<std::size_t>(v)] != cell) continue;
      if (explore(individualize(p, v), depth + 1, found)) return true;
    }
    return false;
  }

  static int target_cell(const Partition& p) {
    std::vector<int> size(static_cast<std::size_t>(p.cells), 0);
    for (int c : p.colour) ++size[static_cast<std::size_t>(c)];
    for (int c = 0; c < p.cells; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1) return c;
    }
    return -1;
  }

  static int first_in_cell(const Partition& p, int cell) {
    for (std::size_t v = 0; v < p.colour.size(); ++v) {
      if (p.colour[v] == cell) return static_cast<int>(v);
    }
    return -1;
  }

  Partition individualize(const Partition& p, int v) {
    Partition q;
    q.colour.resize(p.colour.size());
    for (std::size_t u = 0; u < p.colour.size(); ++u) {
      q.colour[u] = 2 * p.colour[u] + (static_cast<int>(u) == v ? 0 : 1);
    }
    refine(q);
    return q;
  }

  // Canonical colour refinement: repeatedly rank vertices by (colour, sorted
  // neighbour colours) until the number of cells is stable.
  void refine(Partition& p) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kSearchBudgetExceeded,
                  "automorphism search exceeded " + std::to_string(budget_) + " nodes");
    }
    const int n = g_.node_count();
    auto& col = p.colour;
    p.cells = compress(col);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1);
    std::vector<int> sig;
    while (true) {
      sig.clear();
      for (int v = 0; v < n; ++v) {
        offset[static_cast<std::size_t>(v)] = sig.size();
        for (int u : g_.neighbors(v)) sig.push_back(col[static_cast<std::size_t>(u)]);
        std::sort(sig.begin() + static_cast<std::ptrdiff_t>(offset[static_cast<std::size_t>(v)]), sig.end());
      }
      offset[static_cast<std::size_t>(n)] = sig.size();
      auto less = [&](int a, int b) {
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        if (col[ua] != col[ub]) return col[ua] < col[ub];
        return std::lexicographical_compare(sig.begin() + static_cast<std::ptrdiff_t>(offset[ua]),
                                            sig.begin() + static_cast<std::ptrdiff_t>(offset[ua + 1]),
                                            sig.begin() + static_cast<std::ptrdiff_t>(offset[ub]),
                                            sig.begin() + static_cast<std::ptrdiff_t>(offset[ub + 1]));
      };
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), less);
      std::vector<int> next(static_cast<std::size_t>(n));
      int cells = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && less(order[i - 1], order[i])) ++cells;
        next[static_cast<std::size_t>(order[i])] = cells;
      }
      ++cells;
      if (cells == p.cells) {
        // Stable: every cell is uniform in its neighbour colours. Hash the
        // quotient structure for pruning.
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&](std::uint64_t x) {
          h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        int last = -1;
        for (int v : order) {
          const int c = col[static_cast<std::size_t>(v)];
          if (c == last) {
            mix(1);
            continue;
          }
          last = c;
          mix(static_cast<std::uint64_t>(c) << 32);
          for (std::size_t k = offset[static_cast<std::size_t>(v)]; k < offset[static_cast<std::size_t>(v) + 1]; ++k) {
            mix(static_cast<std::uint64_t>(sig[k]));
          }
        }
        p.invariant = h;
        return;
      }
      col = std::move(next);
      p.cells = cells;
    }
  }

  // Renumbers colours to 0..k-1 preserving their order; returns k.
  static int compress(std::vector<int>& col) {
    std::vector<int> values(col);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : col) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    return static_cast<int>(values.size());
  }

  const LabeledGraph& g_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Partition> path_;
  std::vector<int> base_;
  std::vector<int> leaf_;
  std::vector<int> parent_;
};

}  // namespace

AutomorphismGroup automorphism_group(const LabeledGraph& g, std::size_t budget) {
  return Search(g, budget).run();
}

}  // namespace symilp

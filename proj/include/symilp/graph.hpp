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

// Vertex-labeled simple graphs and their label-preserving automorphisms.

#ifndef SYMILP_GRAPH_HPP_
#define SYMILP_GRAPH_HPP_

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace symilp {

class LabeledGraph {
 public:
  int add_node(int label);
  void add_edge(int u, int v);
  // Sorts adjacency lists; throws std::logic_error on a repeated edge.
  void finalize();

  int node_count() const { return static_cast<int>(labels_.size()); }
  std::size_t edge_count() const { return edges_; }
  int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const;
  int label_count() const;
  // Nodes grouped by label, labels ascending.
  std::vector<std::vector<int>> label_classes() const;

 private:
  std::vector<int> labels_;
  std::vector<std::vector<int>> adj_;
  std::size_t edges_ = 0;
  bool sorted_ = true;
};

inline constexpr std::size_t kDefaultSearchBudget = 200'000;

struct AutomorphismGroup {
  std::vector<std::vector<int>> generators;  // node maps v -> g(v)
  mpz_class order;
  std::size_t search_nodes = 0;
};

// Colour refinement followed by backtracking over individualized vertices.
// The order is the product of the base-point orbit lengths. Throws
// kSearchBudgetExceeded once more than `budget` refinements were needed.
AutomorphismGroup automorphism_group(const LabeledGraph& g,
                                     std::size_t budget = kDefaultSearchBudget);

// Whether `map` is a label-preserving automorphism.
bool is_automorphism(const LabeledGraph& g, const std::vector<int>& map);

}  // namespace symilp

#endif  // SYMILP_GRAPH_HPP_

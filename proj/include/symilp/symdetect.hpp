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

// Symmetry detection through labeled ILP graphs.

#ifndef SYMILP_SYMDETECT_HPP_
#define SYMILP_SYMDETECT_HPP_

#include <string>
#include <vector>

#include "symilp/graph.hpp"
#include "symilp/model.hpp"
#include "symilp/symmetry.hpp"

namespace symilp {

enum class GraphMode { kReduced, kFull };

const char* mode_name(GraphMode mode);

struct IlpGraph {
  LabeledGraph graph;
  std::vector<int> column;       // node of zeta_j
  std::vector<int> twin_column;  // node of the twin of zeta_j (full mode only)
};

// Reduced graph: position nodes alpha_ij, row nodes rho_i, column nodes
// zeta_j and one node per distinct coefficient of A, b, and c. Positions,
// rows, and columns share one label per kind; every coefficient node has its
// own label.
//
// Full graph: additionally a twin of every column node and of every position
// with a non-zero entry, plus nodes for negated coefficients of A and c that
// are missing. A position holding 0 is adjacent to both twins of its column,
// so column sign changes survive zero entries.
IlpGraph build_ilp_graph(const ILPInstance& inst, GraphMode mode);

LabeledGraph build_reduced_graph(const ILPInstance& inst);
LabeledGraph build_full_graph(const ILPInstance& inst);

struct DetectionResult {
  GroupSpec group;
  mpz_class order;
};

// Generators of the symmetry group found through the graph of the given
// mode. Reduced mode finds coordinate permutations only.
DetectionResult detect_symmetries(const ILPInstance& inst, GraphMode mode,
                                  std::size_t budget = kDefaultSearchBudget);

}  // namespace symilp

#endif  // SYMILP_SYMDETECT_HPP_

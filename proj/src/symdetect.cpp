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

#include "symilp/symdetect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "symilp/errors.hpp"

namespace symilp {

const char* mode_name(GraphMode mode) { return mode == GraphMode::kFull ? "full" : "reduced"; }

namespace {

enum : int { kPositionLabel = 0, kRowLabel = 1, kColumnLabel = 2, kFirstValueLabel = 3 };

}  // namespace

IlpGraph build_ilp_graph(const ILPInstance& inst, GraphMode mode) {
  const auto m = static_cast<int>(inst.rows());
  const auto n = static_cast<int>(inst.cols());
  const QMatrix& a = inst.A();
  IlpGraph out;
  LabeledGraph& g = out.graph;
  int next_label = kFirstValueLabel;

  std::vector<int> position(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) position[static_cast<std::size_t>(i) * n + j] = g.add_node(kPositionLabel);
  }
  std::vector<int> row(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) row[static_cast<std::size_t>(i)] = g.add_node(kRowLabel);
  out.column.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.column[static_cast<std::size_t>(j)] = g.add_node(kColumnLabel);

  std::map<Rational, int> kappa;
  std::map<Rational, int> lambda;
  std::map<Rational, int> mu;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) kappa.emplace(a(i, j), -1);
    lambda.emplace(inst.b()(i), -1);
  }
  for (int j = 0; j < n; ++j) mu.emplace(inst.c()(j), -1);
  for (auto* table : {&kappa, &lambda, &mu}) {
    for (auto& [value, node] : *table) node = g.add_node(next_label++);
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const int p = position[static_cast<std::size_t>(i) * n + j];
      g.add_edge(p, row[static_cast<std::size_t>(i)]);
      g.add_edge(p, out.column[static_cast<std::size_t>(j)]);
      g.add_edge(p, kappa.at(a(i, j)));
    }
    g.add_edge(row[static_cast<std::size_t>(i)], lambda.at(inst.b()(i)));
  }
  for (int j = 0; j < n; ++j) g.add_edge(out.column[static_cast<std::size_t>(j)], mu.at(inst.c()(j)));

  if (mode == GraphMode::kFull) {
    out.twin_column.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out.twin_column[static_cast<std::size_t>(j)] = g.add_node(kColumnLabel);
    std::vector<int> twin_position(static_cast<std::size_t>(m) * n, -1);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!a(i, j).is_zero()) twin_position[static_cast<std::size_t>(i) * n + j] = g.add_node(kPositionLabel);
      }
    }
    // Negated coefficients that do not occur yet, in value order.
    std::vector<Rational> missing_a;
    for (const auto& [value, node] : kappa) {
      if (!value.is_zero() && !kappa.count(-value)) missing_a.push_back(-value);
    }
    std::vector<Rational> missing_c;
    for (const auto& [value, node] : mu) {
      if (!value.is_zero() && !mu.count(-value)) missing_c.push_back(-value);
    }
    std::sort(missing_a.begin(), missing_a.end());
    std::sort(missing_c.begin(), missing_c.end());
    for (const Rational& v : missing_a) kappa.emplace(v, g.add_node(next_label++));
    for (const Rational& v : missing_c) mu.emplace(v, g.add_node(next_label++));

    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto idx = static_cast<std::size_t>(i) * n + j;
        const int twin = twin_position[idx];
        if (twin < 0) {
          g.add_edge(position[idx], out.twin_column[static_cast<std::size_t>(j)]);
          continue;
        }
        g.add_edge(twin, row[static_cast<std::size_t>(i)]);
        g.add_edge(twin, out.twin_column[static_cast<std::size_t>(j)]);
        g.add_edge(twin, kappa.at(-a(i, j)));
        g.add_edge(twin, position[idx]);
      }
    }
    for (int j = 0; j < n; ++j) {
      g.add_edge(out.column[static_cast<std::size_t>(j)], out.twin_column[static_cast<std::size_t>(j)]);
      g.add_edge(out.twin_column[static_cast<std::size_t>(j)], mu.at(-inst.c()(j)));
    }
  }
  g.finalize();
  return out;
}

LabeledGraph build_reduced_graph(const ILPInstance& inst) {
  return build_ilp_graph(inst, GraphMode::kReduced).graph;
}

LabeledGraph build_full_graph(const ILPInstance& inst) {
  return build_ilp_graph(inst, GraphMode::kFull).graph;
}

DetectionResult detect_symmetries(const ILPInstance& inst, GraphMode mode, std::size_t budget) {
  const IlpGraph ilp = build_ilp_graph(inst, mode);
  const AutomorphismGroup aut = automorphism_group(ilp.graph, budget);
  const auto n = static_cast<int>(inst.cols());

  std::map<int, int> column_of;  // node -> signed 1-based column index
  for (int j = 0; j < n; ++j) {
    column_of[ilp.column[static_cast<std::size_t>(j)]] = j + 1;
    if (mode == GraphMode::kFull) column_of[ilp.twin_column[static_cast<std::size_t>(j)]] = -(j + 1);
  }

  std::vector<SignedPermutation> gens;
  for (const auto& map : aut.generators) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const int target = map[static_cast<std::size_t>(ilp.column[static_cast<std::size_t>(j)])];
      const auto it = column_of.find(target);
      if (it == column_of.end()) throw std::logic_error("automorphism moves a column off the columns");
      image[static_cast<std::size_t>(j)] = it->second;
      if (mode == GraphMode::kFull) {
        // The twin of zeta_j must follow zeta_j to the opposite twin.
        const int twin = map[static_cast<std::size_t>(ilp.twin_column[static_cast<std::size_t>(j)])];
        if (column_of.at(twin) != -it->second) throw std::logic_error("twin coherence violated");
      }
    }
    SignedPermutation gamma(std::move(image));
    if (gamma.is_identity()) continue;
    if (!is_symmetry(inst, gamma)) throw std::logic_error("detected map " + gamma.str() + " is not a symmetry");
    if (std::find(gens.begin(), gens.end(), gamma) == gens.end()) gens.push_back(std::move(gamma));
  }
  return DetectionResult{GroupSpec(n, std::move(gens)), aut.order};
}

}  // namespace symilp

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

// Objective layers H_{c,k} and the scan over 1-layers.

#ifndef SYMILP_LAYERS_HPP_
#define SYMILP_LAYERS_HPP_

#include <cstddef>
#include <functional>
#include <optional>

#include "symilp/model.hpp"

namespace symilp {

struct CoprimeDirection {
  QVector direction;  // coprime integers, a positive multiple of c
  Rational norm_sq;
};

// Throws kZeroObjective for c = 0.
CoprimeDirection coprime_direction(const QVector& c);

struct Layer {
  CoprimeDirection dir;
  mpz_class k;
};

// c~^T x for integral x.
mpz_class layer_number(const CoprimeDirection& dir, const QVector& x);

// (k / |c~|^2) c~.
QVector layer_center(const Layer& layer);

// Integral point with c~^T x = k from an iterated extended gcd.
QVector layer_witness(const CoprimeDirection& dir, const mpz_class& k);

struct ScanStats {
  std::size_t layers_scanned = 0;
  std::size_t feasibility_checks = 0;
};

struct SolveOptions {
  bool assume_transitivity = false;
  double box_cap = kDefaultBoxCap;
};

// Returns a feasible integral point of P(A, b) on the 1-layer k, if any.
using LayerOracle =
    std::function<std::optional<QVector>(const ILPInstance&, const mpz_class&, ScanStats&)>;

// Enumerates integral points of the layer inside default_box in
// lexicographic order. When P(A, b) is unbounded the box is recomputed on each
// layer slice instead. Throws kBoxTooLarge above `cap` or for an unbounded
// slice.
LayerOracle make_enumeration_oracle(double cap = kDefaultBoxCap);

// Scans the 1-layers from floor(n zeta) down to n floor(zeta), where zeta 1 is
// the optimum on the diagonal, and returns the first hit.
ILPOutcome solve_by_layers(const ILPInstance& inst, const LayerOracle& oracle,
                           const SolveOptions& options = {}, ScanStats* stats = nullptr);

}  // namespace symilp

#endif  // SYMILP_LAYERS_HPP_

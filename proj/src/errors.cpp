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

#include "symilp/errors.hpp"

namespace symilp {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInfeasibleZeroRow: return "InfeasibleZeroRow";
    case ErrorCode::kEmptySystem: return "EmptySystem";
    case ErrorCode::kBoxTooLarge: return "BoxTooLarge";
    case ErrorCode::kObjectiveNotOnes: return "ObjectiveNotOnes";
    case ErrorCode::kInfeasibleRegion: return "InfeasibleRegion";
    case ErrorCode::kNotASymmetry: return "NotASymmetry";
    case ErrorCode::kUnboundedRelaxation: return "UnboundedRelaxation";
    case ErrorCode::kTransitivityNotEstablished: return "TransitivityNotEstablished";
    case ErrorCode::kZeroObjective: return "ZeroObjective";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kDegenerateFacet: return "DegenerateFacet";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
  }
  return "Error";
}

}  // namespace symilp

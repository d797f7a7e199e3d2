// Copyright 2026 The Strategem Authors.
//
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

#include "strategem/error.h"

namespace strategem {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMixedScale: return "MixedScaleError";
    case ErrorKind::kDimension: return "DimensionError";
    case ErrorKind::kLabel: return "LabelError";
    case ErrorKind::kRange: return "RangeError";
    case ErrorKind::kDegenerate: return "DegenerateError";
    case ErrorKind::kEmptyOperand: return "EmptyOperandError";
    case ErrorKind::kScale: return "ScaleError";
    case ErrorKind::kConfig: return "ConfigError";
    case ErrorKind::kIndex: return "IndexError";
    case ErrorKind::kNumericalFailure: return "NumericalFailureError";
    case ErrorKind::kStep: return "StepError";
    case ErrorKind::kSize: return "SizeError";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Error";
}

std::string Error::describe() const {
  std::string out(error_name(kind_));
  out += ": ";
  out += what();
  return out;
}

}  // namespace strategem

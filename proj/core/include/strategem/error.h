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

#ifndef STRATEGEM_ERROR_H_
#define STRATEGEM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace strategem {

enum class ErrorKind {
  kMixedScale,
  kDimension,
  kLabel,
  kRange,
  kDegenerate,
  kEmptyOperand,
  kScale,
  kConfig,
  kIndex,
  kNumericalFailure,
  kStep,
  kSize,
  kParse,
};

// Stable name used in messages, documents and HTTP error bodies,
// e.g. "DimensionError".
std::string_view error_name(ErrorKind kind);

// Every failure raised by the library. `subject` optionally names the label
// or field the failure is about so front ends can anchor the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string subject = {})
      : std::runtime_error(message), kind_(kind), subject_(std::move(subject)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }

  // "<Name>: <message>"
  std::string describe() const;

 private:
  ErrorKind kind_;
  std::string subject_;
};

}  // namespace strategem

#endif  // STRATEGEM_ERROR_H_

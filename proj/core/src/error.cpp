// Copyright 2026 The Hintforge Authors
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

#include "hintforge/error.hpp"

namespace hintforge {

std::string_view toString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kUnsupportedClass: return "unsupported problem class";
    case ErrorCode::kShapeMismatch: return "shape mismatch";
    case ErrorCode::kBudgetExceeded: return "budget exceeded";
    case ErrorCode::kNumericalFailure: return "numerical failure";
    case ErrorCode::kEvaluation: return "evaluation error";
    case ErrorCode::kGeneration: return "generation error";
    case ErrorCode::kNotFound: return "not found";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kNoCandidate: return "no candidate";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

}  // namespace hintforge

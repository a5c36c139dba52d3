// Copyright 2026 The hankelmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hankelmatch/error.h"

namespace hankelmatch {

std::string_view error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return "E_IO";
    case ErrorCode::kParse:
      return "E_PARSE";
    case ErrorCode::kInvalidArgument:
      return "E_ARG";
    case ErrorCode::kEmptyInput:
      return "E_EMPTY";
    case ErrorCode::kAlphabetMismatch:
      return "E_ALPHABET";
    case ErrorCode::kDimension:
      return "E_DIM";
    case ErrorCode::kVersion:
      return "E_VERSION";
    case ErrorCode::kRankDeficient:
      return "E_RANK";
    case ErrorCode::kNumerical:
      return "E_NUMERIC";
    case ErrorCode::kTooLarge:
      return "E_TOO_LARGE";
    case ErrorCode::kMissingOrigin:
      return "E_NO_ORIGIN";
    case ErrorCode::kInconsistentMatching:
      return "E_MATCHING";
  }
  return "E_UNKNOWN";
}

}  // namespace hankelmatch

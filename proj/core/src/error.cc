// Copyright 2026 The fbl Authors
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

#include "fbl/error.h"

namespace fbl {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoopPresent: return "SelfLoopPresent";
    case ErrorCode::kKernelInvalid: return "KernelInvalid";
    case ErrorCode::kOddDegreeSum: return "OddDegreeSum";
    case ErrorCode::kDeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::kLawSupportsZero: return "LawSupportsZero";
    case ErrorCode::kTruncationFailure: return "TruncationFailure";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kZeroMass: return "ZeroMass";
    case ErrorCode::kTauOutOfRange: return "TauOutOfRange";
    case ErrorCode::kCaseMismatch: return "CaseMismatch";
    case ErrorCode::kInsufficientTail: return "InsufficientTail";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fbl

// Copyright 2026 The cvtele Authors
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

#include "core/error.hpp"

namespace cvtele {

const char *error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "invalid argument";
    case ErrorCode::Domain:
      return "domain error";
    case ErrorCode::DimensionMismatch:
      return "dimension mismatch";
    case ErrorCode::TruncationOverflow:
      return "truncation overflow";
    case ErrorCode::Convergence:
      return "convergence failure";
    case ErrorCode::UndefinedFidelity:
      return "undefined fidelity";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string &message) { throw Error(code, message); }

}  // namespace cvtele

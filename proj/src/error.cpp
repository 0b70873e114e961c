// Copyright 2026 The qcorr Authors
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

#include "qcorr/error.hpp"

namespace qcorr {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonPhysical:
      return "NonPhysical";
    case ErrorKind::kOutOfRange:
      return "OutOfRange";
    case ErrorKind::kDegenerateOrdering:
      return "DegenerateOrdering";
    case ErrorKind::kNotEntangled:
      return "NotEntangled";
    case ErrorKind::kBranchUnknown:
      return "BranchUnknown";
    case ErrorKind::kWindowViolation:
      return "WindowViolation";
    case ErrorKind::kEmptyWindow:
      return "EmptyWindow";
    case ErrorKind::kNumericalFailure:
      return "NumericalFailure";
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qcorr

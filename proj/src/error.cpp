/*
 * Copyright 2026 The zpencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "zpencil/error.hpp"

namespace zpencil {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "invalid argument";
    case ErrorCode::Dimension:
      return "dimension mismatch";
    case ErrorCode::OutOfRange:
      return "out of range";
    case ErrorCode::Parse:
      return "parse error";
    case ErrorCode::Singular:
      return "singular matrix";
    case ErrorCode::NotZ:
      return "not a Z-matrix";
    case ErrorCode::NotM:
      return "not an M-matrix";
    case ErrorCode::ValidationFailed:
      return "validation failed";
    case ErrorCode::GuardExceeded:
      return "enumeration guard exceeded";
    case ErrorCode::ConstructionFailed:
      return "construction failed";
    case ErrorCode::Io:
      return "i/o error";
  }
  return "unknown error";
}

}  // namespace zpencil

// Copyright 2026 The covdeg Authors
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

#include "covdeg/error.hpp"

namespace covdeg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyBlock: return "EmptyBlock";
    case ErrorKind::NotACovering: return "NotACovering";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::IncompleteTable: return "IncompleteTable";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::InconsistentTable: return "InconsistentTable";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::InvalidUniverse: return "InvalidUniverse";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace covdeg

// Copyright 2026 The addcodes Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace addcodes {

enum class ErrorKind {
    NotPrime,
    Singular,
    DimensionMismatch,
    ModulusMismatch,
    BadDigit,
    BadLength,
    MixedSpecs,
    RaggedRows,
    BadWidth,
    NotInvertible,
    SpecMismatch,
    LengthMismatch,
    UnknownName,
    TooLarge,
    OddDimension,
    EmptyLength,
    ZeroCode,
    ShapeMismatch,
    ZeroElement,
    NoSuchPair,
    TemplateViolation,
    Unsupported,
    UnsupportedK,
    BudgetExceeded,
    Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as an Error carrying
/// its kind, so callers (and tests) can branch on the category without
/// parsing messages.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace addcodes

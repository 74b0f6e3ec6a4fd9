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

#include "addcodes/error.hpp"

namespace addcodes {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ModulusMismatch: return "ModulusMismatch";
        case ErrorKind::BadDigit: return "BadDigit";
        case ErrorKind::BadLength: return "BadLength";
        case ErrorKind::MixedSpecs: return "MixedSpecs";
        case ErrorKind::RaggedRows: return "RaggedRows";
        case ErrorKind::BadWidth: return "BadWidth";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::SpecMismatch: return "SpecMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::EmptyLength: return "EmptyLength";
        case ErrorKind::ZeroCode: return "ZeroCode";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::NoSuchPair: return "NoSuchPair";
        case ErrorKind::TemplateViolation: return "TemplateViolation";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::UnsupportedK: return "UnsupportedK";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace addcodes

// Copyright 2026 The frustgraph Authors
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

#include "frustgraph/error.h"

namespace frustgraph {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime:
            return "NotPrime";
        case ErrorCode::ZeroInverse:
            return "ZeroInverse";
        case ErrorCode::Singular:
            return "Singular";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::BadSubset:
            return "BadSubset";
        case ErrorCode::TooLarge:
            return "TooLarge";
        case ErrorCode::InternalParity:
            return "InternalParity";
        case ErrorCode::EvenDimension:
            return "EvenDimension";
        case ErrorCode::NotAntisymmetric:
            return "NotAntisymmetric";
        case ErrorCode::NonCommuting:
            return "NonCommuting";
        case ErrorCode::DependentGenerators:
            return "DependentGenerators";
        case ErrorCode::PhaseViolation:
            return "PhaseViolation";
        case ErrorCode::TooManyBipartitions:
            return "TooManyBipartitions";
        case ErrorCode::UnknownCode:
            return "UnknownCode";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::ExponentOutOfRange:
            return "ExponentOutOfRange";
        case ErrorCode::InvalidConfig:
            return "InvalidConfig";
        case ErrorCode::Internal:
            return "Internal";
    }
    return "Internal";
}

bool is_validation_error(ErrorCode code) {
    return code != ErrorCode::Internal && code != ErrorCode::InternalParity;
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace frustgraph

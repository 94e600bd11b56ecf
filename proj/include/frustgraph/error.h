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

#ifndef FRUSTGRAPH_ERROR_H
#define FRUSTGRAPH_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace frustgraph {

/// Stable error codes. The names returned by `error_code_name` appear in CLI
/// output and must not change.
enum class ErrorCode {
    NotPrime,
    ZeroInverse,
    Singular,
    DimensionMismatch,
    BadSubset,
    TooLarge,
    InternalParity,
    EvenDimension,
    NotAntisymmetric,
    NonCommuting,
    DependentGenerators,
    PhaseViolation,
    TooManyBipartitions,
    UnknownCode,
    ParseError,
    ExponentOutOfRange,
    InvalidConfig,
    Internal,
};

std::string_view error_code_name(ErrorCode code);

/// True for errors caused by bad user input (as opposed to a broken
/// internal invariant).
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace frustgraph

#endif

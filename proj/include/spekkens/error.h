// Copyright 2026 The Spekkens-Zd Authors
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

namespace spekkens {

/// Stable error identifiers. The CLI prints `error_code_name` verbatim, so
/// existing names must never be renamed.
enum class ErrorCode {
    MixedModulus,
    DimensionMismatch,
    TooLarge,
    ZeroObservable,
    InvalidOutcome,
    NotCoarse,
    NotCommuting,
    CoarseGenerator,
    ImpossibleOutcome,
    EvenDimension,
    Inconsistent,
    InvalidState,
    InvalidDocument,
    SyntaxError,
    IndexOutOfRange,
};

inline const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MixedModulus:
            return "MixedModulus";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::TooLarge:
            return "TooLarge";
        case ErrorCode::ZeroObservable:
            return "ZeroObservable";
        case ErrorCode::InvalidOutcome:
            return "InvalidOutcome";
        case ErrorCode::NotCoarse:
            return "NotCoarse";
        case ErrorCode::NotCommuting:
            return "NotCommuting";
        case ErrorCode::CoarseGenerator:
            return "CoarseGenerator";
        case ErrorCode::ImpossibleOutcome:
            return "ImpossibleOutcome";
        case ErrorCode::EvenDimension:
            return "EvenDimension";
        case ErrorCode::Inconsistent:
            return "Inconsistent";
        case ErrorCode::InvalidState:
            return "InvalidState";
        case ErrorCode::InvalidDocument:
            return "InvalidDocument";
        case ErrorCode::SyntaxError:
            return "SyntaxError";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace spekkens

// Copyright 2026 The cpopt Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "cpopt/error.hpp"

namespace cpopt {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
        case ErrorKind::AllZero: return "AllZero";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InvalidChoi: return "InvalidChoi";
        case ErrorKind::TraceConditionViolated: return "TraceConditionViolated";
        case ErrorKind::NormViolation: return "NormViolation";
        case ErrorKind::SingularLambda: return "SingularLambda";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace cpopt

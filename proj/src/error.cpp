// Copyright 2026 The qubench Authors
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

#include "qubench/error.hpp"

namespace qubench {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::WidthExceeded: return "WidthExceeded";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::UnroutedCircuit: return "UnroutedCircuit";
        case ErrorKind::UnknownPreset: return "UnknownPreset";
        case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorKind::EmptyCounts: return "EmptyCounts";
        case ErrorKind::MissingScanSettings: return "MissingScanSettings";
        case ErrorKind::UndefinedRatio: return "UndefinedRatio";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Config: return "Config";
        case ErrorKind::NoMatchingRows: return "NoMatchingRows";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace qubench

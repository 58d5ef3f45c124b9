// Copyright 2026 The gemcat Authors.
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

#include "gemcat/error.hpp"

namespace gemcat {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::FixedPoint: return "FixedPoint";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::InvalidColour: return "InvalidColour";
    case ErrorKind::EmptyColourSet: return "EmptyColourSet";
    case ErrorKind::NotADipole: return "NotADipole";
    case ErrorKind::WouldCreateLoop: return "WouldCreateLoop";
    case ErrorKind::SharedVertex: return "SharedVertex";
    case ErrorKind::LoopCreated: return "LoopCreated";
    case ErrorKind::NotRhoPair: return "NotRhoPair";
    case ErrorKind::NoAdmissiblePairing: return "NoAdmissiblePairing";
    case ErrorKind::NotAFlipConfiguration: return "NotAFlipConfiguration";
    case ErrorKind::StuckNotContracted: return "StuckNotContracted";
    case ErrorKind::NotContracted: return "NotContracted";
    case ErrorKind::NotSimplyConnectedCertificate: return "NotSimplyConnectedCertificate";
    case ErrorKind::NonBipartite: return "NonBipartite";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::NotAManifoldGem: return "NotAManifoldGem";
    case ErrorKind::NoBoundary: return "NoBoundary";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ConflictingLabels: return "ConflictingLabels";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::Format: return "Format";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace gemcat

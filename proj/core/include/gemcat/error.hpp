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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gemcat {

enum class ErrorKind {
  // graph-core
  OddOrder,
  FixedPoint,
  NotInvolution,
  Disconnected,
  InvalidVertex,
  InvalidColour,
  EmptyColourSet,
  // moves
  NotADipole,
  WouldCreateLoop,
  SharedVertex,
  LoopCreated,
  NotRhoPair,
  NoAdmissiblePairing,
  NotAFlipConfiguration,
  StuckNotContracted,
  // topology
  NotContracted,
  NotSimplyConnectedCertificate,
  NonBipartite,
  OrderTooLarge,
  NotAManifoldGem,
  // generation
  NoBoundary,
  // classification
  DimensionMismatch,
  ConflictingLabels,
  // ingest
  NotPure,
  NotClosed,
  // serialization
  Format,
  Io,
};

std::string_view error_kind_name(ErrorKind kind);

// Every domain failure in the library surfaces as a GemError carrying its kind.
class GemError : public std::runtime_error {
 public:
  GemError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gemcat

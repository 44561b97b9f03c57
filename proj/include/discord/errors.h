// Copyright 2026 The discord-kit Authors
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

#ifndef DISCORD_ERRORS_H
#define DISCORD_ERRORS_H

#include <stdexcept>
#include <string>

namespace discord {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix or parameter set fails the density-matrix gates (Hermitian, unit
/// trace, eigenvalues >= -1e-9).
class PhysicalityError : public Error {
 public:
  using Error::Error;
};

/// The state has off-diagonal correlation-tensor entries.
class OutOfFamilyError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A closed form was evaluated outside the region where it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NormError : public Error {
 public:
  using Error::Error;
};

/// A measurement outcome has probability below 1e-12.
class DegenerateBranchError : public Error {
 public:
  using Error::Error;
};

/// Preconditions of an analytic formula (which parameters vanish or coincide)
/// are not met.
class FamilyError : public Error {
 public:
  using Error::Error;
};

/// Out-of-range numeric arguments: decoherence rates, grids, optimizer settings.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace discord

#endif  // DISCORD_ERRORS_H

// Copyright 2026 The Authors.
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

namespace submax {

// Error taxonomy shared by the whole library. Callers that need to map
// failures to process exit codes (the CLI does) can catch these by type.

// Malformed caller input: out-of-range element, bad file contents, ...
struct InvalidInputError : std::runtime_error {
  explicit InvalidInputError(const std::string& what)
      : std::runtime_error(what) {}
};

// Problem size exceeds a hard limit of an exhaustive routine.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// An optimization problem has no feasible point.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

// An optimization problem has unbounded objective.
struct UnboundedError : std::runtime_error {
  explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};

// A guaranteed-impossible state was reached; indicates a bug in a caller
// or in this library.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

// The scripted worst-case replay diverged from its expected trajectory.
struct AdversarialTraceError : std::runtime_error {
  explicit AdversarialTraceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace submax

// Copyright 2026 The Phasecap Authors
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

#ifndef PHASECAP_ERRORS_H
#define PHASECAP_ERRORS_H

#include <stdexcept>
#include <string>

namespace phasecap {

/// Invalid sizes, ranges, or mismatched group parameters.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed external input (JSON files, vector text).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural invariant does not hold (asymmetric connection set, bad witness, ...).
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

/// The requested computation exceeds a hard size limit.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The linear-programming solver failed to reach a verified optimum.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search hit its budget before reaching the requested target.
struct SearchIncompleteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimum distance requested for a set with fewer than two elements.
struct UndefinedDistanceError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A constructor's internal verification failed.
struct ConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace phasecap

#endif

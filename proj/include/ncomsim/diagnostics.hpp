// Copyright 2026 The ncomsim Authors
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

#ifndef NCOMSIM_DIAGNOSTICS_HPP
#define NCOMSIM_DIAGNOSTICS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ncomsim {

/// One reported violation. Validators fill `where` with a structural
/// location ("gates1[X]", "gates[3]"); the circuit parser additionally
/// sets 1-based line/column.
struct Diagnostic {
    std::string where;
    std::string message;
    int line = 0;
    int column = 0;

    bool operator==(const Diagnostic&) const = default;
};

std::string format_diagnostics(const std::vector<Diagnostic>& diags);

/// A backend cannot represent the requested circuit element. For the
/// wigner backend this is the contextuality boundary (e.g. a non-Clifford
/// gate); maps to CLI exit code 2.
class BackendRefusal : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A model failed structural validation; maps to CLI exit code 3.
class ModelInvalid : public std::runtime_error {
  public:
    ModelInvalid(const std::string& what, std::vector<Diagnostic> diags = {})
        : std::runtime_error(what), diagnostics(std::move(diags)) {}

    std::vector<Diagnostic> diagnostics;
};

/// An instance exceeds a configured resource cap; maps to CLI exit code 4.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace ncomsim

#endif

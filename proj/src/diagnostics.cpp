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

#include "ncomsim/diagnostics.hpp"

#include <sstream>

namespace ncomsim {

std::string format_diagnostics(const std::vector<Diagnostic>& diags) {
    std::ostringstream out;
    for (const auto& d : diags) {
        if (d.line > 0) {
            out << "line " << d.line;
            if (d.column > 0) out << ":" << d.column;
            if (!d.where.empty()) out << " (" << d.where << ")";
        } else if (!d.where.empty()) {
            out << d.where;
        } else {
            out << "<input>";
        }
        out << ": " << d.message << "\n";
    }
    return out.str();
}

}  // namespace ncomsim

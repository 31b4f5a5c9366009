/*
   Copyright 2026 The hfl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HFL_ERROR_HPP
#define HFL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hfl {

/// Bad arguments from the caller: parameter out of range, mismatched
/// algebra parameters, malformed labels or polynomials.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
   public:
    DivisionByZero() : std::domain_error("division by zero in Q(zeta)") {}
};

/// A module that violates the axioms it was promised to satisfy
/// (e.g. a non-integral multiplicity in a decomposition).
class ModuleAxiomError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw UsageError(what);
}

}  // namespace hfl

#endif

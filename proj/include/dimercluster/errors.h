// Copyright 2026 The dimercluster Authors.
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

#ifndef DIMERCLUSTER_ERRORS_H_
#define DIMERCLUSTER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dimercluster {

// Malformed textual input (quiver or root specs).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that is meaningless in context, such as a vector that is
// not a positive root or an e-vector outside its box.
class SemanticError : public std::runtime_error {
 public:
  explicit SemanticError(const std::string& what)
      : std::runtime_error(what) {}
};

// A broken internal invariant. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dimercluster

#endif  // DIMERCLUSTER_ERRORS_H_

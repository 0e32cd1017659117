// Copyright 2026 The mapgen Authors.
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

#ifndef MAPGEN_ERROR_HPP
#define MAPGEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mapgen {

// Error categories shared by every module. The C API maps these one-to-one
// onto mapgen_status codes.
enum class ErrorKind {
  kStructural,    // mismatched series shapes, invalid permutations
  kDomain,        // value outside the domain of an operation
  kRange,         // index or size outside what was materialized
  kPrecondition,  // caller violated a documented precondition
  kParse,         // malformed text input
  kInvariant,     // internal consistency check failed
  kCapExceeded,   // enumeration refused above the size cap
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace mapgen

#endif  // MAPGEN_ERROR_HPP

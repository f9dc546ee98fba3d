// Copyright 2026 The zksvm Authors.
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

namespace zksvm {

// Malformed wire data. Distinct from a verification failure: decoding either
// yields a structurally valid object or throws, it never returns "false".
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A prover was handed a witness that does not satisfy the statement it was
// asked to prove. Provers refuse instead of emitting garbage.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A value escaped the bounds the feature pipeline guarantees (encoding
// overflow, N^3*sigma^2 too large for the configured range bit length).
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zksvm

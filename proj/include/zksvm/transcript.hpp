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

#include <array>
#include <cstdint>
#include <deque>
#include <span>
#include <string_view>

#include "zksvm/group.hpp"

namespace zksvm {

// Fiat-Shamir transcript. Challenges are a pure function of the ordered
// absorption sequence; the framing (see README, "Transcript framing") is
// normative so independent implementations interoperate.
//
// A transcript is single-owner while a proof is being built; fork() a copy
// for independent sub-proofs.
class Transcript {
 public:
  explicit Transcript(std::string_view protocol_label);

  void absorb(std::string_view label, std::span<const uint8_t> data);
  void absorb_u64(std::string_view label, uint64_t v);
  void absorb_scalar(std::string_view label, const Scalar& s);
  void absorb_point(std::string_view label, const Point& p);

  // Nonzero scalar derived from the current state; ratchets the state so
  // successive challenges differ.
  Scalar challenge_scalar(std::string_view label);

  // Binds the server-issued attestation nonce: every later challenge (and
  // so every proof built on this transcript) depends on it. Nonces shorter
  // than 16 bytes are rejected.
  void bind_server_challenge(std::span<const uint8_t> nonce);

  // Clone with a domain-separating (label, index) absorption, for forked
  // sub-proofs (for example the 12 per-vector proof sets).
  Transcript fork(std::string_view label, uint64_t index) const;

  // Test-only: the next challenge_scalar() call returns `c` instead of the
  // derived value (the injected value is still absorbed, keeping both sides
  // of a simulation in sync). Production verifiers never call this; wire
  // data cannot reach it.
  void inject_challenge(const Scalar& c);

 private:
  std::array<uint8_t, 64> state_{};
  std::deque<Scalar> injected_;
};

}  // namespace zksvm

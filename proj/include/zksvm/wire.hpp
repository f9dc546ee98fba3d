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

#include "zksvm/protocol.hpp"

// Bundle envelope: the self-describing binary frame an attester posts to
// the verifier. Layout (little-endian):
//   "ZKSB" | version u8 | label (u32-prefixed) | n u32 | nonce
//   (u32-prefixed) | point count u32 | scalar count u32 | payload length
//   u64 | payload
// with payload = 12 VectorProofSets | score i64 | r_R. The element counts
// are validated against the payload on decode.

namespace zksvm {

struct BundleEnvelope {
  uint8_t version = 1;
  std::string label;
  uint32_t n = 0;
  Bytes nonce;
  uint32_t point_count = 0;
  uint32_t scalar_count = 0;
  AttestationBundle bundle;
};

Bytes encode_envelope(const CommitParams& params,
                      const AttestationBundle& bundle,
                      std::span<const uint8_t> nonce);
BundleEnvelope decode_envelope(std::span<const uint8_t> in);

// Closed-form element counts for one vector proof set and a whole bundle
// (log-variant inner-product proofs, range bit length l):
//   points  per vector: 74 + 8*log2(n) + 8*log2(l)
//   scalars per vector: 5*n + 72
struct SizeBreakdown {
  std::size_t points_per_vector = 0;
  std::size_t scalars_per_vector = 0;
  std::size_t bytes_per_vector = 0;  // elements only (33/32 bytes each)
  std::size_t total_points = 0;
  std::size_t total_scalars = 0;
  std::size_t total_element_bytes = 0;
};
SizeBreakdown bundle_size_formula(uint32_t n, uint32_t l = kDefaultRangeBits);

std::string hex_encode(std::span<const uint8_t> data);
Bytes hex_decode(std::string_view hex);  // throws DecodeError

}  // namespace zksvm

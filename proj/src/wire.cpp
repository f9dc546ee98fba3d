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

#include "zksvm/wire.hpp"

namespace zksvm {
namespace {

constexpr char kMagic[4] = {'Z', 'K', 'S', 'B'};
constexpr uint8_t kVersion = 1;
constexpr uint32_t kMaxN = 1u << 20;

uint32_t log2_exact(uint32_t n) {
  uint32_t lg = 0;
  while ((uint32_t{1} << lg) < n) lg++;
  return lg;
}

}  // namespace

Bytes encode_envelope(const CommitParams& params,
                      const AttestationBundle& bundle,
                      std::span<const uint8_t> nonce) {
  ByteWriter payload;
  for (const VectorProofSet& v : bundle.vectors) v.write(payload);
  payload.u64(static_cast<uint64_t>(bundle.score));
  payload.scalar(bundle.r_r);

  ByteWriter w;
  w.raw(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(kMagic), 4));
  w.u8(kVersion);
  w.var_string(params.label);
  w.u32(params.n);
  w.var_bytes(nonce);
  w.u32(static_cast<uint32_t>(payload.points_written()));
  w.u32(static_cast<uint32_t>(payload.scalars_written()));
  const Bytes& body = payload.bytes();
  w.u64(body.size());
  w.raw(body);
  return w.take();
}

BundleEnvelope decode_envelope(std::span<const uint8_t> in) {
  ByteReader r(in);
  {
    uint8_t magic[4];
    for (int i = 0; i < 4; i++) magic[i] = r.u8();
    if (std::memcmp(magic, kMagic, 4) != 0)
      throw DecodeError("envelope: bad magic");
  }
  BundleEnvelope env;
  env.version = r.u8();
  if (env.version != kVersion) throw DecodeError("envelope: bad version");
  env.label = r.var_string();
  env.n = r.u32();
  if (env.n == 0 || env.n > kMaxN) throw DecodeError("envelope: bad n");
  env.nonce = r.var_bytes();
  env.point_count = r.u32();
  env.scalar_count = r.u32();
  const uint64_t payload_len = r.u64();
  if (payload_len != r.remaining())
    throw DecodeError("envelope: payload length mismatch");

  ByteReader body(in.subspan(in.size() - payload_len));
  for (std::size_t i = 0; i < kVectorCount; i++)
    env.bundle.vectors.push_back(VectorProofSet::read(body, env.n));
  env.bundle.score = static_cast<int64_t>(body.u64());
  env.bundle.r_r = body.scalar();
  body.expect_done("envelope payload");
  if (body.points_read() != env.point_count ||
      body.scalars_read() != env.scalar_count)
    throw DecodeError("envelope: size accounting mismatch");
  return env;
}

SizeBreakdown bundle_size_formula(uint32_t n, uint32_t l) {
  const std::size_t lg_n = log2_exact(n);
  const std::size_t lg_l = log2_exact(l);
  SizeBreakdown sb;
  // S_H (1); Delta: S_iter, Diff, Pi_Eq (2), Pi_0 (5);
  // M, M': Avg + log IP (3 + 2 lg n) each;
  // Lambda, Lambda': 5 commitments, three Pi_Eq (6), IP (3 + 2 lg n),
  //   sqrt (2 aux + 2x2 square + 2x(4 + 2 lg l) range) each.
  sb.points_per_vector = 74 + 8 * lg_n + 8 * lg_l;
  // Delta: (n+2) + (2n+2); M, M': 5 each;
  // Lambda, Lambda': 3 + 3 + (n+2) + 5 + 3 + 3 + 5 + 5 = n + 29 each.
  sb.scalars_per_vector = 5 * static_cast<std::size_t>(n) + 72;
  sb.bytes_per_vector =
      sb.points_per_vector * kPointBytes + sb.scalars_per_vector * kScalarBytes;
  sb.total_points = kVectorCount * sb.points_per_vector;
  sb.total_scalars = kVectorCount * sb.scalars_per_vector + 1;  // + r_R
  sb.total_element_bytes = sb.total_points * kPointBytes +
                           sb.total_scalars * kScalarBytes +
                           8;  // + the score integer
  return sb;
}

std::string hex_encode(std::span<const uint8_t> data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

Bytes hex_decode(std::string_view hex) {
  if (hex.size() % 2 != 0) throw DecodeError("hex: odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw DecodeError("hex: bad digit");
  };
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return out;
}

}  // namespace zksvm

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

#include "zksvm/ipa.hpp"
#include "zksvm/sigma.hpp"
#include "zksvm/transcript.hpp"

// Range proof (committed value in [0, 2^l]) with a logarithmic
// inner-product tail, and the floor-square-root proof composed from two
// square proofs and two range proofs on the differences.

namespace zksvm {

inline constexpr uint32_t kSupportedRangeBits[] = {8, 16, 32, 64};
bool range_bits_supported(uint32_t l);

// Default bit length for every zkSVM-internal range statement.
inline constexpr uint32_t kDefaultRangeBits = 64;

struct RangeProof {
  uint32_t bits = 0;
  Point a_commit, s_commit, t1, t2;
  Scalar tau_x, mu, t_hat;
  IpaProof tail;

  // l (2 bytes) || point count || points || scalar count || scalars.
  Bytes encode() const;
  static RangeProof decode(std::span<const uint8_t> in);
  void write(ByteWriter& w) const;
  static RangeProof read(ByteReader& r);
  std::size_t point_count() const;
  std::size_t scalar_count() const;
};

// Prover refuses (PreconditionError) when m >= 2^l; unsupported l is an
// invalid parameter.
RangeProof prove_range(const CommitParams& params, const Point& c, uint64_t m,
                       const Scalar& r, uint32_t l, Transcript& t,
                       RandomSource& rng);
bool verify_range(const CommitParams& params, const Point& c, uint32_t l,
                  const RangeProof& proof, Transcript& t);

// m1 = floor(sqrt(m2)) across C1, C2, via the two-sided bound
// m2 - m1^2 in [0, 2^l] and (m1+1)^2 - m2 - 1 in [0, 2^l], with
// C1^{+1} = C1 * g standing in for m1 + 1.
struct SqrtProof {
  Point sq_low;   // commits m1^2
  Point sq_high;  // commits (m1+1)^2
  SquareProof sq1, sq2;
  RangeProof range_low, range_high;

  Bytes encode() const;
  static SqrtProof decode(std::span<const uint8_t> in);
  void write(ByteWriter& w) const;
  static SqrtProof read(ByteReader& r);
};

SqrtProof prove_sqrt(const CommitParams& params, const Point& c1,
                     const Point& c2, uint64_t m1, uint64_t m2,
                     const Scalar& r1, const Scalar& r2, uint32_t l,
                     Transcript& t, RandomSource& rng);
bool verify_sqrt(const CommitParams& params, const Point& c1, const Point& c2,
                 uint32_t l, const SqrtProof& proof, Transcript& t);

// Integer square root (largest k with k^2 <= v), exact over all of u64.
uint64_t isqrt64(uint64_t v);

// SHVZK simulators (test oracles): build accepting proofs for arbitrary
// commitment points. The returned challenges must be injected, in order,
// into the verifying transcript.
struct SimulatedRange {
  RangeProof proof;
  std::vector<Scalar> challenges;
};
SimulatedRange simulate_range(const CommitParams& params, const Point& c,
                              uint32_t l, RandomSource& rng);
struct SimulatedSqrt {
  SqrtProof proof;
  std::vector<Scalar> challenges;
};
SimulatedSqrt simulate_sqrt(const CommitParams& params, const Point& c1,
                            const Point& c2, uint32_t l, RandomSource& rng);

}  // namespace zksvm

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

#include <functional>
#include <span>
#include <vector>

#include "zksvm/bytes_io.hpp"
#include "zksvm/ipa.hpp"
#include "zksvm/pedersen.hpp"
#include "zksvm/transcript.hpp"

// Zero-knowledge inner-product proof: given A = h^alpha g^a h^b (one
// combined commitment to both vectors) and V = g^c h^gamma, prove
// <a, b> = c. The linear variant sends the blinded vectors; the log variant
// replaces them with the recursive inner-product argument.

namespace zksvm {

enum class IpVariant : uint8_t { Linear = 0, Log = 1 };

struct IpStatement {
  Point a_commit;  // A
  Point v_commit;  // V
};

struct IpWitness {
  std::vector<Scalar> a;
  std::vector<Scalar> b;
  Scalar alpha;  // blinding of A
  Scalar c;      // <a, b>
  Scalar gamma;  // blinding of V
};

struct IpProof {
  IpVariant variant = IpVariant::Linear;
  uint32_t n = 0;
  Point s_commit;  // S
  Point t1, t2;
  Scalar tau_c, mu, t_hat;
  // Linear tail: the blinded vectors themselves.
  std::vector<Scalar> l, r;
  // Log tail: recursion rounds plus two final scalars.
  IpaProof tail;

  // variant (1) || n (4, LE) || u16 point count || points || u16 scalar
  // count || scalars. Counts are fixed by (variant, n):
  //   linear: 3 points, 2n+3 scalars
  //   log:    3 + 2*log2(n) points, 5 scalars
  Bytes encode() const;
  static IpProof decode(std::span<const uint8_t> in);
  void write(ByteWriter& w) const;
  static IpProof read(ByteReader& r);
  std::size_t point_count() const;
  std::size_t scalar_count() const;
};

// Prover. Refuses (PreconditionError) if the witness does not satisfy the
// statement; the log variant requires n to be a power of two
// (std::invalid_argument otherwise; callers zero-pad, which preserves the
// inner product).
IpProof ip_prove(const CommitParams& params, const IpStatement& stmt,
                 const IpWitness& wit, IpVariant variant, Transcript& t,
                 RandomSource& rng);

// All four checks: the tau_C/t_hat commitment equation, P = A*S^C, the P
// representation, and t_hat = <l, r> (the last two via the recursive
// argument in the log variant).
bool ip_verify(const CommitParams& params, const IpStatement& stmt,
               const IpProof& proof, Transcript& t);

// SHVZK simulator (test oracle): samples the challenge and everything but
// S, T1, which are solved from the verification equations. The returned
// proof verifies against any transcript that has the challenge injected.
struct SimulatedIp {
  IpProof proof;
  Scalar challenge;
};
SimulatedIp ip_simulate(const CommitParams& params, const IpStatement& stmt,
                        RandomSource& rng);

// Knowledge-extraction test oracle: runs a deterministic prover three times
// with distinct injected challenges and recovers the witness from the
// transcript linear combinations. Throws std::invalid_argument on repeated
// challenges.
struct IpExtractedWitness {
  std::vector<Scalar> a, b, s_l, s_r;
  Scalar alpha, rho, c, gamma;
};
IpExtractedWitness ip_extract(
    const CommitParams& params, const IpStatement& stmt,
    std::span<const Scalar> challenges,
    const std::function<IpProof(Transcript&)>& run_prover);

}  // namespace zksvm

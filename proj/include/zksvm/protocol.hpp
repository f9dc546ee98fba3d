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

#include "zksvm/features.hpp"
#include "zksvm/ipzkp.hpp"
#include "zksvm/range.hpp"
#include "zksvm/sigma.hpp"

// The composed attestation protocol: per input vector a consecutive
// difference step, a sum step, and a standard deviation step; then the
// homomorphic score assembly the verifier checks against the opened Score.
// All statistics run on N-scaled integers, so the variance commitment
// carries the exact integer <N v - sum, N v - sum> = N^3 sigma^2.

namespace zksvm {

// Delta: [Diff, S_H^iter, Pi_Eq, Pi_0].
struct DiffProofSet {
  Point s_iter;
  Point diff;
  EqualityProof eq;
  ZeroReplaceProof zero;
};

// M: [Avg, Pi_IP] with statement A = C * hvec^1, V = Avg.
struct SumProofSet {
  Point avg;
  IpProof ip;
};

// Lambda: [G, H, H_S, Pi_Eq x3, Var, Pi_IP, Std, Pi_sqrt].
struct StdProofSet {
  Point g_mu, h_mu, h_s;
  EqualityProof eq_g, eq_h, eq_s;
  Point var;
  IpProof ip;
  Point std_c;
  SqrtProof sqrt;
};

struct VectorProofSet {
  Point s_h;
  DiffProofSet delta;
  SumProofSet sum;
  SumProofSet diff_sum;
  StdProofSet dev;
  StdProofSet diff_dev;

  void write(ByteWriter& w) const;
  static VectorProofSet read(ByteReader& r, uint32_t n);
};

struct AttestationBundle {
  std::vector<VectorProofSet> vectors;  // kVectorCount
  int64_t score = 0;
  Scalar r_r;
};

// Prover-side witness data per vector. Never serialized; verifier-side
// code only ever sees the proof sets.
struct VectorOpenings {
  std::vector<int64_t> values;  // encoded sensor integers, length n
  std::vector<int64_t> diff;    // consecutive differences, last entry 0
  int64_t sum = 0;
  int64_t diff_sum = 0;
  unsigned __int128 var = 0;       // sum (N v_i - sum)^2
  unsigned __int128 diff_var = 0;
  uint64_t std_floor = 0;
  uint64_t diff_std_floor = 0;
  Scalar r_sh, r_diff;
  Scalar r_avg, r_std, r_diff_avg, r_diff_std;
  Point s_h;
};

// Statistics, commitments and blindings for all 12 vectors (the stage
// prove_bundle builds its proofs on).
std::vector<VectorOpenings> compute_openings(const CommitParams& params,
                                             const SvmModel& model,
                                             const EncodedVectorSet& set,
                                             RandomSource& rng);

// Score = sum over the 48 features of f_i * q_i (exact integers);
// r_R = sum r_i * q_i mod p.
struct ScoreOpening {
  int64_t score = 0;
  Scalar r_r;
};
ScoreOpening compute_score(std::span<const VectorOpenings> openings,
                           const SvmModel& model);

struct ProveResult {
  AttestationBundle bundle;
  std::vector<VectorOpenings> openings;
};
ProveResult prove_bundle(const CommitParams& params, const SvmModel& model,
                         const EncodedVectorSet& set,
                         std::span<const uint8_t> nonce, RandomSource& rng);

struct VerifyResult {
  bool accepted = false;  // proofs_ok and classified human
  bool proofs_ok = false;
  std::string reason;     // names the first failed check when rejecting
  int64_t score = 0;
  double sigmoid = 0.0;
  bool human = false;
};

// Test-only: per-vector challenge injections for simulated bundles.
struct VerifyHooks {
  std::vector<std::vector<Scalar>> vector_challenges;
};

VerifyResult verify_bundle(const CommitParams& params, const SvmModel& model,
                           const AttestationBundle& bundle,
                           std::span<const uint8_t> nonce,
                           const VerifyHooks* hooks = nullptr);

// The pieces verify_bundle is assembled from, exposed so targeted
// re-verification (tamper matrices, benchmarks) exercises the identical
// code path.
Transcript bundle_root_transcript(const CommitParams& params,
                                  const SvmModel& model,
                                  std::span<const uint8_t> nonce,
                                  std::span<const Point> s_h_points);
Transcript bundle_vector_fork(const Transcript& root, std::size_t index);
bool verify_vector_proofs(const CommitParams& params, const SvmModel& model,
                          const VectorProofSet& v, Transcript t,
                          std::string* reason);
Point recompute_score_commitment(const CommitParams& params,
                                 const SvmModel& model,
                                 const AttestationBundle& bundle);

// SHVZK test oracles: a full per-vector proof set (and a whole bundle) for
// commitments sampled with no witness, passing every verification equation
// under the returned injected challenges.
struct SimulatedVector {
  VectorProofSet set;
  std::vector<Scalar> challenges;
};
SimulatedVector simulate_vector_proofs(const CommitParams& params,
                                       const SvmModel& model, const Point& s_h,
                                       std::span<const Point> feature_points,
                                       RandomSource& rng);
struct SimulatedBundle {
  AttestationBundle bundle;
  VerifyHooks hooks;
};
SimulatedBundle simulate_bundle(const CommitParams& params,
                                const SvmModel& model, int64_t score,
                                RandomSource& rng);

}  // namespace zksvm

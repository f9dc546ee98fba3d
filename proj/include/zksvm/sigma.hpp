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

#include <span>
#include <vector>

#include "zksvm/bytes_io.hpp"
#include "zksvm/pedersen.hpp"
#include "zksvm/transcript.hpp"

// Sigma protocols over Pedersen commitments: proof of opening, proof of
// equal openings under two bases, zero-replacement, and square. Challenges
// come from the caller's transcript, so every proof is bound to whatever
// the transcript has absorbed (in particular the server nonce).
//
// Wire form of each proof: u16 point count || points || u16 scalar count ||
// scalars, every element canonical. Field order is fixed and documented in
// the README so single-element mutation sweeps are well defined.

namespace zksvm {

// Knowledge of (m, r) with C = basis^m * h^r.
struct OpeningProof {
  Point announcement;
  std::vector<Scalar> z;  // |m| message responses
  Scalar z_r;

  Bytes encode() const;
  static OpeningProof decode(std::span<const uint8_t> in, std::size_t n_msgs);
  void write(ByteWriter& w) const;
  static OpeningProof read(ByteReader& r, std::size_t n_msgs);
};

OpeningProof prove_opening(const CommitParams& params,
                           std::span<const Point> basis, const Point& c,
                           std::span<const Scalar> m, const Scalar& r,
                           Transcript& t, RandomSource& rng);
bool verify_opening(const CommitParams& params, std::span<const Point> basis,
                    const Point& c, const OpeningProof& proof, Transcript& t);

// One m opens c1 under basis1 and c2 under basis2 (different blindings).
struct EqualityProof {
  Point k1, k2;
  std::vector<Scalar> z;
  Scalar z_r1, z_r2;

  Bytes encode() const;
  static EqualityProof decode(std::span<const uint8_t> in, std::size_t n_msgs);
  void write(ByteWriter& w) const;
  static EqualityProof read(ByteReader& r, std::size_t n_msgs);
};

EqualityProof prove_equality(const CommitParams& params,
                             std::span<const Point> basis1, const Point& c1,
                             std::span<const Point> basis2, const Point& c2,
                             std::span<const Scalar> m, const Scalar& r1,
                             const Scalar& r2, Transcript& t,
                             RandomSource& rng);
bool verify_equality(const CommitParams& params, std::span<const Point> basis1,
                     const Point& c1, std::span<const Point> basis2,
                     const Point& c2, const EqualityProof& proof,
                     Transcript& t);

// The committed vector with entry j (1-based) replaced by zero. E extracts
// g_j^{m_j}; the sub-proofs tie C, E, C/E and the re-randomized Diff under
// one AND-composed challenge.
struct ZeroReplaceProof {
  Point extract;  // E = g_j^{m_j}
  Point k_dlog;
  Scalar z_dlog;
  Point k_op;
  std::vector<Scalar> z_op;  // n-1 message responses
  Scalar z_op_r;
  Point k_eq1, k_eq2;
  std::vector<Scalar> z_eq;  // n-1 message responses
  Scalar z_eq_r1, z_eq_r2;

  Bytes encode() const;
  static ZeroReplaceProof decode(std::span<const uint8_t> in, std::size_t n);
  void write(ByteWriter& w) const;
  static ZeroReplaceProof read(ByteReader& r, std::size_t n);
};

struct ZeroReplaceResult {
  Point diff;  // opens to m with entry j zeroed, blinding r_new
  ZeroReplaceProof proof;
};

ZeroReplaceResult prove_zero_replace(const CommitParams& params,
                                     const Point& c,
                                     std::span<const Scalar> m, const Scalar& r,
                                     uint32_t j, const Scalar& r_new,
                                     Transcript& t, RandomSource& rng);
bool verify_zero_replace(const CommitParams& params, const Point& c,
                         const Point& diff, uint32_t j,
                         const ZeroReplaceProof& proof, Transcript& t);

// m1 = m2^2 across C1 = g^{m1} h^{r1}, C2 = g^{m2} h^{r2}. Realized as a
// shared-exponent proof for C2 = g^{m2} h^{r2} and C1 = C2^{m2} h^{r1-m2*r2}.
struct SquareProof {
  Point k1, k2;
  Scalar z_m, z_r2, z_r3;

  Bytes encode() const;
  static SquareProof decode(std::span<const uint8_t> in);
  void write(ByteWriter& w) const;
  static SquareProof read(ByteReader& r);
};

SquareProof prove_square(const CommitParams& params, const Point& c1,
                         const Point& c2, const Scalar& m1, const Scalar& m2,
                         const Scalar& r1, const Scalar& r2, Transcript& t,
                         RandomSource& rng);
bool verify_square(const CommitParams& params, const Point& c1,
                   const Point& c2, const SquareProof& proof, Transcript& t);

// SHVZK simulators (test oracles): sample responses and the challenge, solve
// the announcements from the verification equations. The returned challenge
// must be injected into the verifying transcript.
OpeningProof simulate_opening(const CommitParams& params,
                              std::span<const Point> basis, const Point& c,
                              const Scalar& challenge, RandomSource& rng);
EqualityProof simulate_equality(const CommitParams& params,
                                std::span<const Point> basis1, const Point& c1,
                                std::span<const Point> basis2, const Point& c2,
                                const Scalar& challenge, RandomSource& rng);
ZeroReplaceProof simulate_zero_replace(const CommitParams& params,
                                       const Point& c, const Point& diff,
                                       uint32_t j, const Point& extract,
                                       const Scalar& challenge,
                                       RandomSource& rng);
SquareProof simulate_square(const CommitParams& params, const Point& c1,
                            const Point& c2, const Scalar& challenge,
                            RandomSource& rng);

}  // namespace zksvm

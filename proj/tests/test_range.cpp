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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zksvm/range.hpp"

using namespace zksvm;
using test::params_for;

namespace {

Transcript fresh(uint64_t salt = 0) {
  Transcript t("range-test");
  t.absorb_u64("salt", salt);
  return t;
}

}  // namespace

TEST_CASE("isqrt64 oracle") {
  CHECK(isqrt64(0) == 0);
  CHECK(isqrt64(1) == 1);
  CHECK(isqrt64(17) == 4);
  CHECK(isqrt64(144) == 12);
  CHECK(isqrt64(145) == 12);
  CHECK(isqrt64(UINT64_MAX) == 0xffffffffull);
  DeterministicRandom rng(50);
  for (int i = 0; i < 2000; i++) {
    uint64_t v;
    rng.fill(reinterpret_cast<uint8_t*>(&v), 8);
    const uint64_t r = isqrt64(v);
    const auto sq = [](uint64_t x) {
      return static_cast<unsigned __int128>(x) * x;
    };
    CHECK(sq(r) <= v);
    CHECK(sq(r + 1) > v);
  }
}

TEST_CASE("range: boundaries at l=32") {
  DeterministicRandom rng(51);
  const CommitParams& params = params_for(2);
  auto prove_verify = [&](uint64_t m) {
    const Scalar r = Scalar::random(rng);
    const Point c = commit_scalar(params, Scalar::from_u64(m), r);
    Transcript tp = fresh(m);
    auto proof = prove_range(params, c, m, r, 32, tp, rng);
    Transcript tv = fresh(m);
    return verify_range(params, c, 32, proof, tv);
  };
  CHECK(prove_verify(0));
  CHECK(prove_verify((uint64_t{1} << 32) - 1));

  // m = 2^32 at l=32: prover refuses
  const uint64_t over = uint64_t{1} << 32;
  const Scalar r = Scalar::random(rng);
  const Point c = commit_scalar(params, Scalar::from_u64(over), r);
  Transcript t = fresh();
  CHECK_THROWS_AS(prove_range(params, c, over, r, 32, t, rng),
                  PreconditionError);
  // unsupported l
  CHECK_THROWS_AS(prove_range(params, c, 5, r, 12, t, rng),
                  std::invalid_argument);
}

TEST_CASE("range: completeness across supported bit lengths") {
  DeterministicRandom rng(52);
  const CommitParams& params = params_for(2);
  for (uint32_t l : kSupportedRangeBits) {
    for (int trial = 0; trial < 8; trial++) {
      uint64_t m;
      rng.fill(reinterpret_cast<uint8_t*>(&m), 8);
      if (l < 64) m &= (uint64_t{1} << l) - 1;
      const Scalar r = Scalar::random(rng);
      const Point c = commit_scalar(params, Scalar::from_u64(m), r);
      Transcript tp = fresh(trial);
      auto proof = prove_range(params, c, m, r, l, tp, rng);
      Transcript tv = fresh(trial);
      CHECK(verify_range(params, c, l, proof, tv));
    }
  }
}

TEST_CASE("range: proof size is 4 + 2*log2(l) group elements") {
  DeterministicRandom rng(53);
  const CommitParams& params = params_for(2);
  uint32_t expected_lg[] = {3, 4, 5, 6};
  int idx = 0;
  for (uint32_t l : kSupportedRangeBits) {
    const Scalar r = Scalar::random(rng);
    const Point c = commit_scalar(params, Scalar::from_u64(l - 1), r);
    Transcript tp = fresh(l);
    auto proof = prove_range(params, c, l - 1, r, l, tp, rng);
    CHECK(proof.point_count() == 4 + 2 * expected_lg[idx]);
    CHECK(proof.scalar_count() == 5);
    CHECK(proof.encode().size() == 2 + 2 + proof.point_count() * kPointBytes +
                                       2 + 5 * kScalarBytes);
    auto back = RangeProof::decode(proof.encode());
    CHECK(back.encode() == proof.encode());
    idx++;
  }
}

TEST_CASE("range: exhaustive single-field mutation at l=8") {
  DeterministicRandom rng(54);
  const CommitParams& params = params_for(2);
  const uint64_t m = 201;
  const Scalar r = Scalar::random(rng);
  const Point c = commit_scalar(params, Scalar::from_u64(m), r);
  Transcript tp = fresh();
  const auto proof = prove_range(params, c, m, r, 8, tp, rng);

  std::size_t elements = 0;
  auto expect_reject = [&](const RangeProof& mutated) {
    Transcript tv = fresh();
    CHECK_FALSE(verify_range(params, c, 8, mutated, tv));
    elements++;
  };
  for (auto f : {&RangeProof::a_commit, &RangeProof::s_commit, &RangeProof::t1,
                 &RangeProof::t2}) {
    auto p = proof;
    p.*f = p.*f + params.g;
    expect_reject(p);
  }
  for (std::size_t k = 0; k < proof.tail.l_points.size(); k++) {
    auto p = proof;
    p.tail.l_points[k] = p.tail.l_points[k] + params.g;
    expect_reject(p);
    p = proof;
    p.tail.r_points[k] = p.tail.r_points[k] + params.g;
    expect_reject(p);
  }
  for (auto f : {&RangeProof::tau_x, &RangeProof::mu, &RangeProof::t_hat}) {
    auto p = proof;
    p.*f = p.*f + Scalar::one();
    expect_reject(p);
  }
  {
    auto p = proof;
    p.tail.a = p.tail.a + Scalar::one();
    expect_reject(p);
    p = proof;
    p.tail.b = p.tail.b + Scalar::one();
    expect_reject(p);
  }
  CHECK(elements == proof.point_count() + proof.scalar_count());
}

TEST_CASE("sqrt: worked examples") {
  DeterministicRandom rng(55);
  const CommitParams& params = params_for(2);
  auto run = [&](uint64_t m1, uint64_t m2) {
    const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
    const Point c1 = commit_scalar(params, Scalar::from_u64(m1), r1);
    const Point c2 = commit_scalar(params, Scalar::from_u64(m2), r2);
    Transcript tp = fresh(m2);
    auto proof = prove_sqrt(params, c1, c2, m1, m2, r1, r2, 64, tp, rng);
    Transcript tv = fresh(m2);
    return verify_sqrt(params, c1, c2, 64, proof, tv);
  };
  CHECK(run(0, 0));      // m2 = 0 -> m1 = 0
  CHECK(run(4, 17));     // floor(sqrt(17)) = 4
  CHECK(run(12, 144));   // exact square
  CHECK(run(4, 24));     // strictness edge: m2 = (m1+1)^2 - 1

  // m1 = 5 for m2 = 17: refused
  const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
  const Point c1 = commit_scalar(params, Scalar::from_u64(5), r1);
  const Point c2 = commit_scalar(params, Scalar::from_u64(17), r2);
  Transcript t = fresh();
  CHECK_THROWS_AS(prove_sqrt(params, c1, c2, 5, 17, r1, r2, 64, t, rng),
                  PreconditionError);
}

TEST_CASE("sqrt: 500 random values, honest accepts, off-by-one refusals") {
  DeterministicRandom rng(56);
  const CommitParams& params = params_for(2);
  int full_runs = 0;
  for (int trial = 0; trial < 500; trial++) {
    uint64_t m2;
    rng.fill(reinterpret_cast<uint8_t*>(&m2), 8);
    m2 &= (uint64_t{1} << 40) - 1;
    const uint64_t m1 = isqrt64(m2);
    const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
    const Point c2 = commit_scalar(params, Scalar::from_u64(m2), r2);

    // off-by-one witnesses always refuse
    for (uint64_t wrong : {m1 - 1, m1 + 1}) {
      const Point cw = commit_scalar(params, Scalar::from_u64(wrong), r1);
      Transcript t = fresh(trial);
      CHECK_THROWS_AS(
          prove_sqrt(params, cw, c2, wrong, m2, r1, r2, 64, t, rng),
          PreconditionError);
    }

    // full prove/verify on a subsample to keep the suite quick; every honest
    // witness passes the precondition check
    const Point c1 = commit_scalar(params, Scalar::from_u64(m1), r1);
    if (trial % 10 == 0) {
      Transcript tp = fresh(trial);
      auto proof = prove_sqrt(params, c1, c2, m1, m2, r1, r2, 64, tp, rng);
      Transcript tv = fresh(trial);
      CHECK(verify_sqrt(params, c1, c2, 64, proof, tv));
      full_runs++;
    }
  }
  CHECK(full_runs == 50);

  // a forged transcript (proof retargeted at the wrong m1 commitment) fails
  DeterministicRandom rng2(57);
  const uint64_t m2 = 1234567;
  const uint64_t m1 = isqrt64(m2);
  const Scalar r1 = Scalar::random(rng2), r2 = Scalar::random(rng2);
  const Point c1 = commit_scalar(params, Scalar::from_u64(m1), r1);
  const Point c2 = commit_scalar(params, Scalar::from_u64(m2), r2);
  Transcript tp = fresh(1);
  auto proof = prove_sqrt(params, c1, c2, m1, m2, r1, r2, 64, tp, rng2);
  const Point c1_wrong = commit_scalar(params, Scalar::from_u64(m1 + 1), r1);
  Transcript tv = fresh(1);
  CHECK_FALSE(verify_sqrt(params, c1_wrong, c2, 64, proof, tv));
}

TEST_CASE("sqrt: encoding round-trip and element mutation") {
  DeterministicRandom rng(58);
  const CommitParams& params = params_for(2);
  const uint64_t m2 = 108, m1 = 10;
  const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
  const Point c1 = commit_scalar(params, Scalar::from_u64(m1), r1);
  const Point c2 = commit_scalar(params, Scalar::from_u64(m2), r2);
  Transcript tp = fresh();
  auto proof = prove_sqrt(params, c1, c2, m1, m2, r1, r2, 64, tp, rng);
  Bytes enc = proof.encode();
  auto back = SqrtProof::decode(enc);
  CHECK(back.encode() == enc);
  Bytes trunc(enc.begin(), enc.end() - 1);
  CHECK_THROWS_AS(SqrtProof::decode(trunc), DecodeError);

  // aux commitments and a nested element reject on mutation
  auto p = proof;
  p.sq_low = p.sq_low + params.g;
  Transcript t1 = fresh();
  CHECK_FALSE(verify_sqrt(params, c1, c2, 64, p, t1));
  p = proof;
  p.sq_high = p.sq_high + params.g;
  Transcript t2 = fresh();
  CHECK_FALSE(verify_sqrt(params, c1, c2, 64, p, t2));
  p = proof;
  p.sq1.z_m = p.sq1.z_m + Scalar::one();
  Transcript t3 = fresh();
  CHECK_FALSE(verify_sqrt(params, c1, c2, 64, p, t3));
  p = proof;
  p.range_high.t_hat = p.range_high.t_hat + Scalar::one();
  Transcript t4 = fresh();
  CHECK_FALSE(verify_sqrt(params, c1, c2, 64, p, t4));
}

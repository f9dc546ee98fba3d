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
#include "zksvm/sigma.hpp"

using namespace zksvm;
using test::params_for;
using test::random_vec;

namespace {

Transcript fresh(uint64_t salt = 0) {
  Transcript t("sigma-test");
  t.absorb_u64("salt", salt);
  return t;
}

Transcript with_nonce(uint8_t fill) {
  Transcript t("sigma-test");
  Bytes nonce(16, fill);
  t.bind_server_challenge(nonce);
  return t;
}

}  // namespace

TEST_CASE("Pi_Op completeness across sizes (>=200 trials)") {
  DeterministicRandom rng(11);
  for (uint32_t n : {1u, 2u, 4u, 8u, 16u}) {
    const CommitParams& params = params_for(n);
    for (int trial = 0; trial < 40; trial++) {
      auto m = random_vec(rng, n);
      const Scalar r = Scalar::random(rng);
      const Point c = commit_vector(params, BasisId::GVec, m, r);
      Transcript tp = fresh(trial);
      auto proof =
          prove_opening(params, params.gvec, c, m, r, tp, rng);
      Transcript tv = fresh(trial);
      CHECK(verify_opening(params, params.gvec, c, proof, tv));
    }
  }
}

TEST_CASE("Pi_Op refusal, wrong statement, nonce binding") {
  DeterministicRandom rng(12);
  const CommitParams& params = params_for(4);
  auto m = random_vec(rng, 4);
  const Scalar r = Scalar::random(rng);
  const Point c = commit_vector(params, BasisId::GVec, m, r);

  Transcript t = fresh();
  CHECK_THROWS_AS(
      prove_opening(params, params.gvec, c, m, r + Scalar::one(), t, rng),
      PreconditionError);

  Transcript tp = with_nonce(0xaa);
  auto proof = prove_opening(params, params.gvec, c, m, r, tp, rng);
  // verify against a different commitment
  Transcript tv1 = with_nonce(0xaa);
  CHECK_FALSE(verify_opening(params, params.gvec, c + params.g, proof, tv1));
  // verify under a different bound nonce
  Transcript tv2 = with_nonce(0xbb);
  CHECK_FALSE(verify_opening(params, params.gvec, c, proof, tv2));
  // honest
  Transcript tv3 = with_nonce(0xaa);
  CHECK(verify_opening(params, params.gvec, c, proof, tv3));
}

TEST_CASE("Pi_Op mutation sweep: every serialized element") {
  DeterministicRandom rng(13);
  const CommitParams& params = params_for(4);
  auto m = random_vec(rng, 4);
  const Scalar r = Scalar::random(rng);
  const Point c = commit_vector(params, BasisId::GVec, m, r);
  Transcript tp = fresh();
  const auto proof = prove_opening(params, params.gvec, c, m, r, tp, rng);

  int elements = 0;
  auto expect_reject = [&](OpeningProof mutated) {
    Transcript tv = fresh();
    CHECK_FALSE(verify_opening(params, params.gvec, c, mutated, tv));
    elements++;
  };
  {
    auto p = proof;
    p.announcement = p.announcement + params.g;
    expect_reject(p);
  }
  for (std::size_t i = 0; i < proof.z.size(); i++) {
    auto p = proof;
    p.z[i] = p.z[i] + Scalar::one();
    expect_reject(p);
  }
  {
    auto p = proof;
    p.z_r = p.z_r + Scalar::one();
    expect_reject(p);
  }
  CHECK(elements == 6);  // 1 point + 5 scalars = every serialized element
}

TEST_CASE("Pi_Eq completeness incl. iterated basis (>=200 trials)") {
  DeterministicRandom rng(14);
  for (uint32_t n : {1u, 2u, 4u, 8u, 16u}) {
    const CommitParams& params = params_for(n);
    for (int trial = 0; trial < 40; trial++) {
      auto m = random_vec(rng, n);
      const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
      // alternate between hvec and the iterated basis of the difference step
      const BasisId second = (trial % 2 == 0) ? BasisId::HVec : BasisId::GIter;
      const Point c1 = commit_vector(params, BasisId::GVec, m, r1);
      const Point c2 = commit_vector(params, second, m, r2);
      Transcript tp = fresh(trial);
      auto proof = prove_equality(params, params.gvec, c1,
                                  basis_points(params, second), c2, m, r1, r2,
                                  tp, rng);
      Transcript tv = fresh(trial);
      CHECK(verify_equality(params, params.gvec, c1,
                            basis_points(params, second), c2, proof, tv));
    }
  }
}

TEST_CASE("Pi_Eq rejects a shifted message") {
  DeterministicRandom rng(15);
  const CommitParams& params = params_for(4);
  auto m = random_vec(rng, 4);
  const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
  const Point c1 = commit_vector(params, BasisId::GVec, m, r1);
  // c2 recommitted with m + e1
  auto shifted = m;
  shifted[0] = shifted[0] + Scalar::one();
  const Point c2 = commit_vector(params, BasisId::HVec, shifted, r2);
  Transcript t = fresh();
  CHECK_THROWS_AS(prove_equality(params, params.gvec, c1, params.hvec, c2, m,
                                 r1, r2, t, rng),
                  PreconditionError);
  // forged attempt: prove with the real m against c2' fails verification
  const Point c2_honest = commit_vector(params, BasisId::HVec, m, r2);
  Transcript tp = fresh();
  auto proof = prove_equality(params, params.gvec, c1, params.hvec, c2_honest,
                              m, r1, r2, tp, rng);
  Transcript tv = fresh();
  CHECK_FALSE(
      verify_equality(params, params.gvec, c1, params.hvec, c2, proof, tv));
}

TEST_CASE("Pi_Eq mutation sweep at n=4") {
  DeterministicRandom rng(16);
  const CommitParams& params = params_for(4);
  auto m = random_vec(rng, 4);
  const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
  const Point c1 = commit_vector(params, BasisId::GVec, m, r1);
  const Point c2 = commit_vector(params, BasisId::HVec, m, r2);
  Transcript tp = fresh();
  const auto proof = prove_equality(params, params.gvec, c1, params.hvec, c2,
                                    m, r1, r2, tp, rng);
  int elements = 0;
  auto expect_reject = [&](EqualityProof mutated) {
    Transcript tv = fresh();
    CHECK_FALSE(verify_equality(params, params.gvec, c1, params.hvec, c2,
                                mutated, tv));
    elements++;
  };
  for (int which = 0; which < 2; which++) {
    auto p = proof;
    (which == 0 ? p.k1 : p.k2) = (which == 0 ? p.k1 : p.k2) + params.g;
    expect_reject(p);
  }
  for (std::size_t i = 0; i < proof.z.size(); i++) {
    auto p = proof;
    p.z[i] = p.z[i] + Scalar::one();
    expect_reject(p);
  }
  for (int which = 0; which < 2; which++) {
    auto p = proof;
    (which == 0 ? p.z_r1 : p.z_r2) =
        (which == 0 ? p.z_r1 : p.z_r2) + Scalar::one();
    expect_reject(p);
  }
  CHECK(elements == 8);  // 2 points + 6 scalars
}

TEST_CASE("Pi_0: difference-vector zero replacement") {
  DeterministicRandom rng(17);
  const CommitParams& params = params_for(3);
  // m = (3, 1, 4), j = 3 -> diff opens to (3, 1, 0)
  std::vector<Scalar> m = {Scalar::from_u64(3), Scalar::from_u64(1),
                           Scalar::from_u64(4)};
  const Scalar r = Scalar::random(rng);
  const Point c = commit_vector(params, BasisId::GVec, m, r);
  const Scalar r_new = Scalar::random(rng);
  Transcript tp = fresh();
  auto res = prove_zero_replace(params, c, m, r, 3, r_new, tp, rng);

  std::vector<Scalar> zeroed = {Scalar::from_u64(3), Scalar::from_u64(1),
                                Scalar::zero()};
  CHECK(open_check(params, res.diff, BasisId::GVec, zeroed, r_new));

  Transcript tv = fresh();
  CHECK(verify_zero_replace(params, c, res.diff, 3, res.proof, tv));

  // tampered E
  auto bad = res.proof;
  bad.extract = bad.extract + params.g;
  Transcript tb = fresh();
  CHECK_FALSE(verify_zero_replace(params, c, res.diff, 3, bad, tb));

  CHECK_THROWS_AS(
      prove_zero_replace(params, c, m, r, 0, r_new, tp, rng),
      std::invalid_argument);
  CHECK_THROWS_AS(
      prove_zero_replace(params, c, m, r, 4, r_new, tp, rng),
      std::invalid_argument);
}

TEST_CASE("Pi_0: zero entry already (E = identity)") {
  DeterministicRandom rng(18);
  const CommitParams& params = params_for(3);
  std::vector<Scalar> m = {Scalar::from_u64(7), Scalar::zero(),
                           Scalar::from_u64(2)};
  const Scalar r = Scalar::random(rng);
  const Point c = commit_vector(params, BasisId::GVec, m, r);
  Transcript tp = fresh();
  auto res = prove_zero_replace(params, c, m, r, 2, Scalar::random(rng), tp,
                                rng);
  CHECK(res.proof.extract.is_identity());
  Transcript tv = fresh();
  CHECK(verify_zero_replace(params, c, res.diff, 2, res.proof, tv));
}

TEST_CASE("Pi_0 completeness trials and mutation sweep") {
  DeterministicRandom rng(19);
  for (uint32_t n : {2u, 4u, 8u, 16u}) {
    const CommitParams& params = params_for(n);
    for (int trial = 0; trial < 50; trial++) {
      auto m = random_vec(rng, n);
      const Scalar r = Scalar::random(rng);
      const Point c = commit_vector(params, BasisId::GVec, m, r);
      const uint32_t j = 1 + trial % n;
      Transcript tp = fresh(trial);
      auto res =
          prove_zero_replace(params, c, m, r, j, Scalar::random(rng), tp, rng);
      Transcript tv = fresh(trial);
      CHECK(verify_zero_replace(params, c, res.diff, j, res.proof, tv));
    }
  }

  const CommitParams& params = params_for(4);
  DeterministicRandom rng2(20);
  auto m = random_vec(rng2, 4);
  const Scalar r = Scalar::random(rng2);
  const Point c = commit_vector(params, BasisId::GVec, m, r);
  Transcript tp = fresh();
  auto res = prove_zero_replace(params, c, m, r, 4, Scalar::random(rng2), tp,
                                rng2);
  int elements = 0;
  auto expect_reject = [&](const ZeroReplaceProof& mutated) {
    Transcript tv = fresh();
    CHECK_FALSE(verify_zero_replace(params, c, res.diff, 4, mutated, tv));
    elements++;
  };
  auto mutate_point = [&](Point ZeroReplaceProof::* field) {
    auto p = res.proof;
    p.*field = p.*field + params.g;
    expect_reject(p);
  };
  auto mutate_scalar = [&](Scalar ZeroReplaceProof::* field) {
    auto p = res.proof;
    p.*field = p.*field + Scalar::one();
    expect_reject(p);
  };
  mutate_point(&ZeroReplaceProof::extract);
  mutate_point(&ZeroReplaceProof::k_dlog);
  mutate_point(&ZeroReplaceProof::k_op);
  mutate_point(&ZeroReplaceProof::k_eq1);
  mutate_point(&ZeroReplaceProof::k_eq2);
  mutate_scalar(&ZeroReplaceProof::z_dlog);
  for (std::size_t i = 0; i < res.proof.z_op.size(); i++) {
    auto p = res.proof;
    p.z_op[i] = p.z_op[i] + Scalar::one();
    expect_reject(p);
  }
  mutate_scalar(&ZeroReplaceProof::z_op_r);
  for (std::size_t i = 0; i < res.proof.z_eq.size(); i++) {
    auto p = res.proof;
    p.z_eq[i] = p.z_eq[i] + Scalar::one();
    expect_reject(p);
  }
  mutate_scalar(&ZeroReplaceProof::z_eq_r1);
  mutate_scalar(&ZeroReplaceProof::z_eq_r2);
  CHECK(elements == 5 + 10);  // 5 points, 2n+2 = 10 scalars at n=4
}

TEST_CASE("Pi_Sq: trivial squares, completeness, refusal, mutation") {
  DeterministicRandom rng(21);
  const CommitParams& params = params_for(2);

  // m2 = 0 -> m1 = 0
  {
    const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
    const Point c1 = commit_scalar(params, Scalar::zero(), r1);
    const Point c2 = commit_scalar(params, Scalar::zero(), r2);
    Transcript tp = fresh();
    auto proof = prove_square(params, c1, c2, Scalar::zero(), Scalar::zero(),
                              r1, r2, tp, rng);
    Transcript tv = fresh();
    CHECK(verify_square(params, c1, c2, proof, tv));
  }
  // m2 = 5, m1 = 25
  {
    const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
    const Point c1 = commit_scalar(params, Scalar::from_u64(25), r1);
    const Point c2 = commit_scalar(params, Scalar::from_u64(5), r2);
    Transcript tp = fresh();
    auto proof = prove_square(params, c1, c2, Scalar::from_u64(25),
                              Scalar::from_u64(5), r1, r2, tp, rng);
    Transcript tv = fresh();
    CHECK(verify_square(params, c1, c2, proof, tv));

    // mutation sweep: 2 points + 3 scalars
    int elements = 0;
    auto expect_reject = [&](SquareProof mutated) {
      Transcript t = fresh();
      CHECK_FALSE(verify_square(params, c1, c2, mutated, t));
      elements++;
    };
    {
      auto p = proof;
      p.k1 = p.k1 + params.g;
      expect_reject(p);
    }
    {
      auto p = proof;
      p.k2 = p.k2 + params.g;
      expect_reject(p);
    }
    for (auto field : {&SquareProof::z_m, &SquareProof::z_r2,
                       &SquareProof::z_r3}) {
      auto p = proof;
      p.*field = p.*field + Scalar::one();
      expect_reject(p);
    }
    CHECK(elements == 5);
  }
  // m2 = 5, m1 = 24: prover refuses; a crafted transcript fails
  {
    const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
    const Point c1 = commit_scalar(params, Scalar::from_u64(24), r1);
    const Point c2 = commit_scalar(params, Scalar::from_u64(5), r2);
    Transcript t = fresh();
    CHECK_THROWS_AS(prove_square(params, c1, c2, Scalar::from_u64(24),
                                 Scalar::from_u64(5), r1, r2, t, rng),
                    PreconditionError);
    // craft a proof for a true square statement, then retarget it
    const Point c1_true = commit_scalar(params, Scalar::from_u64(25), r1);
    Transcript tp = fresh();
    auto proof = prove_square(params, c1_true, c2, Scalar::from_u64(25),
                              Scalar::from_u64(5), r1, r2, tp, rng);
    Transcript tv = fresh();
    CHECK_FALSE(verify_square(params, c1, c2, proof, tv));
  }

  // completeness trials
  for (int trial = 0; trial < 200; trial++) {
    const Scalar m2 = Scalar::random(rng);
    const Scalar m1 = m2 * m2;
    const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
    const Point c1 = commit_scalar(params, m1, r1);
    const Point c2 = commit_scalar(params, m2, r2);
    Transcript tp = fresh(trial);
    auto proof = prove_square(params, c1, c2, m1, m2, r1, r2, tp, rng);
    Transcript tv = fresh(trial);
    CHECK(verify_square(params, c1, c2, proof, tv));
  }
}

TEST_CASE("sigma simulators satisfy the verification equations") {
  DeterministicRandom rng(22);
  const CommitParams& params = params_for(4);
  // Statements are arbitrary points: no witness exists or is known.
  const Point c1 = params.g.mul(Scalar::random(rng));
  const Point c2 = params.h.mul(Scalar::random(rng));
  const Scalar ch = Scalar::random(rng);

  {
    auto sim = simulate_opening(params, params.gvec, c1, ch, rng);
    Transcript tv = fresh();
    tv.inject_challenge(ch);
    CHECK(verify_opening(params, params.gvec, c1, sim, tv));
  }
  {
    auto sim =
        simulate_equality(params, params.gvec, c1, params.hvec, c2, ch, rng);
    Transcript tv = fresh();
    tv.inject_challenge(ch);
    CHECK(verify_equality(params, params.gvec, c1, params.hvec, c2, sim, tv));
  }
  {
    const Point e = params.g.mul(Scalar::random(rng));
    auto sim = simulate_zero_replace(params, c1, c2, 2, e, ch, rng);
    Transcript tv = fresh();
    tv.inject_challenge(ch);
    CHECK(verify_zero_replace(params, c1, c2, 2, sim, tv));
  }
  {
    auto sim = simulate_square(params, c1, c2, ch, rng);
    Transcript tv = fresh();
    tv.inject_challenge(ch);
    CHECK(verify_square(params, c1, c2, sim, tv));
  }
}

TEST_CASE("sigma proof encodings round-trip") {
  DeterministicRandom rng(23);
  const CommitParams& params = params_for(4);
  auto m = random_vec(rng, 4);
  const Scalar r = Scalar::random(rng);
  const Point c = commit_vector(params, BasisId::GVec, m, r);
  Transcript tp = fresh();
  auto proof = prove_opening(params, params.gvec, c, m, r, tp, rng);
  Bytes enc = proof.encode();
  auto back = OpeningProof::decode(enc, 4);
  CHECK(back.encode() == enc);
  // truncation and count mismatch are decode errors
  Bytes trunc(enc.begin(), enc.end() - 1);
  CHECK_THROWS_AS(OpeningProof::decode(trunc, 4), DecodeError);
  CHECK_THROWS_AS(OpeningProof::decode(enc, 5), DecodeError);
}

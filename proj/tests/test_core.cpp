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

#include <set>

#include "test_util.hpp"
#include "zksvm/pedersen.hpp"
#include "zksvm/transcript.hpp"

using namespace zksvm;
using test::naive_mul;
using test::naive_multiexp;
using test::params_for;

TEST_CASE("scalar arithmetic identities") {
  DeterministicRandom rng(1);
  const Scalar a = Scalar::random(rng);
  const Scalar b = Scalar::random(rng);
  CHECK(a + Scalar::zero() == a);
  CHECK(a * Scalar::one() == a);
  CHECK(a - a == Scalar::zero());
  CHECK(a * b == b * a);
  CHECK((a + b) - b == a);
  CHECK(a * a.invert() == Scalar::one());
  CHECK(Scalar::from_i64(-5) + Scalar::from_u64(5) == Scalar::zero());
  CHECK_THROWS_AS(Scalar::zero().invert(), std::invalid_argument);
}

TEST_CASE("scalar serialization round-trips and rejects non-canonical") {
  DeterministicRandom rng(2);
  for (int i = 0; i < 50; i++) {
    const Scalar s = Scalar::random(rng);
    CHECK(Scalar::decode(s.encode()) == s);
  }
  // order-1 is canonical; order itself is not. order = 2^256 - 2^224 + ...
  // easiest probe: all-0xff is >= order for P-256.
  Bytes bad(kScalarBytes, 0xff);
  CHECK_THROWS_AS(Scalar::decode(bad), DecodeError);
  CHECK_THROWS_AS(Scalar::decode(Bytes(31, 0)), DecodeError);
}

TEST_CASE("group law and exponent identities") {
  DeterministicRandom rng(3);
  const CommitParams& params = params_for(4);
  const Point& g = params.g;
  const Scalar a = Scalar::random(rng);
  const Scalar b = Scalar::random(rng);
  // (g^a)^b = g^(ab), g^a * g^b = g^(a+b)
  CHECK(g.mul(a).mul(b) == g.mul(a * b));
  CHECK(g.mul(a) + g.mul(b) == g.mul(a + b));
  // associativity over random points
  const Point p = g.mul(a), q = g.mul(b), r = params.h.mul(a);
  CHECK((p + q) + r == p + (q + r));
  // identity and inverse
  CHECK((p + Point::identity()) == p);
  CHECK((p - p).is_identity());
  // g^0 = identity (order * anything collapses)
  CHECK(g.mul(Scalar::zero()).is_identity());
  // scalar mult agrees with the double-and-add oracle
  CHECK(g.mul(a) == naive_mul(g, a));
}

TEST_CASE("point encoding is canonical and rejects corruption") {
  DeterministicRandom rng(4);
  const CommitParams& params = params_for(2);
  const Point p = params.g.mul(Scalar::random(rng));
  auto enc = p.encode();
  CHECK(Point::decode(enc) == p);
  // identity has the dedicated all-zero form
  auto id_enc = Point::identity().encode();
  for (uint8_t byte : id_enc) CHECK(byte == 0);
  CHECK(Point::decode(id_enc).is_identity());

  // flipping the tag byte always rejects; at least one coordinate flip must
  // reject as well
  auto bad = enc;
  bad[0] ^= 0x04;
  CHECK_THROWS_AS(Point::decode(bad), DecodeError);
  int rejections = 0;
  for (std::size_t i = 0; i < enc.size(); i++) {
    auto mutated = enc;
    mutated[i] ^= 1;
    try {
      (void)Point::decode(mutated);
    } catch (const DecodeError&) {
      rejections++;
    }
  }
  CHECK(rejections >= 1);
  CHECK_THROWS_AS(Point::decode(Bytes(32, 1)), DecodeError);
}

TEST_CASE("derive_params determinism and distinctness") {
  const CommitParams a1 = derive_params("zksvm-v1", 4);
  const CommitParams a2 = derive_params("zksvm-v1", 4);
  CHECK(a1.gvec.size() == 4);
  CHECK(a1.hvec.size() == 4);
  // 10 main generators, byte-identical across derivations
  CHECK(a1.g.encode() == a2.g.encode());
  CHECK(a1.h.encode() == a2.h.encode());
  for (int i = 0; i < 4; i++) {
    CHECK(a1.gvec[i].encode() == a2.gvec[i].encode());
    CHECK(a1.hvec[i].encode() == a2.hvec[i].encode());
  }

  // different labels share nothing
  const CommitParams pa = derive_params("A", 2);
  const CommitParams pb = derive_params("B", 2);
  std::set<std::array<uint8_t, kPointBytes>> encodings;
  auto collect = [&](const CommitParams& p) {
    encodings.insert(p.g.encode());
    encodings.insert(p.h.encode());
    for (const Point& pt : p.gvec) encodings.insert(pt.encode());
    for (const Point& pt : p.hvec) encodings.insert(pt.encode());
  };
  collect(pa);
  collect(pb);
  CHECK(encodings.size() == 12);

  CHECK_THROWS_AS(derive_params("x", 0), std::invalid_argument);
  CHECK_THROWS_AS(derive_params("", 2), std::invalid_argument);
}

TEST_CASE("derived bases: iterated rotation and products") {
  const CommitParams& params = params_for(4);
  CHECK(params.giter[0] == params.gvec[3]);
  CHECK(params.giter[1] == params.gvec[0]);
  CHECK(params.giter[2] == params.gvec[1]);
  CHECK(params.giter[3] == params.gvec[2]);
  Point gp = params.gvec[0] + params.gvec[1] + params.gvec[2] + params.gvec[3];
  CHECK(params.g_prod == gp);
}

TEST_CASE("multiexp agrees with naive fold, lengths 1..64") {
  DeterministicRandom rng(5);
  const CommitParams& params = params_for(1);
  std::vector<Point> pts;
  std::vector<Scalar> scs;
  for (std::size_t len = 1; len <= 64; len++) {
    pts.push_back(params.g.mul(Scalar::random(rng)));
    scs.push_back(Scalar::random(rng));
    CHECK(multiexp(pts, scs) == naive_multiexp(pts, scs));
  }
  // trivial cases from the contract
  const Point g = params.g;
  {
    const Point p[] = {g};
    const Scalar z[] = {Scalar::zero()};
    CHECK(multiexp(p, z).is_identity());
  }
  {
    const Point p[] = {g, g};
    const Scalar o[] = {Scalar::one(), Scalar::one()};
    CHECK(multiexp(p, o) == g.mul(Scalar::from_u64(2)));
  }
  CHECK_THROWS_AS(multiexp(std::vector<Point>{}, std::vector<Scalar>{}),
                  std::invalid_argument);
  {
    const Point p[] = {g};
    const Scalar z[] = {Scalar::one(), Scalar::one()};
    CHECK_THROWS_AS(multiexp(p, z), std::invalid_argument);
  }
}

TEST_CASE("scalar_from_i128 embedding") {
  CHECK(scalar_from_i128(-1) + Scalar::one() == Scalar::zero());
  const __int128 big = (static_cast<__int128>(1) << 100) + 12345;
  CHECK(scalar_from_i128(big) - scalar_from_u128(static_cast<unsigned __int128>(big)) ==
        Scalar::zero());
  CHECK(scalar_from_i128(-big) + scalar_from_i128(big) == Scalar::zero());
}

// ---------------------------------------------------------------------------
// transcript

TEST_CASE("transcript determinism and domain separation") {
  auto challenge_after = [](std::string_view label, Bytes data) {
    Transcript t("test");
    t.absorb(label, data);
    return t.challenge_scalar("c");
  };
  CHECK(challenge_after("x", {1, 2, 3}) == challenge_after("x", {1, 2, 3}));
  CHECK(challenge_after("x", {1, 2, 3}) != challenge_after("y", {1, 2, 3}));
  CHECK(challenge_after("x", {1, 2, 3}) != challenge_after("x", {1, 2, 4}));
}

TEST_CASE("transcript order sensitivity") {
  DeterministicRandom rng(6);
  const CommitParams& params = params_for(1);
  const Point p = params.g.mul(Scalar::random(rng));
  const Scalar s = Scalar::random(rng);
  Transcript t1("test");
  t1.absorb_point("p", p);
  t1.absorb_scalar("s", s);
  Transcript t2("test");
  t2.absorb_scalar("s", s);
  t2.absorb_point("p", p);
  CHECK(t1.challenge_scalar("c") != t2.challenge_scalar("c"));
}

TEST_CASE("transcript challenges: nonzero, distinct, frozen vector") {
  Transcript t("zksvm-golden");
  const Scalar c1 = t.challenge_scalar("golden");
  const Scalar c2 = t.challenge_scalar("golden");
  CHECK(!c1.is_zero());
  CHECK(!c2.is_zero());
  CHECK(c1 != c2);

  // Golden value generated once from this fixed construction and frozen;
  // guards the normative framing against accidental change.
  auto enc = c1.encode();
  std::string hex;
  for (uint8_t b : enc) {
    static const char* digits = "0123456789abcdef";
    hex.push_back(digits[b >> 4]);
    hex.push_back(digits[b & 15]);
  }
  CHECK(hex ==
        "1e6cfd9c8262f137b85d0df0771ee79ef2f07a9bf6d4e7537aa61d1667e42309");
}

TEST_CASE("server challenge binding") {
  Bytes nonce_a(16, 0xaa), nonce_b(16, 0xbb), shorty(15, 0xcc);
  Transcript ta("test");
  ta.bind_server_challenge(nonce_a);
  Transcript tb("test");
  tb.bind_server_challenge(nonce_b);
  CHECK(ta.challenge_scalar("c") != tb.challenge_scalar("c"));
  Transcript ts("test");
  CHECK_THROWS_AS(ts.bind_server_challenge(shorty), std::invalid_argument);
}

TEST_CASE("transcript fork separates sub-proofs") {
  Transcript root("test");
  root.absorb("stmt", Bytes{9, 9, 9});
  Transcript f0 = root.fork("vector", 0);
  Transcript f1 = root.fork("vector", 1);
  CHECK(f0.challenge_scalar("c") != f1.challenge_scalar("c"));
}

// ---------------------------------------------------------------------------
// pedersen

TEST_CASE("scalar commitments: identities and naive oracle") {
  const CommitParams& params = params_for(4);
  CHECK(commit_scalar(params, Scalar::zero(), Scalar::zero()).is_identity());
  // g^5 h^7 by naive exponentiation
  const Point expected = naive_mul(params.g, Scalar::from_u64(5)) +
                         naive_mul(params.h, Scalar::from_u64(7));
  CHECK(commit_scalar(params, Scalar::from_u64(5), Scalar::from_u64(7)) ==
        expected);
}

TEST_CASE("homomorphism: commit(m1,r1)*commit(m2,r2) = commit(m1+m2,r1+r2)") {
  DeterministicRandom rng(7);
  const CommitParams& params = params_for(3);
  for (int trial = 0; trial < 20; trial++) {
    const Scalar m1 = Scalar::random(rng), r1 = Scalar::random(rng);
    const Scalar m2 = Scalar::random(rng), r2 = Scalar::random(rng);
    CHECK(commit_scalar(params, m1, r1) + commit_scalar(params, m2, r2) ==
          commit_scalar(params, m1 + m2, r1 + r2));
  }
}

TEST_CASE("vector commitments: homomorphism, multiexp oracle, division") {
  DeterministicRandom rng(8);
  const CommitParams& params = params_for(3);
  const std::vector<Scalar> zero3(3, Scalar::zero());
  CHECK(commit_vector(params, BasisId::GVec, zero3, Scalar::zero())
            .is_identity());

  auto m1 = test::random_vec(rng, 3);
  auto m2 = test::random_vec(rng, 3);
  const Scalar r1 = Scalar::random(rng), r2 = Scalar::random(rng);
  const Point c1 = commit_vector(params, BasisId::GVec, m1, r1);
  const Point c2 = commit_vector(params, BasisId::GVec, m2, r2);

  // product commits to entry-wise sum
  std::vector<Scalar> sum;
  for (int i = 0; i < 3; i++) sum.push_back(m1[i] + m2[i]);
  CHECK(c1 + c2 == commit_vector(params, BasisId::GVec, sum, r1 + r2));

  // equals the multiexp oracle
  std::vector<Point> pts(params.gvec.begin(), params.gvec.end());
  pts.push_back(params.h);
  std::vector<Scalar> scs = m1;
  scs.push_back(r1);
  CHECK(c1 == naive_multiexp(pts, scs));

  // division commits to the message difference
  std::vector<Scalar> diff;
  for (int i = 0; i < 3; i++) diff.push_back(m1[i] - m2[i]);
  CHECK(c1 - c2 == commit_vector(params, BasisId::GVec, diff, r1 - r2));

  CHECK_THROWS_AS(
      commit_vector(params, BasisId::GVec, std::vector<Scalar>(2), r1),
      std::invalid_argument);
}

TEST_CASE("open_check accepts exactly the held opening") {
  DeterministicRandom rng(9);
  const CommitParams& params = params_for(4);
  auto m = test::random_vec(rng, 4);
  const Scalar r = Scalar::random(rng);
  const Point c = commit_vector(params, BasisId::GVec, m, r);
  CHECK(open_check(params, c, BasisId::GVec, m, r));
  CHECK_FALSE(open_check(params, c, BasisId::GVec, m, r + Scalar::one()));
  auto perturbed = m;
  perturbed[2] = perturbed[2] + Scalar::one();
  CHECK_FALSE(open_check(params, c, BasisId::GVec, perturbed, r));
  // no second opening constructed by the suite may verify
  CHECK_FALSE(open_check(params, c, BasisId::HVec, m, r));
}

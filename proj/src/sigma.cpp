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

#include "zksvm/sigma.hpp"

#include <stdexcept>

#include "zksvm/bytes_io.hpp"

namespace zksvm {
namespace {

void absorb_params(Transcript& t, const CommitParams& params) {
  t.absorb("sigma/params",
           {reinterpret_cast<const uint8_t*>(params.label.data()),
            params.label.size()});
  t.absorb_u64("sigma/n", params.n);
}

void absorb_points(Transcript& t, std::string_view label,
                   std::span<const Point> pts) {
  Bytes buf;
  buf.reserve(pts.size() * kPointBytes);
  for (const Point& p : pts) {
    auto enc = p.encode();
    buf.insert(buf.end(), enc.begin(), enc.end());
  }
  t.absorb(label, buf);
}

std::vector<Scalar> random_scalars(RandomSource& rng, std::size_t n) {
  std::vector<Scalar> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; i++) v.push_back(Scalar::random(rng));
  return v;
}

// Response equation check: prod basis_i^{z_i} * h^{z_r} == K * C^e.
bool response_eq_holds(const CommitParams& params, std::span<const Point> basis,
                       std::span<const Scalar> z, const Scalar& z_r,
                       const Point& k, const Point& c, const Scalar& e) {
  if (z.size() != basis.size()) return false;
  std::vector<Point> pts(basis.begin(), basis.end());
  std::vector<Scalar> scs(z.begin(), z.end());
  pts.push_back(params.h);
  scs.push_back(z_r);
  pts.push_back(k);
  scs.push_back(Scalar::one().neg());
  pts.push_back(c);
  scs.push_back(e.neg());
  return multiexp_unchecked(pts, scs).is_identity();
}

std::vector<Scalar> respond(std::span<const Scalar> blind,
                            std::span<const Scalar> secret, const Scalar& e) {
  std::vector<Scalar> z;
  z.reserve(blind.size());
  for (std::size_t i = 0; i < blind.size(); i++)
    z.push_back(blind[i] + e * secret[i]);
  return z;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pi_Op

void OpeningProof::write(ByteWriter& w) const {
  w.u16(1);
  w.point(announcement);
  w.u16(static_cast<uint16_t>(z.size() + 1));
  for (const Scalar& s : z) w.scalar(s);
  w.scalar(z_r);
}

Bytes OpeningProof::encode() const {
  ByteWriter w;
  write(w);
  return w.take();
}

OpeningProof OpeningProof::read(ByteReader& r, std::size_t n_msgs) {
  if (r.u16() != 1) throw DecodeError("opening proof: point count");
  OpeningProof p;
  p.announcement = r.point();
  if (r.u16() != n_msgs + 1) throw DecodeError("opening proof: scalar count");
  p.z.reserve(n_msgs);
  for (std::size_t i = 0; i < n_msgs; i++) p.z.push_back(r.scalar());
  p.z_r = r.scalar();
  return p;
}

OpeningProof OpeningProof::decode(std::span<const uint8_t> in,
                                  std::size_t n_msgs) {
  ByteReader r(in);
  OpeningProof p = read(r, n_msgs);
  r.expect_done("opening proof");
  return p;
}

OpeningProof prove_opening(const CommitParams& params,
                           std::span<const Point> basis, const Point& c,
                           std::span<const Scalar> m, const Scalar& r,
                           Transcript& t, RandomSource& rng) {
  if (commit_with_basis(params, basis, m, r) != c)
    throw PreconditionError("prove_opening: opening does not match commitment");

  absorb_params(t, params);
  absorb_points(t, "sigma/op/basis", basis);
  t.absorb_point("sigma/op/C", c);

  OpeningProof p;
  std::vector<Scalar> s = random_scalars(rng, m.size());
  Scalar s_r = Scalar::random(rng);
  p.announcement = commit_with_basis(params, basis, s, s_r);
  t.absorb_point("sigma/op/K", p.announcement);
  const Scalar e = t.challenge_scalar("sigma/op/e");
  p.z = respond(s, m, e);
  p.z_r = s_r + e * r;
  return p;
}

bool verify_opening(const CommitParams& params, std::span<const Point> basis,
                    const Point& c, const OpeningProof& proof, Transcript& t) {
  absorb_params(t, params);
  absorb_points(t, "sigma/op/basis", basis);
  t.absorb_point("sigma/op/C", c);
  t.absorb_point("sigma/op/K", proof.announcement);
  const Scalar e = t.challenge_scalar("sigma/op/e");
  return response_eq_holds(params, basis, proof.z, proof.z_r,
                           proof.announcement, c, e);
}

// ---------------------------------------------------------------------------
// Pi_Eq

void EqualityProof::write(ByteWriter& w) const {
  w.u16(2);
  w.point(k1);
  w.point(k2);
  w.u16(static_cast<uint16_t>(z.size() + 2));
  for (const Scalar& s : z) w.scalar(s);
  w.scalar(z_r1);
  w.scalar(z_r2);
}

Bytes EqualityProof::encode() const {
  ByteWriter w;
  write(w);
  return w.take();
}

EqualityProof EqualityProof::read(ByteReader& r, std::size_t n_msgs) {
  if (r.u16() != 2) throw DecodeError("equality proof: point count");
  EqualityProof p;
  p.k1 = r.point();
  p.k2 = r.point();
  if (r.u16() != n_msgs + 2) throw DecodeError("equality proof: scalar count");
  p.z.reserve(n_msgs);
  for (std::size_t i = 0; i < n_msgs; i++) p.z.push_back(r.scalar());
  p.z_r1 = r.scalar();
  p.z_r2 = r.scalar();
  return p;
}

EqualityProof EqualityProof::decode(std::span<const uint8_t> in,
                                    std::size_t n_msgs) {
  ByteReader r(in);
  EqualityProof p = read(r, n_msgs);
  r.expect_done("equality proof");
  return p;
}

EqualityProof prove_equality(const CommitParams& params,
                             std::span<const Point> basis1, const Point& c1,
                             std::span<const Point> basis2, const Point& c2,
                             std::span<const Scalar> m, const Scalar& r1,
                             const Scalar& r2, Transcript& t,
                             RandomSource& rng) {
  if (basis1.size() != basis2.size())
    throw std::invalid_argument("prove_equality: basis size mismatch");
  if (commit_with_basis(params, basis1, m, r1) != c1 ||
      commit_with_basis(params, basis2, m, r2) != c2)
    throw PreconditionError("prove_equality: openings do not match");

  absorb_params(t, params);
  absorb_points(t, "sigma/eq/basis1", basis1);
  absorb_points(t, "sigma/eq/basis2", basis2);
  t.absorb_point("sigma/eq/C1", c1);
  t.absorb_point("sigma/eq/C2", c2);

  EqualityProof p;
  std::vector<Scalar> s = random_scalars(rng, m.size());
  Scalar s1 = Scalar::random(rng);
  Scalar s2 = Scalar::random(rng);
  p.k1 = commit_with_basis(params, basis1, s, s1);
  p.k2 = commit_with_basis(params, basis2, s, s2);
  t.absorb_point("sigma/eq/K1", p.k1);
  t.absorb_point("sigma/eq/K2", p.k2);
  const Scalar e = t.challenge_scalar("sigma/eq/e");
  p.z = respond(s, m, e);
  p.z_r1 = s1 + e * r1;
  p.z_r2 = s2 + e * r2;
  return p;
}

bool verify_equality(const CommitParams& params, std::span<const Point> basis1,
                     const Point& c1, std::span<const Point> basis2,
                     const Point& c2, const EqualityProof& proof,
                     Transcript& t) {
  if (basis1.size() != basis2.size()) return false;
  absorb_params(t, params);
  absorb_points(t, "sigma/eq/basis1", basis1);
  absorb_points(t, "sigma/eq/basis2", basis2);
  t.absorb_point("sigma/eq/C1", c1);
  t.absorb_point("sigma/eq/C2", c2);
  t.absorb_point("sigma/eq/K1", proof.k1);
  t.absorb_point("sigma/eq/K2", proof.k2);
  const Scalar e = t.challenge_scalar("sigma/eq/e");
  return response_eq_holds(params, basis1, proof.z, proof.z_r1, proof.k1, c1,
                           e) &&
         response_eq_holds(params, basis2, proof.z, proof.z_r2, proof.k2, c2,
                           e);
}

// ---------------------------------------------------------------------------
// Pi_0

void ZeroReplaceProof::write(ByteWriter& w) const {
  w.u16(5);
  w.point(extract);
  w.point(k_dlog);
  w.point(k_op);
  w.point(k_eq1);
  w.point(k_eq2);
  w.u16(static_cast<uint16_t>(z_op.size() + z_eq.size() + 4));
  w.scalar(z_dlog);
  for (const Scalar& s : z_op) w.scalar(s);
  w.scalar(z_op_r);
  for (const Scalar& s : z_eq) w.scalar(s);
  w.scalar(z_eq_r1);
  w.scalar(z_eq_r2);
}

Bytes ZeroReplaceProof::encode() const {
  ByteWriter w;
  write(w);
  return w.take();
}

ZeroReplaceProof ZeroReplaceProof::read(ByteReader& r, std::size_t n) {
  if (n == 0) throw DecodeError("zero-replace proof: empty basis");
  if (r.u16() != 5) throw DecodeError("zero-replace proof: point count");
  ZeroReplaceProof p;
  p.extract = r.point();
  p.k_dlog = r.point();
  p.k_op = r.point();
  p.k_eq1 = r.point();
  p.k_eq2 = r.point();
  if (r.u16() != 2 * n + 2) throw DecodeError("zero-replace proof: scalar count");
  p.z_dlog = r.scalar();
  p.z_op.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; i++) p.z_op.push_back(r.scalar());
  p.z_op_r = r.scalar();
  p.z_eq.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; i++) p.z_eq.push_back(r.scalar());
  p.z_eq_r1 = r.scalar();
  p.z_eq_r2 = r.scalar();
  return p;
}

ZeroReplaceProof ZeroReplaceProof::decode(std::span<const uint8_t> in,
                                          std::size_t n) {
  ByteReader r(in);
  ZeroReplaceProof p = read(r, n);
  r.expect_done("zero-replace proof");
  return p;
}

namespace {

std::vector<Point> reduced_gvec(const CommitParams& params, uint32_t j) {
  std::vector<Point> basis;
  basis.reserve(params.n - 1);
  for (uint32_t i = 0; i < params.n; i++)
    if (i != j - 1) basis.push_back(params.gvec[i]);
  return basis;
}

void absorb_zero_replace_stmt(Transcript& t, const CommitParams& params,
                              const Point& c, const Point& diff, uint32_t j,
                              const Point& extract) {
  absorb_params(t, params);
  t.absorb_u64("sigma/zero/j", j);
  t.absorb_point("sigma/zero/C", c);
  t.absorb_point("sigma/zero/E", extract);
  t.absorb_point("sigma/zero/Diff", diff);
}

}  // namespace

ZeroReplaceResult prove_zero_replace(const CommitParams& params,
                                     const Point& c,
                                     std::span<const Scalar> m, const Scalar& r,
                                     uint32_t j, const Scalar& r_new,
                                     Transcript& t, RandomSource& rng) {
  if (j < 1 || j > params.n)
    throw std::invalid_argument("prove_zero_replace: position out of range");
  if (!open_check(params, c, BasisId::GVec, m, r))
    throw PreconditionError("prove_zero_replace: opening does not match");

  std::vector<Point> basis = reduced_gvec(params, j);
  std::vector<Scalar> m_red;
  m_red.reserve(params.n - 1);
  for (uint32_t i = 0; i < params.n; i++)
    if (i != j - 1) m_red.push_back(m[i]);

  ZeroReplaceResult out;
  out.proof.extract = params.gvec[j - 1].mul(m[j - 1]);
  out.diff = commit_with_basis(params, basis, m_red, r_new);
  const Point ce = c - out.proof.extract;  // opens to m_red with blinding r

  absorb_zero_replace_stmt(t, params, c, out.diff, j, out.proof.extract);

  ZeroReplaceProof& p = out.proof;
  const Scalar s_e = Scalar::random(rng);
  p.k_dlog = params.gvec[j - 1].mul(s_e);
  std::vector<Scalar> s_op = random_scalars(rng, params.n - 1);
  const Scalar s_op_r = Scalar::random(rng);
  p.k_op = commit_with_basis(params, basis, s_op, s_op_r);
  std::vector<Scalar> s_eq = random_scalars(rng, params.n - 1);
  const Scalar s_eq_r1 = Scalar::random(rng);
  const Scalar s_eq_r2 = Scalar::random(rng);
  p.k_eq1 = commit_with_basis(params, basis, s_eq, s_eq_r1);
  p.k_eq2 = commit_with_basis(params, basis, s_eq, s_eq_r2);

  t.absorb_point("sigma/zero/Kd", p.k_dlog);
  t.absorb_point("sigma/zero/Kop", p.k_op);
  t.absorb_point("sigma/zero/Keq1", p.k_eq1);
  t.absorb_point("sigma/zero/Keq2", p.k_eq2);
  const Scalar e = t.challenge_scalar("sigma/zero/e");

  p.z_dlog = s_e + e * m[j - 1];
  p.z_op = respond(s_op, m_red, e);
  p.z_op_r = s_op_r + e * r;
  p.z_eq = respond(s_eq, m_red, e);
  p.z_eq_r1 = s_eq_r1 + e * r;
  p.z_eq_r2 = s_eq_r2 + e * r_new;
  return out;
}

bool verify_zero_replace(const CommitParams& params, const Point& c,
                         const Point& diff, uint32_t j,
                         const ZeroReplaceProof& proof, Transcript& t) {
  if (j < 1 || j > params.n)
    throw std::invalid_argument("verify_zero_replace: position out of range");

  absorb_zero_replace_stmt(t, params, c, diff, j, proof.extract);
  t.absorb_point("sigma/zero/Kd", proof.k_dlog);
  t.absorb_point("sigma/zero/Kop", proof.k_op);
  t.absorb_point("sigma/zero/Keq1", proof.k_eq1);
  t.absorb_point("sigma/zero/Keq2", proof.k_eq2);
  const Scalar e = t.challenge_scalar("sigma/zero/e");

  // Schnorr leg: g_j^{z_dlog} == Kd * E^e.
  {
    const Point pts[] = {params.gvec[j - 1], proof.k_dlog, proof.extract};
    const Scalar scs[] = {proof.z_dlog, Scalar::one().neg(), e.neg()};
    if (!multiexp_unchecked(pts, scs).is_identity()) return false;
  }
  const std::vector<Point> basis = reduced_gvec(params, j);
  const Point ce = c - proof.extract;
  return response_eq_holds(params, basis, proof.z_op, proof.z_op_r, proof.k_op,
                           ce, e) &&
         response_eq_holds(params, basis, proof.z_eq, proof.z_eq_r1,
                           proof.k_eq1, ce, e) &&
         response_eq_holds(params, basis, proof.z_eq, proof.z_eq_r2,
                           proof.k_eq2, diff, e);
}

// ---------------------------------------------------------------------------
// Pi_Sq

void SquareProof::write(ByteWriter& w) const {
  w.u16(2);
  w.point(k1);
  w.point(k2);
  w.u16(3);
  w.scalar(z_m);
  w.scalar(z_r2);
  w.scalar(z_r3);
}

Bytes SquareProof::encode() const {
  ByteWriter w;
  write(w);
  return w.take();
}

SquareProof SquareProof::read(ByteReader& r) {
  if (r.u16() != 2) throw DecodeError("square proof: point count");
  SquareProof p;
  p.k1 = r.point();
  p.k2 = r.point();
  if (r.u16() != 3) throw DecodeError("square proof: scalar count");
  p.z_m = r.scalar();
  p.z_r2 = r.scalar();
  p.z_r3 = r.scalar();
  return p;
}

SquareProof SquareProof::decode(std::span<const uint8_t> in) {
  ByteReader r(in);
  SquareProof p = read(r);
  r.expect_done("square proof");
  return p;
}

SquareProof prove_square(const CommitParams& params, const Point& c1,
                         const Point& c2, const Scalar& m1, const Scalar& m2,
                         const Scalar& r1, const Scalar& r2, Transcript& t,
                         RandomSource& rng) {
  if (m1 != m2 * m2)
    throw PreconditionError("prove_square: m1 != m2^2");
  if (!open_check_scalar(params, c1, m1, r1) ||
      !open_check_scalar(params, c2, m2, r2))
    throw PreconditionError("prove_square: openings do not match");

  absorb_params(t, params);
  t.absorb_point("sigma/sq/C1", c1);
  t.absorb_point("sigma/sq/C2", c2);

  const Scalar r3 = r1 - m2 * r2;  // C1 = C2^{m2} h^{r3}
  SquareProof p;
  const Scalar s_m = Scalar::random(rng);
  const Scalar s_2 = Scalar::random(rng);
  const Scalar s_3 = Scalar::random(rng);
  {
    const Point pts[] = {params.g, params.h};
    const Scalar scs[] = {s_m, s_2};
    p.k2 = multiexp_unchecked(pts, scs);
  }
  {
    const Point pts[] = {c2, params.h};
    const Scalar scs[] = {s_m, s_3};
    p.k1 = multiexp_unchecked(pts, scs);
  }
  t.absorb_point("sigma/sq/K1", p.k1);
  t.absorb_point("sigma/sq/K2", p.k2);
  const Scalar e = t.challenge_scalar("sigma/sq/e");
  p.z_m = s_m + e * m2;
  p.z_r2 = s_2 + e * r2;
  p.z_r3 = s_3 + e * r3;
  return p;
}

bool verify_square(const CommitParams& params, const Point& c1,
                   const Point& c2, const SquareProof& proof, Transcript& t) {
  absorb_params(t, params);
  t.absorb_point("sigma/sq/C1", c1);
  t.absorb_point("sigma/sq/C2", c2);
  t.absorb_point("sigma/sq/K1", proof.k1);
  t.absorb_point("sigma/sq/K2", proof.k2);
  const Scalar e = t.challenge_scalar("sigma/sq/e");

  const Scalar minus_one = Scalar::one().neg();
  {
    const Point pts[] = {params.g, params.h, proof.k2, c2};
    const Scalar scs[] = {proof.z_m, proof.z_r2, minus_one, e.neg()};
    if (!multiexp_unchecked(pts, scs).is_identity()) return false;
  }
  {
    const Point pts[] = {c2, params.h, proof.k1, c1};
    const Scalar scs[] = {proof.z_m, proof.z_r3, minus_one, e.neg()};
    if (!multiexp_unchecked(pts, scs).is_identity()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// simulators (test oracles)

OpeningProof simulate_opening(const CommitParams& params,
                              std::span<const Point> basis, const Point& c,
                              const Scalar& challenge, RandomSource& rng) {
  OpeningProof p;
  p.z = random_scalars(rng, basis.size());
  p.z_r = Scalar::random(rng);
  p.announcement =
      commit_with_basis(params, basis, p.z, p.z_r) - c.mul(challenge);
  return p;
}

EqualityProof simulate_equality(const CommitParams& params,
                                std::span<const Point> basis1, const Point& c1,
                                std::span<const Point> basis2, const Point& c2,
                                const Scalar& challenge, RandomSource& rng) {
  EqualityProof p;
  p.z = random_scalars(rng, basis1.size());
  p.z_r1 = Scalar::random(rng);
  p.z_r2 = Scalar::random(rng);
  p.k1 = commit_with_basis(params, basis1, p.z, p.z_r1) - c1.mul(challenge);
  p.k2 = commit_with_basis(params, basis2, p.z, p.z_r2) - c2.mul(challenge);
  return p;
}

ZeroReplaceProof simulate_zero_replace(const CommitParams& params,
                                       const Point& c, const Point& diff,
                                       uint32_t j, const Point& extract,
                                       const Scalar& challenge,
                                       RandomSource& rng) {
  ZeroReplaceProof p;
  p.extract = extract;
  const Point ce = c - extract;
  const std::vector<Point> basis = reduced_gvec(params, j);
  p.z_dlog = Scalar::random(rng);
  p.k_dlog = params.gvec[j - 1].mul(p.z_dlog) - extract.mul(challenge);
  p.z_op = random_scalars(rng, params.n - 1);
  p.z_op_r = Scalar::random(rng);
  p.k_op =
      commit_with_basis(params, basis, p.z_op, p.z_op_r) - ce.mul(challenge);
  p.z_eq = random_scalars(rng, params.n - 1);
  p.z_eq_r1 = Scalar::random(rng);
  p.z_eq_r2 = Scalar::random(rng);
  p.k_eq1 =
      commit_with_basis(params, basis, p.z_eq, p.z_eq_r1) - ce.mul(challenge);
  p.k_eq2 =
      commit_with_basis(params, basis, p.z_eq, p.z_eq_r2) - diff.mul(challenge);
  return p;
}

SquareProof simulate_square(const CommitParams& params, const Point& c1,
                            const Point& c2, const Scalar& challenge,
                            RandomSource& rng) {
  SquareProof p;
  p.z_m = Scalar::random(rng);
  p.z_r2 = Scalar::random(rng);
  p.z_r3 = Scalar::random(rng);
  {
    const Point pts[] = {params.g, params.h};
    const Scalar scs[] = {p.z_m, p.z_r2};
    p.k2 = multiexp_unchecked(pts, scs) - c2.mul(challenge);
  }
  {
    const Point pts[] = {c2, params.h};
    const Scalar scs[] = {p.z_m, p.z_r3};
    p.k1 = multiexp_unchecked(pts, scs) - c1.mul(challenge);
  }
  return p;
}

}  // namespace zksvm

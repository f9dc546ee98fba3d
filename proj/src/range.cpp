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

#include "zksvm/range.hpp"

#include <cmath>
#include <stdexcept>

namespace zksvm {
namespace {

uint32_t log2_exact(uint32_t n) {
  uint32_t lg = 0;
  while ((uint32_t{1} << lg) < n) lg++;
  return lg;
}

void absorb_range_stmt(Transcript& t, const CommitParams& params, uint32_t l,
                       const Point& c) {
  t.absorb("range/params",
           {reinterpret_cast<const uint8_t*>(params.label.data()),
            params.label.size()});
  t.absorb_u64("range/l", l);
  t.absorb_point("range/C", c);
}

}  // namespace

bool range_bits_supported(uint32_t l) {
  for (uint32_t s : kSupportedRangeBits)
    if (s == l) return true;
  return false;
}

uint64_t isqrt64(uint64_t v) {
  if (v == 0) return 0;
  auto sq = [](uint64_t x) {
    return static_cast<unsigned __int128>(x) * x;
  };
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && sq(r) > v) r--;
  while (sq(r + 1) <= v) r++;
  return r;
}

std::size_t RangeProof::point_count() const { return 4 + 2 * log2_exact(bits); }
std::size_t RangeProof::scalar_count() const { return 5; }

void RangeProof::write(ByteWriter& w) const {
  w.u16(static_cast<uint16_t>(bits));
  w.u16(static_cast<uint16_t>(point_count()));
  w.point(a_commit);
  w.point(s_commit);
  w.point(t1);
  w.point(t2);
  for (std::size_t k = 0; k < tail.l_points.size(); k++) {
    w.point(tail.l_points[k]);
    w.point(tail.r_points[k]);
  }
  w.u16(static_cast<uint16_t>(scalar_count()));
  w.scalar(tau_x);
  w.scalar(mu);
  w.scalar(t_hat);
  w.scalar(tail.a);
  w.scalar(tail.b);
}

Bytes RangeProof::encode() const {
  ByteWriter w;
  write(w);
  return w.take();
}

RangeProof RangeProof::read(ByteReader& r) {
  RangeProof p;
  p.bits = r.u16();
  if (!range_bits_supported(p.bits))
    throw DecodeError("range proof: unsupported bit length");
  if (r.u16() != p.point_count()) throw DecodeError("range proof: point count");
  p.a_commit = r.point();
  p.s_commit = r.point();
  p.t1 = r.point();
  p.t2 = r.point();
  const uint32_t lg = log2_exact(p.bits);
  for (uint32_t k = 0; k < lg; k++) {
    p.tail.l_points.push_back(r.point());
    p.tail.r_points.push_back(r.point());
  }
  if (r.u16() != p.scalar_count())
    throw DecodeError("range proof: scalar count");
  p.tau_x = r.scalar();
  p.mu = r.scalar();
  p.t_hat = r.scalar();
  p.tail.a = r.scalar();
  p.tail.b = r.scalar();
  return p;
}

RangeProof RangeProof::decode(std::span<const uint8_t> in) {
  ByteReader r(in);
  RangeProof p = read(r);
  r.expect_done("range proof");
  return p;
}

RangeProof prove_range(const CommitParams& params, const Point& c, uint64_t m,
                       const Scalar& r, uint32_t l, Transcript& t,
                       RandomSource& rng) {
  if (!range_bits_supported(l))
    throw std::invalid_argument("prove_range: unsupported bit length");
  if (l < 64 && (m >> l) != 0)
    throw PreconditionError("prove_range: value out of range");
  if (!open_check_scalar(params, c, Scalar::from_u64(m), r))
    throw PreconditionError("prove_range: opening does not match");

  const std::span<const Point> gb(params.range_g.data(), l);
  const std::span<const Point> hb(params.range_h.data(), l);
  absorb_range_stmt(t, params, l, c);

  RangeProof proof;
  proof.bits = l;

  // Bit decomposition commitments A and S.
  std::vector<Scalar> a_l, a_r, s_l, s_r;
  a_l.reserve(l);
  a_r.reserve(l);
  const Scalar minus_one = Scalar::one().neg();
  for (uint32_t i = 0; i < l; i++) {
    const bool bit = (m >> i) & 1;
    a_l.push_back(bit ? Scalar::one() : Scalar::zero());
    a_r.push_back(bit ? Scalar::zero() : minus_one);
    s_l.push_back(Scalar::random(rng));
    s_r.push_back(Scalar::random(rng));
  }
  const Scalar alpha = Scalar::random(rng);
  const Scalar rho = Scalar::random(rng);
  auto blinded_commit = [&](std::span<const Scalar> left,
                            std::span<const Scalar> right,
                            const Scalar& blind) {
    std::vector<Point> pts;
    std::vector<Scalar> scs;
    pts.reserve(2 * l + 1);
    scs.reserve(2 * l + 1);
    pts.push_back(params.h);
    scs.push_back(blind);
    for (uint32_t i = 0; i < l; i++) {
      pts.push_back(gb[i]);
      scs.push_back(left[i]);
    }
    for (uint32_t i = 0; i < l; i++) {
      pts.push_back(hb[i]);
      scs.push_back(right[i]);
    }
    return multiexp_unchecked(pts, scs);
  };
  proof.a_commit = blinded_commit(a_l, a_r, alpha);
  proof.s_commit = blinded_commit(s_l, s_r, rho);

  t.absorb_point("range/A", proof.a_commit);
  t.absorb_point("range/S", proof.s_commit);
  const Scalar y = t.challenge_scalar("range/y");
  const Scalar z = t.challenge_scalar("range/z");

  std::vector<Scalar> y_pow;
  y_pow.reserve(l);
  y_pow.push_back(Scalar::one());
  for (uint32_t i = 1; i < l; i++) y_pow.push_back(y_pow.back() * y);
  const Scalar z_sq = z.square();

  // l(X) = a_L - z*1 + s_L X
  // r(X) = y^i o (a_R + z*1 + s_R X) + z^2 * 2^i
  std::vector<Scalar> l0, l1, r0, r1;
  Scalar two_pow = Scalar::one();
  for (uint32_t i = 0; i < l; i++) {
    l0.push_back(a_l[i] - z);
    l1.push_back(s_l[i]);
    r0.push_back(y_pow[i] * (a_r[i] + z) + z_sq * two_pow);
    r1.push_back(y_pow[i] * s_r[i]);
    two_pow = two_pow + two_pow;
  }
  const Scalar t1_coef = inner_product(l0, r1) + inner_product(l1, r0);
  const Scalar t2_coef = inner_product(l1, r1);
  const Scalar tau1 = Scalar::random(rng);
  const Scalar tau2 = Scalar::random(rng);
  proof.t1 = commit_scalar(params, t1_coef, tau1);
  proof.t2 = commit_scalar(params, t2_coef, tau2);

  t.absorb_point("range/T1", proof.t1);
  t.absorb_point("range/T2", proof.t2);
  const Scalar x = t.challenge_scalar("range/x");

  std::vector<Scalar> lv, rv;
  lv.reserve(l);
  rv.reserve(l);
  for (uint32_t i = 0; i < l; i++) {
    lv.push_back(l0[i] + l1[i] * x);
    rv.push_back(r0[i] + r1[i] * x);
  }
  proof.t_hat = inner_product(lv, rv);
  proof.tau_x = tau2 * x.square() + tau1 * x + z_sq * r;
  proof.mu = alpha + rho * x;

  t.absorb_scalar("range/tau_x", proof.tau_x);
  t.absorb_scalar("range/mu", proof.mu);
  t.absorb_scalar("range/t_hat", proof.t_hat);
  const Scalar w = t.challenge_scalar("range/w");
  const Point u = params.g.mul(w);

  // h-side bases carry y^{-i} so the r-vector stays as sent.
  const Scalar y_inv = y.invert();
  std::vector<Scalar> h_coef;
  h_coef.reserve(l);
  h_coef.push_back(Scalar::one());
  for (uint32_t i = 1; i < l; i++) h_coef.push_back(h_coef.back() * y_inv);

  proof.tail =
      ipa_prove(t, gb, hb, {}, h_coef, u, std::move(lv), std::move(rv));
  return proof;
}

bool verify_range(const CommitParams& params, const Point& c, uint32_t l,
                  const RangeProof& proof, Transcript& t) {
  if (!range_bits_supported(l))
    throw std::invalid_argument("verify_range: unsupported bit length");
  if (proof.bits != l) return false;

  const std::span<const Point> gb(params.range_g.data(), l);
  const std::span<const Point> hb(params.range_h.data(), l);
  absorb_range_stmt(t, params, l, c);
  t.absorb_point("range/A", proof.a_commit);
  t.absorb_point("range/S", proof.s_commit);
  const Scalar y = t.challenge_scalar("range/y");
  const Scalar z = t.challenge_scalar("range/z");
  t.absorb_point("range/T1", proof.t1);
  t.absorb_point("range/T2", proof.t2);
  const Scalar x = t.challenge_scalar("range/x");
  t.absorb_scalar("range/tau_x", proof.tau_x);
  t.absorb_scalar("range/mu", proof.mu);
  t.absorb_scalar("range/t_hat", proof.t_hat);
  const Scalar w = t.challenge_scalar("range/w");
  const Point u = params.g.mul(w);

  const Scalar z_sq = z.square();
  std::vector<Scalar> y_pow;
  y_pow.reserve(l);
  y_pow.push_back(Scalar::one());
  for (uint32_t i = 1; i < l; i++) y_pow.push_back(y_pow.back() * y);

  // delta(y, z) = (z - z^2) <1, y^l> - z^3 <1, 2^l>.
  Scalar sum_y = Scalar::zero();
  Scalar sum_two = Scalar::zero();
  Scalar two_pow = Scalar::one();
  for (uint32_t i = 0; i < l; i++) {
    sum_y = sum_y + y_pow[i];
    sum_two = sum_two + two_pow;
    two_pow = two_pow + two_pow;
  }
  const Scalar delta = (z - z_sq) * sum_y - z_sq * z * sum_two;

  // g^{t_hat} h^{tau_x} == C^{z^2} g^{delta} T1^x T2^{x^2}
  {
    const Point pts[] = {params.g, params.h, c, proof.t1, proof.t2};
    const Scalar scs[] = {proof.t_hat - delta, proof.tau_x, z_sq.neg(),
                          x.neg(), x.square().neg()};
    if (!multiexp_unchecked(pts, scs).is_identity()) return false;
  }

  // P* = A S^x g^{-z} h'^{z y^i + z^2 2^i} h^{-mu} u^{t_hat}, with the
  // per-base offsets folded into the recursion's final multiexp.
  const Scalar y_inv = y.invert();
  std::vector<Scalar> h_coef, g_off, h_off;
  h_coef.reserve(l);
  g_off.reserve(l);
  h_off.reserve(l);
  h_coef.push_back(Scalar::one());
  for (uint32_t i = 1; i < l; i++) h_coef.push_back(h_coef.back() * y_inv);
  two_pow = Scalar::one();
  for (uint32_t i = 0; i < l; i++) {
    g_off.push_back(z.neg());
    h_off.push_back(z + z_sq * two_pow * h_coef[i]);
    two_pow = two_pow + two_pow;
  }
  const PointTerm stmt_terms[] = {
      {&proof.a_commit, Scalar::one()},
      {&proof.s_commit, x},
      {&params.h, proof.mu.neg()},
      {&u, proof.t_hat},
  };
  return ipa_verify(t, gb, hb, {}, h_coef, u, stmt_terms, g_off, h_off,
                    proof.tail);
}

// ---------------------------------------------------------------------------
// floor square root

void SqrtProof::write(ByteWriter& w) const {
  w.point(sq_low);
  w.point(sq_high);
  sq1.write(w);
  sq2.write(w);
  range_low.write(w);
  range_high.write(w);
}

Bytes SqrtProof::encode() const {
  ByteWriter w;
  write(w);
  return w.take();
}

SqrtProof SqrtProof::read(ByteReader& r) {
  SqrtProof p;
  p.sq_low = r.point();
  p.sq_high = r.point();
  p.sq1 = SquareProof::read(r);
  p.sq2 = SquareProof::read(r);
  p.range_low = RangeProof::read(r);
  p.range_high = RangeProof::read(r);
  return p;
}

SqrtProof SqrtProof::decode(std::span<const uint8_t> in) {
  ByteReader r(in);
  SqrtProof p = read(r);
  r.expect_done("sqrt proof");
  return p;
}

SimulatedRange simulate_range(const CommitParams& params, const Point& c,
                              uint32_t l, RandomSource& rng) {
  if (!range_bits_supported(l))
    throw std::invalid_argument("simulate_range: unsupported bit length");
  const std::span<const Point> gb(params.range_g.data(), l);
  const std::span<const Point> hb(params.range_h.data(), l);
  const uint32_t lg = log2_exact(l);

  SimulatedRange out;
  auto nonzero = [&] {
    Scalar s = Scalar::random(rng);
    while (s.is_zero()) s = Scalar::random(rng);
    return s;
  };
  const Scalar y = nonzero(), z = nonzero(), x = nonzero(), w = nonzero();
  out.challenges = {y, z, x, w};
  std::vector<Scalar> ipa_challenges;
  for (uint32_t k = 0; k < lg; k++) {
    ipa_challenges.push_back(nonzero());
    out.challenges.push_back(ipa_challenges.back());
  }

  RangeProof& p = out.proof;
  p.bits = l;
  std::vector<Scalar> lv, rv;
  for (uint32_t i = 0; i < l; i++) {
    lv.push_back(Scalar::random(rng));
    rv.push_back(Scalar::random(rng));
  }
  p.t_hat = inner_product(lv, rv);
  p.tau_x = Scalar::random(rng);
  p.mu = Scalar::random(rng);
  p.s_commit = params.g.mul(Scalar::random(rng));
  p.t2 = params.g.mul(Scalar::random(rng));

  const Scalar z_sq = z.square();
  const Scalar y_inv = y.invert();
  std::vector<Scalar> y_pow{Scalar::one()}, h_coef{Scalar::one()};
  for (uint32_t i = 1; i < l; i++) {
    y_pow.push_back(y_pow.back() * y);
    h_coef.push_back(h_coef.back() * y_inv);
  }
  Scalar sum_y = Scalar::zero(), sum_two = Scalar::zero();
  Scalar two_pow = Scalar::one();
  for (uint32_t i = 0; i < l; i++) {
    sum_y = sum_y + y_pow[i];
    sum_two = sum_two + two_pow;
    two_pow = two_pow + two_pow;
  }
  const Scalar delta = (z - z_sq) * sum_y - z_sq * z * sum_two;

  // T1 solved from the tau_x equation.
  {
    const Point pts[] = {params.g, params.h, c, p.t2};
    const Scalar scs[] = {p.t_hat - delta, p.tau_x, z_sq.neg(),
                          x.square().neg()};
    p.t1 = multiexp_unchecked(pts, scs).mul(x.invert());
  }
  // A solved from the P* composition so the recursion target matches the
  // honest relation on (lv, rv).
  {
    std::vector<Point> pts;
    std::vector<Scalar> scs;
    pts.reserve(2 * l + 3);
    scs.reserve(2 * l + 3);
    two_pow = Scalar::one();
    for (uint32_t i = 0; i < l; i++) {
      pts.push_back(gb[i]);
      scs.push_back(lv[i] + z);
      pts.push_back(hb[i]);
      scs.push_back(h_coef[i] * (rv[i] - z_sq * two_pow) - z);
      two_pow = two_pow + two_pow;
    }
    pts.push_back(params.h);
    scs.push_back(p.mu);
    pts.push_back(p.s_commit);
    scs.push_back(x.neg());
    p.a_commit = multiexp_unchecked(pts, scs);
  }
  const Point u = params.g.mul(w);
  Transcript scratch("zksvm/simulate-range");
  for (const Scalar& ch : ipa_challenges) scratch.inject_challenge(ch);
  p.tail = ipa_prove(scratch, gb, hb, {}, h_coef, u, std::move(lv),
                     std::move(rv));
  return out;
}

SimulatedSqrt simulate_sqrt(const CommitParams& params, const Point& c1,
                            const Point& c2, uint32_t l, RandomSource& rng) {
  SimulatedSqrt out;
  SqrtProof& p = out.proof;
  p.sq_low = params.g.mul(Scalar::random(rng));
  p.sq_high = params.g.mul(Scalar::random(rng));
  auto nonzero = [&] {
    Scalar s = Scalar::random(rng);
    while (s.is_zero()) s = Scalar::random(rng);
    return s;
  };
  const Scalar e1 = nonzero(), e2 = nonzero();
  p.sq1 = simulate_square(params, p.sq_low, c1, e1, rng);
  p.sq2 = simulate_square(params, p.sq_high, c1 + params.g, e2, rng);
  out.challenges = {e1, e2};
  auto low = simulate_range(params, c2 - p.sq_low, l, rng);
  p.range_low = std::move(low.proof);
  out.challenges.insert(out.challenges.end(), low.challenges.begin(),
                        low.challenges.end());
  auto high = simulate_range(params, p.sq_high - c2 - params.g, l, rng);
  p.range_high = std::move(high.proof);
  out.challenges.insert(out.challenges.end(), high.challenges.begin(),
                        high.challenges.end());
  return out;
}

SqrtProof prove_sqrt(const CommitParams& params, const Point& c1,
                     const Point& c2, uint64_t m1, uint64_t m2,
                     const Scalar& r1, const Scalar& r2, uint32_t l,
                     Transcript& t, RandomSource& rng) {
  if (!range_bits_supported(l))
    throw std::invalid_argument("prove_sqrt: unsupported bit length");
  if (l < 64 && (m2 >> l) != 0)
    throw PreconditionError("prove_sqrt: m2 out of range");
  if (m1 != isqrt64(m2))
    throw PreconditionError("prove_sqrt: m1 != floor(sqrt(m2))");
  if (!open_check_scalar(params, c1, Scalar::from_u64(m1), r1) ||
      !open_check_scalar(params, c2, Scalar::from_u64(m2), r2))
    throw PreconditionError("prove_sqrt: openings do not match");

  const unsigned __int128 m1_sq = static_cast<unsigned __int128>(m1) * m1;
  const unsigned __int128 next_sq =
      static_cast<unsigned __int128>(m1 + 1) * (m1 + 1);
  const uint64_t gap_low = static_cast<uint64_t>(m2 - m1_sq);
  const uint64_t gap_high = static_cast<uint64_t>(next_sq - m2 - 1);

  SqrtProof proof;
  const Scalar r_a = Scalar::random(rng);
  const Scalar r_b = Scalar::random(rng);
  proof.sq_low = commit_scalar(params, scalar_from_u128(m1_sq), r_a);
  proof.sq_high = commit_scalar(params, scalar_from_u128(next_sq), r_b);

  t.absorb_point("sqrt/C1", c1);
  t.absorb_point("sqrt/C2", c2);
  t.absorb_u64("sqrt/l", l);
  t.absorb_point("sqrt/sq_low", proof.sq_low);
  t.absorb_point("sqrt/sq_high", proof.sq_high);

  // (i) sq_low = (m1)^2 against C1; (ii) sq_high = (m1+1)^2 against C1*g.
  proof.sq1 = prove_square(params, proof.sq_low, c1, scalar_from_u128(m1_sq),
                           Scalar::from_u64(m1), r_a, r1, t, rng);
  const Point c1_plus = c1 + params.g;
  proof.sq2 = prove_square(params, proof.sq_high, c1_plus,
                           scalar_from_u128(next_sq),
                           Scalar::from_u64(m1) + Scalar::one(), r_b, r1, t,
                           rng);
  // m2 - m1^2 >= 0 and (m1+1)^2 - m2 - 1 >= 0, both within 2^l.
  proof.range_low =
      prove_range(params, c2 - proof.sq_low, gap_low, r2 - r_a, l, t, rng);
  proof.range_high = prove_range(params, proof.sq_high - c2 - params.g,
                                 gap_high, r_b - r2, l, t, rng);
  return proof;
}

bool verify_sqrt(const CommitParams& params, const Point& c1, const Point& c2,
                 uint32_t l, const SqrtProof& proof, Transcript& t) {
  if (!range_bits_supported(l))
    throw std::invalid_argument("verify_sqrt: unsupported bit length");

  t.absorb_point("sqrt/C1", c1);
  t.absorb_point("sqrt/C2", c2);
  t.absorb_u64("sqrt/l", l);
  t.absorb_point("sqrt/sq_low", proof.sq_low);
  t.absorb_point("sqrt/sq_high", proof.sq_high);

  if (!verify_square(params, proof.sq_low, c1, proof.sq1, t)) return false;
  const Point c1_plus = c1 + params.g;
  if (!verify_square(params, proof.sq_high, c1_plus, proof.sq2, t))
    return false;
  if (!verify_range(params, c2 - proof.sq_low, l, proof.range_low, t))
    return false;
  return verify_range(params, proof.sq_high - c2 - params.g, l,
                      proof.range_high, t);
}

}  // namespace zksvm

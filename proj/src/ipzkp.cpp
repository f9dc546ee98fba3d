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

#include "zksvm/ipzkp.hpp"

#include <stdexcept>

#include "zksvm/bytes_io.hpp"

namespace zksvm {
namespace {

bool is_pow2(uint32_t n) { return n != 0 && (n & (n - 1)) == 0; }

uint32_t log2_exact(uint32_t n) {
  uint32_t lg = 0;
  while ((uint32_t{1} << lg) < n) lg++;
  return lg;
}

// A = h^alpha * g^a * h^b as one multiexp.
Point recompute_a(const CommitParams& params, std::span<const Scalar> a,
                  std::span<const Scalar> b, const Scalar& alpha) {
  std::vector<Point> pts;
  std::vector<Scalar> scs;
  pts.reserve(2 * a.size() + 1);
  scs.reserve(2 * a.size() + 1);
  pts.push_back(params.h);
  scs.push_back(alpha);
  for (std::size_t i = 0; i < a.size(); i++) {
    pts.push_back(params.gvec[i]);
    scs.push_back(a[i]);
  }
  for (std::size_t i = 0; i < b.size(); i++) {
    pts.push_back(params.hvec[i]);
    scs.push_back(b[i]);
  }
  return multiexp_unchecked(pts, scs);
}

void absorb_statement(Transcript& t, const CommitParams& params,
                      IpVariant variant, const IpStatement& stmt) {
  t.absorb("ip/params", {reinterpret_cast<const uint8_t*>(params.label.data()),
                         params.label.size()});
  t.absorb_u64("ip/n", params.n);
  t.absorb_u64("ip/variant", static_cast<uint64_t>(variant));
  t.absorb_point("ip/A", stmt.a_commit);
  t.absorb_point("ip/V", stmt.v_commit);
}

}  // namespace

std::size_t IpProof::point_count() const {
  return variant == IpVariant::Linear ? 3 : 3 + 2 * log2_exact(n);
}

std::size_t IpProof::scalar_count() const {
  return variant == IpVariant::Linear ? 2 * static_cast<std::size_t>(n) + 3 : 5;
}

void IpProof::write(ByteWriter& w) const {
  w.u8(static_cast<uint8_t>(variant));
  w.u32(n);
  w.u16(static_cast<uint16_t>(point_count()));
  w.point(s_commit);
  w.point(t1);
  w.point(t2);
  if (variant == IpVariant::Log) {
    for (std::size_t k = 0; k < tail.l_points.size(); k++) {
      w.point(tail.l_points[k]);
      w.point(tail.r_points[k]);
    }
  }
  w.u16(static_cast<uint16_t>(scalar_count()));
  w.scalar(tau_c);
  w.scalar(mu);
  w.scalar(t_hat);
  if (variant == IpVariant::Linear) {
    for (const Scalar& s : l) w.scalar(s);
    for (const Scalar& s : r) w.scalar(s);
  } else {
    w.scalar(tail.a);
    w.scalar(tail.b);
  }
}

Bytes IpProof::encode() const {
  ByteWriter w;
  write(w);
  return w.take();
}

IpProof IpProof::read(ByteReader& rd) {
  IpProof p;
  const uint8_t v = rd.u8();
  if (v > 1) throw DecodeError("ip proof: unknown variant");
  p.variant = static_cast<IpVariant>(v);
  p.n = rd.u32();
  if (p.n == 0) throw DecodeError("ip proof: n = 0");
  if (p.variant == IpVariant::Log && !is_pow2(p.n))
    throw DecodeError("ip proof: log variant needs power-of-two n");
  if (rd.u16() != p.point_count()) throw DecodeError("ip proof: point count");
  p.s_commit = rd.point();
  p.t1 = rd.point();
  p.t2 = rd.point();
  if (p.variant == IpVariant::Log) {
    const uint32_t lg = log2_exact(p.n);
    for (uint32_t k = 0; k < lg; k++) {
      p.tail.l_points.push_back(rd.point());
      p.tail.r_points.push_back(rd.point());
    }
  }
  if (rd.u16() != p.scalar_count()) throw DecodeError("ip proof: scalar count");
  p.tau_c = rd.scalar();
  p.mu = rd.scalar();
  p.t_hat = rd.scalar();
  if (p.variant == IpVariant::Linear) {
    for (uint32_t i = 0; i < p.n; i++) p.l.push_back(rd.scalar());
    for (uint32_t i = 0; i < p.n; i++) p.r.push_back(rd.scalar());
  } else {
    p.tail.a = rd.scalar();
    p.tail.b = rd.scalar();
  }
  return p;
}

IpProof IpProof::decode(std::span<const uint8_t> in) {
  ByteReader rd(in);
  IpProof p = read(rd);
  rd.expect_done("ip proof");
  return p;
}

IpProof ip_prove(const CommitParams& params, const IpStatement& stmt,
                 const IpWitness& wit, IpVariant variant, Transcript& t,
                 RandomSource& rng) {
  const uint32_t n = params.n;
  if (wit.a.size() != n || wit.b.size() != n)
    throw std::invalid_argument("ip_prove: witness length != n");
  if (variant == IpVariant::Log && !is_pow2(n))
    throw std::invalid_argument("ip_prove: log variant needs power-of-two n");
  if (inner_product(wit.a, wit.b) != wit.c)
    throw PreconditionError("ip_prove: <a,b> != c");
  if (recompute_a(params, wit.a, wit.b, wit.alpha) != stmt.a_commit)
    throw PreconditionError("ip_prove: A does not match witness");
  if (commit_scalar(params, wit.c, wit.gamma) != stmt.v_commit)
    throw PreconditionError("ip_prove: V does not match witness");

  absorb_statement(t, params, variant, stmt);

  IpProof proof;
  proof.variant = variant;
  proof.n = n;

  std::vector<Scalar> s_l, s_r;
  s_l.reserve(n);
  s_r.reserve(n);
  for (uint32_t i = 0; i < n; i++) {
    s_l.push_back(Scalar::random(rng));
    s_r.push_back(Scalar::random(rng));
  }
  const Scalar rho = Scalar::random(rng);
  proof.s_commit = recompute_a(params, s_l, s_r, rho);

  // t(X) = <l(X), r(X)> with l = a + s_L X, r = b + s_R X.
  const Scalar t1_coef = inner_product(wit.a, s_r) + inner_product(s_l, wit.b);
  const Scalar t2_coef = inner_product(s_l, s_r);
  const Scalar tau1 = Scalar::random(rng);
  const Scalar tau2 = Scalar::random(rng);
  proof.t1 = commit_scalar(params, t1_coef, tau1);
  proof.t2 = commit_scalar(params, t2_coef, tau2);

  t.absorb_point("ip/S", proof.s_commit);
  t.absorb_point("ip/T1", proof.t1);
  t.absorb_point("ip/T2", proof.t2);
  const Scalar ch = t.challenge_scalar("ip/C");

  std::vector<Scalar> l, r;
  l.reserve(n);
  r.reserve(n);
  for (uint32_t i = 0; i < n; i++) {
    l.push_back(wit.a[i] + s_l[i] * ch);
    r.push_back(wit.b[i] + s_r[i] * ch);
  }
  proof.t_hat = inner_product(l, r);
  proof.tau_c = tau2 * ch.square() + tau1 * ch + wit.gamma;
  proof.mu = wit.alpha + rho * ch;

  t.absorb_scalar("ip/tau_c", proof.tau_c);
  t.absorb_scalar("ip/mu", proof.mu);
  t.absorb_scalar("ip/t_hat", proof.t_hat);

  if (variant == IpVariant::Linear) {
    proof.l = std::move(l);
    proof.r = std::move(r);
    return proof;
  }

  // Log tail: prove knowledge of (l, r) with
  // P * h^{-mu} * u^{t_hat} = g^l h^r u^{<l,r>}, u = g^w.
  const Scalar w = t.challenge_scalar("ip/w");
  const Point u = params.g.mul(w);
  proof.tail = ipa_prove(t, params.gvec, params.hvec, {}, {}, u, std::move(l),
                         std::move(r));
  return proof;
}

bool ip_verify(const CommitParams& params, const IpStatement& stmt,
               const IpProof& proof, Transcript& t) {
  const uint32_t n = params.n;
  if (proof.n != n) return false;
  if (proof.variant == IpVariant::Log && !is_pow2(n)) return false;
  if (proof.variant == IpVariant::Linear &&
      (proof.l.size() != n || proof.r.size() != n))
    return false;

  absorb_statement(t, params, proof.variant, stmt);
  t.absorb_point("ip/S", proof.s_commit);
  t.absorb_point("ip/T1", proof.t1);
  t.absorb_point("ip/T2", proof.t2);
  const Scalar ch = t.challenge_scalar("ip/C");

  // Check 1: g^{t_hat} h^{tau_C} == V * T1^C * T2^{C^2}.
  {
    const Point pts[] = {params.g, params.h, stmt.v_commit, proof.t1, proof.t2};
    const Scalar scs[] = {proof.t_hat, proof.tau_c, Scalar::one().neg(),
                          ch.neg(), ch.square().neg()};
    if (!multiexp_unchecked(pts, scs).is_identity()) return false;
  }

  t.absorb_scalar("ip/tau_c", proof.tau_c);
  t.absorb_scalar("ip/mu", proof.mu);
  t.absorb_scalar("ip/t_hat", proof.t_hat);

  if (proof.variant == IpVariant::Linear) {
    // Check 3: P = A * S^C == h^mu * g^l * h^r; check 4: t_hat = <l, r>.
    std::vector<Point> pts;
    std::vector<Scalar> scs;
    pts.reserve(2 * n + 3);
    scs.reserve(2 * n + 3);
    pts.push_back(params.h);
    scs.push_back(proof.mu);
    for (uint32_t i = 0; i < n; i++) {
      pts.push_back(params.gvec[i]);
      scs.push_back(proof.l[i]);
    }
    for (uint32_t i = 0; i < n; i++) {
      pts.push_back(params.hvec[i]);
      scs.push_back(proof.r[i]);
    }
    pts.push_back(stmt.a_commit);
    scs.push_back(Scalar::one().neg());
    pts.push_back(proof.s_commit);
    scs.push_back(ch.neg());
    if (!multiexp_unchecked(pts, scs).is_identity()) return false;
    return inner_product(proof.l, proof.r) == proof.t_hat;
  }

  // Log: delegate checks 3 and 4 to the recursive argument over
  // P* = A * S^C * h^{-mu} * u^{t_hat}.
  const Scalar w = t.challenge_scalar("ip/w");
  const Point u = params.g.mul(w);
  const PointTerm stmt_terms[] = {
      {&stmt.a_commit, Scalar::one()},
      {&proof.s_commit, ch},
      {&params.h, proof.mu.neg()},
      {&u, proof.t_hat},
  };
  return ipa_verify(t, params.gvec, params.hvec, {}, {}, u, stmt_terms, {}, {},
                    proof.tail);
}

SimulatedIp ip_simulate(const CommitParams& params, const IpStatement& stmt,
                        RandomSource& rng) {
  const uint32_t n = params.n;
  SimulatedIp out;
  Scalar ch = Scalar::random(rng);
  while (ch.is_zero()) ch = Scalar::random(rng);
  out.challenge = ch;

  IpProof& p = out.proof;
  p.variant = IpVariant::Linear;
  p.n = n;
  for (uint32_t i = 0; i < n; i++) {
    p.l.push_back(Scalar::random(rng));
    p.r.push_back(Scalar::random(rng));
  }
  // t_hat is pinned by the fourth verifier equation; l and r are uniform, so
  // the joint distribution matches an honest transcript.
  p.t_hat = inner_product(p.l, p.r);
  p.tau_c = Scalar::random(rng);
  p.mu = Scalar::random(rng);
  p.t2 = params.g.mul(Scalar::random(rng));

  const Scalar c_inv = ch.invert();
  // T1 = (g^{t_hat} h^{tau_C} V^{-1} T2^{-C^2})^{1/C}
  {
    const Point pts[] = {params.g, params.h, stmt.v_commit, p.t2};
    const Scalar scs[] = {p.t_hat, p.tau_c, Scalar::one().neg(),
                          ch.square().neg()};
    p.t1 = multiexp_unchecked(pts, scs).mul(c_inv);
  }
  // S = (h^{mu} g^{l} h^{r} A^{-1})^{1/C}
  {
    std::vector<Point> pts;
    std::vector<Scalar> scs;
    pts.push_back(params.h);
    scs.push_back(p.mu);
    for (uint32_t i = 0; i < n; i++) {
      pts.push_back(params.gvec[i]);
      scs.push_back(p.l[i]);
    }
    for (uint32_t i = 0; i < n; i++) {
      pts.push_back(params.hvec[i]);
      scs.push_back(p.r[i]);
    }
    pts.push_back(stmt.a_commit);
    scs.push_back(Scalar::one().neg());
    p.s_commit = multiexp_unchecked(pts, scs).mul(c_inv);
  }
  return out;
}

IpExtractedWitness ip_extract(
    const CommitParams& params, const IpStatement& stmt,
    std::span<const Scalar> challenges,
    const std::function<IpProof(Transcript&)>& run_prover) {
  if (challenges.size() != 3)
    throw std::invalid_argument("ip_extract: need exactly three challenges");
  for (std::size_t i = 0; i < 3; i++)
    for (std::size_t j = i + 1; j < 3; j++)
      if (challenges[i] == challenges[j])
        throw std::invalid_argument("ip_extract: repeated challenge");

  std::vector<IpProof> runs;
  for (const Scalar& ch : challenges) {
    Transcript t("zksvm/ip-extract");
    t.inject_challenge(ch);
    runs.push_back(run_prover(t));
    if (runs.back().variant != IpVariant::Linear ||
        runs.back().n != params.n)
      throw std::invalid_argument("ip_extract: prover must emit linear proofs");
  }
  if (!(runs[0].s_commit == runs[1].s_commit &&
        runs[0].s_commit == runs[2].s_commit))
    throw std::invalid_argument("ip_extract: prover is not deterministic");

  const Scalar d01 = (challenges[0] - challenges[1]).invert();
  IpExtractedWitness wit;
  const uint32_t n = params.n;
  wit.a.reserve(n);
  wit.b.reserve(n);
  wit.s_l.reserve(n);
  wit.s_r.reserve(n);
  for (uint32_t i = 0; i < n; i++) {
    // l^i = a + s_L C^i across transcripts pins s_L and a (same for r).
    wit.s_l.push_back((runs[0].l[i] - runs[1].l[i]) * d01);
    wit.a.push_back(runs[0].l[i] - wit.s_l[i] * challenges[0]);
    wit.s_r.push_back((runs[0].r[i] - runs[1].r[i]) * d01);
    wit.b.push_back(runs[0].r[i] - wit.s_r[i] * challenges[0]);
  }
  wit.rho = (runs[0].mu - runs[1].mu) * d01;
  wit.alpha = runs[0].mu - wit.rho * challenges[0];

  // Third transcript consistency: a violation would be a nontrivial
  // discrete-log relation.
  for (uint32_t i = 0; i < n; i++) {
    if (runs[2].l[i] != wit.a[i] + wit.s_l[i] * challenges[2] ||
        runs[2].r[i] != wit.b[i] + wit.s_r[i] * challenges[2])
      throw std::runtime_error("ip_extract: inconsistent transcripts");
  }

  // c = t(0) and gamma = tau(0) by Lagrange interpolation through the three
  // challenge points.
  auto lagrange_at_zero = [&](const Scalar& y0, const Scalar& y1,
                              const Scalar& y2) {
    Scalar acc = Scalar::zero();
    const Scalar* ys[3] = {&y0, &y1, &y2};
    for (int i = 0; i < 3; i++) {
      Scalar num = Scalar::one();
      Scalar den = Scalar::one();
      for (int j = 0; j < 3; j++) {
        if (j == i) continue;
        num = num * challenges[j];
        den = den * (challenges[j] - challenges[i]);
      }
      acc = acc + *ys[i] * num * den.invert();
    }
    return acc;
  };
  wit.c = lagrange_at_zero(runs[0].t_hat, runs[1].t_hat, runs[2].t_hat);
  wit.gamma = lagrange_at_zero(runs[0].tau_c, runs[1].tau_c, runs[2].tau_c);

  if (recompute_a(params, wit.a, wit.b, wit.alpha) != stmt.a_commit)
    throw std::runtime_error("ip_extract: extracted witness does not open A");
  return wit;
}

}  // namespace zksvm

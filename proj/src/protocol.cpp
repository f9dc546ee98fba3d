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

#include "zksvm/protocol.hpp"

#include <cstring>
#include <future>
#include <thread>

namespace zksvm {
namespace {

constexpr unsigned __int128 kVarBound = static_cast<unsigned __int128>(1)
                                        << 62;

std::vector<Scalar> to_scalars(std::span<const int64_t> values) {
  std::vector<Scalar> out;
  out.reserve(values.size());
  for (int64_t v : values) out.push_back(Scalar::from_i64(v));
  return out;
}

std::vector<Scalar> ones(std::size_t n) {
  return std::vector<Scalar>(n, Scalar::one());
}

// Per-vector statistics on the N-scaled integers.
struct Stats {
  int64_t sum;
  unsigned __int128 var;  // sum (N v_i - sum)^2
  uint64_t std_floor;
};

Stats integer_stats(std::span<const int64_t> v, uint32_t n) {
  Stats st{0, 0, 0};
  for (int64_t x : v) st.sum += x;
  for (int64_t x : v) {
    const __int128 w = static_cast<__int128>(n) * x - st.sum;
    st.var += static_cast<unsigned __int128>(w * w);
  }
  if (st.var >= kVarBound)
    throw BoundError("vector statistics exceed the 2^62 variance bound");
  st.std_floor = isqrt64(static_cast<uint64_t>(st.var));
  return st;
}

Point commit_value(const CommitParams& params, int64_t value, const Scalar& r) {
  return commit_scalar(params, Scalar::from_i64(value), r);
}

// A = C * hvec^1 for the sum statement; hvec^1 is the cached basis product.
Point sum_statement_commitment(const CommitParams& params, const Point& c) {
  return c + params.h_prod;
}

// A_S = C^N / G^mu * H_S^N / H^mu for the variance statement.
Point variance_statement_commitment(const CommitParams& params, const Point& c,
                                    const Point& g_mu, const Point& h_s,
                                    const Point& h_mu) {
  const Scalar n_scalar = Scalar::from_u64(params.n);
  return c.mul(n_scalar) + h_s.mul(n_scalar) - g_mu - h_mu;
}

std::span<const Point> single(const Point& p) { return {&p, 1}; }

// ---------------------------------------------------------------------
// per-vector prover

SumProofSet prove_sum_step(const CommitParams& params, const Point& c,
                           const Scalar& c_blind,
                           std::span<const Scalar> values, int64_t sum,
                           const Scalar& r_avg, Transcript& t,
                           RandomSource& rng) {
  SumProofSet out;
  out.avg = commit_value(params, sum, r_avg);
  t.absorb_point("zksvm/Avg", out.avg);
  IpStatement stmt{sum_statement_commitment(params, c), out.avg};
  IpWitness wit;
  wit.a.assign(values.begin(), values.end());
  wit.b = ones(params.n);
  wit.alpha = c_blind;
  wit.c = Scalar::from_i64(sum);
  wit.gamma = r_avg;
  out.ip = ip_prove(params, stmt, wit, IpVariant::Log, t, rng);
  return out;
}

StdProofSet prove_std_step(const CommitParams& params, const Point& c,
                           const Scalar& c_blind,
                           std::span<const Scalar> values, const Point& avg,
                           const Scalar& r_avg, int64_t sum,
                           unsigned __int128 var, uint64_t std_floor,
                           const Scalar& r_std, Transcript& t,
                           RandomSource& rng) {
  const uint32_t n = params.n;
  StdProofSet out;
  const Scalar sum_scalar = Scalar::from_i64(sum);
  const Scalar r_g = Scalar::random(rng);
  const Scalar r_h = Scalar::random(rng);
  const Scalar r_s = Scalar::random(rng);
  out.g_mu = params.g_prod.mul(sum_scalar) + params.h.mul(r_g);
  out.h_mu = params.h_prod.mul(sum_scalar) + params.h.mul(r_h);
  out.h_s = commit_with_basis(params, params.hvec, values, r_s);
  t.absorb_point("zksvm/G_mu", out.g_mu);
  t.absorb_point("zksvm/H_mu", out.h_mu);
  t.absorb_point("zksvm/H_S", out.h_s);

  const Scalar sum_vec[] = {sum_scalar};
  out.eq_g = prove_equality(params, single(params.g), avg,
                            single(params.g_prod), out.g_mu, sum_vec, r_avg,
                            r_g, t, rng);
  out.eq_h = prove_equality(params, single(params.g), avg,
                            single(params.h_prod), out.h_mu, sum_vec, r_avg,
                            r_h, t, rng);
  out.eq_s = prove_equality(params, params.gvec, c, params.hvec, out.h_s,
                            values, c_blind, r_s, t, rng);

  const Scalar n_scalar = Scalar::from_u64(n);
  const Scalar r_v = Scalar::random(rng);
  const Scalar var_scalar = scalar_from_u128(var);
  out.var = commit_scalar(params, var_scalar, r_v);
  t.absorb_point("zksvm/Var", out.var);

  IpStatement stmt{
      variance_statement_commitment(params, c, out.g_mu, out.h_s, out.h_mu),
      out.var};
  IpWitness wit;
  wit.a.reserve(n);
  for (const Scalar& v : values) wit.a.push_back(n_scalar * v - sum_scalar);
  wit.b = wit.a;
  wit.alpha = n_scalar * c_blind - r_g + n_scalar * r_s - r_h;
  wit.c = var_scalar;
  wit.gamma = r_v;
  out.ip = ip_prove(params, stmt, wit, IpVariant::Log, t, rng);

  out.std_c = commit_scalar(params, Scalar::from_u64(std_floor), r_std);
  t.absorb_point("zksvm/Std", out.std_c);
  out.sqrt = prove_sqrt(params, out.std_c, out.var, std_floor,
                        static_cast<uint64_t>(var), r_std, r_v,
                        kDefaultRangeBits, t, rng);
  return out;
}

VectorProofSet prove_vector(const CommitParams& params,
                            const VectorOpenings& op, Transcript t,
                            RandomSource& rng) {
  const uint32_t n = params.n;
  VectorProofSet out;
  out.s_h = op.s_h;
  t.absorb_point("zksvm/S_H", out.s_h);

  const std::vector<Scalar> v_scalars = to_scalars(op.values);
  const std::vector<Scalar> d_scalars = to_scalars(op.diff);

  // Consecutive difference: commit under the iterated basis, prove the
  // shared opening, subtract, and provably zero the wrap-around entry.
  const Scalar r_iter = Scalar::random(rng);
  out.delta.s_iter =
      commit_with_basis(params, params.giter, v_scalars, r_iter);
  t.absorb_point("zksvm/S_iter", out.delta.s_iter);
  out.delta.eq =
      prove_equality(params, params.gvec, out.s_h, params.giter,
                     out.delta.s_iter, v_scalars, op.r_sh, r_iter, t, rng);
  const Point s_bar = out.s_h - out.delta.s_iter;
  std::vector<Scalar> wrapped = d_scalars;  // d_i for i < n-1
  wrapped[n - 1] =
      Scalar::from_i64(op.values[n - 1]) - Scalar::from_i64(op.values[0]);
  auto zero_res = prove_zero_replace(params, s_bar, wrapped, op.r_sh - r_iter,
                                     n, op.r_diff, t, rng);
  out.delta.diff = zero_res.diff;
  out.delta.zero = std::move(zero_res.proof);

  out.sum = prove_sum_step(params, out.s_h, op.r_sh, v_scalars, op.sum,
                           op.r_avg, t, rng);
  out.diff_sum = prove_sum_step(params, out.delta.diff, op.r_diff, d_scalars,
                                op.diff_sum, op.r_diff_avg, t, rng);
  out.dev = prove_std_step(params, out.s_h, op.r_sh, v_scalars, out.sum.avg,
                           op.r_avg, op.sum, op.var, op.std_floor, op.r_std, t,
                           rng);
  out.diff_dev = prove_std_step(params, out.delta.diff, op.r_diff, d_scalars,
                                out.diff_sum.avg, op.r_diff_avg, op.diff_sum,
                                op.diff_var, op.diff_std_floor, op.r_diff_std,
                                t, rng);
  return out;
}

// ---------------------------------------------------------------------
// per-vector verifier (mirrors the prover's absorption order exactly)

bool verify_sum_step(const CommitParams& params, const Point& c,
                     const SumProofSet& m, Transcript& t) {
  t.absorb_point("zksvm/Avg", m.avg);
  IpStatement stmt{sum_statement_commitment(params, c), m.avg};
  return ip_verify(params, stmt, m.ip, t);
}

bool verify_std_step(const CommitParams& params, const Point& c,
                     const Point& avg, const StdProofSet& s, Transcript& t,
                     std::string* reason, const char* prefix) {
  auto fail = [&](const char* what) {
    if (reason) *reason = std::string(prefix) + what;
    return false;
  };
  t.absorb_point("zksvm/G_mu", s.g_mu);
  t.absorb_point("zksvm/H_mu", s.h_mu);
  t.absorb_point("zksvm/H_S", s.h_s);
  if (!verify_equality(params, single(params.g), avg, single(params.g_prod),
                       s.g_mu, s.eq_g, t))
    return fail("sum equality under the g product (Procedure 8)");
  if (!verify_equality(params, single(params.g), avg, single(params.h_prod),
                       s.h_mu, s.eq_h, t))
    return fail("sum equality under the h product (Procedure 8)");
  if (!verify_equality(params, params.gvec, c, params.hvec, s.h_s, s.eq_s, t))
    return fail("input equality under the h basis (Procedure 8)");
  t.absorb_point("zksvm/Var", s.var);
  IpStatement stmt{
      variance_statement_commitment(params, c, s.g_mu, s.h_s, s.h_mu), s.var};
  if (!ip_verify(params, stmt, s.ip, t))
    return fail("variance inner product (Procedure 8)");
  t.absorb_point("zksvm/Std", s.std_c);
  if (!verify_sqrt(params, s.std_c, s.var, kDefaultRangeBits, s.sqrt, t))
    return fail("standard deviation square root (Procedure 8)");
  return true;
}

}  // namespace

bool verify_vector_proofs(const CommitParams& params, const SvmModel& model,
                          const VectorProofSet& v, Transcript t,
                          std::string* reason) {
  (void)model;
  t.absorb_point("zksvm/S_H", v.s_h);
  auto fail = [&](const char* what) {
    if (reason) *reason = what;
    return false;
  };

  t.absorb_point("zksvm/S_iter", v.delta.s_iter);
  if (!verify_equality(params, params.gvec, v.s_h, params.giter,
                       v.delta.s_iter, v.delta.eq, t))
    return fail("iterated-basis equality (Procedure 6)");
  const Point s_bar = v.s_h - v.delta.s_iter;
  if (!verify_zero_replace(params, s_bar, v.delta.diff, params.n, v.delta.zero,
                           t))
    return fail("difference zero replacement (Procedure 6)");

  if (!verify_sum_step(params, v.s_h, v.sum, t))
    return fail("sum inner product (Procedure 7)");
  if (!verify_sum_step(params, v.delta.diff, v.diff_sum, t))
    return fail("difference sum inner product (Procedure 7)");

  std::string sub;
  if (!verify_std_step(params, v.s_h, v.sum.avg, v.dev, t, &sub, "")) {
    if (reason) *reason = sub;
    return false;
  }
  if (!verify_std_step(params, v.delta.diff, v.diff_sum.avg, v.diff_dev, t,
                       &sub, "difference ")) {
    if (reason) *reason = sub;
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------
// openings and score

std::vector<VectorOpenings> compute_openings(const CommitParams& params,
                                             const SvmModel& model,
                                             const EncodedVectorSet& set,
                                             RandomSource& rng) {
  const uint32_t n = model.n;
  if (params.n != n)
    throw std::invalid_argument("compute_openings: params/model n mismatch");
  const int64_t limit = int64_t{1} << set.config.bits;

  std::vector<VectorOpenings> out;
  out.reserve(kVectorCount);
  for (std::size_t idx = 0; idx < kVectorCount; idx++) {
    const auto& values = set.vectors[idx];
    if (values.size() != n)
      throw std::invalid_argument("compute_openings: vector length != n");
    VectorOpenings op;
    op.values = values;
    for (int64_t v : values)
      if (v < 0 || v >= limit)
        throw BoundError("compute_openings: entry outside [0, 2^B)");

    op.diff.resize(n);
    for (uint32_t i = 0; i + 1 < n; i++)
      op.diff[i] = values[i] - values[i + 1];
    op.diff[n - 1] = 0;

    const Stats main = integer_stats(op.values, n);
    const Stats diff = integer_stats(op.diff, n);
    op.sum = main.sum;
    op.var = main.var;
    op.std_floor = main.std_floor;
    op.diff_sum = diff.sum;
    op.diff_var = diff.var;
    op.diff_std_floor = diff.std_floor;

    op.r_sh = Scalar::random(rng);
    op.r_diff = Scalar::random(rng);
    op.r_avg = Scalar::random(rng);
    op.r_std = Scalar::random(rng);
    op.r_diff_avg = Scalar::random(rng);
    op.r_diff_std = Scalar::random(rng);
    op.s_h = commit_vector(params, BasisId::GVec, to_scalars(op.values),
                           op.r_sh);
    out.push_back(std::move(op));
  }
  return out;
}

ScoreOpening compute_score(std::span<const VectorOpenings> openings,
                           const SvmModel& model) {
  if (openings.size() != kVectorCount)
    throw std::invalid_argument("compute_score: need 12 vectors");
  BigInt total = 0;
  Scalar r_r = Scalar::zero();
  for (std::size_t v = 0; v < kVectorCount; v++) {
    const VectorOpenings& op = openings[v];
    const int64_t f[kFeaturesPerVector] = {
        op.sum, static_cast<int64_t>(op.std_floor), op.diff_sum,
        static_cast<int64_t>(op.diff_std_floor)};
    const Scalar* r[kFeaturesPerVector] = {&op.r_avg, &op.r_std,
                                           &op.r_diff_avg, &op.r_diff_std};
    for (std::size_t k = 0; k < kFeaturesPerVector; k++) {
      const std::size_t i = v * kFeaturesPerVector + k;
      total += BigInt(f[k]) * model.q_int[i];
      r_r = r_r + *r[k] * model.q[i];
    }
  }
  if (total >= (BigInt(1) << 63) || total <= -(BigInt(1) << 63))
    throw BoundError("compute_score: score exceeds int64");
  return ScoreOpening{static_cast<int64_t>(total), r_r};
}

// ---------------------------------------------------------------------
// bundle assembly

Transcript bundle_root_transcript(const CommitParams& params,
                                  const SvmModel& model,
                                  std::span<const uint8_t> nonce,
                                  std::span<const Point> s_h_points) {
  Transcript t("zksvm/attestation/v1");
  t.bind_server_challenge(nonce);
  t.absorb("zksvm/label",
           {reinterpret_cast<const uint8_t*>(params.label.data()),
            params.label.size()});
  t.absorb_u64("zksvm/n", params.n);
  t.absorb_u64("zksvm/digits", model.digits);
  t.absorb("zksvm/intercept",
           {reinterpret_cast<const uint8_t*>(model.intercept.data()),
            model.intercept.size()});
  uint64_t threshold_bits;
  std::memcpy(&threshold_bits, &model.threshold, 8);
  t.absorb_u64("zksvm/threshold", threshold_bits);
  Bytes q_bytes;
  for (const Scalar& q : model.q) {
    auto enc = q.encode();
    q_bytes.insert(q_bytes.end(), enc.begin(), enc.end());
  }
  t.absorb("zksvm/quantized-weights", q_bytes);
  for (const Point& p : s_h_points) t.absorb_point("zksvm/S_H-list", p);
  return t;
}

Transcript bundle_vector_fork(const Transcript& root, std::size_t index) {
  return root.fork("zksvm/vector", index);
}

ProveResult prove_bundle(const CommitParams& params, const SvmModel& model,
                         const EncodedVectorSet& set,
                         std::span<const uint8_t> nonce, RandomSource& rng) {
  ProveResult out;
  out.openings = compute_openings(params, model, set, rng);
  const ScoreOpening score = compute_score(out.openings, model);
  out.bundle.score = score.score;
  out.bundle.r_r = score.r_r;

  std::vector<Point> s_h;
  for (const auto& op : out.openings) s_h.push_back(op.s_h);
  const Transcript root = bundle_root_transcript(params, model, nonce, s_h);

  // The 12 proof sets are independent; give each its own random stream so
  // they can be generated concurrently.
  std::vector<std::unique_ptr<DeterministicRandom>> streams;
  for (std::size_t i = 0; i < kVectorCount; i++) {
    uint8_t seed[32];
    rng.fill(seed, sizeof seed);
    streams.push_back(std::make_unique<DeterministicRandom>(
        std::span<const uint8_t>(seed, sizeof seed)));
  }
  out.bundle.vectors.resize(kVectorCount);
  auto prove_one = [&](std::size_t i) {
    out.bundle.vectors[i] = prove_vector(
        params, out.openings[i], bundle_vector_fork(root, i), *streams[i]);
  };
  if (std::thread::hardware_concurrency() > 1) {
    std::vector<std::future<void>> jobs;
    for (std::size_t i = 0; i < kVectorCount; i++)
      jobs.push_back(std::async(std::launch::async, prove_one, i));
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t i = 0; i < kVectorCount; i++) prove_one(i);
  }
  return out;
}

Point recompute_score_commitment(const CommitParams& params,
                                 const SvmModel& model,
                                 const AttestationBundle& bundle) {
  (void)params;
  std::vector<Point> pts;
  std::vector<Scalar> scs;
  pts.reserve(kFeatureCount);
  scs.reserve(kFeatureCount);
  for (std::size_t v = 0; v < kVectorCount; v++) {
    const VectorProofSet& vec = bundle.vectors[v];
    const Point* commitments[kFeaturesPerVector] = {
        &vec.sum.avg, &vec.dev.std_c, &vec.diff_sum.avg, &vec.diff_dev.std_c};
    for (std::size_t k = 0; k < kFeaturesPerVector; k++) {
      pts.push_back(*commitments[k]);
      scs.push_back(model.q[v * kFeaturesPerVector + k]);
    }
  }
  return multiexp_unchecked(pts, scs);
}

VerifyResult verify_bundle(const CommitParams& params, const SvmModel& model,
                           const AttestationBundle& bundle,
                           std::span<const uint8_t> nonce,
                           const VerifyHooks* hooks) {
  VerifyResult out;
  if (bundle.vectors.size() != kVectorCount) {
    out.reason = "bundle must carry exactly 12 vector proof sets";
    return out;
  }
  std::vector<Point> s_h;
  for (const auto& v : bundle.vectors) s_h.push_back(v.s_h);
  const Transcript root = bundle_root_transcript(params, model, nonce, s_h);

  auto verify_one = [&](std::size_t i, std::string* reason) {
    Transcript fork = bundle_vector_fork(root, i);
    if (hooks != nullptr && i < hooks->vector_challenges.size())
      for (const Scalar& c : hooks->vector_challenges[i])
        fork.inject_challenge(c);
    return verify_vector_proofs(params, model, bundle.vectors[i],
                                std::move(fork), reason);
  };

  if (std::thread::hardware_concurrency() > 1 && hooks == nullptr) {
    std::vector<std::future<std::pair<bool, std::string>>> jobs;
    for (std::size_t i = 0; i < kVectorCount; i++)
      jobs.push_back(std::async(std::launch::async, [&, i] {
        std::string reason;
        const bool ok = verify_one(i, &reason);
        return std::make_pair(ok, reason);
      }));
    for (std::size_t i = 0; i < kVectorCount; i++) {
      auto [ok, reason] = jobs[i].get();
      if (!ok && out.reason.empty())
        out.reason = "vector " + std::to_string(i) + ": " + reason;
    }
    if (!out.reason.empty()) return out;
  } else {
    for (std::size_t i = 0; i < kVectorCount; i++) {
      std::string reason;
      if (!verify_one(i, &reason)) {
        out.reason = "vector " + std::to_string(i) + ": " + reason;
        return out;
      }
    }
  }

  // Procedure 9: recompute the homomorphic linear combination and check the
  // received opening, then classify.
  const Point res = recompute_score_commitment(params, model, bundle);
  if (!open_check_scalar(params, res, Scalar::from_i64(bundle.score),
                         bundle.r_r)) {
    out.reason = "score opening (Procedure 9)";
    return out;
  }
  out.proofs_ok = true;
  out.score = bundle.score;
  const ScoreEval eval = evaluate_sigmoid(bundle.score, model);
  out.sigmoid = eval.sigmoid;
  out.human = eval.human;
  out.accepted = eval.human;
  if (!eval.human) out.reason = "classified as bot (Procedure 9)";
  return out;
}

// ---------------------------------------------------------------------
// wire form

void VectorProofSet::write(ByteWriter& w) const {
  w.point(s_h);
  w.point(delta.s_iter);
  w.point(delta.diff);
  delta.eq.write(w);
  delta.zero.write(w);
  auto write_sum = [&](const SumProofSet& m) {
    w.point(m.avg);
    m.ip.write(w);
  };
  auto write_std = [&](const StdProofSet& s) {
    w.point(s.g_mu);
    w.point(s.h_mu);
    w.point(s.h_s);
    s.eq_g.write(w);
    s.eq_h.write(w);
    s.eq_s.write(w);
    w.point(s.var);
    s.ip.write(w);
    w.point(s.std_c);
    s.sqrt.write(w);
  };
  write_sum(sum);
  write_sum(diff_sum);
  write_std(dev);
  write_std(diff_dev);
}

VectorProofSet VectorProofSet::read(ByteReader& r, uint32_t n) {
  VectorProofSet v;
  v.s_h = r.point();
  v.delta.s_iter = r.point();
  v.delta.diff = r.point();
  v.delta.eq = EqualityProof::read(r, n);
  v.delta.zero = ZeroReplaceProof::read(r, n);
  auto read_ip = [&] {
    IpProof ip = IpProof::read(r);
    if (ip.n != n) throw DecodeError("bundle: inner-product proof n mismatch");
    return ip;
  };
  auto read_sum = [&](SumProofSet& m) {
    m.avg = r.point();
    m.ip = read_ip();
  };
  auto read_std = [&](StdProofSet& s) {
    s.g_mu = r.point();
    s.h_mu = r.point();
    s.h_s = r.point();
    s.eq_g = EqualityProof::read(r, 1);
    s.eq_h = EqualityProof::read(r, 1);
    s.eq_s = EqualityProof::read(r, n);
    s.var = r.point();
    s.ip = read_ip();
    s.std_c = r.point();
    s.sqrt = SqrtProof::read(r);
  };
  read_sum(v.sum);
  read_sum(v.diff_sum);
  read_std(v.dev);
  read_std(v.diff_dev);
  return v;
}

// ---------------------------------------------------------------------
// SHVZK simulation (test oracles)

SimulatedVector simulate_vector_proofs(const CommitParams& params,
                                       const SvmModel& model, const Point& s_h,
                                       std::span<const Point> feature_points,
                                       RandomSource& rng) {
  (void)model;
  if (feature_points.size() != kFeaturesPerVector)
    throw std::invalid_argument("simulate_vector_proofs: need 4 commitments");
  auto nonzero = [&] {
    Scalar s = Scalar::random(rng);
    while (s.is_zero()) s = Scalar::random(rng);
    return s;
  };
  auto random_point = [&] { return params.g.mul(Scalar::random(rng)); };

  SimulatedVector out;
  VectorProofSet& v = out.set;
  v.s_h = s_h;

  // Delta
  v.delta.s_iter = random_point();
  const Scalar e_eq = nonzero();
  v.delta.eq = simulate_equality(params, params.gvec, s_h, params.giter,
                                 v.delta.s_iter, e_eq, rng);
  out.challenges.push_back(e_eq);
  v.delta.diff = random_point();
  const Point s_bar = s_h - v.delta.s_iter;
  const Scalar e_zero = nonzero();
  v.delta.zero = simulate_zero_replace(params, s_bar, v.delta.diff, params.n,
                                       random_point(), e_zero, rng);
  out.challenges.push_back(e_zero);

  // M and M'
  auto simulate_sum = [&](const Point& c, const Point& avg) {
    SumProofSet m;
    m.avg = avg;
    IpStatement stmt{sum_statement_commitment(params, c), m.avg};
    auto sim = ip_simulate(params, stmt, rng);
    m.ip = std::move(sim.proof);
    out.challenges.push_back(sim.challenge);
    return m;
  };
  v.sum = simulate_sum(s_h, feature_points[0]);
  v.diff_sum = simulate_sum(v.delta.diff, feature_points[2]);

  // Lambda and Lambda'
  auto simulate_std = [&](const Point& c, const Point& avg,
                          const Point& std_c) {
    StdProofSet s;
    s.g_mu = random_point();
    s.h_mu = random_point();
    s.h_s = random_point();
    const Scalar e_g = nonzero(), e_h = nonzero(), e_s = nonzero();
    s.eq_g = simulate_equality(params, single(params.g), avg,
                               single(params.g_prod), s.g_mu, e_g, rng);
    s.eq_h = simulate_equality(params, single(params.g), avg,
                               single(params.h_prod), s.h_mu, e_h, rng);
    s.eq_s = simulate_equality(params, params.gvec, c, params.hvec, s.h_s,
                               e_s, rng);
    out.challenges.insert(out.challenges.end(), {e_g, e_h, e_s});
    s.var = random_point();
    IpStatement stmt{
        variance_statement_commitment(params, c, s.g_mu, s.h_s, s.h_mu),
        s.var};
    auto sim = ip_simulate(params, stmt, rng);
    s.ip = std::move(sim.proof);
    out.challenges.push_back(sim.challenge);
    s.std_c = std_c;
    auto sq = simulate_sqrt(params, s.std_c, s.var, kDefaultRangeBits, rng);
    s.sqrt = std::move(sq.proof);
    out.challenges.insert(out.challenges.end(), sq.challenges.begin(),
                          sq.challenges.end());
    return s;
  };
  v.dev = simulate_std(s_h, feature_points[0], feature_points[1]);
  v.diff_dev =
      simulate_std(v.delta.diff, feature_points[2], feature_points[3]);
  return out;
}

SimulatedBundle simulate_bundle(const CommitParams& params,
                                const SvmModel& model, int64_t score,
                                RandomSource& rng) {
  // Pick one feature with an invertible weight; every other feature
  // commitment is a uniformly random point, the chosen one absorbs the
  // correction so the homomorphic product opens to (score, r_r).
  std::size_t pivot = kFeatureCount;
  for (std::size_t i = 0; i < kFeatureCount; i++)
    if (!model.q[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == kFeatureCount)
    throw std::invalid_argument("simulate_bundle: all weights are zero");

  SimulatedBundle out;
  out.bundle.score = score;
  out.bundle.r_r = Scalar::random(rng);

  std::vector<Point> feature_points;
  feature_points.reserve(kFeatureCount);
  for (std::size_t i = 0; i < kFeatureCount; i++)
    feature_points.push_back(params.g.mul(Scalar::random(rng)));

  // target = g^score h^{r_r}; solve the pivot commitment.
  Point correction = commit_scalar(params, Scalar::from_i64(score),
                                   out.bundle.r_r);
  for (std::size_t i = 0; i < kFeatureCount; i++) {
    if (i == pivot) continue;
    correction = correction - feature_points[i].mul(model.q[i]);
  }
  feature_points[pivot] = correction.mul(model.q[pivot].invert());

  for (std::size_t v = 0; v < kVectorCount; v++) {
    auto sim = simulate_vector_proofs(
        params, model, params.g.mul(Scalar::random(rng)),
        std::span<const Point>(feature_points.data() + v * kFeaturesPerVector,
                               kFeaturesPerVector),
        rng);
    out.bundle.vectors.push_back(std::move(sim.set));
    out.hooks.vector_challenges.push_back(std::move(sim.challenges));
  }
  return out;
}

}  // namespace zksvm

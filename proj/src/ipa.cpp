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

#include "zksvm/ipa.hpp"

#include <stdexcept>

namespace zksvm {
namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

uint32_t log2_exact(std::size_t n) {
  uint32_t lg = 0;
  while ((std::size_t{1} << lg) < n) lg++;
  return lg;
}

std::vector<Scalar> ones_if_empty(std::span<const Scalar> coef,
                                  std::size_t n) {
  if (!coef.empty()) {
    if (coef.size() != n) throw std::invalid_argument("ipa: coef size");
    return std::vector<Scalar>(coef.begin(), coef.end());
  }
  return std::vector<Scalar>(n, Scalar::one());
}

}  // namespace

IpaProof ipa_prove(Transcript& t, std::span<const Point> g_basis,
                   std::span<const Point> h_basis,
                   std::span<const Scalar> g_coef,
                   std::span<const Scalar> h_coef, const Point& u,
                   std::vector<Scalar> a, std::vector<Scalar> b) {
  const std::size_t n = a.size();
  if (!is_pow2(n) || b.size() != n || g_basis.size() != n ||
      h_basis.size() != n)
    throw std::invalid_argument("ipa_prove: need power-of-two vectors");

  // Lazy fold: effective base i at the current level is the product of the
  // original bases j with (j mod level) == i, each carrying coef[j].
  std::vector<Scalar> cg = ones_if_empty(g_coef, n);
  std::vector<Scalar> ch = ones_if_empty(h_coef, n);

  IpaProof proof;
  std::size_t level = n;
  std::vector<Point> pts;
  std::vector<Scalar> scs;
  while (level > 1) {
    const std::size_t half = level / 2;
    const Scalar c_l = inner_product({a.data(), half}, {b.data() + half, half});
    const Scalar c_r = inner_product({a.data() + half, half}, {b.data(), half});

    // L = G_R^{a_L} * H_L^{b_R} * u^{c_L}; R = G_L^{a_R} * H_R^{b_L} * u^{c_R},
    // expanded onto the original bases through the coefficient vectors.
    auto round_commit = [&](bool left_half_of_a) {
      pts.clear();
      scs.clear();
      pts.reserve(n + 1);
      scs.reserve(n + 1);
      for (std::size_t j = 0; j < n; j++) {
        const std::size_t pos = j % level;
        if (left_half_of_a ? pos >= half : pos < half) {
          const std::size_t idx = left_half_of_a ? pos - half : pos + half;
          pts.push_back(g_basis[j]);
          scs.push_back(cg[j] * a[idx]);
        } else {
          const std::size_t idx = left_half_of_a ? pos + half : pos - half;
          pts.push_back(h_basis[j]);
          scs.push_back(ch[j] * b[idx]);
        }
      }
      pts.push_back(u);
      scs.push_back(left_half_of_a ? c_l : c_r);
      return multiexp_unchecked(pts, scs);
    };
    proof.l_points.push_back(round_commit(true));
    proof.r_points.push_back(round_commit(false));

    t.absorb_point("ipa/L", proof.l_points.back());
    t.absorb_point("ipa/R", proof.r_points.back());
    const Scalar x = t.challenge_scalar("ipa/x");
    const Scalar x_inv = x.invert();

    for (std::size_t i = 0; i < half; i++) {
      a[i] = a[i] * x + a[i + half] * x_inv;
      b[i] = b[i] * x_inv + b[i + half] * x;
    }
    a.resize(half);
    b.resize(half);
    for (std::size_t j = 0; j < n; j++) {
      const bool left = (j % level) < half;
      cg[j] = cg[j] * (left ? x_inv : x);
      ch[j] = ch[j] * (left ? x : x_inv);
    }
    level = half;
  }
  proof.a = a[0];
  proof.b = b[0];
  return proof;
}

bool ipa_verify(Transcript& t, std::span<const Point> g_basis,
                std::span<const Point> h_basis, std::span<const Scalar> g_coef,
                std::span<const Scalar> h_coef, const Point& u,
                std::span<const PointTerm> statement,
                std::span<const Scalar> g_offset,
                std::span<const Scalar> h_offset, const IpaProof& proof) {
  const std::size_t n = g_basis.size();
  if (!is_pow2(n) || h_basis.size() != n) return false;
  if ((!g_offset.empty() && g_offset.size() != n) ||
      (!h_offset.empty() && h_offset.size() != n))
    throw std::invalid_argument("ipa_verify: offset size");
  const uint32_t lg = log2_exact(n);
  if (proof.l_points.size() != lg || proof.r_points.size() != lg) return false;

  std::vector<Scalar> x(lg), x_inv(lg);
  for (uint32_t k = 0; k < lg; k++) {
    t.absorb_point("ipa/L", proof.l_points[k]);
    t.absorb_point("ipa/R", proof.r_points[k]);
    x[k] = t.challenge_scalar("ipa/x");
    x_inv[k] = x[k].invert();
  }

  // Challenge coefficients: s[j] = prod_k x_k^{+-1}, +1 where j sits in the
  // right half at round k (bit lg-1-k of j set). s[j] derives from s of j
  // with its top set bit cleared, saving a pass.
  std::vector<Scalar> s(n);
  Scalar all_inv = Scalar::one();
  for (uint32_t k = 0; k < lg; k++) all_inv = all_inv * x_inv[k];
  s[0] = all_inv;
  std::vector<Scalar> x_sq(lg);
  for (uint32_t k = 0; k < lg; k++) x_sq[k] = x[k].square();
  for (std::size_t j = 1; j < n; j++) {
    uint32_t top = 0;
    while ((std::size_t{1} << (top + 1)) <= j) top++;
    s[j] = s[j - (std::size_t{1} << top)] * x_sq[lg - 1 - top];
  }

  // One multiexp:
  //   sum g_j^{a s_j gcoef_j} + sum h_j^{b s_j^ated hcoef_j} + u^{ab}
  //   - sum L_k^{x_k^2} - sum R_k^{x_k^-2} - P  == identity.
  std::vector<Point> pts;
  std::vector<Scalar> scs;
  pts.reserve(2 * n + 2 * lg + statement.size() + 1);
  scs.reserve(pts.capacity());
  for (std::size_t j = 0; j < n; j++) {
    Scalar e = proof.a * s[j];
    if (!g_coef.empty()) e = e * g_coef[j];
    if (!g_offset.empty()) e = e - g_offset[j];
    pts.push_back(g_basis[j]);
    scs.push_back(e);
  }
  for (std::size_t j = 0; j < n; j++) {
    // 1/s[j] = s[~j]: flipping every index bit negates every challenge
    // exponent.
    Scalar e = proof.b * s[n - 1 - j];
    if (!h_coef.empty()) e = e * h_coef[j];
    if (!h_offset.empty()) e = e - h_offset[j];
    pts.push_back(h_basis[j]);
    scs.push_back(e);
  }
  pts.push_back(u);
  scs.push_back(proof.a * proof.b);
  for (uint32_t k = 0; k < lg; k++) {
    pts.push_back(proof.l_points[k]);
    scs.push_back(x_sq[k].neg());
    pts.push_back(proof.r_points[k]);
    scs.push_back(x_inv[k].square().neg());
  }
  for (const PointTerm& term : statement) {
    pts.push_back(*term.point);
    scs.push_back(term.scalar.neg());
  }
  return multiexp_unchecked(pts, scs).is_identity();
}

}  // namespace zksvm

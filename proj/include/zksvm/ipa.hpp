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

#include "zksvm/group.hpp"
#include "zksvm/transcript.hpp"

// Logarithmic inner-product argument: knowledge of vectors a, b with
//
//   P = prod (g_i^{gcoef_i})^{a_i} * prod (h_i^{hcoef_i})^{b_i} * u^{<a,b>}
//
// Per round the g-side folds by the challenge inverse and the h-side by the
// challenge; the proof is ceil(log2 n) (L, R) pairs plus the two final
// scalars. Base folding is kept lazy (per-index coefficient vectors), so
// pre-scaled bases (the range proof's y-powers) cost only scalar work.

namespace zksvm {

struct IpaProof {
  std::vector<Point> l_points;
  std::vector<Point> r_points;
  Scalar a;
  Scalar b;
};

// One statement term pt^sc of the P composition.
struct PointTerm {
  const Point* point;
  Scalar scalar;
};

// g_coef / h_coef may be empty (all ones). a and b are consumed.
// n must be a power of two.
IpaProof ipa_prove(Transcript& t, std::span<const Point> g_basis,
                   std::span<const Point> h_basis,
                   std::span<const Scalar> g_coef,
                   std::span<const Scalar> h_coef, const Point& u,
                   std::vector<Scalar> a, std::vector<Scalar> b);

// Single-multiexp verification. The statement P is the product of `terms`
// with, optionally, per-base offsets folded in:
//   P = prod terms * prod g_j^{g_offset_j} * prod h_j^{h_offset_j}
// (offsets may be empty). Everything lands in one multiexp call.
bool ipa_verify(Transcript& t, std::span<const Point> g_basis,
                std::span<const Point> h_basis, std::span<const Scalar> g_coef,
                std::span<const Scalar> h_coef, const Point& u,
                std::span<const PointTerm> statement,
                std::span<const Scalar> g_offset,
                std::span<const Scalar> h_offset, const IpaProof& proof);

}  // namespace zksvm

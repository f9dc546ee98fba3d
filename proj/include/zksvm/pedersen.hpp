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

namespace zksvm {

// Named generator vectors of a CommitParams. GIter is the rotated basis
// [g_n, g_1, ..., g_{n-1}] both sides derive identically.
enum class BasisId : uint8_t { GVec = 0, HVec = 1, GIter = 2 };

std::span<const Point> basis_points(const CommitParams& params, BasisId id);

// Commit(m, r) = g^m * h^r.
Point commit_scalar(const CommitParams& params, const Scalar& m,
                    const Scalar& r);

// Commit(mvec, r) = prod basis_i^{m_i} * h^r. |mvec| must equal params.n.
Point commit_vector(const CommitParams& params, BasisId basis,
                    std::span<const Scalar> mvec, const Scalar& r);

// Same over an arbitrary generator list (used by sub-protocols that commit
// under reduced or product bases).
Point commit_with_basis(const CommitParams& params,
                        std::span<const Point> basis,
                        std::span<const Scalar> mvec, const Scalar& r);

// Open verification: true iff the commitment recomputes from the claimed
// opening.
bool open_check(const CommitParams& params, const Point& commitment,
                BasisId basis, std::span<const Scalar> mvec, const Scalar& r);
bool open_check_scalar(const CommitParams& params, const Point& commitment,
                       const Scalar& m, const Scalar& r);

// Prover-side representations: the commitment point together with its
// witness. Verifier-side code only ever handles bare Points, so openings
// cannot leak into a wire format by accident.
struct OpenedScalar {
  Point point;
  Scalar m;
  Scalar r;
};

struct OpenedVector {
  Point point;
  BasisId basis = BasisId::GVec;
  std::vector<Scalar> m;
  Scalar r;
};

OpenedScalar open_commit_scalar(const CommitParams& params, const Scalar& m,
                                RandomSource& rng);
OpenedVector open_commit_vector(const CommitParams& params, BasisId basis,
                                std::vector<Scalar> mvec, RandomSource& rng);

}  // namespace zksvm

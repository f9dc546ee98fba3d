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

#include "zksvm/pedersen.hpp"

#include <stdexcept>

namespace zksvm {

std::span<const Point> basis_points(const CommitParams& params, BasisId id) {
  switch (id) {
    case BasisId::GVec:
      return params.gvec;
    case BasisId::HVec:
      return params.hvec;
    case BasisId::GIter:
      return params.giter;
  }
  throw std::invalid_argument("unknown basis id");
}

Point commit_scalar(const CommitParams& params, const Scalar& m,
                    const Scalar& r) {
  const Point pts[] = {params.g, params.h};
  const Scalar scs[] = {m, r};
  return multiexp_unchecked(pts, scs);
}

Point commit_with_basis(const CommitParams& params,
                        std::span<const Point> basis,
                        std::span<const Scalar> mvec, const Scalar& r) {
  if (basis.size() != mvec.size())
    throw std::invalid_argument("commit: message length mismatch");
  std::vector<Point> pts(basis.begin(), basis.end());
  std::vector<Scalar> scs(mvec.begin(), mvec.end());
  pts.push_back(params.h);
  scs.push_back(r);
  return multiexp_unchecked(pts, scs);
}

Point commit_vector(const CommitParams& params, BasisId basis,
                    std::span<const Scalar> mvec, const Scalar& r) {
  if (mvec.size() != params.n)
    throw std::invalid_argument("commit: message length != n");
  return commit_with_basis(params, basis_points(params, basis), mvec, r);
}

bool open_check(const CommitParams& params, const Point& commitment,
                BasisId basis, std::span<const Scalar> mvec, const Scalar& r) {
  if (mvec.size() != params.n) return false;
  return commit_vector(params, basis, mvec, r) == commitment;
}

bool open_check_scalar(const CommitParams& params, const Point& commitment,
                       const Scalar& m, const Scalar& r) {
  return commit_scalar(params, m, r) == commitment;
}

OpenedScalar open_commit_scalar(const CommitParams& params, const Scalar& m,
                                RandomSource& rng) {
  OpenedScalar out;
  out.m = m;
  out.r = Scalar::random(rng);
  out.point = commit_scalar(params, out.m, out.r);
  return out;
}

OpenedVector open_commit_vector(const CommitParams& params, BasisId basis,
                                std::vector<Scalar> mvec, RandomSource& rng) {
  OpenedVector out;
  out.basis = basis;
  out.m = std::move(mvec);
  out.r = Scalar::random(rng);
  out.point = commit_vector(params, basis, out.m, out.r);
  return out;
}

}  // namespace zksvm

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

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zksvm/errors.hpp"

// Prime-order group backbone. The backend is the NIST P-256 group (prime
// order, DDH-standard); everything above this header only sees opaque
// Scalar / Point values and their canonical byte encodings, so the curve
// choice is contained here.

typedef struct bignum_st BIGNUM;
typedef struct ec_point_st EC_POINT;

namespace zksvm {

// Wire sizes. Scalars are little-endian, canonical (< group order). Points
// are SEC1 compressed; the identity uses a dedicated all-zero 33-byte form
// so the encoding stays fixed-width.
inline constexpr std::size_t kScalarBytes = 32;
inline constexpr std::size_t kPointBytes = 33;

using Bytes = std::vector<uint8_t>;

// Injected randomness so provers and simulators are testable with a seeded
// source. Handles are per-caller; they are not shared across threads.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(uint8_t* out, std::size_t len) = 0;
};

class SystemRandom final : public RandomSource {
 public:
  void fill(uint8_t* out, std::size_t len) override;
};

// SHA-512 counter stream. Test/demo use only.
class DeterministicRandom final : public RandomSource {
 public:
  explicit DeterministicRandom(uint64_t seed);
  explicit DeterministicRandom(std::span<const uint8_t> seed);
  void fill(uint8_t* out, std::size_t len) override;

 private:
  std::array<uint8_t, 32> seed_{};
  uint64_t counter_ = 0;
  std::array<uint8_t, 64> block_{};
  std::size_t used_ = 64;
};

namespace detail {
struct BnDeleter {
  void operator()(BIGNUM* bn) const;
};
struct PointDeleter {
  void operator()(EC_POINT* p) const;
};
}  // namespace detail

// Field element mod the group order. Immutable value semantics.
class Scalar {
 public:
  Scalar();  // zero
  Scalar(const Scalar& other);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&&) noexcept = default;

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_u64(1); }
  static Scalar from_u64(uint64_t v);
  static Scalar from_i64(int64_t v);  // negatives map to order - |v|
  static Scalar random(RandomSource& rng);
  // Reduces >= 40 uniform bytes (big-endian) mod the order.
  static Scalar reduce_wide(std::span<const uint8_t> wide);
  // Throws DecodeError on wrong length or non-canonical value.
  static Scalar decode(std::span<const uint8_t> in);

  std::array<uint8_t, kScalarBytes> encode() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar neg() const;
  Scalar invert() const;  // throws std::invalid_argument on zero
  Scalar square() const { return *this * *this; }

  bool is_zero() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const BIGNUM* bn() const { return bn_.get(); }

 private:
  explicit Scalar(BIGNUM* owned) : bn_(owned) {}
  std::unique_ptr<BIGNUM, detail::BnDeleter> bn_;
  friend class Point;
};

Scalar inner_product(std::span<const Scalar> a, std::span<const Scalar> b);

// Embeddings for values wider than 64 bits (feature pipeline integers).
Scalar scalar_from_u128(unsigned __int128 v);
Scalar scalar_from_i128(__int128 v);

class Point {
 public:
  Point();  // identity
  Point(const Point& other);
  Point(Point&&) noexcept = default;
  Point& operator=(const Point& other);
  Point& operator=(Point&&) noexcept = default;

  static Point identity() { return Point(); }
  // Throws DecodeError on anything but a canonical 33-byte encoding.
  static Point decode(std::span<const uint8_t> in);

  std::array<uint8_t, kPointBytes> encode() const;

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;
  Point mul(const Scalar& s) const;

  bool is_identity() const;
  bool operator==(const Point& o) const;
  bool operator!=(const Point& o) const { return !(*this == o); }

  const EC_POINT* raw() const { return pt_.get(); }

 private:
  explicit Point(EC_POINT* owned) : pt_(owned) {}
  std::unique_ptr<EC_POINT, detail::PointDeleter> pt_;
  friend Point multiexp_unchecked(std::span<const Point>,
                                  std::span<const Scalar>);
  friend Point hash_to_group(std::span<const uint8_t>);
};

inline Point operator*(const Scalar& s, const Point& p) { return p.mul(s); }

// Product of points[i]^scalars[i]. Lists must be nonempty and equal length.
Point multiexp(std::span<const Point> points, std::span<const Scalar> scalars);
// Same, but an empty input yields the identity. Internal building block.
Point multiexp_unchecked(std::span<const Point> points,
                         std::span<const Scalar> scalars);

// Uniform hash-to-group (simplified-SWU, two field elements, RO style).
Point hash_to_group(std::span<const uint8_t> msg);

// The public generator set. Derived deterministically from a label via
// hash-to-group, so no party knows any discrete-log relation among the
// generators. Immutable after creation and safe to share across threads.
struct CommitParams {
  std::string label;
  uint32_t n = 0;
  Point g;
  Point h;
  std::vector<Point> gvec;
  std::vector<Point> hvec;
  // Derived values every verifier can recompute: the rotated basis
  // [g_n, g_1, ..., g_{n-1}] and the basis products.
  std::vector<Point> giter;
  Point g_prod;
  Point h_prod;
  // Dedicated generators for range proofs (prefix [0, l) is used for bit
  // length l). Sized for the largest supported l.
  std::vector<Point> range_g;
  std::vector<Point> range_h;
};

inline constexpr uint32_t kMaxRangeBits = 64;

// Deterministic: same (label, n) gives bit-identical parameters.
// Throws std::invalid_argument if n == 0 or label is empty.
CommitParams derive_params(std::string_view label, uint32_t n);

}  // namespace zksvm

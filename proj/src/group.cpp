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

#define OPENSSL_API_COMPAT 0x10100000L
#define OPENSSL_SUPPRESS_DEPRECATED

#include "zksvm/group.hpp"

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/err.h>
#include <openssl/evp.h>
#include <openssl/obj_mac.h>
#include <openssl/rand.h>

#include <algorithm>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace zksvm {
namespace {

[[noreturn]] void backend_fail(const char* what) {
  throw std::runtime_error(std::string("group backend failure: ") + what);
}

struct GroupCtx {
  EC_GROUP* group;
  BIGNUM* order;
  BIGNUM* field_p;
  BIGNUM* curve_a;
  BIGNUM* curve_b;
  // Simplified-SWU constants: Z = -10, c_sqrt = (p+1)/4,
  // x1 coefficients -B/A and B/(Z*A).
  BIGNUM* swu_z;
  BIGNUM* sqrt_exp;
  BIGNUM* minus_b_over_a;
  BIGNUM* b_over_za;
};

const GroupCtx& ctx() {
  static GroupCtx c = [] {
    GroupCtx g{};
    g.group = EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1);
    if (g.group == nullptr) backend_fail("curve init");
    BN_CTX* bc = BN_CTX_new();
    g.order = BN_new();
    g.field_p = BN_new();
    g.curve_a = BN_new();
    g.curve_b = BN_new();
    if (EC_GROUP_get_order(g.group, g.order, bc) != 1 ||
        EC_GROUP_get_curve(g.group, g.field_p, g.curve_a, g.curve_b, bc) != 1)
      backend_fail("curve params");

    g.swu_z = BN_new();
    BN_set_word(g.swu_z, 10);
    BN_sub(g.swu_z, g.field_p, g.swu_z);  // -10 mod p

    g.sqrt_exp = BN_new();  // (p+1)/4; valid since p = 3 mod 4
    BN_copy(g.sqrt_exp, g.field_p);
    BN_add_word(g.sqrt_exp, 1);
    BN_rshift(g.sqrt_exp, g.sqrt_exp, 2);

    BIGNUM* tmp = BN_new();
    g.minus_b_over_a = BN_new();
    BN_mod_inverse(tmp, g.curve_a, g.field_p, bc);
    BN_mod_mul(g.minus_b_over_a, g.curve_b, tmp, g.field_p, bc);
    BN_sub(g.minus_b_over_a, g.field_p, g.minus_b_over_a);

    g.b_over_za = BN_new();
    BN_mod_mul(tmp, g.swu_z, g.curve_a, g.field_p, bc);
    BN_mod_inverse(tmp, tmp, g.field_p, bc);
    BN_mod_mul(g.b_over_za, g.curve_b, tmp, g.field_p, bc);

    BN_free(tmp);
    BN_CTX_free(bc);
    return g;
  }();
  return c;
}

BN_CTX* tls_bn_ctx() {
  static thread_local std::unique_ptr<BN_CTX, decltype(&BN_CTX_free)> c(
      BN_CTX_new(), &BN_CTX_free);
  if (!c) backend_fail("BN_CTX");
  return c.get();
}

BIGNUM* new_bn() {
  BIGNUM* bn = BN_new();
  if (bn == nullptr) backend_fail("BN_new");
  return bn;
}

EC_POINT* new_point() {
  EC_POINT* p = EC_POINT_new(ctx().group);
  if (p == nullptr) backend_fail("EC_POINT_new");
  return p;
}

void sha_digest(const EVP_MD* md, std::span<const std::span<const uint8_t>> parts,
                uint8_t* out) {
  EVP_MD_CTX* mc = EVP_MD_CTX_new();
  if (mc == nullptr || EVP_DigestInit_ex(mc, md, nullptr) != 1)
    backend_fail("digest init");
  for (const auto& part : parts)
    if (EVP_DigestUpdate(mc, part.data(), part.size()) != 1)
      backend_fail("digest update");
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(mc, out, &len) != 1) backend_fail("digest final");
  EVP_MD_CTX_free(mc);
}

void sha256(std::initializer_list<std::span<const uint8_t>> parts,
            uint8_t out[32]) {
  std::vector<std::span<const uint8_t>> v(parts);
  sha_digest(EVP_sha256(), v, out);
}

// expand_message_xmd with SHA-256 (RFC 9380 style framing).
void expand_message_xmd(std::span<const uint8_t> msg, std::string_view dst,
                        std::span<uint8_t> out) {
  constexpr std::size_t kBlock = 64;   // SHA-256 input block
  constexpr std::size_t kDigest = 32;  // SHA-256 output
  const std::size_t ell = (out.size() + kDigest - 1) / kDigest;
  if (ell > 255 || dst.size() > 255) throw std::invalid_argument("xmd size");

  Bytes dst_prime(dst.begin(), dst.end());
  dst_prime.push_back(static_cast<uint8_t>(dst.size()));

  const uint8_t z_pad[kBlock] = {0};
  const uint8_t lib[2] = {static_cast<uint8_t>(out.size() >> 8),
                          static_cast<uint8_t>(out.size() & 0xff)};
  uint8_t b0[kDigest], bi[kDigest];
  uint8_t zero = 0;
  sha256({{z_pad, kBlock}, msg, {lib, 2}, {&zero, 1}, dst_prime}, b0);

  uint8_t idx = 1;
  sha256({{b0, kDigest}, {&idx, 1}, dst_prime}, bi);
  std::size_t written = 0;
  for (;;) {
    const std::size_t take = std::min(kDigest, out.size() - written);
    std::memcpy(out.data() + written, bi, take);
    written += take;
    if (written == out.size()) break;
    uint8_t mixed[kDigest];
    for (std::size_t i = 0; i < kDigest; i++) mixed[i] = b0[i] ^ bi[i];
    idx++;
    sha256({{mixed, kDigest}, {&idx, 1}, dst_prime}, bi);
  }
}

constexpr std::string_view kHashToGroupDst =
    "ZKSVM-V1-P256_XMD:SHA-256_SSWU_RO_";

bool field_is_square(const BIGNUM* v, BIGNUM* sqrt_out) {
  const GroupCtx& g = ctx();
  BN_CTX* bc = tls_bn_ctx();
  BN_mod_exp(sqrt_out, v, g.sqrt_exp, g.field_p, bc);
  BIGNUM* check = BN_new();
  BN_mod_sqr(check, sqrt_out, g.field_p, bc);
  const bool ok = BN_cmp(check, v) == 0;
  BN_free(check);
  return ok;
}

// Simplified SWU map for curves with a,b != 0 (P-256 needs no isogeny).
void map_to_curve_sswu(const BIGNUM* u, EC_POINT* out) {
  const GroupCtx& g = ctx();
  BN_CTX* bc = tls_bn_ctx();
  BIGNUM *u2 = new_bn(), *t = new_bn(), *tv = new_bn(), *x = new_bn(),
         *gx = new_bn(), *y = new_bn(), *tmp = new_bn();

  BN_mod_sqr(u2, u, g.field_p, bc);        // u^2
  BN_mod_mul(t, g.swu_z, u2, g.field_p, bc);  // Z*u^2
  BN_mod_sqr(tv, t, g.field_p, bc);
  BN_mod_add(tv, tv, t, g.field_p, bc);  // Z^2 u^4 + Z u^2

  if (BN_is_zero(tv)) {
    BN_copy(x, g.b_over_za);
  } else {
    BN_mod_inverse(tmp, tv, g.field_p, bc);
    BN_add_word(tmp, 1);
    BN_mod_mul(x, g.minus_b_over_a, tmp, g.field_p, bc);
  }

  auto curve_rhs = [&](const BIGNUM* xv, BIGNUM* out_rhs) {
    BN_mod_sqr(out_rhs, xv, g.field_p, bc);
    BN_mod_add(out_rhs, out_rhs, g.curve_a, g.field_p, bc);
    BN_mod_mul(out_rhs, out_rhs, xv, g.field_p, bc);
    BN_mod_add(out_rhs, out_rhs, g.curve_b, g.field_p, bc);
  };

  curve_rhs(x, gx);
  if (!field_is_square(gx, y)) {
    BN_mod_mul(x, t, x, g.field_p, bc);  // x2 = Z u^2 x1
    curve_rhs(x, gx);
    if (!field_is_square(gx, y)) backend_fail("sswu: no square branch");
  }
  // sgn0 fixup: match parity of u.
  if (BN_is_bit_set(u, 0) != BN_is_bit_set(y, 0)) BN_sub(y, g.field_p, y);

  if (EC_POINT_set_affine_coordinates(g.group, out, x, y, bc) != 1)
    backend_fail("sswu: off curve");

  BN_free(u2); BN_free(t); BN_free(tv); BN_free(x);
  BN_free(gx); BN_free(y); BN_free(tmp);
}

}  // namespace

namespace detail {
void BnDeleter::operator()(BIGNUM* bn) const { BN_free(bn); }
void PointDeleter::operator()(EC_POINT* p) const { EC_POINT_free(p); }
}  // namespace detail

// ---------------------------------------------------------------------------
// randomness

void SystemRandom::fill(uint8_t* out, std::size_t len) {
  if (RAND_bytes(out, static_cast<int>(len)) != 1) backend_fail("RAND_bytes");
}

DeterministicRandom::DeterministicRandom(uint64_t seed) {
  uint8_t le[8];
  for (int i = 0; i < 8; i++) le[i] = static_cast<uint8_t>(seed >> (8 * i));
  sha256({{le, 8}}, seed_.data());
}

DeterministicRandom::DeterministicRandom(std::span<const uint8_t> seed) {
  sha256({seed}, seed_.data());
}

void DeterministicRandom::fill(uint8_t* out, std::size_t len) {
  while (len > 0) {
    if (used_ == block_.size()) {
      uint8_t le[8];
      for (int i = 0; i < 8; i++)
        le[i] = static_cast<uint8_t>(counter_ >> (8 * i));
      std::span<const uint8_t> parts[] = {seed_, {le, 8}};
      sha_digest(EVP_sha512(), parts, block_.data());
      counter_++;
      used_ = 0;
    }
    const std::size_t take = std::min(len, block_.size() - used_);
    std::memcpy(out, block_.data() + used_, take);
    used_ += take;
    out += take;
    len -= take;
  }
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : bn_(new_bn()) { BN_zero(bn_.get()); }

Scalar::Scalar(const Scalar& other) : bn_(BN_dup(other.bn_.get())) {
  if (!bn_) backend_fail("BN_dup");
}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    if (BN_copy(bn_.get(), other.bn_.get()) == nullptr) backend_fail("BN_copy");
  }
  return *this;
}

Scalar Scalar::from_u64(uint64_t v) {
  Scalar s;
  BN_set_word(s.bn_.get(), v);
  return s;
}

Scalar Scalar::from_i64(int64_t v) {
  if (v >= 0) return from_u64(static_cast<uint64_t>(v));
  Scalar s = from_u64(~static_cast<uint64_t>(v) + 1);  // |v| without UB
  return s.neg();
}

Scalar Scalar::random(RandomSource& rng) {
  uint8_t buf[48];
  rng.fill(buf, sizeof buf);
  return reduce_wide({buf, sizeof buf});
}

Scalar Scalar::reduce_wide(std::span<const uint8_t> wide) {
  if (wide.size() < 40) throw std::invalid_argument("reduce_wide: too narrow");
  Scalar s;
  BIGNUM* big = new_bn();
  BN_bin2bn(wide.data(), static_cast<int>(wide.size()), big);
  BN_nnmod(s.bn_.get(), big, ctx().order, tls_bn_ctx());
  BN_free(big);
  return s;
}

Scalar Scalar::decode(std::span<const uint8_t> in) {
  if (in.size() != kScalarBytes) throw DecodeError("scalar: bad length");
  uint8_t be[kScalarBytes];
  for (std::size_t i = 0; i < kScalarBytes; i++)
    be[i] = in[kScalarBytes - 1 - i];
  Scalar s;
  BN_bin2bn(be, kScalarBytes, s.bn_.get());
  if (BN_cmp(s.bn_.get(), ctx().order) >= 0)
    throw DecodeError("scalar: non-canonical");
  return s;
}

std::array<uint8_t, kScalarBytes> Scalar::encode() const {
  std::array<uint8_t, kScalarBytes> out{};
  uint8_t be[kScalarBytes];
  if (BN_bn2binpad(bn_.get(), be, kScalarBytes) < 0) backend_fail("bn2bin");
  for (std::size_t i = 0; i < kScalarBytes; i++)
    out[i] = be[kScalarBytes - 1 - i];
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  BN_mod_add(r.bn_.get(), bn_.get(), o.bn_.get(), ctx().order, tls_bn_ctx());
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  BN_mod_sub(r.bn_.get(), bn_.get(), o.bn_.get(), ctx().order, tls_bn_ctx());
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  BN_mod_mul(r.bn_.get(), bn_.get(), o.bn_.get(), ctx().order, tls_bn_ctx());
  return r;
}

Scalar Scalar::neg() const {
  Scalar r;
  BN_mod_sub(r.bn_.get(), ctx().order, bn_.get(), ctx().order, tls_bn_ctx());
  if (BN_cmp(r.bn_.get(), ctx().order) == 0) BN_zero(r.bn_.get());
  return r;
}

Scalar Scalar::invert() const {
  if (is_zero()) throw std::invalid_argument("invert: zero scalar");
  Scalar r;
  if (BN_mod_inverse(r.bn_.get(), bn_.get(), ctx().order, tls_bn_ctx()) ==
      nullptr)
    backend_fail("mod_inverse");
  return r;
}

bool Scalar::is_zero() const { return BN_is_zero(bn_.get()); }

bool Scalar::operator==(const Scalar& o) const {
  return BN_cmp(bn_.get(), o.bn_.get()) == 0;
}

Scalar scalar_from_u128(unsigned __int128 v) {
  uint8_t be[16];
  for (int i = 15; i >= 0; i--) {
    be[i] = static_cast<uint8_t>(v & 0xff);
    v >>= 8;
  }
  Scalar s;
  BN_bin2bn(be, 16, const_cast<BIGNUM*>(s.bn()));
  return s;
}

Scalar scalar_from_i128(__int128 v) {
  if (v >= 0) return scalar_from_u128(static_cast<unsigned __int128>(v));
  return scalar_from_u128(static_cast<unsigned __int128>(-(v + 1)) + 1).neg();
}

Scalar inner_product(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("inner_product: length mismatch");
  BN_CTX* bc = tls_bn_ctx();
  Scalar acc;
  BIGNUM* tmp = new_bn();
  for (std::size_t i = 0; i < a.size(); i++) {
    BN_mod_mul(tmp, a[i].bn(), b[i].bn(), ctx().order, bc);
    BN_mod_add(const_cast<BIGNUM*>(acc.bn()), acc.bn(), tmp, ctx().order, bc);
  }
  BN_free(tmp);
  return acc;
}

// ---------------------------------------------------------------------------
// Point

Point::Point() : pt_(new_point()) {
  EC_POINT_set_to_infinity(ctx().group, pt_.get());
}

Point::Point(const Point& other) : pt_(EC_POINT_dup(other.pt_.get(), ctx().group)) {
  if (!pt_) backend_fail("point dup");
}

Point& Point::operator=(const Point& other) {
  if (this != &other) {
    if (EC_POINT_copy(pt_.get(), other.pt_.get()) != 1) backend_fail("point copy");
  }
  return *this;
}

Point Point::decode(std::span<const uint8_t> in) {
  if (in.size() != kPointBytes) throw DecodeError("point: bad length");
  const bool all_zero =
      std::all_of(in.begin(), in.end(), [](uint8_t b) { return b == 0; });
  if (all_zero) return Point();
  if (in[0] != 0x02 && in[0] != 0x03)
    throw DecodeError("point: bad compression tag");
  Point p(new_point());
  if (EC_POINT_oct2point(ctx().group, p.pt_.get(), in.data(), in.size(),
                         tls_bn_ctx()) != 1) {
    ERR_clear_error();
    throw DecodeError("point: not on curve");
  }
  return p;
}

std::array<uint8_t, kPointBytes> Point::encode() const {
  std::array<uint8_t, kPointBytes> out{};
  if (EC_POINT_is_at_infinity(ctx().group, pt_.get())) return out;
  if (EC_POINT_point2oct(ctx().group, pt_.get(), POINT_CONVERSION_COMPRESSED,
                         out.data(), out.size(), tls_bn_ctx()) != kPointBytes)
    backend_fail("point2oct");
  return out;
}

Point Point::operator+(const Point& o) const {
  Point r(new_point());
  if (EC_POINT_add(ctx().group, r.pt_.get(), pt_.get(), o.pt_.get(),
                   tls_bn_ctx()) != 1)
    backend_fail("point add");
  return r;
}

Point Point::operator-(const Point& o) const {
  Point neg_o(o);
  if (EC_POINT_invert(ctx().group, neg_o.pt_.get(), tls_bn_ctx()) != 1)
    backend_fail("point invert");
  return *this + neg_o;
}

Point Point::mul(const Scalar& s) const {
  Point r(new_point());
  if (EC_POINT_mul(ctx().group, r.pt_.get(), nullptr, pt_.get(), s.bn(),
                   tls_bn_ctx()) != 1)
    backend_fail("point mul");
  return r;
}

bool Point::is_identity() const {
  return EC_POINT_is_at_infinity(ctx().group, pt_.get()) == 1;
}

bool Point::operator==(const Point& o) const {
  return EC_POINT_cmp(ctx().group, pt_.get(), o.pt_.get(), tls_bn_ctx()) == 0;
}

Point multiexp_unchecked(std::span<const Point> points,
                         std::span<const Scalar> scalars) {
  if (points.size() != scalars.size())
    throw std::invalid_argument("multiexp: length mismatch");
  Point r(new_point());
  if (points.empty()) {
    EC_POINT_set_to_infinity(ctx().group, r.pt_.get());
    return r;
  }
  std::vector<const EC_POINT*> ps(points.size());
  std::vector<const BIGNUM*> ss(points.size());
  for (std::size_t i = 0; i < points.size(); i++) {
    ps[i] = points[i].raw();
    ss[i] = scalars[i].bn();
  }
  if (EC_POINTs_mul(ctx().group, r.pt_.get(), nullptr, points.size(),
                    ps.data(), ss.data(), tls_bn_ctx()) != 1)
    backend_fail("multiexp");
  return r;
}

Point multiexp(std::span<const Point> points, std::span<const Scalar> scalars) {
  if (points.empty()) throw std::invalid_argument("multiexp: empty input");
  if (points.size() != scalars.size())
    throw std::invalid_argument("multiexp: length mismatch");
  return multiexp_unchecked(points, scalars);
}

Point hash_to_group(std::span<const uint8_t> msg) {
  uint8_t uniform[96];
  expand_message_xmd(msg, kHashToGroupDst, uniform);
  BIGNUM *u0 = new_bn(), *u1 = new_bn(), *big = new_bn();
  BN_CTX* bc = tls_bn_ctx();
  BN_bin2bn(uniform, 48, big);
  BN_nnmod(u0, big, ctx().field_p, bc);
  BN_bin2bn(uniform + 48, 48, big);
  BN_nnmod(u1, big, ctx().field_p, bc);

  Point q0(new_point()), q1(new_point());
  map_to_curve_sswu(u0, const_cast<EC_POINT*>(q0.raw()));
  map_to_curve_sswu(u1, const_cast<EC_POINT*>(q1.raw()));
  BN_free(u0); BN_free(u1); BN_free(big);
  return q0 + q1;
}

// ---------------------------------------------------------------------------
// parameter derivation

namespace {

Point derive_generator(char ns, uint64_t index, std::string_view label) {
  Bytes msg;
  msg.push_back(static_cast<uint8_t>(ns));
  for (int i = 0; i < 8; i++)
    msg.push_back(static_cast<uint8_t>(index >> (8 * i)));
  msg.insert(msg.end(), label.begin(), label.end());
  return hash_to_group(msg);
}

}  // namespace

CommitParams derive_params(std::string_view label, uint32_t n) {
  if (n == 0) throw std::invalid_argument("derive_params: n must be >= 1");
  if (label.empty()) throw std::invalid_argument("derive_params: empty label");

  CommitParams p;
  p.label = std::string(label);
  p.n = n;
  p.g = derive_generator('C', 0, label);
  p.h = derive_generator('C', 1, label);
  p.gvec.reserve(n);
  p.hvec.reserve(n);
  for (uint32_t i = 0; i < n; i++)
    p.gvec.push_back(derive_generator('C', 2 + i, label));
  for (uint32_t i = 0; i < n; i++)
    p.hvec.push_back(derive_generator('C', 2 + n + i, label));
  for (uint32_t i = 0; i < kMaxRangeBits; i++)
    p.range_g.push_back(derive_generator('R', i, label));
  for (uint32_t i = 0; i < kMaxRangeBits; i++)
    p.range_h.push_back(derive_generator('R', kMaxRangeBits + i, label));

  // Iterated basis [g_n, g_1, ..., g_{n-1}] and basis products; both are
  // recomputable by any verifier from the public generators.
  p.giter.reserve(n);
  p.giter.push_back(p.gvec[n - 1]);
  for (uint32_t i = 0; i + 1 < n; i++) p.giter.push_back(p.gvec[i]);
  p.g_prod = p.gvec[0];
  p.h_prod = p.hvec[0];
  for (uint32_t i = 1; i < n; i++) {
    p.g_prod = p.g_prod + p.gvec[i];
    p.h_prod = p.h_prod + p.hvec[i];
  }

  // Nothing-up-my-sleeve sanity: all generators distinct, none the identity.
  auto check = [set = std::unordered_set<std::string>()](const Point& pt) mutable {
    if (pt.is_identity())
      throw std::runtime_error("derive_params: identity generator");
    auto enc = pt.encode();
    if (!set.emplace(reinterpret_cast<const char*>(enc.data()), enc.size()).second)
      throw std::runtime_error("derive_params: generator collision");
  };
  check(p.g);
  check(p.h);
  for (const Point& pt : p.gvec) check(pt);
  for (const Point& pt : p.hvec) check(pt);
  for (const Point& pt : p.range_g) check(pt);
  for (const Point& pt : p.range_h) check(pt);
  return p;
}

}  // namespace zksvm

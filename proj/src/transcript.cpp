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

#include "zksvm/transcript.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <stdexcept>

namespace zksvm {
namespace {

// state' = SHA-512(state || frame). Frames are length-prefixed and tagged,
// so distinct absorption sequences can never collide byte-wise.
constexpr uint8_t kTagAbsorb = 'A';
constexpr uint8_t kTagChallenge = 'C';
constexpr uint8_t kTagRatchet = 'R';

void le64(uint64_t v, uint8_t out[8]) {
  for (int i = 0; i < 8; i++) out[i] = static_cast<uint8_t>(v >> (8 * i));
}

class Sha512 {
 public:
  Sha512() : ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr || EVP_DigestInit_ex(ctx_, EVP_sha512(), nullptr) != 1)
      throw std::runtime_error("transcript: digest init");
  }
  ~Sha512() { EVP_MD_CTX_free(ctx_); }
  Sha512& update(std::span<const uint8_t> d) {
    if (EVP_DigestUpdate(ctx_, d.data(), d.size()) != 1)
      throw std::runtime_error("transcript: digest update");
    return *this;
  }
  Sha512& update_u64(uint64_t v) {
    uint8_t buf[8];
    le64(v, buf);
    return update({buf, 8});
  }
  Sha512& update_str(std::string_view s) {
    return update({reinterpret_cast<const uint8_t*>(s.data()), s.size()});
  }
  void final(std::span<uint8_t, 64> out) {
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_, out.data(), &len) != 1 || len != 64)
      throw std::runtime_error("transcript: digest final");
  }

 private:
  EVP_MD_CTX* ctx_;
};

}  // namespace

Transcript::Transcript(std::string_view protocol_label) {
  Sha512 h;
  h.update_str("zksvm/transcript/v1");
  h.update_u64(protocol_label.size());
  h.update_str(protocol_label);
  h.final(state_);
}

void Transcript::absorb(std::string_view label, std::span<const uint8_t> data) {
  const uint8_t tag = kTagAbsorb;
  Sha512 h;
  h.update(state_)
      .update({&tag, 1})
      .update_u64(label.size())
      .update_str(label)
      .update_u64(data.size())
      .update(data);
  h.final(state_);
}

void Transcript::absorb_u64(std::string_view label, uint64_t v) {
  uint8_t buf[8];
  le64(v, buf);
  absorb(label, {buf, 8});
}

void Transcript::absorb_scalar(std::string_view label, const Scalar& s) {
  absorb(label, s.encode());
}

void Transcript::absorb_point(std::string_view label, const Point& p) {
  absorb(label, p.encode());
}

Scalar Transcript::challenge_scalar(std::string_view label) {
  if (!injected_.empty()) {
    Scalar c = injected_.front();
    injected_.pop_front();
    absorb("zksvm/injected-challenge", c.encode());
    return c;
  }
  for (uint64_t retry = 0;; retry++) {
    const uint8_t tag = kTagChallenge;
    std::array<uint8_t, 64> out;
    Sha512 h;
    h.update(state_)
        .update({&tag, 1})
        .update_u64(label.size())
        .update_str(label)
        .update_u64(retry);
    h.final(out);
    Scalar c = Scalar::reduce_wide(out);
    if (c.is_zero()) continue;  // challenges live in Z_p^*
    const uint8_t rtag = kTagRatchet;
    Sha512 r;
    r.update(state_).update({&rtag, 1}).update(out);
    r.final(state_);
    return c;
  }
}

void Transcript::bind_server_challenge(std::span<const uint8_t> nonce) {
  if (nonce.size() < 16)
    throw std::invalid_argument("server challenge nonce must be >= 16 bytes");
  absorb("zksvm/server-challenge", nonce);
}

Transcript Transcript::fork(std::string_view label, uint64_t index) const {
  Transcript t = *this;
  t.injected_.clear();
  t.absorb_u64(label, index);
  return t;
}

void Transcript::inject_challenge(const Scalar& c) { injected_.push_back(c); }

}  // namespace zksvm

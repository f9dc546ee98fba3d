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

#include <chrono>
#include <map>
#include <memory>
#include <mutex>

#include "zksvm/wire.hpp"

// Challenge-issuing verifier service. GET /challenge hands out a single-use
// 32-byte nonce with a TTL; POST /attest takes a bundle envelope, enforces
// nonce freshness (replays and expired nonces are 401s), and returns the
// verification verdict. The nonce table is in-memory; verification itself
// is read-only over the shared parameters and model.

namespace zksvm {

inline constexpr std::size_t kNonceBytes = 32;

class NonceRegistry {
 public:
  explicit NonceRegistry(std::chrono::seconds ttl) : ttl_(ttl) {}

  Bytes issue(RandomSource& rng);

  enum class Claim { Ok, Unknown, Expired, Replayed };
  // Single-use: the first claim consumes the nonce whatever the verdict.
  Claim claim(std::span<const uint8_t> nonce);

  std::chrono::seconds ttl() const { return ttl_; }
  std::size_t live_count();

 private:
  using Clock = std::chrono::steady_clock;
  struct Entry {
    Clock::time_point expiry;
    bool used = false;
  };
  void evict_expired_locked();

  std::chrono::seconds ttl_;
  std::mutex mu_;
  std::map<Bytes, Entry> entries_;
};

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 0;  // 0 = pick a free port
  std::chrono::seconds nonce_ttl{120};
};

// HTTP front end. start() binds and serves on a background thread.
class AttestationService {
 public:
  AttestationService(CommitParams params, SvmModel model, ServiceConfig cfg);
  ~AttestationService();

  bool start();
  void stop();
  int port() const { return port_; }
  NonceRegistry& nonces() { return registry_; }

 private:
  struct Impl;
  CommitParams params_;
  SvmModel model_;
  ServiceConfig cfg_;
  NonceRegistry registry_;
  SystemRandom rng_;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
};

}  // namespace zksvm

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

#include "zksvm/service.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>
#include <thread>

namespace zksvm {

using json = nlohmann::json;

Bytes NonceRegistry::issue(RandomSource& rng) {
  Bytes nonce(kNonceBytes);
  rng.fill(nonce.data(), nonce.size());
  std::lock_guard<std::mutex> lock(mu_);
  evict_expired_locked();
  entries_[nonce] = Entry{Clock::now() + ttl_, false};
  return nonce;
}

NonceRegistry::Claim NonceRegistry::claim(std::span<const uint8_t> nonce) {
  Bytes key(nonce.begin(), nonce.end());
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return Claim::Unknown;
  if (it->second.used) return Claim::Replayed;
  if (Clock::now() > it->second.expiry) {
    entries_.erase(it);
    return Claim::Expired;
  }
  it->second.used = true;
  return Claim::Ok;
}

std::size_t NonceRegistry::live_count() {
  std::lock_guard<std::mutex> lock(mu_);
  evict_expired_locked();
  return entries_.size();
}

void NonceRegistry::evict_expired_locked() {
  const auto now = Clock::now();
  for (auto it = entries_.begin(); it != entries_.end();) {
    // keep used entries until expiry so replays answer "replayed", not
    // "unknown"
    if (now > it->second.expiry)
      it = entries_.erase(it);
    else
      ++it;
  }
}

struct AttestationService::Impl {
  httplib::Server server;
  std::thread thread;
};

AttestationService::AttestationService(CommitParams params, SvmModel model,
                                       ServiceConfig cfg)
    : params_(std::move(params)),
      model_(std::move(model)),
      cfg_(std::move(cfg)),
      registry_(cfg_.nonce_ttl),
      impl_(std::make_unique<Impl>()) {
  impl_->server.Get("/challenge", [this](const httplib::Request&,
                                         httplib::Response& res) {
    const Bytes nonce = registry_.issue(rng_);
    json body;
    body["nonce"] = hex_encode(nonce);
    body["expires_in"] = static_cast<int64_t>(registry_.ttl().count());
    res.set_content(body.dump(), "application/json");
  });

  impl_->server.Post("/attest", [this](const httplib::Request& req,
                                       httplib::Response& res) {
    auto reply = [&](int status, json body) {
      res.status = status;
      res.set_content(body.dump(), "application/json");
    };
    BundleEnvelope env;
    try {
      env = decode_envelope(
          {reinterpret_cast<const uint8_t*>(req.body.data()),
           req.body.size()});
    } catch (const DecodeError& e) {
      return reply(400, json{{"error", e.what()}});
    }
    if (env.label != params_.label || env.n != params_.n)
      return reply(400, json{{"error", "envelope parameters do not match"}});

    switch (registry_.claim(env.nonce)) {
      case NonceRegistry::Claim::Unknown:
        return reply(401, json{{"error", "unknown nonce"}});
      case NonceRegistry::Claim::Expired:
        return reply(401, json{{"error", "expired nonce"}});
      case NonceRegistry::Claim::Replayed:
        return reply(401, json{{"error", "replay"}});
      case NonceRegistry::Claim::Ok:
        break;
    }

    const VerifyResult vr =
        verify_bundle(params_, model_, env.bundle, env.nonce);
    json body;
    body["result"] = vr.accepted ? "accept" : "reject";
    body["reason"] = vr.reason;
    body["score"] = vr.score;
    body["sigmoid"] = vr.sigmoid;
    reply(200, std::move(body));
  });
}

AttestationService::~AttestationService() { stop(); }

bool AttestationService::start() {
  if (cfg_.port == 0) {
    port_ = impl_->server.bind_to_any_port(cfg_.host);
    if (port_ <= 0) return false;
  } else {
    if (!impl_->server.bind_to_port(cfg_.host, cfg_.port)) return false;
    port_ = cfg_.port;
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return true;
}

void AttestationService::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
  if (impl_ && impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace zksvm

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

#include <cstring>
#include <span>
#include <string>
#include <string_view>

#include "zksvm/errors.hpp"
#include "zksvm/group.hpp"

namespace zksvm {

// Little-endian byte writer/reader for the wire formats. Reader throws
// DecodeError on truncation; decode never silently returns "false".
class ByteWriter {
 public:
  Bytes take() { return std::move(buf_); }
  const Bytes& bytes() const { return buf_; }

  void u8(uint8_t v) { buf_.push_back(v); }
  void u16(uint16_t v) {
    buf_.push_back(static_cast<uint8_t>(v));
    buf_.push_back(static_cast<uint8_t>(v >> 8));
  }
  void u32(uint32_t v) {
    for (int i = 0; i < 4; i++) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void u64(uint64_t v) {
    for (int i = 0; i < 8; i++) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void raw(std::span<const uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
  void var_bytes(std::span<const uint8_t> b) {
    u32(static_cast<uint32_t>(b.size()));
    raw(b);
  }
  void var_string(std::string_view s) {
    var_bytes({reinterpret_cast<const uint8_t*>(s.data()), s.size()});
  }
  void scalar(const Scalar& s) {
    raw(s.encode());
    scalars_++;
  }
  void point(const Point& p) {
    raw(p.encode());
    points_++;
  }

  // Element accounting for the envelope size header.
  std::size_t points_written() const { return points_; }
  std::size_t scalars_written() const { return scalars_; }

 private:
  Bytes buf_;
  std::size_t points_ = 0;
  std::size_t scalars_ = 0;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  bool done() const { return pos_ == data_.size(); }
  std::size_t remaining() const { return data_.size() - pos_; }

  uint8_t u8() { return take(1)[0]; }
  uint16_t u16() {
    auto b = take(2);
    return static_cast<uint16_t>(b[0] | (b[1] << 8));
  }
  uint32_t u32() {
    auto b = take(4);
    uint32_t v = 0;
    for (int i = 3; i >= 0; i--) v = (v << 8) | b[i];
    return v;
  }
  uint64_t u64() {
    auto b = take(8);
    uint64_t v = 0;
    for (int i = 7; i >= 0; i--) v = (v << 8) | b[i];
    return v;
  }
  Bytes var_bytes() {
    const uint32_t len = u32();
    auto b = take(len);
    return Bytes(b.begin(), b.end());
  }
  std::string var_string() {
    Bytes b = var_bytes();
    return std::string(b.begin(), b.end());
  }
  Scalar scalar() {
    scalars_++;
    return Scalar::decode(take(kScalarBytes));
  }
  Point point() {
    points_++;
    return Point::decode(take(kPointBytes));
  }

  std::size_t points_read() const { return points_; }
  std::size_t scalars_read() const { return scalars_; }

  void expect_done(const char* what) const {
    if (!done()) throw DecodeError(std::string(what) + ": trailing bytes");
  }

 private:
  std::span<const uint8_t> take(std::size_t len) {
    if (remaining() < len) throw DecodeError("truncated input");
    auto out = data_.subspan(pos_, len);
    pos_ += len;
    return out;
  }

  std::span<const uint8_t> data_;
  std::size_t pos_ = 0;
  std::size_t points_ = 0;
  std::size_t scalars_ = 0;
};

}  // namespace zksvm

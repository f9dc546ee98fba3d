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
#include <string>
#include <vector>

#include "zksvm/svm.hpp"

// Converts raw 6-channel IMU windows (accelerometer + gyroscope, x/y/z)
// into the 12 fixed-point integer vectors the prover commits to. The
// window covers [touch_start - 50 ms, touch_end + 250 ms] and splits at
// finger release.

namespace zksvm {

struct SensorSample {
  double t_ms = 0;
  std::array<double, 6> ch{};  // ax, ay, az, gx, gy, gz
};

struct SensorWindow {
  std::vector<SensorSample> samples;  // strictly increasing timestamps
  double touch_start_ms = 0;
  double release_ms = 0;
  double touch_end_ms = 0;
};

// Throws std::invalid_argument when timestamps are not strictly increasing
// or the event ordering is inconsistent.
void validate_window(const SensorWindow& w);

// Partition at finger release: before = t < release, after = t >= release.
// Both segments must be nonempty; the release must lie inside the sampled
// range.
struct SegmentedWindow {
  std::vector<SensorSample> before;
  std::vector<SensorSample> after;
};
SegmentedWindow segment_window(const SensorWindow& w);

// Fixed-point encoding: entry = round((sample + offset) * 10^frac_digits),
// padded to length n by repeating the final value (zeros would distort the
// mean and variance). Violations raise BoundError.
struct EncodingConfig {
  double offset = 32.0;
  uint32_t frac_digits = 4;
  uint32_t bits = 20;  // entries stay below 2^bits so n^3 sigma^2 < 2^62
};

std::vector<int64_t> encode_fixed_point(std::span<const double> samples,
                                        const EncodingConfig& config,
                                        uint32_t n);

// The 12 committed vectors in the canonical (sensor, axis, segment) order:
// index = sensor*6 + axis*2 + segment.
struct EncodedVectorSet {
  uint32_t n = 0;
  EncodingConfig config;
  std::array<std::vector<int64_t>, kVectorCount> vectors;
};

EncodedVectorSet build_vector_set(const SensorWindow& w, const SvmModel& model);

// Text wire format (see README / CLI help): an optional leading comment
// block, one header line "touch_start,release,touch_end", then one line
// per sample "timestamp,ax,ay,az,gx,gy,gz".
SensorWindow parse_window_text(const std::string& text);
std::string window_to_text(const SensorWindow& w);
SensorWindow load_window_file(const std::string& path);

// Synthetic windows for demos and tests.
enum class WindowPreset { Human, Rest };
SensorWindow synthesize_window(WindowPreset preset, uint64_t seed,
                               double rate_hz = 250.0,
                               double press_ms = 80.0);

}  // namespace zksvm

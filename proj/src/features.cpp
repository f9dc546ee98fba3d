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

#include "zksvm/features.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zksvm {
namespace {

std::vector<double> split_csv_doubles(const std::string& line,
                                      std::size_t expected) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(field, &used);
    } catch (const std::exception&) {
      throw DecodeError("sensor window: bad number '" + field + "'");
    }
    while (used < field.size() &&
           (field[used] == ' ' || field[used] == '\r' || field[used] == '\t'))
      used++;
    if (used != field.size())
      throw DecodeError("sensor window: bad number '" + field + "'");
    out.push_back(v);
  }
  if (out.size() != expected)
    throw DecodeError("sensor window: expected " + std::to_string(expected) +
                      " fields, got " + std::to_string(out.size()));
  return out;
}

// Roughly gaussian, deterministic noise (sum of four uniforms).
double noise(RandomSource& rng, double sigma) {
  double acc = 0;
  for (int i = 0; i < 4; i++) {
    uint32_t u;
    rng.fill(reinterpret_cast<uint8_t*>(&u), 4);
    acc += static_cast<double>(u) / 4294967296.0;
  }
  return (acc - 2.0) * sigma * std::sqrt(3.0);
}

}  // namespace

void validate_window(const SensorWindow& w) {
  if (w.samples.size() < 2)
    throw std::invalid_argument("sensor window: need at least two samples");
  for (std::size_t i = 1; i < w.samples.size(); i++)
    if (!(w.samples[i].t_ms > w.samples[i - 1].t_ms))
      throw std::invalid_argument(
          "sensor window: timestamps must be strictly increasing");
  if (!(w.touch_start_ms <= w.release_ms && w.release_ms <= w.touch_end_ms))
    throw std::invalid_argument("sensor window: inconsistent event order");
}

SegmentedWindow segment_window(const SensorWindow& w) {
  validate_window(w);
  if (!(w.release_ms > w.samples.front().t_ms &&
        w.release_ms <= w.samples.back().t_ms))
    throw std::invalid_argument(
        "sensor window: release timestamp outside the sampled range");
  SegmentedWindow out;
  for (const SensorSample& s : w.samples)
    (s.t_ms < w.release_ms ? out.before : out.after).push_back(s);
  if (out.before.empty() || out.after.empty())
    throw std::invalid_argument("sensor window: empty segment");
  return out;
}

std::vector<int64_t> encode_fixed_point(std::span<const double> samples,
                                        const EncodingConfig& config,
                                        uint32_t n) {
  if (samples.empty())
    throw std::invalid_argument("encode: no samples");
  if (samples.size() > n)
    throw std::invalid_argument("encode: more samples than vector length");
  double scale = 1.0;
  for (uint32_t i = 0; i < config.frac_digits; i++) scale *= 10.0;
  const int64_t limit = int64_t{1} << config.bits;

  std::vector<int64_t> out;
  out.reserve(n);
  for (double s : samples) {
    const double shifted = s + config.offset;
    if (shifted < 0)
      throw BoundError("encode: sample negative after offset");
    const int64_t v = llround(shifted * scale);
    if (v >= limit)
      throw BoundError("encode: sample exceeds 2^" +
                       std::to_string(config.bits));
    out.push_back(v);
  }
  // pad with the final value repeated
  while (out.size() < n) out.push_back(out.back());
  return out;
}

EncodedVectorSet build_vector_set(const SensorWindow& w,
                                  const SvmModel& model) {
  const SegmentedWindow seg = segment_window(w);
  EncodedVectorSet out;
  out.n = model.n;
  for (std::size_t sensor = 0; sensor < 2; sensor++) {
    for (std::size_t axis = 0; axis < 3; axis++) {
      const std::size_t channel = sensor * 3 + axis;
      for (std::size_t segment = 0; segment < 2; segment++) {
        const auto& src = segment == 0 ? seg.before : seg.after;
        std::vector<double> values;
        values.reserve(src.size());
        for (const SensorSample& s : src) values.push_back(s.ch[channel]);
        out.vectors[sensor * 6 + axis * 2 + segment] =
            encode_fixed_point(values, out.config, model.n);
      }
    }
  }
  return out;
}

SensorWindow parse_window_text(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  SensorWindow w;
  bool have_header = false;
  while (std::getline(ss, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      const auto ev = split_csv_doubles(line, 3);
      w.touch_start_ms = ev[0];
      w.release_ms = ev[1];
      w.touch_end_ms = ev[2];
      have_header = true;
      continue;
    }
    const auto rec = split_csv_doubles(line, 7);
    SensorSample s;
    s.t_ms = rec[0];
    for (int i = 0; i < 6; i++) s.ch[i] = rec[1 + i];
    w.samples.push_back(s);
  }
  if (!have_header) throw DecodeError("sensor window: missing event header");
  try {
    validate_window(w);
  } catch (const std::invalid_argument& e) {
    throw DecodeError(e.what());
  }
  return w;
}

std::string window_to_text(const SensorWindow& w) {
  std::ostringstream os;
  os.precision(10);
  os << "# touch_start_ms,release_ms,touch_end_ms then"
     << " timestamp,ax,ay,az,gx,gy,gz\n";
  os << w.touch_start_ms << ',' << w.release_ms << ',' << w.touch_end_ms
     << '\n';
  for (const SensorSample& s : w.samples) {
    os << s.t_ms;
    for (double c : s.ch) os << ',' << c;
    os << '\n';
  }
  return os.str();
}

SensorWindow load_window_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open sensor file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_window_text(buf.str());
}

SensorWindow synthesize_window(WindowPreset preset, uint64_t seed,
                               double rate_hz, double press_ms) {
  DeterministicRandom rng(seed);
  SensorWindow w;
  w.touch_start_ms = 1000.0;
  w.release_ms = w.touch_start_ms + press_ms;
  w.touch_end_ms = w.release_ms;
  const double t0 = w.touch_start_ms - 50.0;
  const double t1 = w.touch_end_ms + 250.0;
  const double dt = 1000.0 / rate_hz;

  const bool human = preset == WindowPreset::Human;
  const double acc_sigma = human ? 0.35 : 0.005;
  const double gyro_sigma = human ? 0.05 : 0.002;
  // touch impulses: a press bump and a release bump
  auto impulse = [&](double t, double center, double width) {
    const double d = (t - center) / width;
    return std::exp(-0.5 * d * d);
  };

  for (double t = t0; t <= t1 + 1e-9; t += dt) {
    SensorSample s;
    s.t_ms = t;
    double bump = 0.0;
    if (human)
      bump = 2.5 * impulse(t, w.touch_start_ms, 12.0) +
             1.5 * impulse(t, w.release_ms, 15.0);
    s.ch[0] = noise(rng, acc_sigma) + 0.3 * bump;
    s.ch[1] = noise(rng, acc_sigma) - 0.2 * bump;
    s.ch[2] = 9.81 + noise(rng, acc_sigma) + bump;
    s.ch[3] = noise(rng, gyro_sigma) + 0.02 * bump;
    s.ch[4] = noise(rng, gyro_sigma) + 0.015 * bump;
    s.ch[5] = noise(rng, gyro_sigma);
    w.samples.push_back(s);
  }
  return w;
}

}  // namespace zksvm

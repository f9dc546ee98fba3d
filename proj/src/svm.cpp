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

#include "zksvm/svm.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace zksvm {
namespace {

using json = nlohmann::json;

bool is_pow2(uint32_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Exact decimal: value = mantissa / 10^frac_digits.
struct Decimal {
  BigInt mantissa;
  uint32_t frac_digits = 0;
};

Decimal parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty decimal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    pos++;
  }
  Decimal d;
  bool any_digit = false;
  bool seen_dot = false;
  for (; pos < text.size(); pos++) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("malformed decimal: " + text);
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9')
      throw std::invalid_argument("malformed decimal: " + text);
    d.mantissa = d.mantissa * 10 + (c - '0');
    if (seen_dot) d.frac_digits++;
    any_digit = true;
  }
  if (!any_digit) throw std::invalid_argument("malformed decimal: " + text);
  if (negative) d.mantissa = -d.mantissa;
  return d;
}

BigInt pow10(uint32_t e) {
  BigInt r = 1;
  for (uint32_t i = 0; i < e; i++) r *= 10;
  return r;
}

// Floor division (round toward minus infinity).
BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Scalar scalar_from_bigint(const BigInt& v) {
  // |v| < 2^62 is validated by the callers; embed signed via i64.
  return Scalar::from_i64(static_cast<int64_t>(v));
}

constexpr int64_t kMaxQuantized = int64_t{1} << 62;

const char* kSensors[2] = {"acc", "gyro"};
const char* kAxes[3] = {"x", "y", "z"};
const char* kSegments[2] = {"before", "after"};
const char* kKinds[4] = {"avg", "std", "diff_avg", "diff_std"};

}  // namespace

std::string feature_name(std::size_t index) {
  const std::size_t vec = index / kFeaturesPerVector;
  const std::size_t kind = index % kFeaturesPerVector;
  std::ostringstream os;
  os << kSensors[vec / 6] << '_' << kAxes[(vec % 6) / 2] << '_'
     << kSegments[vec % 2] << '_' << kKinds[kind];
  return os.str();
}

BigInt quantize_weight(const std::string& weight, const std::string& scale,
                       uint32_t n, bool std_factor, uint32_t digits) {
  const Decimal w = parse_decimal(weight);
  const Decimal s = parse_decimal(scale);
  if (s.mantissa == 0) throw std::invalid_argument("zero normalisation scale");

  // value = w / (N_i * S) * 10^d = x / (y * sqrt_part)
  BigInt x = w.mantissa * pow10(digits + s.frac_digits);
  BigInt y = s.mantissa * pow10(w.frac_digits) * n;

  if (!std_factor) return fdiv(x, y);

  // N_i = n^{3/2} = n * sqrt(n); one factor of n is already in y.
  const BigInt root = boost::multiprecision::sqrt(BigInt(n));
  if (root * root == n) return fdiv(x, y * root);

  // Irrational denominator: |value| = |x| / (|y| sqrt(n)), and
  // floor(|value|) = isqrt(floor(x^2 / (y^2 n))). The value can never be an
  // integer, so the negative floor is -floor(|value|) - 1.
  if (x == 0) return 0;
  const bool negative = (x < 0) != (y < 0);
  const BigInt ax = abs(x), ay = abs(y);
  const BigInt t = boost::multiprecision::sqrt((ax * ax) / (ay * ay * n));
  return negative ? -t - 1 : t;
}

SetupResult setup(SvmModel model) {
  if (model.label.empty()) throw std::invalid_argument("setup: empty label");
  if (!is_pow2(model.n))
    throw std::invalid_argument("setup: n must be a power of two");
  if (model.digits < 1 || model.digits > 9)
    throw std::invalid_argument("setup: d must be in [1, 9]");
  if (model.features.size() != kFeatureCount)
    throw std::invalid_argument("setup: model needs 48 features");

  model.q_int.clear();
  model.q.clear();
  long double mean_fold = 0.0L;
  for (std::size_t i = 0; i < kFeatureCount; i++) {
    const FeatureParams& f = model.features[i];
    const BigInt qi = quantize_weight(f.weight, f.scale, model.n,
                                      feature_uses_std_factor(i), model.digits);
    if (qi >= kMaxQuantized || qi <= -kMaxQuantized)
      throw std::invalid_argument("setup: quantized weight exceeds bound");
    model.q_int.push_back(qi);
    model.q.push_back(scalar_from_bigint(qi));

    // The -M_i normalisation offsets touch no secret; they fold into the
    // public intercept.
    const long double mi = strtold(f.mean.c_str(), nullptr);
    const long double si = strtold(f.scale.c_str(), nullptr);
    const long double wi = strtold(f.weight.c_str(), nullptr);
    mean_fold += mi * wi / si;
  }
  const long double c = strtold(model.intercept.c_str(), nullptr);
  model.folded_intercept = static_cast<double>(c - mean_fold);

  SetupResult out{std::move(model), CommitParams{}};
  out.params = derive_params(out.model.label, out.model.n);
  return out;
}

ScoreEval evaluate_sigmoid(int64_t score, const SvmModel& model) {
  double scale = 1.0;
  for (uint32_t i = 0; i < model.digits; i++) scale *= 10.0;
  const double arg =
      model.folded_intercept + static_cast<double>(score) / scale;
  ScoreEval out;
  out.sigmoid = 1.0 / (1.0 + std::exp(-arg));
  out.human = out.sigmoid >= model.threshold;
  return out;
}

SvmModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DecodeError(std::string("model: bad JSON: ") + e.what());
  }
  try {
    if (j.at("format") != "zksvm-model" || j.at("version") != 1)
      throw DecodeError("model: unknown format/version");
    SvmModel m;
    m.label = j.at("label").get<std::string>();
    m.n = j.at("n").get<uint32_t>();
    m.digits = j.at("digits").get<uint32_t>();
    m.intercept = j.at("intercept").get<std::string>();
    m.threshold = j.at("threshold").get<double>();
    const auto& feats = j.at("features");
    if (!feats.is_array() || feats.size() != kFeatureCount)
      throw DecodeError("model: need exactly 48 features");
    for (std::size_t i = 0; i < kFeatureCount; i++) {
      FeatureParams f;
      f.name = feats[i].at("name").get<std::string>();
      if (f.name != feature_name(i))
        throw DecodeError("model: feature " + std::to_string(i) +
                          " out of order, expected " + feature_name(i));
      f.mean = feats[i].at("mean").get<std::string>();
      f.scale = feats[i].at("scale").get<std::string>();
      f.weight = feats[i].at("weight").get<std::string>();
      m.features.push_back(std::move(f));
    }
    return m;
  } catch (const json::exception& e) {
    throw DecodeError(std::string("model: schema: ") + e.what());
  }
}

std::string model_to_json(const SvmModel& model) {
  json j;
  j["format"] = "zksvm-model";
  j["version"] = 1;
  j["label"] = model.label;
  j["n"] = model.n;
  j["digits"] = model.digits;
  j["intercept"] = model.intercept;
  j["threshold"] = model.threshold;
  j["features"] = json::array();
  for (const FeatureParams& f : model.features) {
    j["features"].push_back({{"name", f.name},
                             {"mean", f.mean},
                             {"scale", f.scale},
                             {"weight", f.weight}});
  }
  return j.dump(2) + "\n";
}

SvmModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

SvmModel make_demo_model(uint32_t n, uint32_t digits, std::string label) {
  SvmModel m;
  m.label = std::move(label);
  m.n = n;
  m.digits = digits;
  m.intercept = "-5.0";
  m.threshold = 0.5;
  for (std::size_t i = 0; i < kFeatureCount; i++) {
    FeatureParams f;
    f.name = feature_name(i);
    const bool gyro = (i / kFeaturesPerVector) >= 6;
    switch (feature_kind(i)) {
      case FeatureKind::Avg:
        f.mean = gyro ? "320000" : "330000";
        f.scale = "10000";
        f.weight = gyro ? "-0.02" : "0.02";
        break;
      case FeatureKind::Std:
        f.mean = "500";
        f.scale = "1000";
        f.weight = "0.25";
        break;
      case FeatureKind::DiffAvg:
        f.mean = "0";
        f.scale = "100";
        f.weight = gyro ? "-0.01" : "0.01";
        break;
      case FeatureKind::DiffStd:
        f.mean = "400";
        f.scale = "1000";
        f.weight = "0.25";
        break;
    }
    m.features.push_back(std::move(f));
  }
  return m;
}

}  // namespace zksvm

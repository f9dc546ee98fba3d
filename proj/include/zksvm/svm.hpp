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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "zksvm/group.hpp"

// Public SVM model parameters and their quantized integer weights
// q_i = floor(w_i / (N_i * S_i) * 10^d), with N_i = n for average features
// and n^{3/2} for standard-deviation features. Everything here is public;
// weights, scales and means travel as decimal strings so the quantization
// is exact on every platform.

namespace zksvm {

using BigInt = boost::multiprecision::cpp_int;

// 12 input vectors: 2 sensors x 3 axes x 2 segments, each contributing
// average, standard deviation, and the same two statistics of the
// consecutive-difference vector. The order is normative; q_i indices and
// commitment positions align to it.
inline constexpr std::size_t kVectorCount = 12;
inline constexpr std::size_t kFeaturesPerVector = 4;
inline constexpr std::size_t kFeatureCount =
    kVectorCount * kFeaturesPerVector;

enum class FeatureKind : uint8_t { Avg = 0, Std = 1, DiffAvg = 2, DiffStd = 3 };

inline FeatureKind feature_kind(std::size_t index) {
  return static_cast<FeatureKind>(index % kFeaturesPerVector);
}
// Standard-deviation features carry the n^{3/2} factor.
inline bool feature_uses_std_factor(std::size_t index) {
  const FeatureKind k = feature_kind(index);
  return k == FeatureKind::Std || k == FeatureKind::DiffStd;
}
// Canonical feature name, e.g. "acc_x_before_std".
std::string feature_name(std::size_t index);

struct FeatureParams {
  std::string name;
  std::string mean;    // M_i
  std::string scale;   // S_i
  std::string weight;  // w_i
};

struct SvmModel {
  std::string label;        // commitment-parameter domain label
  uint32_t n = 0;           // samples per vector (power of two)
  uint32_t digits = 0;      // d: decimal digits preserved by quantization
  std::string intercept;    // c
  double threshold = 0.5;   // human iff sigmoid >= threshold
  std::vector<FeatureParams> features;  // kFeatureCount entries

  // Derived by setup()/load: exact quantized weights, their group
  // embeddings, and the intercept with the -M_i offsets folded in.
  std::vector<BigInt> q_int;
  std::vector<Scalar> q;
  double folded_intercept = 0.0;
};

// Exact floor of w / (N_i * S) * 10^d. For non-square n the n^{3/2}
// denominator is irrational; the floor is still computed exactly via
// floor(x / (y*sqrt(n))) = isqrt(floor(x^2 / (y^2 n))) with sign handling.
BigInt quantize_weight(const std::string& weight, const std::string& scale,
                       uint32_t n, bool std_factor, uint32_t digits);

// Validates the model, computes q_i / folded intercept, and derives the
// commitment parameters for (label, n).
struct SetupResult {
  SvmModel model;
  CommitParams params;
};
SetupResult setup(SvmModel model);

// Sigmoid over the recovered weighted sum: the verifier maps the opened
// integer Score back through s = 1 / (1 + e^{-(c' + Score/10^d)}).
struct ScoreEval {
  double sigmoid = 0.0;
  bool human = false;
};
ScoreEval evaluate_sigmoid(int64_t score, const SvmModel& model);

// JSON schema (see README): strings for exact decimal values, number for
// the threshold. Throws DecodeError on malformed input; the feature list
// must match the canonical order.
SvmModel model_from_json(const std::string& text);
std::string model_to_json(const SvmModel& model);
SvmModel load_model_file(const std::string& path);

// A hand-tuned demonstration model (training is out of scope): separates
// the synthetic "human" and "rest" window presets.
SvmModel make_demo_model(uint32_t n = 128, uint32_t digits = 9,
                         std::string label = "zksvm-demo-v1");

}  // namespace zksvm

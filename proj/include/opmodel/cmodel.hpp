// Copyright 2026 The opmodel Authors
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opmodel/linalg.hpp"
#include "opmodel/operators.hpp"

namespace opmodel::classical {

/// Subset of an outcome set of at most 63 points, bit k = outcome k.
using OutcomeSet = std::uint64_t;
inline constexpr std::size_t kMaxOutcomes = 63;

inline OutcomeSet all_outcomes(std::size_t m) {
  return m >= 64 ? ~OutcomeSet{0} : (OutcomeSet{1} << m) - 1;
}

class FiniteOutcomeSpace {
 public:
  /// Labels default to "1".."n".
  explicit FiniteOutcomeSpace(std::size_t n,
                              std::vector<std::string> labels = {});

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
};

/// Probability vector. Components in [-tol, 0) are clamped to zero and the
/// clamp is recorded.
class ClassicalState {
 public:
  explicit ClassicalState(std::vector<double> p);

  static ClassicalState vertex(std::size_t n, std::size_t k);
  static ClassicalState uniform(std::size_t n);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t k) const { return p_[k]; }
  std::span<const double> values() const { return p_; }
  bool clamped() const { return clamped_; }

 private:
  std::vector<double> p_;
  bool clamped_ = false;
};

/// [0,1]-valued function on the outcome set.
class ClassicalEffect {
 public:
  explicit ClassicalEffect(std::vector<double> a);

  static ClassicalEffect unit(std::size_t n);
  static ClassicalEffect zero(std::size_t n);
  static ClassicalEffect indicator(std::size_t n, OutcomeSet x);

  std::size_t size() const { return a_.size(); }
  double operator[](std::size_t k) const { return a_[k]; }
  std::span<const double> values() const { return a_; }

 private:
  std::vector<double> a_;
};

/// Row-stochastic matrix: row = source point, column = outcome.
class MarkovKernel {
 public:
  explicit MarkovKernel(RealMatrix k);

  std::size_t sources() const { return k_.rows(); }
  std::size_t outcomes() const { return k_.cols(); }
  double operator()(std::size_t src, std::size_t out) const {
    return k_(src, out);
  }
  const RealMatrix& matrix() const { return k_; }
  /// Every entry in {0, 1}.
  bool is_deterministic() const;

 private:
  RealMatrix k_;
};

/// Point function F: source index -> outcome index.
struct SharpRandomVariable {
  std::vector<std::size_t> map;
};

double classical_pair(const ClassicalState& p, const ClassicalEffect& a);

/// q_j = sum_k p_k K_kj
ClassicalState kernel_pushforward(const MarkovKernel& k,
                                  const ClassicalState& p);

/// a_k = sum_{j in X} K_kj
ClassicalEffect kernel_effect(const MarkovKernel& k, OutcomeSet x);

/// Dirac rows K_kj = [F(k) == j].
MarkovKernel kernel_from_function(const SharpRandomVariable& f,
                                  std::size_t outcome_count);

/// Kernel of "apply first, then second".
MarkovKernel compose(const MarkovKernel& first, const MarkovKernel& second);

ClassicalEffect classical_complement(const ClassicalEffect& a);
/// a + b when every component stays <= 1 + tol.
std::optional<ClassicalEffect> classical_osum(const ClassicalEffect& a,
                                              const ClassicalEffect& b);

/// Componentwise a <= b.
bool classical_leq(const ClassicalEffect& a, const ClassicalEffect& b,
                   double tol = kTol);

struct WeightedVertex {
  std::size_t vertex;
  double weight;
};

/// The unique simplex decomposition; zero weights are omitted.
std::vector<WeightedVertex> vertex_decomposition(const ClassicalState& p);

}  // namespace opmodel::classical

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

#include "opmodel/cmodel.hpp"

#include <algorithm>
#include <cmath>

namespace opmodel::classical {

namespace {

void check_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": sizes " +
                            std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

FiniteOutcomeSpace::FiniteOutcomeSpace(std::size_t n,
                                       std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (n == 0) throw InvalidInput("outcome space must be nonempty");
  if (labels_.empty())
    for (std::size_t k = 1; k <= n; ++k) labels_.push_back(std::to_string(k));
  if (labels_.size() != n) throw InvalidInput("label count differs from n");
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("outcome labels must be distinct");
}

ClassicalState::ClassicalState(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw InvalidInput("classical state must be nonempty");
  double sum = 0.0;
  for (double& v : p_) {
    if (!std::isfinite(v) || v < -kTol)
      throw InvalidInput("negative or non-finite probability " +
                         std::to_string(v));
    if (v < 0.0) {
      v = 0.0;
      clamped_ = true;
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kTol)
    throw InvalidInput("probabilities sum to " + std::to_string(sum));
}

ClassicalState ClassicalState::vertex(std::size_t n, std::size_t k) {
  std::vector<double> p(n, 0.0);
  p.at(k) = 1.0;
  return ClassicalState(std::move(p));
}

ClassicalState ClassicalState::uniform(std::size_t n) {
  return ClassicalState(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ClassicalEffect::ClassicalEffect(std::vector<double> a) : a_(std::move(a)) {
  for (double v : a_)
    if (!std::isfinite(v) || v < -kTol || v > 1.0 + kTol)
      throw InvalidInput("effect value " + std::to_string(v) +
                         " outside [0,1]");
}

ClassicalEffect ClassicalEffect::unit(std::size_t n) {
  return ClassicalEffect(std::vector<double>(n, 1.0));
}

ClassicalEffect ClassicalEffect::zero(std::size_t n) {
  return ClassicalEffect(std::vector<double>(n, 0.0));
}

ClassicalEffect ClassicalEffect::indicator(std::size_t n, OutcomeSet x) {
  if (n < 64 && (x & ~all_outcomes(n)) != 0)
    throw InvalidInput("indicator set has points outside the outcome space");
  std::vector<double> a(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    if ((x >> k) & 1U) a[k] = 1.0;
  return ClassicalEffect(std::move(a));
}

MarkovKernel::MarkovKernel(RealMatrix k) : k_(std::move(k)) {
  if (k_.rows() == 0 || k_.cols() == 0)
    throw InvalidInput("Markov kernel must be nonempty");
  for (std::size_t i = 0; i < k_.rows(); ++i) {
    double s = 0.0;
    for (double v : k_.row(i)) {
      if (!std::isfinite(v) || v < -kTol || v > 1.0 + kTol)
        throw InvalidInput("kernel entry outside [0,1]");
      s += v;
    }
    if (std::abs(s - 1.0) > kTol)
      throw InvalidInput("kernel row " + std::to_string(i) + " sums to " +
                         std::to_string(s));
  }
}

bool MarkovKernel::is_deterministic() const {
  return std::all_of(k_.data().begin(), k_.data().end(),
                     [](double v) { return v == 0.0 || v == 1.0; });
}

double classical_pair(const ClassicalState& p, const ClassicalEffect& a) {
  check_size(p.size(), a.size(), "classical_pair");
  return dot(p.values(), a.values());
}

ClassicalState kernel_pushforward(const MarkovKernel& k,
                                  const ClassicalState& p) {
  check_size(k.sources(), p.size(), "kernel_pushforward");
  std::vector<double> q(k.outcomes(), 0.0);
  for (std::size_t j = 0; j < k.outcomes(); ++j)
    for (std::size_t s = 0; s < k.sources(); ++s) q[j] += p[s] * k(s, j);
  return ClassicalState(std::move(q));
}

ClassicalEffect kernel_effect(const MarkovKernel& k, OutcomeSet x) {
  const std::size_t m = k.outcomes();
  if (m > kMaxOutcomes || (x & ~all_outcomes(m)) != 0)
    throw InvalidInput("outcome subset is not contained in the outcome set");
  std::vector<double> a(k.sources(), 0.0);
  for (std::size_t s = 0; s < k.sources(); ++s)
    for (std::size_t j = 0; j < m; ++j)
      if ((x >> j) & 1U) a[s] += k(s, j);
  return ClassicalEffect(std::move(a));
}

MarkovKernel kernel_from_function(const SharpRandomVariable& f,
                                  std::size_t outcome_count) {
  RealMatrix k(f.map.size(), outcome_count);
  for (std::size_t s = 0; s < f.map.size(); ++s) {
    if (f.map[s] >= outcome_count)
      throw InvalidInput("random variable value " + std::to_string(f.map[s]) +
                         " outside the outcome range");
    k(s, f.map[s]) = 1.0;
  }
  return MarkovKernel(std::move(k));
}

MarkovKernel compose(const MarkovKernel& first, const MarkovKernel& second) {
  check_size(first.outcomes(), second.sources(), "compose");
  return MarkovKernel(first.matrix() * second.matrix());
}

ClassicalEffect classical_complement(const ClassicalEffect& a) {
  std::vector<double> c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = 1.0 - a[k];
  return ClassicalEffect(std::move(c));
}

std::optional<ClassicalEffect> classical_osum(const ClassicalEffect& a,
                                              const ClassicalEffect& b) {
  check_size(a.size(), b.size(), "classical_osum");
  std::vector<double> s(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    s[k] = a[k] + b[k];
    if (s[k] > 1.0 + kTol) return std::nullopt;
  }
  return ClassicalEffect(std::move(s));
}

bool classical_leq(const ClassicalEffect& a, const ClassicalEffect& b,
                   double tol) {
  check_size(a.size(), b.size(), "classical_leq");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k] + tol) return false;
  return true;
}

std::vector<WeightedVertex> vertex_decomposition(const ClassicalState& p) {
  std::vector<WeightedVertex> out;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] > 0.0) out.push_back({k, p[k]});
  return out;
}

}  // namespace opmodel::classical

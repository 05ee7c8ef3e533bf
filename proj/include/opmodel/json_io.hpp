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

#include <string>
#include <vector>

#include <json.hpp>

#include "opmodel/cmodel.hpp"
#include "opmodel/maps.hpp"
#include "opmodel/operators.hpp"

namespace opmodel::io {

using nlohmann::json;

inline constexpr const char* kSchema = "opmodel/1";
inline constexpr const char* kVersion = "1.0.0";

/// Malformed or schema-violating input. `line`/`column` are 1-based and 0
/// when the problem is not tied to a text position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses JSON text; syntax errors carry line and column.
json parse_text(const std::string& text);
json read_file(const std::string& path);

/// Rounds every floating-point number in place to 9 significant digits.
void round_numbers(json& j);
double round9(double x);

struct ModelFile {
  maps::FiniteModelSpec spec;
  std::vector<std::string> labels;
};

ModelFile parse_model(const json& j);
json to_json(const maps::FiniteModelSpec& spec);

maps::AffineStateMap parse_map(const json& j);
json to_json(const maps::AffineStateMap& phi);

/// {"type": "effect", "d": d, "re": [[...]], "im": [[...]]} or
/// {"type": "effect", "cayley": [a0, ax, ay, az]}.
EffectOperator parse_effect(const json& j);
json to_json(const ComplexMatrix& x);

json to_json(const classical::ClassicalState& p);
json to_json(const classical::ClassicalEffect& a);
json to_json(const classical::MarkovKernel& k);
classical::ClassicalState parse_classical_state(const json& j);
classical::ClassicalEffect parse_classical_effect(const json& j);
classical::MarkovKernel parse_markov_kernel(const json& j);

json to_json(const maps::EmbeddingReport& r);

}  // namespace opmodel::io

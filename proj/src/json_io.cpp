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

#include "opmodel/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "opmodel/qubit_cayley.hpp"

namespace opmodel::io {

ParseError::ParseError(const std::string& what, std::size_t line,
                       std::size_t column)
    : Error(line == 0 ? what
                      : what + " (line " + std::to_string(line) +
                            ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t k = 0; k + 1 < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": malformed JSON", e.line(), e.column());
  }
}

double round9(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

void round_numbers(json& j) {
  if (j.is_number_float()) {
    j = round9(j.get<double>());
  } else if (j.is_array() || j.is_object()) {
    for (auto& v : j) round_numbers(v);
  }
}

namespace {

void check_fields(const json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional,
                  const std::string& what, bool needs_schema) {
  if (!j.is_object()) throw ParseError(what + " must be a JSON object");
  if (needs_schema || j.contains("schema")) {
    if (!j.contains("schema") || j.at("schema") != kSchema)
      throw ParseError(what + ": \"schema\" must be \"" + kSchema + "\"");
  }
  for (const auto& key : required)
    if (!j.contains(key))
      throw ParseError(what + ": missing field \"" + key + "\"");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key == "schema") continue;
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end())
      throw ParseError(what + ": unknown field \"" + key + "\"");
  }
}

template <typename F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(what + ": " + e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(what + ": " + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(what + ": " + e.what());
  }
}

maps::FiniteModelSpec parse_model_spec(const json& j, bool needs_schema,
                                       std::vector<std::string>* labels) {
  check_fields(j, {"kind"}, {"n", "d", "labels"}, "model", needs_schema);
  return guarded("model", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (labels && j.contains("labels"))
      *labels = j.at("labels").get<std::vector<std::string>>();
    if (kind == "classical") {
      if (!j.contains("n")) throw ParseError("classical model needs \"n\"");
      const auto n = j.at("n").get<std::size_t>();
      if (labels && !labels->empty())
        (void)classical::FiniteOutcomeSpace(n, *labels);
      return maps::FiniteModelSpec::classical(n);
    }
    if (kind == "qubit") {
      if (j.contains("d") && j.at("d").get<std::size_t>() != 2)
        throw ParseError("qubit model must have d = 2");
      return maps::FiniteModelSpec::qubit();
    }
    if (kind == "qudit") {
      if (!j.contains("d")) throw ParseError("qudit model needs \"d\"");
      return maps::FiniteModelSpec::qudit(j.at("d").get<std::size_t>());
    }
    throw ParseError("model kind must be classical, qubit or qudit, got \"" +
                     kind + "\"");
  });
}

maps::Coordinates parse_coords(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "simplex") return maps::Coordinates::simplex;
  if (s == "cayley") return maps::Coordinates::cayley;
  if (s == "hermitian") return maps::Coordinates::hermitian;
  throw ParseError("coordinate convention must be simplex, cayley or "
                   "hermitian, got \"" + s + "\"");
}

maps::Coordinates default_coords(const maps::FiniteModelSpec& spec) {
  return spec.kind == maps::ModelKind::classical ? maps::Coordinates::simplex
                                                 : maps::Coordinates::hermitian;
}

RealMatrix parse_flat_matrix(const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto flat = j.at("matrix").get<std::vector<double>>();
  if (flat.size() != rows * cols)
    throw ParseError("matrix has " + std::to_string(flat.size()) +
                     " entries, expected rows * cols = " +
                     std::to_string(rows * cols));
  RealMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = flat[i * cols + k];
  return m;
}

json flat_matrix(const RealMatrix& m) {
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"matrix", std::vector<double>(m.data().begin(), m.data().end())}};
}

}  // namespace

ModelFile parse_model(const json& j) {
  ModelFile f;
  f.spec = parse_model_spec(j, true, &f.labels);
  return f;
}

json to_json(const maps::FiniteModelSpec& spec) {
  json j{{"kind", maps::to_string(spec.kind)}};
  if (spec.kind == maps::ModelKind::classical)
    j["n"] = spec.size;
  else
    j["d"] = spec.size;
  return j;
}

maps::AffineStateMap parse_map(const json& j) {
  check_fields(j, {"source", "target", "rows", "cols", "matrix"},
               {"name", "source_coords", "target_coords"}, "map", true);
  const auto src = parse_model_spec(j.at("source"), false, nullptr);
  const auto dst = parse_model_spec(j.at("target"), false, nullptr);
  return guarded("map", [&] {
    const auto sc = j.contains("source_coords")
                        ? parse_coords(j.at("source_coords"))
                        : default_coords(src);
    const auto tc = j.contains("target_coords")
                        ? parse_coords(j.at("target_coords"))
                        : default_coords(dst);
    const std::string name =
        j.contains("name") ? j.at("name").get<std::string>() : "user-map";
    return maps::AffineStateMap(name, maps::ModelSide(src, sc),
                                maps::ModelSide(dst, tc), parse_flat_matrix(j));
  });
}

json to_json(const maps::AffineStateMap& phi) {
  json j{{"schema", kSchema},
         {"name", phi.name},
         {"source", to_json(phi.source.model)},
         {"target", to_json(phi.target.model)},
         {"source_coords", maps::to_string(phi.source.coords)},
         {"target_coords", maps::to_string(phi.target.coords)}};
  j.update(flat_matrix(phi.linear));
  return j;
}

EffectOperator parse_effect(const json& j) {
  check_fields(j, {"type"}, {"d", "re", "im", "cayley"}, "effect", false);
  return guarded("effect", [&] {
    if (j.at("type") != "effect")
      throw ParseError("effect: \"type\" must be \"effect\"");
    if (j.contains("cayley")) {
      if (j.contains("re") || j.contains("im"))
        throw ParseError("effect: give either \"cayley\" or \"re\"/\"im\"");
      const auto c = j.at("cayley").get<std::vector<double>>();
      if (c.size() != 4)
        throw ParseError("effect: \"cayley\" needs [a0, ax, ay, az]");
      return qubit::effect_from_cayley(c[0], {c[1], c[2], c[3]});
    }
    if (!j.contains("re")) throw ParseError("effect: missing \"re\"");
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    const std::size_t d = re.size();
    if (j.contains("d") && j.at("d").get<std::size_t>() != d)
      throw ParseError("effect: \"d\" disagrees with the matrix size");
    std::vector<std::vector<double>> im(d, std::vector<double>(d, 0.0));
    if (j.contains("im")) im = j.at("im").get<std::vector<std::vector<double>>>();
    ComplexMatrix m(d);
    if (im.size() != d) throw ParseError("effect: \"im\" has wrong size");
    for (std::size_t r = 0; r < d; ++r) {
      if (re[r].size() != d || im[r].size() != d)
        throw ParseError("effect: matrix is not square");
      for (std::size_t c = 0; c < d; ++c) m(r, c) = Complex(re[r][c], im[r][c]);
    }
    return EffectOperator(std::move(m));
  });
}

json to_json(const ComplexMatrix& x) {
  std::vector<std::vector<double>> re(x.dim(), std::vector<double>(x.dim()));
  auto im = re;
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) {
      re[r][c] = x(r, c).real();
      im[r][c] = x(r, c).imag();
    }
  return {{"d", x.dim()}, {"re", re}, {"im", im}};
}

json to_json(const classical::ClassicalState& p) {
  return {{"schema", kSchema},
          {"type", "classical-state"},
          {"p", std::vector<double>(p.values().begin(), p.values().end())}};
}

json to_json(const classical::ClassicalEffect& a) {
  return {{"schema", kSchema},
          {"type", "classical-effect"},
          {"a", std::vector<double>(a.values().begin(), a.values().end())}};
}

json to_json(const classical::MarkovKernel& k) {
  json j{{"schema", kSchema}, {"type", "markov-kernel"}};
  j.update(flat_matrix(k.matrix()));
  return j;
}

classical::ClassicalState parse_classical_state(const json& j) {
  check_fields(j, {"type", "p"}, {}, "classical state", true);
  return guarded("classical state", [&] {
    if (j.at("type") != "classical-state")
      throw ParseError("classical state: wrong \"type\"");
    return classical::ClassicalState(j.at("p").get<std::vector<double>>());
  });
}

classical::ClassicalEffect parse_classical_effect(const json& j) {
  check_fields(j, {"type", "a"}, {}, "classical effect", true);
  return guarded("classical effect", [&] {
    if (j.at("type") != "classical-effect")
      throw ParseError("classical effect: wrong \"type\"");
    return classical::ClassicalEffect(j.at("a").get<std::vector<double>>());
  });
}

classical::MarkovKernel parse_markov_kernel(const json& j) {
  check_fields(j, {"type", "rows", "cols", "matrix"}, {}, "Markov kernel",
               true);
  return guarded("Markov kernel", [&] {
    if (j.at("type") != "markov-kernel")
      throw ParseError("Markov kernel: wrong \"type\"");
    return classical::MarkovKernel(parse_flat_matrix(j));
  });
}

json to_json(const maps::EmbeddingReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    json jw{{"check", w.check},
            {"label", w.label},
            {"coords", w.coords},
            {"status", maps::to_string(w.status)},
            {"certificate_gap", w.certificate_gap},
            {"residual", w.residual}};
    if (!w.certificate.empty()) jw["certificate"] = w.certificate;
    if (!w.note.empty()) jw["note"] = w.note;
    witnesses.push_back(std::move(jw));
  }
  return {{"map", r.map_name},
          {"kind", r.kind},
          {"verdict", maps::to_string(r.verdict)},
          {"rank", r.rank},
          {"required_rank", r.required_rank},
          {"counts",
           {{"feasible", r.feasible},
            {"infeasible", r.infeasible},
            {"inconclusive", r.inconclusive}}},
          {"tolerances", {{"tol", r.tol}, {"tol_lp", r.tol_lp}}},
          {"seed", r.seed},
          {"note", r.note},
          {"witnesses", std::move(witnesses)}};
}

}  // namespace opmodel::io

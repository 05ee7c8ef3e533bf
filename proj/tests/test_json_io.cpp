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

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "opmodel/json_io.hpp"
#include "oracles.hpp"

using namespace opmodel;
using namespace opmodel::io;

namespace {

template <typename F>
std::string parse_message(F f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("syntax errors carry line and column", "[json_io]") {
  try {
    parse_text("{\n  \"kind\": \"qubit\",\n  \"d\": ]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 8);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_text(""), ParseError);
  CHECK(parse_text("{\"a\": 1}").at("a") == 1);
}

TEST_CASE("reading files", "[json_io]") {
  const auto path = std::filesystem::temp_directory_path() / "opmodel_json_io_test.json";
  {
    std::ofstream f(path);
    f << "{\"schema\": \"opmodel/1\", \"kind\": \"classical\", \"n\": 3}";
  }
  const auto j = read_file(path.string());
  CHECK(parse_model(j).spec == maps::FiniteModelSpec::classical(3));
  std::filesystem::remove(path);
  const auto msg = parse_message([&] { read_file(path.string()); });
  CHECK(msg.find(path.string()) != std::string::npos);
}

TEST_CASE("nine significant digits", "[json_io]") {
  CHECK(round9(1.0 / 3.0) == 0.333333333);
  CHECK(round9(2.0 * std::sqrt(2.0)) == 2.82842712);
  CHECK(round9(-1.0 / 3.0e-12) == -333333333000.0);
  CHECK(round9(0.0) == 0.0);
  json j{{"x", 1.0 / 3.0}, {"v", {2.0 / 3.0, 1}}, {"s", "text"}, {"n", {{"y", 0.1234567891234}}}};
  round_numbers(j);
  CHECK(j["x"].get<double>() == 0.333333333);
  CHECK(j["v"][0].get<double>() == 0.666666667);
  CHECK(j["v"][1].get<int>() == 1);
  CHECK(j["s"] == "text");
  CHECK(j["n"]["y"].get<double>() == 0.123456789);
}

TEST_CASE("model files", "[json_io]") {
  const auto q = parse_model(parse_text(R"({"schema":"opmodel/1","kind":"qubit"})"));
  CHECK(q.spec == maps::FiniteModelSpec::qubit());
  const auto d = parse_model(parse_text(R"({"schema":"opmodel/1","kind":"qudit","d":3})"));
  CHECK(d.spec == maps::FiniteModelSpec::qudit(3));
  const auto c = parse_model(
      parse_text(R"({"schema":"opmodel/1","kind":"classical","n":2,"labels":["up","down"]})"));
  CHECK(c.spec == maps::FiniteModelSpec::classical(2));
  CHECK(c.labels == std::vector<std::string>{"up", "down"});

  CHECK(parse_message([] {
          parse_model(parse_text(R"({"schema":"opmodel/1","kind":"qubit","colour":1})"));
        }).find("colour") != std::string::npos);
  CHECK_THROWS_AS(parse_model(parse_text(R"({"kind":"qubit"})")), ParseError);
  CHECK_THROWS_AS(parse_model(parse_text(R"({"schema":"opmodel/2","kind":"qubit"})")),
                  ParseError);
  CHECK_THROWS_AS(parse_model(parse_text(R"({"schema":"opmodel/1","kind":"rebit"})")),
                  ParseError);
  CHECK_THROWS_AS(
      parse_model(parse_text(R"({"schema":"opmodel/1","kind":"classical","n":2,"labels":["a"]})")),
      ParseError);
  CHECK_THROWS_AS(parse_model(parse_text(R"({"schema":"opmodel/1","kind":"classical"})")),
                  ParseError);

  for (const auto& spec : {maps::FiniteModelSpec::qubit(), maps::FiniteModelSpec::qudit(4),
                           maps::FiniteModelSpec::classical(5)}) {
    auto j = to_json(spec);
    j["schema"] = kSchema;
    CHECK(parse_model(j).spec == spec);
  }
}

TEST_CASE("map files", "[json_io]") {
  const auto identity = parse_map(parse_text(R"({
    "schema": "opmodel/1",
    "source": {"kind": "classical", "n": 2},
    "target": {"kind": "classical", "n": 2},
    "rows": 2, "cols": 2,
    "matrix": [1, 0, 0, 1]
  })"));
  CHECK(identity.name == "user-map");
  CHECK(identity.source.coords == maps::Coordinates::simplex);
  CHECK(identity.linear(1, 1) == 1.0);

  const auto cay = maps::cayley_embedding();
  const auto back = parse_map(to_json(cay));
  CHECK(back.name == cay.name);
  CHECK(back.source.coords == cay.source.coords);
  CHECK(back.target.coords == cay.target.coords);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(back.linear(r, c) == cay.linear(r, c));

  const auto bad_size = parse_message([] {
    parse_map(parse_text(R"({"schema":"opmodel/1","source":{"kind":"qubit"},
      "target":{"kind":"classical","n":2},"rows":2,"cols":4,"matrix":[1,2,3]})"));
  });
  CHECK_FALSE(bad_size.empty());
  CHECK_THROWS_AS(parse_map(parse_text(R"({"schema":"opmodel/1","source":{"kind":"qubit"},
      "target":{"kind":"classical","n":2},"rows":2,"cols":3,"matrix":[1,2,3,4,5,6]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_map(parse_text(R"({"schema":"opmodel/1","source":{"kind":"qubit"},
      "target":{"kind":"qubit"},"rows":4,"cols":4,"matrix":[1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,1],
      "source_coords":"simplex"})")),
                  ParseError);
  CHECK_THROWS_AS(parse_map(parse_text(R"({"schema":"opmodel/1","source":{"kind":"qubit"},
      "target":{"kind":"qubit"},"rows":4,"cols":4,"matrix":[],"extra":true})")),
                  ParseError);
}

TEST_CASE("effect objects", "[json_io]") {
  const auto e = parse_effect(parse_text(R"({"type":"effect","re":[[1,0],[0,0]]})"));
  CHECK(oracle::max_abs_diff(e.matrix(), oracle::qubit_matrix(1.0, {0, 0, 1.0})) == 0.0);
  const auto c = parse_effect(parse_text(R"({"type":"effect","cayley":[1,0,0,1]})"));
  CHECK(oracle::max_abs_diff(c.matrix(), e.matrix()) <= 1e-15);
  const auto y = parse_effect(parse_text(
      R"({"type":"effect","d":2,"re":[[0.5,0],[0,0.5]],"im":[[0,-0.5],[0.5,0]]})"));
  CHECK(oracle::max_abs_diff(y.matrix(), oracle::qubit_matrix(1.0, {0, 1.0, 0})) <= 1e-15);

  CHECK_THROWS_AS(parse_effect(parse_text(R"({"type":"effect","re":[[2,0],[0,0]]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_effect(parse_text(R"({"type":"effect","cayley":[1,0,0,2]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_effect(parse_text(R"({"type":"state","re":[[1,0],[0,0]]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_effect(parse_text(R"({"type":"effect","re":[[1,0],[0,0]],"x":1})")),
                  ParseError);
  CHECK_THROWS_AS(parse_effect(parse_text(R"({"type":"effect","d":3,"re":[[1,0],[0,0]]})")),
                  ParseError);

  auto obj = to_json(y.matrix());
  obj["type"] = "effect";
  const auto round = parse_effect(obj);
  CHECK(oracle::max_abs_diff(round.matrix(), y.matrix()) == 0.0);
}

TEST_CASE("classical objects", "[json_io]") {
  const auto p = parse_classical_state(
      parse_text(R"({"schema":"opmodel/1","type":"classical-state","p":[0.25,0.75]})"));
  CHECK(p[1] == 0.75);
  CHECK(parse_classical_state(to_json(p)).values()[0] == 0.25);
  CHECK_THROWS_AS(parse_classical_state(parse_text(
                      R"({"schema":"opmodel/1","type":"classical-state","p":[0.5,0.6]})")),
                  ParseError);

  const auto a = parse_classical_effect(
      parse_text(R"({"schema":"opmodel/1","type":"classical-effect","a":[0,1,0.5]})"));
  CHECK(parse_classical_effect(to_json(a))[2] == 0.5);
  CHECK_THROWS_AS(parse_classical_effect(parse_text(
                      R"({"schema":"opmodel/1","type":"classical-effect","a":[1.5]})")),
                  ParseError);

  const auto k = parse_markov_kernel(parse_text(
      R"({"schema":"opmodel/1","type":"markov-kernel","rows":2,"cols":2,"matrix":[1,0,0.5,0.5]})"));
  CHECK(k(1, 0) == 0.5);
  CHECK(parse_markov_kernel(to_json(k))(0, 0) == 1.0);
  CHECK_THROWS_AS(parse_markov_kernel(parse_text(
                      R"({"schema":"opmodel/1","type":"markov-kernel","rows":1,"cols":2,"matrix":[1,1]})")),
                  ParseError);
}

TEST_CASE("embedding reports serialize every field", "[json_io]") {
  const auto sic = maps::povm_embedding(maps::sic_qubit_povm());
  const auto rep = maps::good_embedding_report(sic, maps::extreme_effect_sampler(sic.source), 5, 3);
  const auto j = to_json(rep);
  CHECK(j.at("verdict") == "not-good");
  CHECK(j.at("map") == "povm-embedding");
  CHECK(j.at("seed") == 3);
  CHECK(j.at("counts").at("infeasible").get<std::size_t>() == rep.infeasible);
  CHECK(j.at("tolerances").contains("tol_lp"));
  REQUIRE(j.at("witnesses").size() == rep.witnesses.size());
  for (const auto& w : j.at("witnesses")) {
    CHECK(w.contains("check"));
    CHECK(w.contains("status"));
    if (w.at("status") == "infeasible") CHECK(w.contains("certificate"));
  }
}

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

#include "opmodel/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "opmodel/canonical.hpp"
#include "opmodel/json_io.hpp"
#include "opmodel/maps.hpp"
#include "opmodel/qubit_cayley.hpp"
#include "opmodel/sampling.hpp"
#include "opmodel/valuations.hpp"
#include "opmodel/wigner.hpp"

namespace opmodel::cli {

namespace {

using io::json;

constexpr std::uint64_t kDefaultSeed = 12345;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::uint64_t seed = kDefaultSeed;
  std::string report_path;
  bool no_timestamp = false;
};

std::optional<std::uint64_t> seed_from_env(std::ostream& err) {
  const char* s = std::getenv("OPMODEL_SEED");
  if (s == nullptr || *s == '\0') return kDefaultSeed;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (errno != 0 || *end != '\0' || *s == '-') {
    err << "error: OPMODEL_SEED must be a non-negative integer, got \"" << s
        << "\"\n";
    return std::nullopt;
  }
  return static_cast<std::uint64_t>(v);
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json header(const std::string& command, const std::vector<std::string>& args,
            const Common& common) {
  return {{"schema", io::kSchema},
          {"version", io::kVersion},
          {"command", command},
          {"args", args},
          {"seed", common.seed}};
}

void emit(json report, const Common& common, std::ostream& out) {
  if (!common.no_timestamp) report["timestamp"] = utc_timestamp();
  io::round_numbers(report);
  const std::string text = report.dump(2) + "\n";
  if (!common.report_path.empty()) {
    std::ofstream f(common.report_path);
    if (!f) throw UsageError("cannot write report to " + common.report_path);
    f << text;
  }
  out << text;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f.precision(9);
  return f;
}

json vec3(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

// ---------------------------------------------------------------- embed-check

struct EmbedArgs {
  std::string preset;
  std::string model_path;
  std::string map_path;
  std::size_t samples = 100;
  double tol = maps::kTolLp;
};

maps::AffineStateMap embed_map(const EmbedArgs& a) {
  if (!a.preset.empty() && !a.map_path.empty())
    throw UsageError("--preset and --map are mutually exclusive");
  std::optional<maps::FiniteModelSpec> model;
  if (!a.model_path.empty())
    model = io::parse_model(io::read_file(a.model_path)).spec;
  if (!a.map_path.empty()) {
    auto phi = io::parse_map(io::read_file(a.map_path));
    if (model && !(phi.source.model == *model))
      throw io::ParseError("map source " + phi.source.model.describe() +
                           " does not match model " + model->describe());
    return phi;
  }
  if (a.preset == "cayley") return maps::cayley_embedding();
  if (a.preset == "sic") return maps::povm_embedding(maps::sic_qubit_povm());
  if (a.preset == "identity" || (a.preset.empty() && model)) {
    const auto spec = model.value_or(maps::FiniteModelSpec::qubit());
    const auto coords = spec.is_quantum() ? maps::Coordinates::hermitian
                                          : maps::Coordinates::simplex;
    return maps::identity_map(maps::ModelSide(spec, coords));
  }
  throw UsageError("give --preset, --map or --model");
}

int exit_for(maps::Verdict v) {
  switch (v) {
    case maps::Verdict::good:
      return kExitOk;
    case maps::Verdict::not_good:
      return kExitNegative;
    case maps::Verdict::inconclusive:
      break;
  }
  return kExitUsage;
}

json map_summary(const maps::AffineStateMap& phi) {
  return {{"name", phi.name},
          {"source", phi.source.model.describe()},
          {"source_coords", maps::to_string(phi.source.coords)},
          {"target", phi.target.model.describe()},
          {"target_coords", maps::to_string(phi.target.coords)}};
}

int cmd_embed_check(const EmbedArgs& a, const Common& c,
                    const std::vector<std::string>& args, std::ostream& out) {
  const auto phi = embed_map(a);
  const auto report = maps::good_embedding_report(
      phi, maps::extreme_effect_sampler(phi.source), a.samples, c.seed, a.tol);
  json j = header("embed-check", args, c);
  j["map"] = map_summary(phi);
  j["samples"] = a.samples;
  j["verdict"] = maps::to_string(report.verdict);
  j["report"] = io::to_json(report);
  emit(std::move(j), c, out);
  return exit_for(report.verdict);
}

// ------------------------------------------------------------------ ext-check

struct ExtArgs {
  std::string preset;
  std::string map_path;
  std::size_t samples = 100;
  std::size_t mesh = 500;
  double tol = maps::kTolLp;
};

int cmd_ext_check(const ExtArgs& a, const Common& c,
                  const std::vector<std::string>& args, std::ostream& out) {
  if (a.preset.empty() == a.map_path.empty())
    throw UsageError("give exactly one of --preset and --map");
  maps::ExtensionOptions opt;
  opt.count = a.samples;
  opt.seed = c.seed;
  opt.tol_lp = a.tol;
  std::optional<maps::AffineStateMap> reduction;
  if (!a.map_path.empty()) {
    reduction = io::parse_map(io::read_file(a.map_path));
  } else if (a.preset == "partial-trace") {
    reduction = maps::compound_extension(2, 2).reduction;
  } else if (a.preset == "inverse-cayley") {
    reduction = maps::inverse_cayley();
  } else {
    // Surjectivity is tested onto the hull of the mesh: interior states plus
    // the mesh points themselves.
    const auto mesh = canonical::bloch_mesh(a.mesh);
    reduction = canonical::reduction_map(mesh);
    opt.interior_radius = 0.9;
    for (std::size_t i = 0; i < mesh.size(); ++i)
      opt.extra_target_states.push_back(
          {"mesh point " + std::to_string(i),
           reduction->target.encode(mesh.points[i])});
  }
  const auto report = maps::good_extension_report(*reduction, opt);
  json j = header("ext-check", args, c);
  j["map"] = map_summary(*reduction);
  j["samples"] = a.samples;
  if (a.preset == "misra-bugajski") j["mesh"] = a.mesh;
  j["verdict"] = maps::to_string(report.verdict);
  j["report"] = io::to_json(report);
  emit(std::move(j), c, out);
  return exit_for(report.verdict);
}

// ----------------------------------------------------------------------- chsh

struct ChshArgs {
  std::string angles;
  std::string preset;
  std::string csv_path;
  std::size_t sweep = 0;
};

std::array<double, 4> parse_angles(const std::string& text) {
  std::array<double, 4> out{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 4) break;
    std::size_t used = 0;
    try {
      out[k] = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
      ++used;
    if (item.empty() || used != item.size() || !std::isfinite(out[k]))
      throw UsageError("bad angle \"" + item + "\" in --angles");
    ++k;
  }
  if (k != 4 || ss.rdbuf()->in_avail() > 0 || text.back() == ',')
    throw UsageError("--angles needs four comma-separated degrees a,a',b,b'");
  return out;
}

int cmd_chsh(const ChshArgs& a, const Common& c,
             const std::vector<std::string>& args, std::ostream& out) {
  if (!a.angles.empty() && !a.preset.empty())
    throw UsageError("--angles and --preset are mutually exclusive");
  if (a.angles.empty() && a.preset.empty())
    throw UsageError("give --angles a,a',b,b' or --preset tsirelson");
  const std::array<double, 4> deg =
      a.preset.empty() ? parse_angles(a.angles)
                       : std::array<double, 4>{0.0, 90.0, 45.0, -45.0};
  std::array<Vec3, 4> dir;
  for (std::size_t k = 0; k < 4; ++k) dir[k] = canonical::xz_direction(deg[k]);
  std::optional<std::ofstream> csv;
  if (!a.csv_path.empty()) csv = open_output(a.csv_path);

  const auto r = canonical::chsh_classical(dir[0], dir[1], dir[2], dir[3]);
  static const char* kSettings[4] = {"a,b", "a,b'", "a',b", "a',b'"};
  static const char* kOutcomes[4] = {"++", "+-", "-+", "--"};

  json corr = json::object();
  json qcorr = json::object();
  for (std::size_t s = 0; s < 4; ++s) {
    corr[std::string("E(") + kSettings[s] + ")"] = r.correlations[s];
    qcorr[std::string("E(") + kSettings[s] + ")"] = r.quantum_correlations[s];
  }
  json j = header("chsh", args, c);
  j["angles_deg"] = {{"a", deg[0]}, {"a'", deg[1]}, {"b", deg[2]}, {"b'", deg[3]}};
  j["directions"] = {{"a", vec3(dir[0])},
                     {"a'", vec3(dir[1])},
                     {"b", vec3(dir[2])},
                     {"b'", vec3(dir[3])}};
  j["correlations"] = corr;
  j["quantum_correlations"] = qcorr;
  j["S"] = r.s_value;
  j["S_quantum"] = r.s_quantum;
  j["agreement_gap"] = r.agreement_gap;
  j["classical_bound"] = 2.0;
  j["tsirelson_bound"] = 2.0 * std::numbers::sqrt2;
  j["violates_classical_bound"] = r.s_value > 2.0 + 1e-9;
  if (a.sweep > 0) {
    const auto sw = canonical::chsh_random_sweep(a.sweep, c.seed);
    j["sweep"] = {{"count", sw.count},
                  {"max_S", sw.max_s},
                  {"max_agreement_gap", sw.max_gap},
                  {"within_tsirelson",
                   sw.max_s <= 2.0 * std::numbers::sqrt2 + 1e-9}};
  }
  if (csv) {
    *csv << "setting,outcome,probability\n";
    for (std::size_t s = 0; s < 4; ++s)
      for (std::size_t o = 0; o < 4; ++o)
        *csv << '"' << kSettings[s] << "\"," << kOutcomes[o] << ','
             << io::round9(r.joint[s][o]) << '\n';
  }
  emit(std::move(j), c, out);
  return kExitOk;
}

// ------------------------------------------------------------------------- mb

struct MbArgs {
  std::size_t mesh = 10000;
  std::string effect = "z-projection";
  std::string csv_path;
  std::size_t samples = 500;
  bool allow_fuzzy = false;
};

int cmd_mb(const MbArgs& a, const Common& c,
           const std::vector<std::string>& args, std::ostream& out) {
  if (a.mesh < 4) throw UsageError("--mesh must be at least 4");
  const EffectOperator effect =
      a.effect == "z-projection"
          ? qubit::effect_from_cayley(1.0, {0.0, 0.0, 1.0})
          : io::parse_effect(io::read_file(a.effect));
  if (effect.dim() != 2) throw UsageError("mb needs a qubit effect");
  std::optional<std::ofstream> csv;
  if (!a.csv_path.empty()) csv = open_output(a.csv_path);

  const auto mesh = canonical::bloch_mesh(a.mesh);
  const auto prof = canonical::fuzziness_profile(effect, mesh, a.allow_fuzzy);
  const auto demo = canonical::preimage_multiplicity_demo(a.samples, c.seed);

  const auto r = [&](std::size_t i) {
    return vec3(qubit::cayley_decompose(mesh.points[i]).x);
  };
  json j = header("mb", args, c);
  j["mesh"] = {{"size", mesh.size()}, {"generator", mesh.generator}};
  j["effect"] = io::to_json(effect.matrix());
  j["profile"] = {{"min", prof.min},
                  {"argmin_bloch", r(prof.argmin)},
                  {"max", prof.max},
                  {"argmax_bloch", r(prof.argmax)},
                  {"deciles", prof.deciles},
                  {"all_deciles_populated", prof.all_deciles_populated()},
                  {"sharp_signature", prof.sharp_signature()}};
  j["preimage_demo"] = {
      {"mu1", "(delta_|0> + delta_|1>)/2"},
      {"mu2", "(delta_|+> + delta_|->)/2"},
      {"reduce_gap", demo.reduce_gap},
      {"measures_differ", demo.measures_differ},
      {"effect_samples", demo.effect_samples},
      {"max_pairing_gap", demo.max_pairing_gap},
      {"separating_effect_mu1", demo.separating_mu1},
      {"separating_effect_mu2", demo.separating_mu2}};
  j["tolerances"] = {{"sharp", 1e-3}, {"reduce", 1e-12}};
  if (csv) {
    *csv << "bin_lo,bin_hi,count\n";
    for (std::size_t k = 0; k < 10; ++k)
      *csv << io::round9(k / 10.0) << ',' << io::round9((k + 1) / 10.0) << ','
           << prof.deciles[k] << '\n';
  }
  emit(std::move(j), c, out);
  return kExitOk;
}

// --------------------------------------------------------------------- wigner

struct WignerArgs {
  std::string state = "gauss";
  std::size_t grid = 256;
  double extent = 8.0;
  double q0 = 1.0;
  double p0 = 1.0;
  std::string out_path;
};

int cmd_wigner(const WignerArgs& a, const Common& c,
               const std::vector<std::string>& args, std::ostream& out) {
  std::optional<std::ofstream> csv;
  if (!a.out_path.empty()) csv = open_output(a.out_path);
  const auto g = wigner::symmetric_grid(a.extent, a.grid);
  const auto psi = a.state == "hermite1" ? wigner::hermite1_state(g)
                   : a.state == "coherent"
                       ? wigner::gaussian_state(g, a.q0, a.p0)
                       : wigner::gaussian_state(g);
  const auto w = wigner::wigner_transform(psi, g);
  const auto neg = wigner::negativity_certificate(w);
  const auto marg = wigner::wigner_marginals(w);
  const auto pos = wigner::position_density(psi);
  const auto mom = wigner::momentum_density(psi, g);
  double pos_err = 0.0;
  double mom_err = 0.0;
  for (std::size_t k = 0; k < g.n; ++k) {
    pos_err = std::max(pos_err, std::abs(marg.position[k] - pos[k]));
    mom_err = std::max(mom_err, std::abs(marg.momentum[k] - mom[k]));
  }
  json j = header("wigner", args, c);
  j["state"] = a.state;
  if (a.state == "coherent") j["displacement"] = {{"q0", a.q0}, {"p0", a.p0}};
  j["grid"] = {{"n", g.n}, {"extent", a.extent}, {"step", g.step}};
  j["summary"] = {{"min_value", neg.min_value},
                  {"argmin", {{"q", neg.q}, {"p", neg.p}}},
                  {"normalization", w.integral()},
                  {"position_marginal_max_error", pos_err},
                  {"momentum_marginal_max_error", mom_err},
                  {"max_imag_residue", w.max_imag_residue},
                  {"rules_out_classical_embedding",
                   neg.rules_out_classical_embedding}};
  if (csv) {
    *csv << "q,p,W\n";
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t k = 0; k < g.n; ++k)
        *csv << io::round9(g[i]) << ',' << io::round9(g[k]) << ','
             << io::round9(w(i, k)) << '\n';
    if (!*csv) throw UsageError("failed writing " + a.out_path);
  }
  emit(std::move(j), c, out);
  return kExitOk;
}

// ----------------------------------------------------------------- tomography

int cmd_tomography(std::size_t trials, const Common& c,
                   const std::vector<std::string>& args, std::ostream& out) {
  if (trials == 0) throw UsageError("--trials must be at least 1");
  constexpr double kTolRoundTrip = 1e-9;
  const Povm povm = maps::sic_qubit_povm();
  Rng rng(c.seed);
  double max_err = 0.0;
  double first_err = 0.0;
  std::size_t worst = 0;
  bool all_valid = true;
  for (std::size_t t = 0; t < trials; ++t) {
    // Trial 0 is the maximally mixed state on every seed.
    const ComplexMatrix rho_m = t == 0 ? 0.5 * ComplexMatrix::identity(2)
                                       : random_density(2, rng);
    const DensityOperator rho(rho_m);
    const auto rec = maps::reconstruct_state(povm, povm.probabilities(rho));
    const double err = trace_norm(rec.estimate - rho_m);
    all_valid = all_valid && rec.validation.passed;
    if (t == 0) first_err = err;
    if (err > max_err) {
      max_err = err;
      worst = t;
    }
  }
  json j = header("tomography", args, c);
  j["povm"] = "sic-qubit";
  j["trials"] = trials;
  j["first_state"] = "I/2";
  j["first_error"] = first_err;
  j["max_trace_norm_error"] = max_err;
  j["worst_trial"] = worst;
  j["all_estimates_valid"] = all_valid;
  j["tolerances"] = {{"round_trip", kTolRoundTrip}};
  j["passed"] = max_err <= kTolRoundTrip;
  emit(std::move(j), c, out);
  return max_err <= kTolRoundTrip ? kExitOk : kExitNegative;
}

// ------------------------------------------------------------ gleason-effects

struct GleasonArgs {
  std::size_t dim = 2;
  std::string rule = "trace";
  std::size_t trials = 100;
};

int cmd_gleason(const GleasonArgs& a, const Common& c,
                const std::vector<std::string>& args, std::ostream& out) {
  constexpr double kTolRec = 1e-9;
  Rng rng(c.seed);
  const ComplexMatrix rho = random_density(a.dim, rng);
  const auto linear = valuations::trace_rule(rho);
  const valuations::ValuationRule rule =
      a.rule == "trace" ? linear
                        : valuations::ValuationRule([linear](const ComplexMatrix& x) {
                            const double v = linear(x);
                            return v * v;
                          });
  const auto family = valuations::effect_operator_basis(a.dim);
  const auto v = valuations::valuation_from_rule(a.dim, rule, family);

  json rec_j;
  bool reconstructed = false;
  try {
    const auto rec = valuations::state_from_valuation(v, kTolRec);
    const double err = trace_norm(rec.estimate - rho);
    reconstructed = rec.is_state && err <= kTolRec;
    rec_j = {{"residual", rec.residual},
             {"is_state", rec.is_state},
             {"trace_norm_error", err},
             {"diagnostic", rec.diagnostic}};
  } catch (const valuations::InconsistentValuation& e) {
    rec_j = {{"is_state", false}, {"diagnostic", e.what()}};
  }
  const auto add = valuations::verify_additivity(a.dim, rule, a.trials,
                                                 c.seed + 1, kTolRec);
  json j = header("gleason-effects", args, c);
  j["dim"] = a.dim;
  j["rule"] = a.rule == "trace" ? "tr[rho a]" : "tr[rho a]^2";
  j["family_size"] = family.size();
  j["reconstruction"] = rec_j;
  j["additivity"] = {{"trials", add.trials},
                     {"max_defect", add.max_defect},
                     {"worst_trial", add.worst_trial},
                     {"passed", add.passed},
                     {"note", add.note}};
  j["tolerances"] = {{"reconstruction", kTolRec}, {"additivity", add.tolerance}};
  const bool accepted = add.passed && reconstructed;
  j["verdict"] = accepted ? "state-induced" : "rejected";
  emit(std::move(j), c, out);
  return accepted ? kExitOk : kExitNegative;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed,
                  "RNG seed (default: $OPMODEL_SEED, else 12345)");
  sub->add_option("--report", c.report_path,
                  "Also write the JSON report to this file");
  sub->add_flag("--no-timestamp", c.no_timestamp,
                "Omit the timestamp field for byte-identical reports");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const auto env_seed = seed_from_env(err);
  if (!env_seed) return kExitUsage;
  Common common;
  common.seed = *env_seed;

  CLI::App app{"Operational-model embedding checks and demonstrations",
               "opmodel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", io::kVersion);

  EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand(
      "embed-check", "Decide whether a map is a good embedding");
  embed_cmd->add_option("--preset", embed.preset, "Built-in map")
      ->check(CLI::IsMember({"cayley", "sic", "identity"}));
  embed_cmd->add_option("--model", embed.model_path,
                        "Model JSON; alone, checks its identity map");
  embed_cmd->add_option("--map", embed.map_path, "Map JSON");
  embed_cmd->add_option("--samples", embed.samples, "Sampled effects")
      ->check(CLI::PositiveNumber);
  embed_cmd->add_option("--tol", embed.tol, "LP tolerance")
      ->check(CLI::PositiveNumber);
  embed_cmd->footer("Exit: 0 good, 1 not-good, 2 inconclusive or bad input.");
  add_common(embed_cmd, common);

  ExtArgs ext;
  auto* ext_cmd = app.add_subcommand(
      "ext-check", "Decide whether a reduction map is a good extension");
  ext_cmd->add_option("--preset", ext.preset, "Built-in reduction")
      ->check(CLI::IsMember({"partial-trace", "misra-bugajski",
                             "inverse-cayley"}));
  ext_cmd->add_option("--map", ext.map_path, "Reduction map JSON");
  ext_cmd->add_option("--samples", ext.samples, "Sampled states and effects")
      ->check(CLI::PositiveNumber);
  ext_cmd->add_option("--mesh", ext.mesh, "Mesh size for misra-bugajski")
      ->check(CLI::Range(std::size_t{4}, std::size_t{1} << 20));
  ext_cmd->add_option("--tol", ext.tol, "LP tolerance")
      ->check(CLI::PositiveNumber);
  ext_cmd->footer("Exit: 0 good, 1 not-good, 2 inconclusive or bad input.");
  add_common(ext_cmd, common);

  ChshArgs chsh;
  auto* chsh_cmd =
      app.add_subcommand("chsh", "CHSH value of the singlet via kernels");
  chsh_cmd->add_option("--angles", chsh.angles,
                       "a,a',b,b' in degrees, directions in the x-z plane");
  chsh_cmd->add_option("--preset", chsh.preset, "tsirelson = 0,90,45,-45")
      ->check(CLI::IsMember({"tsirelson"}));
  chsh_cmd->add_option("--csv", chsh.csv_path, "Joint probability table");
  chsh_cmd->add_option("--sweep", chsh.sweep,
                       "Also scan this many random setting quadruples");
  chsh_cmd->footer(
      "CSV columns: setting (a,b | a,b' | a',b | a',b'), outcome (++ +- -+ "
      "--), probability.");
  add_common(chsh_cmd, common);

  MbArgs mb;
  auto* mb_cmd = app.add_subcommand(
      "mb", "Fuzziness profile and preimage demo of the pure-state extension");
  mb_cmd->add_option("--mesh", mb.mesh, "Number of Bloch-sphere mesh points");
  mb_cmd->add_option("--effect", mb.effect,
                     "z-projection or a path to an effect JSON file");
  mb_cmd->add_option("--samples", mb.samples,
                     "Lifted effects sampled by the preimage demo")
      ->check(CLI::PositiveNumber);
  mb_cmd->add_option("--csv", mb.csv_path, "Decile histogram");
  mb_cmd->add_flag("--allow-fuzzy", mb.allow_fuzzy,
                   "Accept effects that are not projections");
  mb_cmd->footer("CSV columns: bin_lo, bin_hi, count (mesh points with "
                 "f in [bin_lo, bin_hi); the last bin includes 1).");
  add_common(mb_cmd, common);

  WignerArgs wig;
  auto* wig_cmd =
      app.add_subcommand("wigner", "Wigner function on a phase-space grid");
  wig_cmd->add_option("--state", wig.state, "Oscillator state")
      ->check(CLI::IsMember({"gauss", "hermite1", "coherent"}));
  wig_cmd->add_option("--grid", wig.grid, "Points per axis")
      ->check(CLI::Range(std::size_t{8}, std::size_t{4096}));
  wig_cmd->add_option("--extent", wig.extent, "Half-width L of [-L, L)")
      ->check(CLI::PositiveNumber);
  wig_cmd->add_option("--q0", wig.q0, "Coherent-state position");
  wig_cmd->add_option("--p0", wig.p0, "Coherent-state momentum");
  wig_cmd->add_option("--out", wig.out_path, "CSV of the table");
  wig_cmd->footer("CSV columns: q, p, W (one row per grid point, q major).");
  add_common(wig_cmd, common);

  std::size_t tomo_trials = 100;
  auto* tomo_cmd = app.add_subcommand(
      "tomography", "SIC-POVM linear-inversion round trip on random states");
  tomo_cmd->add_option("--trials", tomo_trials,
                       "Number of states; the first is I/2");
  tomo_cmd->footer("Exit: 0 when the max error is within 1e-9, 1 otherwise.");
  add_common(tomo_cmd, common);

  GleasonArgs gl;
  auto* gl_cmd = app.add_subcommand(
      "gleason-effects", "Reconstruct a state from an effect valuation");
  gl_cmd->add_option("--dim", gl.dim, "Hilbert-space dimension")
      ->check(CLI::Range(std::size_t{2}, std::size_t{8}));
  gl_cmd->add_option("--rule", gl.rule, "Valuation rule")
      ->check(CLI::IsMember({"trace", "squared"}));
  gl_cmd->add_option("--trials", gl.trials, "Additivity trials")
      ->check(CLI::PositiveNumber);
  gl_cmd->footer(
      "Exit: 0 when the valuation is additive and reconstructs a state, 1 "
      "when it is rejected.");
  add_common(gl_cmd, common);

  std::vector<const char*> argv{"opmodel"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*embed_cmd) return cmd_embed_check(embed, common, args, out);
    if (*ext_cmd) return cmd_ext_check(ext, common, args, out);
    if (*chsh_cmd) return cmd_chsh(chsh, common, args, out);
    if (*mb_cmd) return cmd_mb(mb, common, args, out);
    if (*wig_cmd) return cmd_wigner(wig, common, args, out);
    if (*tomo_cmd) return cmd_tomography(tomo_trials, common, args, out);
    if (*gl_cmd) return cmd_gleason(gl, common, args, out);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace opmodel::cli

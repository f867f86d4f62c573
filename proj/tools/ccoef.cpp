// ccoef: command-line front end for evolutions, programmability coefficients,
// elementary-rule sweeps and behavioural comparisons.
//
// Exit codes: 0 success, 2 usage, 3 incomparable, 4 internal.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ccoef/classify.hpp"
#include "ccoef/coefficient.hpp"
#include "ccoef/complexity.hpp"
#include "ccoef/engine.hpp"
#include "ccoef/enumeration.hpp"
#include "ccoef/life.hpp"
#include "ccoef/parallel.hpp"
#include "ccoef/report.hpp"

namespace {

using namespace ccoef;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIncomparable = 3;
constexpr int kExitInternal = 4;
constexpr const char* kManifestName = "manifest.json";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelOptions {
  std::string model = "eca";  // eca | ca | life
  int colours = 2;
  int radius = 1;
  std::size_t t = 200;
  std::size_t n = 40;
  std::size_t width = 61;
  std::size_t height = 32;
  std::optional<std::size_t> t_min;
  std::optional<std::size_t> stride;
  std::string family = "gray";
  std::uint64_t seed = 1;
  double density = 0.5;
  std::string boundary = "cyclic";
  int background = 0;
  bool exclude_input_row = false;
  std::optional<double> epsilon;

  bool life() const { return model == "life"; }

  Boundary resolved_boundary() const {
    if (boundary == "cyclic") return Boundary::cyclic();
    if (boundary == "fixed") return Boundary::fixed(static_cast<std::uint8_t>(background));
    throw UsageError("--boundary must be cyclic or fixed");
  }

  CoefficientOptions coefficient_options() const {
    CoefficientOptions o;
    o.t_min = t_min;
    o.stride = stride;
    o.include_input_row = !exclude_input_row;
    o.workers = 0;
    return o;
  }

  RuleTable rule_table(const std::string& rule) const {
    const int k = model == "eca" ? 2 : colours;
    const int r = model == "eca" ? 1 : radius;
    RuleNumber number;
    try {
      number = RuleNumber(rule);
    } catch (const std::exception&) {
      throw UsageError("rule must be a non-negative integer: " + rule);
    }
    return RuleTable::from_number(number, k, r);
  }

  InputFamily input_family(std::size_t members, std::size_t cells, int k) const {
    if (family == "gray") return gray_initials(members, cells, k, resolved_boundary());
    if (family == "random") return random_initials(members, cells, seed, density, k, resolved_boundary());
    throw UsageError("--family must be gray or random");
  }

  Json to_json() const {
    Json j = {{"model", model}, {"t", t}, {"n", n}, {"width", width}};
    if (life()) {
      j["height"] = height;
    } else {
      j["k"] = model == "eca" ? 2 : colours;
      j["r"] = model == "eca" ? 1 : radius;
      j["boundary"] = resolved_boundary().describe();
      j["family"] = family;
      if (family == "random") {
        j["seed"] = seed;
        j["density"] = density;
      }
    }
    j["t_min"] = t_min ? Json(*t_min) : Json(nullptr);
    j["stride"] = stride ? Json(*stride) : Json(nullptr);
    j["include_input_row"] = !exclude_input_row;
    j["epsilon"] = epsilon ? Json(*epsilon) : Json(nullptr);
    j["compressor_id"] = compressor_id();
    return j;
  }
};

void add_model_options(CLI::App& cmd, ModelOptions& o, bool with_rule_shape = true) {
  cmd.add_option("--model", o.model, "eca, ca (general k/r) or life")
      ->check(CLI::IsMember({"eca", "ca", "life"}))
      ->capture_default_str();
  if (with_rule_shape) {
    cmd.add_option("--k", o.colours, "colour count for --model ca")->capture_default_str();
    cmd.add_option("--r", o.radius, "radius for --model ca")->capture_default_str();
  }
  cmd.add_option("--t", o.t, "runtime (transitions) t_max")->capture_default_str();
  cmd.add_option("--n", o.n, "number of inputs")->capture_default_str();
  cmd.add_option("--width", o.width, "row width (grid width for life)")->capture_default_str();
  cmd.add_option("--height", o.height, "grid height for life")->capture_default_str();
  cmd.add_option("--t-min", o.t_min, "first sampled runtime");
  cmd.add_option("--stride", o.stride, "sampling stride");
  cmd.add_option("--family", o.family, "gray or random")->capture_default_str();
  cmd.add_option("--seed", o.seed, "seed for the random family")->capture_default_str();
  cmd.add_option("--density", o.density, "cell density for the random family")->capture_default_str();
  cmd.add_option("--boundary", o.boundary, "cyclic or fixed")->capture_default_str();
  cmd.add_option("--background", o.background, "background colour for fixed boundaries")->capture_default_str();
  cmd.add_flag("--exclude-input-row", o.exclude_input_row, "compress only rows after the input");
  cmd.add_option("--epsilon", o.epsilon, "zero band; calibrated on inert rules when omitted");
}

// Coefficient of one rule plus the inert baseline used for the zero band.
struct Computed {
  CoefficientResult result;
  double epsilon = 0.0;
  std::string epsilon_source;
};

CoefficientResult compute_one(const ModelOptions& o, const std::string& rule) {
  if (o.life()) {
    const LifeFamily family = gray_patches(o.n, o.height, o.width);
    return coefficient_C(LifeRule::parse(rule), family, o.t, o.coefficient_options());
  }
  const RuleTable table = o.rule_table(rule);
  const InputFamily family = o.input_family(o.n, o.width, table.colours());
  return coefficient_C(table, family, o.t, o.coefficient_options());
}

double zero_band(const ModelOptions& o, std::string& source) {
  if (o.epsilon) {
    if (!(*o.epsilon > 0.0)) throw UsageError("--epsilon must be positive");
    source = "given";
    return *o.epsilon;
  }
  source = "calibrated";
  std::vector<CoefficientResult> inert;
  if (o.life()) {
    const LifeFamily family = gray_patches(o.n, o.height, o.width);
    for (const auto& rule : inert_life_rules())
      inert.push_back(coefficient_C(rule, family, o.t, o.coefficient_options()));
  } else {
    const int k = o.model == "eca" ? 2 : o.colours;
    const int r = o.model == "eca" ? 1 : o.radius;
    const InputFamily family = o.input_family(o.n, o.width, k);
    for (const auto& rule : inert_rules(k, r)) inert.push_back(coefficient_C(rule, family, o.t, o.coefficient_options()));
  }
  return calibrate_zero_band(inert);
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
  return out;
}

void finish(OutputSet& outputs, const std::string& command, const std::vector<std::string>& command_line,
            Json parameters, const std::string& out_dir) {
  RunManifest manifest;
  manifest.command = command;
  manifest.command_line = command_line;
  manifest.parameters = std::move(parameters);
  manifest.outputs = outputs.hashes();
  manifest.timestamp = utc_timestamp();
  outputs.add(kManifestName, manifest.to_json().dump(2) + "\n");
  outputs.commit(out_dir);
}

std::string numbered(const std::string& stem, std::size_t index, std::size_t count, const std::string& ext) {
  const std::size_t digits = std::to_string(count > 0 ? count - 1 : 0).size();
  std::string number = std::to_string(index);
  if (number.size() < digits) number.insert(0, digits - number.size(), '0');
  return stem + "_" + number + ext;
}

// evolve ---------------------------------------------------------------------

struct EvolveOptions {
  ModelOptions model;
  std::string rule = "110";
  std::optional<std::string> input;
  std::optional<std::size_t> gray_inputs;
  std::optional<std::size_t> random_inputs;
  bool raw = false;
  bool width_given = false;
};

int run_evolve(const EvolveOptions& e, const std::vector<std::string>& command_line, const std::string& out_dir) {
  const ModelOptions& o = e.model;
  const int sources = (e.input ? 1 : 0) + (e.gray_inputs ? 1 : 0) + (e.random_inputs ? 1 : 0);
  if (sources != 1) throw UsageError("give exactly one of --input, --gray-inputs, --random-inputs");
  if (o.t == 0) throw UsageError("--t must be at least 1");

  OutputSet outputs;
  Json params = o.to_json();
  params["rule"] = e.rule;

  if (o.life()) {
    if (!e.gray_inputs) throw UsageError("--model life supports --gray-inputs only");
    const LifeRule rule = LifeRule::parse(e.rule);
    const LifeFamily family = gray_patches(*e.gray_inputs, o.height, o.width);
    for (std::size_t j = 0; j < family.size(); ++j) {
      const auto frames = evolve_life(family.members[j], o.t, rule);
      // Frames stacked top to bottom in one image.
      LifeGrid strip(frames.size() * o.height, o.width);
      for (std::size_t f = 0; f < frames.size(); ++f)
        for (std::size_t y = 0; y < o.height; ++y)
          for (std::size_t x = 0; x < o.width; ++x)
            if (frames[f](y, x)) strip.set(f * o.height + y, x, 1);
      outputs.add(numbered("evolution", j, family.size(), ".pbm"), pbm_p4(strip, kManifestName));
      if (e.raw) outputs.add(numbered("evolution", j, family.size(), ".bin"), serialize(frames));
    }
    params["inputs"] = {{"scheme", "gray-patch"}, {"count", *e.gray_inputs}};
    finish(outputs, "evolve", command_line, params, out_dir);
    return kExitOk;
  }

  const RuleTable rule = o.rule_table(e.rule);
  std::vector<Configuration> inits;
  const Boundary boundary = o.resolved_boundary();
  if (e.input) {
    const std::size_t width = e.width_given ? o.width : light_cone_width(e.input->size(), rule.radius(), o.t);
    if (width < e.input->size()) throw UsageError("--width smaller than --input");
    const Configuration pattern = Configuration::from_string(*e.input, rule.colours(), boundary);
    Configuration row(width, rule.colours(), boundary);
    const std::size_t offset = (width - pattern.width()) / 2;
    for (std::size_t i = 0; i < pattern.width(); ++i) row.set(offset + i, pattern[i]);
    inits.push_back(std::move(row));
    params["inputs"] = {{"scheme", "explicit"}, {"pattern", *e.input}};
    params["width"] = width;
  } else if (e.gray_inputs) {
    const std::size_t pattern = bit_width_of(*e.gray_inputs > 0 ? *e.gray_inputs - 1 : 0);
    const std::size_t width = e.width_given ? o.width : light_cone_width(pattern, rule.radius(), o.t);
    inits = gray_initials(*e.gray_inputs, width, rule.colours(), boundary).members;
    params["inputs"] = {{"scheme", "gray"}, {"count", *e.gray_inputs}};
    params["width"] = width;
  } else {
    const std::size_t width = e.width_given ? o.width : light_cone_width(1, rule.radius(), o.t);
    inits = random_initials(*e.random_inputs, width, o.seed, o.density, rule.colours(), boundary).members;
    params["inputs"] = {{"scheme", "random"}, {"count", *e.random_inputs}, {"seed", o.seed}, {"density", o.density}};
    params["width"] = width;
  }

  for (std::size_t j = 0; j < inits.size(); ++j) {
    const Evolution evo = evolve(rule, inits[j], o.t);
    outputs.add(numbered("evolution", j, inits.size(), ".pbm"), pbm_p4(evo, kManifestName));
    if (e.raw) outputs.add(numbered("evolution", j, inits.size(), ".bin"), serialize(evo));
  }
  params["rule_id"] = rule.id();
  finish(outputs, "evolve", command_line, params, out_dir);
  std::cout << "wrote " << inits.size() << " evolution(s) to " << out_dir << "\n";
  return kExitOk;
}

// coeff ----------------------------------------------------------------------

int run_coeff(const ModelOptions& o, const std::string& rule, const std::vector<std::string>& command_line,
              const std::string& out_dir) {
  Computed c;
  c.result = compute_one(o, rule);
  c.epsilon = zero_band(o, c.epsilon_source);

  Json doc;
  doc["schema"] = kCoefficientSchema;
  doc["manifest"] = kManifestName;
  doc["result"] = to_json(c.result);
  doc["epsilon"] = c.epsilon;
  doc["epsilon_source"] = c.epsilon_source;
  doc["is_zero_computer"] = is_zero_computer(c.result, c.epsilon);
  doc["computes"] = computes(c.result, c.epsilon);

  OutputSet outputs;
  outputs.add("coeff.json", doc.dump(2) + "\n");
  outputs.add("curve.csv", curve_csv(c.result.curve, kManifestName));
  Json params = o.to_json();
  params["rule"] = rule;
  finish(outputs, "coeff", command_line, params, out_dir);
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

// sweep ----------------------------------------------------------------------

int run_sweep(const ModelOptions& o, bool no_cluster, const std::vector<std::string>& command_line,
              const std::string& out_dir) {
  if (o.model != "eca") throw UsageError("sweep covers elementary rules only");
  if (o.family != "gray") throw UsageError("sweep uses the Gray family");
  if (o.boundary != "cyclic") throw UsageError("sweep uses cyclic boundaries");
  SweepParams p;
  p.t_max = o.t;
  p.n = o.n;
  p.width = o.width;
  p.options = o.coefficient_options();
  p.epsilon = o.epsilon;
  p.cluster = !no_cluster;
  p.workers = 0;
  SweepReport report = sweep_eca(p);
  report.manifest_ref = kManifestName;

  OutputSet outputs;
  outputs.add("sweep.csv", sweep_csv(report, kManifestName));
  outputs.add("sweep.json", sweep_json(report).dump(2) + "\n");
  Json params = o.to_json();
  params["cluster"] = !no_cluster;
  finish(outputs, "sweep", command_line, params, out_dir);
  std::cout << "epsilon " << format_double(report.epsilon) << "\ntop:";
  for (std::size_t i = 0; i < std::min<std::size_t>(10, report.ranking.size()); ++i)
    std::cout << " " << report.ranking[i];
  std::cout << "\nwrote sweep.csv, sweep.json to " << out_dir << "\n";
  return kExitOk;
}

// compare --------------------------------------------------------------------

struct CompareOptions {
  ModelOptions model;
  std::string a, b;
  std::optional<double> c;
  std::vector<std::size_t> grid_t, grid_n;
  std::optional<std::size_t> a_t, b_t, a_n, b_n, a_width, b_width;
  bool exact = false;
};

int run_compare(const CompareOptions& co, const std::vector<std::string>& command_line, const std::string& out_dir) {
  const ModelOptions& base = co.model;
  auto side = [&](std::optional<std::size_t> t, std::optional<std::size_t> n, std::optional<std::size_t> width) {
    ModelOptions o = base;
    if (t) o.t = *t;
    if (n) o.n = *n;
    if (width) o.width = *width;
    return o;
  };
  const ModelOptions oa = side(co.a_t, co.a_n, co.a_width);
  const ModelOptions ob = side(co.b_t, co.b_n, co.b_width);

  Json doc;
  doc["schema"] = kCompareSchema;
  doc["manifest"] = kManifestName;
  doc["a"] = co.a;
  doc["b"] = co.b;

  std::string source;
  const double epsilon = zero_band(oa, source);
  int code = kExitOk;

  if (co.c) {
    if (!(*co.c > 0.0)) throw UsageError("--c must be positive");
    const CoefficientResult ra = compute_one(oa, co.a);
    const CoefficientResult rb = compute_one(ob, co.b);
    doc["definition"] = "c-equivalence";
    doc["c"] = *co.c;
    doc["grid"] = {{"a", to_json(ra.params)}, {"b", to_json(rb.params)}};
    try {
      doc["equivalent"] = c_equivalent(ra, rb, *co.c);
      doc["incomparable"] = false;
    } catch (const IncomparableError& err) {
      doc["equivalent"] = nullptr;
      doc["incomparable"] = true;
      doc["reason"] = err.what();
      code = kExitIncomparable;
    }
    doc["result_a"] = to_json(ra);
    doc["result_b"] = to_json(rb);
  } else {
    const std::vector<std::size_t> ts = co.grid_t.empty() ? std::vector<std::size_t>{base.t} : co.grid_t;
    const std::vector<std::size_t> ns = co.grid_n.empty() ? std::vector<std::size_t>{base.n} : co.grid_n;
    CoefficientGrid ga, gb;
    Json points = Json::array();
    for (auto t : ts)
      for (auto n : ns) {
        ModelOptions pa = oa, pb = ob;
        pa.t = co.a_t.value_or(t);
        pa.n = co.a_n.value_or(n);
        pb.t = co.b_t.value_or(t);
        pb.n = co.b_n.value_or(n);
        ga.points.push_back(compute_one(pa, co.a));
        gb.points.push_back(compute_one(pb, co.b));
        points.push_back({{"a", ga.points.back().c_value}, {"b", gb.points.back().c_value}, {"t", t}, {"n", n}});
      }
    doc["definition"] = "behavioural-equivalence";
    doc["zero_band"] = co.exact ? Json(nullptr) : Json(epsilon);
    doc["grid"] = {{"t", ts}, {"n", ns}, {"width", base.width}, {"compressor_id", compressor_id()}};
    try {
      doc["equivalent"] = behaviourally_equivalent(ga, gb, co.exact ? std::nullopt : std::optional<double>(epsilon));
      doc["incomparable"] = false;
    } catch (const IncomparableError& err) {
      doc["equivalent"] = nullptr;
      doc["incomparable"] = true;
      doc["reason"] = err.what();
      code = kExitIncomparable;
    }
    doc["points"] = points;
  }
  doc["epsilon"] = epsilon;
  doc["epsilon_source"] = source;

  OutputSet outputs;
  outputs.add("compare.json", doc.dump(2) + "\n");
  Json params = base.to_json();
  params["a"] = co.a;
  params["b"] = co.b;
  params["c"] = co.c ? Json(*co.c) : Json(nullptr);
  finish(outputs, "compare", command_line, params, out_dir);
  std::cout << doc.dump(2) << "\n";
  return code;
}

// replay ---------------------------------------------------------------------

int run(std::vector<std::string> args);

int run_replay(const std::string& manifest_path, const std::string& out_dir) {
  std::ifstream in(manifest_path);
  if (!in) throw UsageError("cannot read manifest " + manifest_path);
  const RunManifest manifest = RunManifest::from_json(Json::parse(in));

  std::vector<std::string> args{"ccoef"};
  for (std::size_t i = 0; i < manifest.command_line.size(); ++i) {
    const std::string& a = manifest.command_line[i];
    if (a == "--out" || a == "--workers") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0 || a.rfind("--workers=", 0) == 0) continue;
    args.push_back(a);
  }
  args.push_back("--out");
  args.push_back(out_dir);
  std::cout << "replaying: " << join_args(args) << "\n";
  const int code = run(args);
  if (code != kExitOk && code != kExitIncomparable) return code;

  std::ifstream replayed_in(std::filesystem::path(out_dir) / kManifestName);
  const RunManifest replayed = RunManifest::from_json(Json::parse(replayed_in));
  bool identical = replayed.outputs == manifest.outputs;
  for (const auto& [name, hash] : manifest.outputs) {
    const auto it = replayed.outputs.find(name);
    const bool same = it != replayed.outputs.end() && it->second == hash;
    std::cout << (same ? "same  " : "DIFF  ") << name << "\n";
  }
  std::cout << (identical ? "replay identical" : "replay differs") << "\n";
  return identical ? kExitOk : kExitInternal;
}

// ----------------------------------------------------------------------------

int run(std::vector<std::string> args) {
  CLI::App app{"Programmability coefficients for cellular automata"};
  app.require_subcommand(1);
  std::string out_dir = ".";
  std::optional<std::size_t> workers;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
    cmd->add_option("--workers", workers, std::string("worker threads (default: $") + kWorkersEnv + " or all cores)");
  };

  EvolveOptions ev;
  ev.model.t = 100;
  auto* evolve_cmd = app.add_subcommand("evolve", "render space-time diagrams as PBM");
  add_model_options(*evolve_cmd, ev.model);
  evolve_cmd->add_option("--rule", ev.rule, "rule number (B/S notation for life)")->capture_default_str();
  evolve_cmd->add_option("--input", ev.input, "explicit input pattern, e.g. 010");
  evolve_cmd->add_option("--gray-inputs", ev.gray_inputs, "number of Gray-code inputs");
  evolve_cmd->add_option("--random-inputs", ev.random_inputs, "number of random inputs");
  evolve_cmd->add_flag("--raw", ev.raw, "also dump serialized payloads");
  common(evolve_cmd);

  ModelOptions coeff_opts;
  std::string coeff_rule = "110";
  auto* coeff_cmd = app.add_subcommand("coeff", "programmability coefficient of one rule");
  add_model_options(*coeff_cmd, coeff_opts);
  coeff_cmd->add_option("--rule", coeff_rule, "rule number (B/S notation for life)")->capture_default_str();
  common(coeff_cmd);

  ModelOptions sweep_opts;
  bool no_cluster = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "coefficients for all 256 elementary rules");
  add_model_options(*sweep_cmd, sweep_opts, false);
  sweep_cmd->add_flag("--no-cluster", no_cluster, "skip k-means clustering");
  common(sweep_cmd);

  CompareOptions cmp;
  auto* compare_cmd = app.add_subcommand("compare", "behavioural equivalence of two rules");
  add_model_options(*compare_cmd, cmp.model);
  compare_cmd->add_option("--a", cmp.a, "first rule")->required();
  compare_cmd->add_option("--b", cmp.b, "second rule")->required();
  compare_cmd->add_option("--c", cmp.c, "tolerance for c-equivalence; omit for exact equality over the grid");
  compare_cmd->add_option("--grid-t", cmp.grid_t, "runtimes of the equality grid")->delimiter(',');
  compare_cmd->add_option("--grid-n", cmp.grid_n, "input counts of the equality grid")->delimiter(',');
  compare_cmd->add_option("--a-t", cmp.a_t, "override t for rule a");
  compare_cmd->add_option("--b-t", cmp.b_t, "override t for rule b");
  compare_cmd->add_option("--a-n", cmp.a_n, "override n for rule a");
  compare_cmd->add_option("--b-n", cmp.b_n, "override n for rule b");
  compare_cmd->add_option("--a-width", cmp.a_width, "override width for rule a");
  compare_cmd->add_option("--b-width", cmp.b_width, "override width for rule b");
  compare_cmd->add_flag("--exact", cmp.exact, "no zero-band snapping for equality");
  common(compare_cmd);

  std::string manifest_path;
  auto* replay_cmd = app.add_subcommand("replay", "re-run a manifest and compare output hashes");
  replay_cmd->add_option("--manifest", manifest_path, "manifest.json to replay")->required();
  replay_cmd->add_option("--out", out_dir, "directory for the replayed outputs")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (workers) {
    if (*workers == 0) throw UsageError("--workers must be positive");
    ::setenv(kWorkersEnv, std::to_string(*workers).c_str(), 1);
  }
  const std::vector<std::string> command_line(args.begin() + 1, args.end());

  if (*evolve_cmd) {
    ev.width_given = evolve_cmd->count("--width") > 0;
    return run_evolve(ev, command_line, out_dir);
  }
  if (*coeff_cmd) return run_coeff(coeff_opts, coeff_rule, command_line, out_dir);
  if (*sweep_cmd) return run_sweep(sweep_opts, no_cluster, command_line, out_dir);
  if (*compare_cmd) return run_compare(cmp, command_line, out_dir);
  if (*replay_cmd) return run_replay(manifest_path, out_dir);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  try {
    return run(std::move(args));
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IncomparableError& e) {
    std::cerr << "incomparable: " << e.what() << "\n";
    return kExitIncomparable;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

#include "app.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "presets.hpp"
#include "proxforce/proxforce.hpp"
#include "units.hpp"
#include "validate.hpp"

namespace proxforce::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---------------------------------------------------------------------------
// Option plumbing. Every value is captured as text so unit suffixes and the
// JSON config file go through one parser, and so "given on the command line"
// can be told apart from "filled from config".

class OptionTable {
 public:
  void add(CLI::App* app, const std::string& name, const std::string& help) {
    options_[name] = app->add_option("--" + name, values_[name], help);
  }

  void add_flag(CLI::App* app, const std::string& name, const std::string& help) {
    options_[name] = app->add_flag("--" + name, flags_[name], help);
  }

  std::optional<std::string> get(const std::string& name) const {
    const auto it = values_.find(name);
    if (it == values_.end() || it->second.empty()) return std::nullopt;
    return it->second;
  }

  bool flag(const std::string& name) const {
    const auto it = flags_.find(name);
    return it != flags_.end() && it->second;
  }

  /// Fills options not given on the command line from a config object.
  void apply_config(const nlohmann::json& cfg) {
    for (const auto& [key, value] : cfg.items()) {
      if (key == "schema") continue;
      const auto opt = options_.find(key);
      if (opt == options_.end()) {
        throw DomainError("config key '" + key + "' is not an option of this command");
      }
      if (opt->second->count() > 0) continue;
      if (flags_.contains(key)) {
        flags_[key] = value.get<bool>();
      } else if (value.is_string()) {
        values_[key] = value.get<std::string>();
      } else if (value.is_number_integer()) {
        values_[key] = std::to_string(value.get<long long>());
      } else if (value.is_number()) {
        values_[key] = format_double(value.get<double>());
      } else {
        throw DomainError("config key '" + key + "' must be a number or string");
      }
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> flags_;
  std::map<std::string, CLI::Option*> options_;
};

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!cfg.is_object() || !cfg.contains("schema") || cfg["schema"] != 1) {
    throw DomainError("config file '" + path + "' must be a JSON object with \"schema\": 1");
  }
  return cfg;
}

struct Leaf {
  Physics physics;
  Configuration configuration;
  CLI::App* app;
  OptionTable table;
};

void add_common(Leaf& leaf, const std::string& methods_help) {
  auto& t = leaf.table;
  t.add(leaf.app, "method", "Comma-separated methods: " + methods_help);
  t.add(leaf.app, "G", "Gravitational constant, m^3 kg^-1 s^-2 (default CODATA 2018)");
  t.add(leaf.app, "rtol", "Quadrature relative tolerance (default 1e-10)");
  t.add(leaf.app, "samples", "Monte Carlo sample count (default 1000000)");
  t.add(leaf.app, "seed", "Monte Carlo seed (default 0)");
  t.add(leaf.app, "L", "Monte Carlo lateral cutoff of the slab, length");
  t.add_flag(leaf.app, "stratify", "Stratify Monte Carlo samples");
  t.add(leaf.app, "jobs", "Worker threads (default $PROXFORCE_JOBS or 1)");
  t.add(leaf.app, "config", "JSON config file ({\"schema\": 1, ...}); flags take precedence");
}

void add_geometry(Leaf& leaf) {
  auto& t = leaf.table;
  auto* app = leaf.app;
  t.add(app, "rho1", "Plate density, kg/m^3");
  t.add(app, "rho2", "Sphere or upper plate density, kg/m^3");
  t.add(app, "D1", "Plate thickness (length or inf)");
  t.add(app, "a", "Closest separation (length)");
  if (leaf.configuration == Configuration::SpherePlate) {
    t.add(app, "R", "Sphere radius (length)");
  } else {
    t.add(app, "D2", "Upper plate thickness (length or inf)");
  }
  if (leaf.physics == Physics::Yukawa) {
    t.add(app, "alpha", "Yukawa strength relative to gravity");
    t.add(app, "lambda", "Yukawa range (length)");
  }
}

void add_layered(Leaf& leaf) {
  auto& t = leaf.table;
  auto* app = leaf.app;
  t.add(app, "preset", "Experiment geometry: ref20, ref21-22, ref23");
  t.add(app, "R", "Sphere radius (length)");
  t.add(app, "D1", "Plate substrate thickness (length or inf)");
  t.add(app, "d1p", "Plate inner coating thickness");
  t.add(app, "d1pp", "Plate outer coating thickness");
  t.add(app, "d2p", "Sphere inner coating thickness");
  t.add(app, "d2pp", "Sphere outer coating thickness");
  t.add(app, "rho1", "Plate substrate density");
  t.add(app, "rho1p", "Plate inner coating density");
  t.add(app, "rho1pp", "Plate outer coating density");
  t.add(app, "rho2", "Sphere substrate density");
  t.add(app, "rho2p", "Sphere inner coating density");
  t.add(app, "rho2pp", "Sphere outer coating density");
  t.add(app, "a", "Separation between outer surfaces (length)");
  t.add(app, "alpha", "Yukawa strength relative to gravity");
  t.add(app, "lambda", "Yukawa range (length; preset default 0.1um)");
}

std::vector<std::string> split_methods(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw DomainError("--method needs at least one method");
  return out;
}

class JobBuilder {
 public:
  explicit JobBuilder(const OptionTable& t) : t_(t) {}

  double length(const std::string& name, bool allow_inf = false) {
    const auto v = t_.get(name);
    if (!v) {
      missing_.push_back("--" + name);
      return kNaN;
    }
    return parse_length(*v, allow_inf);
  }

  double number(const std::string& name) {
    const auto v = t_.get(name);
    if (!v) {
      missing_.push_back("--" + name);
      return kNaN;
    }
    return parse_number(*v);
  }

  double length_or(const std::string& name, double fallback, bool allow_inf = false) {
    const auto v = t_.get(name);
    return v ? parse_length(*v, allow_inf) : fallback;
  }

  double number_or(const std::string& name, double fallback) {
    const auto v = t_.get(name);
    return v ? parse_number(*v) : fallback;
  }

  void finish(const std::string& context) const {
    if (missing_.empty()) return;
    std::string msg = context + ": missing required parameter(s):";
    for (const auto& m : missing_) msg += " " + m;
    throw DomainError(msg);
  }

 private:
  const OptionTable& t_;
  std::vector<std::string> missing_;
};

std::uint64_t parse_count(const std::string& text, const char* what) {
  const double v = parse_number(text);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1.8e19) {
    throw DomainError(std::string(what) + " must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(v);
}

Job build_job(const Leaf& leaf, unsigned default_jobs) {
  const OptionTable& t = leaf.table;
  Job job;
  job.physics = leaf.physics;
  job.configuration = leaf.configuration;
  JobBuilder b(t);

  const bool gravity = leaf.physics == Physics::Gravity;
  if (leaf.configuration == Configuration::Layered) {
    std::optional<Preset> preset;
    if (const auto name = t.get("preset")) {
      preset = find_preset(*name);
      if (!preset) throw DomainError("unknown preset '" + *name + "'");
      job.preset = std::string(preset->name);
    }
    auto geo = [&](const std::string& name, double preset_value, bool inf = false) {
      return preset ? b.length_or(name, preset_value, inf) : b.length(name, inf);
    };
    job.radius = geo("R", preset ? preset->radius : 0.0);
    job.d1 = geo("D1", preset ? preset->plate_thickness : 0.0, true);
    job.d1_inner = geo("d1p", preset ? preset->plate_inner : 0.0);
    job.d1_outer = geo("d1pp", preset ? preset->plate_outer : 0.0);
    job.d2_inner = geo("d2p", preset ? preset->sphere_inner : 0.0);
    job.d2_outer = geo("d2pp", preset ? preset->sphere_outer : 0.0);
    job.lambda = preset ? b.length_or("lambda", preset->lambda) : b.length("lambda");
    job.rho1 = b.number("rho1");
    job.rho1_inner = b.number("rho1p");
    job.rho1_outer = b.number("rho1pp");
    job.rho2 = b.number("rho2");
    job.rho2_inner = b.number("rho2p");
    job.rho2_outer = b.number("rho2pp");
    job.a = b.length("a");
    job.alpha = b.number("alpha");
  } else {
    job.rho1 = b.number("rho1");
    job.rho2 = b.number("rho2");
    job.d1 = b.length("D1", true);
    if (leaf.configuration == Configuration::SpherePlate) {
      job.radius = b.length("R");
      // Gravity is separation independent; the separation only places the
      // ball for the oracles.
      job.a = gravity ? b.length_or("a", 0.1 * job.radius) : b.length("a");
    } else {
      job.d2 = b.length("D2", true);
      job.a = b.length("a");
    }
    if (!gravity) {
      job.alpha = b.number("alpha");
      job.lambda = b.length("lambda");
    }
  }
  b.finish(job.command());

  const std::string default_methods =
      leaf.configuration == Configuration::Layered ? "exact,pfa-simple" : "exact";
  job.methods = split_methods(t.get("method").value_or(default_methods));
  job.G = b.number_or("G", kNewtonG);
  job.rtol = b.number_or("rtol", 1e-10);
  if (const auto s = t.get("samples")) job.samples = parse_count(*s, "--samples");
  if (const auto s = t.get("seed")) job.seed = parse_count(*s, "--seed");
  if (const auto s = t.get("L")) job.lateral_cutoff = parse_length(*s);
  job.stratify = t.flag("stratify");
  job.jobs = default_jobs;
  if (const auto s = t.get("jobs")) {
    job.jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, parse_count(*s, "--jobs")));
  }
  return job;
}

// ---------------------------------------------------------------------------
// Command-line tree

struct Tree {
  CLI::App app{"proxforce"};
  std::vector<std::unique_ptr<Leaf>> leaves;

  Tree() {
    app.require_subcommand(1);
    auto* gravity = app.add_subcommand("gravity", "Newtonian gravity");
    auto* yukawa = app.add_subcommand("yukawa", "Yukawa-type correction to gravity");
    gravity->require_subcommand(1);
    yukawa->require_subcommand(1);

    auto make = [&](CLI::App* parent, const char* name, const char* help, Physics ph,
                    Configuration cf) -> Leaf& {
      auto leaf = std::make_unique<Leaf>(Leaf{ph, cf, parent->add_subcommand(name, help), {}});
      leaves.push_back(std::move(leaf));
      return *leaves.back();
    };

    auto& gsp = make(gravity, "sphere-plate", "Ball above a plate", Physics::Gravity,
                     Configuration::SpherePlate);
    add_geometry(gsp);
    add_common(gsp, "exact, pfa (general PFA), mc, quad-oracle");
    auto& gpp = make(gravity, "plate-plate", "Two parallel plates (pressure)",
                     Physics::Gravity, Configuration::PlatePlate);
    add_geometry(gpp);
    add_common(gpp, "exact, mc, quad-oracle");

    auto& ysp = make(yukawa, "sphere-plate", "Ball above a plate", Physics::Yukawa,
                     Configuration::SpherePlate);
    add_geometry(ysp);
    add_common(ysp, "exact, pfa-general, pfa-simple, mc, quad-oracle");
    auto& ypp = make(yukawa, "plate-plate", "Two parallel plates (pressure)",
                     Physics::Yukawa, Configuration::PlatePlate);
    add_geometry(ypp);
    add_common(ypp, "exact, mc, quad-oracle");
    auto& ylay = make(yukawa, "layered", "Coated sphere above a coated plate",
                      Physics::Yukawa, Configuration::Layered);
    add_layered(ylay);
    add_common(ylay, "exact (sphere-plate force), pfa-simple (2 pi R E mapping)");
  }

  Leaf* selected() {
    for (auto& leaf : leaves) {
      if (leaf->app->parsed()) return leaf.get();
    }
    return nullptr;
  }
};

void parse_into(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);
}

// ---------------------------------------------------------------------------
// Evaluation

Thickness thickness_of(double d) {
  return std::isinf(d) ? Thickness::infinite() : Thickness::finite(d);
}

QuadratureConfig quad_of(const Job& job) {
  QuadratureConfig q;
  q.rel_tol = job.rtol;
  return q;
}

McConfig mc_of(const Job& job) {
  return McConfig{job.samples, job.seed, job.stratify, job.jobs};
}

std::vector<std::pair<std::string, double>> inputs_of(const Job& job) {
  std::vector<std::pair<std::string, double>> in;
  if (job.configuration == Configuration::Layered) {
    in = {{"R", job.radius},          {"D1", job.d1},
          {"d1p", job.d1_inner},      {"d1pp", job.d1_outer},
          {"d2p", job.d2_inner},      {"d2pp", job.d2_outer},
          {"rho1", job.rho1},         {"rho1p", job.rho1_inner},
          {"rho1pp", job.rho1_outer}, {"rho2", job.rho2},
          {"rho2p", job.rho2_inner},  {"rho2pp", job.rho2_outer},
          {"a", job.a},               {"alpha", job.alpha},
          {"lambda", job.lambda}};
  } else {
    in = {{"rho1", job.rho1}, {"rho2", job.rho2}, {"D1", job.d1}};
    if (job.configuration == Configuration::SpherePlate) {
      in.emplace_back("R", job.radius);
    } else {
      in.emplace_back("D2", job.d2);
    }
    in.emplace_back("a", job.a);
    if (job.physics == Physics::Yukawa) {
      in.emplace_back("alpha", job.alpha);
      in.emplace_back("lambda", job.lambda);
    }
  }
  in.emplace_back("G", job.G);
  in.emplace_back("rtol", job.rtol);
  in.emplace_back("samples", static_cast<double>(job.samples));
  in.emplace_back("stratify", job.stratify ? 1.0 : 0.0);
  if (job.lateral_cutoff) in.emplace_back("L", *job.lateral_cutoff);
  return in;
}

RunRecord base_record(const Job& job, const std::string& method, const char* unit) {
  RunRecord r;
  r.command = job.command();
  r.preset = job.preset;
  r.inputs_si = inputs_of(job);
  r.method = method;
  r.unit = unit;
  return r;
}

void fill(RunRecord& r, const ForceResult& f) {
  r.value = f.value;
  r.error_estimate = f.error_estimate;
  r.diagnostics = f.diagnostics;
}

PairKernel kernel_of(const Job& job) {
  return job.physics == Physics::Gravity
             ? PairKernel::gravity(job.G)
             : PairKernel::yukawa(YukawaParams(job.alpha, job.lambda), job.G);
}

// Gravity needs an explicit lateral cutoff in the library; the CLI picks one
// from the geometry and echoes it in the record.
std::optional<double> cutoff_for(const Job& job) {
  if (job.lateral_cutoff || job.physics == Physics::Yukawa) return job.lateral_cutoff;
  const double size = job.configuration == Configuration::SpherePlate ? job.radius : job.d2;
  const double d1 = std::isinf(job.d1) ? 0.0 : job.d1;
  return 10.0 * std::max({size, d1, job.a});
}

[[noreturn]] void not_applicable(const Job& job, const std::string& method) {
  throw DomainError("method '" + method + "' is not available for '" + job.command() + "'");
}

ForceResult sphere_plate(const Job& job, const std::string& method) {
  const Sphere sphere(job.rho2, job.radius);
  const Plate plate(job.rho1, thickness_of(job.d1));
  const Gap gap(job.a);
  const bool gravity = job.physics == Physics::Gravity;
  if (method == "exact") {
    if (gravity) return ForceResult{grav_sphere_plate_force(sphere, plate, job.G), Method::Exact, 0.0, {}};
    const YukawaParams p(job.alpha, job.lambda);
    ForceResult f{yukawa_sphere_plate_force_exact(sphere, plate, gap, p, job.G), Method::Exact, 0.0, {}};
    f.with("lambda_over_R", job.lambda / job.radius);
    f.with("finite_size_factor", sphere_finite_size_factor(job.lambda / job.radius));
    return f;
  }
  if (method == "pfa" || method == "pfa-general") {
    if (gravity) return grav_sphere_plate_force_pfa(sphere, plate, quad_of(job), job.G);
    return yukawa_sphere_plate_force_pfa_general(sphere, plate, gap,
                                                 YukawaParams(job.alpha, job.lambda),
                                                 quad_of(job), job.G);
  }
  if (method == "pfa-simple") {
    if (gravity) return grav_sphere_plate_force_pfa_simple(sphere, plate, gap, job.G);
    return yukawa_sphere_plate_force_pfa_simple(sphere, plate, gap,
                                                YukawaParams(job.alpha, job.lambda), job.G);
  }
  const auto slab = SolidBody::slab(job.rho1, thickness_of(job.d1), 0.0, cutoff_for(job));
  const auto ball = SolidBody::ball(job.rho2, job.radius, job.a + job.radius);
  if (method == "mc") return oracle_mc_force(slab, ball, kernel_of(job), mc_of(job));
  if (method == "quad-oracle") return oracle_quad_force(slab, ball, kernel_of(job), quad_of(job));
  not_applicable(job, method);
}

ForceResult plate_plate(const Job& job, const std::string& method) {
  const Plate lower(job.rho1, thickness_of(job.d1));
  const Plate upper(job.rho2, thickness_of(job.d2));
  const bool gravity = job.physics == Physics::Gravity;
  if (method == "exact") {
    if (gravity) {
      return ForceResult{grav_plate_plate_pressure(lower, upper, job.G), Method::Exact, 0.0, {}};
    }
    const Gap gap(job.a);
    const YukawaParams p(job.alpha, job.lambda);
    ForceResult f{yukawa_plate_plate_pressure(lower, upper, gap, p, job.G), Method::Exact, 0.0, {}};
    f.with("energy_per_area", yukawa_plate_plate_energy(lower, upper, gap, p, job.G));
    return f;
  }
  if (method == "quad-oracle") {
    const auto slab1 = SolidBody::slab(job.rho1, thickness_of(job.d1), 0.0);
    const auto slab2 =
        SolidBody::slab(job.rho2, thickness_of(job.d2), job.a + (std::isinf(job.d2) ? 0.0 : job.d2));
    return oracle_quad_force(slab1, slab2, kernel_of(job), quad_of(job));
  }
  if (method == "mc") {
    if (std::isinf(job.d2)) throw DomainError("Monte Carlo needs a finite upper plate thickness");
    std::optional<double> cutoff = cutoff_for(job);
    if (!cutoff) {
      cutoff = std::max({50.0 * job.lambda, 10.0 * job.d2, 10.0 * job.a});
    }
    const auto slab1 = SolidBody::slab(job.rho1, thickness_of(job.d1), 0.0, cutoff);
    const auto slab2 = SolidBody::slab(job.rho2, thickness_of(job.d2), job.a + job.d2, cutoff);
    ForceResult f = oracle_mc_force(slab1, slab2, kernel_of(job), mc_of(job));
    const double area = kPi * *cutoff * *cutoff;
    f.value /= area;
    f.error_estimate /= area;
    f.with("area", area);
    return f;
  }
  not_applicable(job, method);
}

std::vector<RunRecord> layered(const Job& job) {
  std::vector<Layer> plate_layers;
  std::vector<Layer> sphere_layers;
  plate_layers.emplace_back(job.d1_inner, job.rho1_inner);
  plate_layers.emplace_back(job.d1_outer, job.rho1_outer);
  sphere_layers.emplace_back(job.d2_inner, job.rho2_inner);
  sphere_layers.emplace_back(job.d2_outer, job.rho2_outer);
  const LayeredBodyPair pair(LayerStack(job.rho1, thickness_of(job.d1), plate_layers),
                             LayerStack::sphere(job.rho2, job.radius, sphere_layers),
                             Gap(job.a));
  const YukawaParams p(job.alpha, job.lambda);

  std::vector<RunRecord> out;
  for (const auto& method : job.methods) {
    RunRecord r = base_record(job, method, "N");
    if (method == "exact") {
      fill(r, yukawa_layered_sphere_plate_force(pair, p, job.G));
    } else if (method == "pfa-simple") {
      const ForceResult e = yukawa_layered_plate_energy(pair, p, job.G);
      const auto m = yukawa_mapping_error(pair, p);
      r.value = 2.0 * kPi * job.radius * e.value;
      r.diagnostics = e.diagnostics;
      r.diagnostics.push_back({"energy_per_area", e.value});
      r.diagnostics.push_back({"ratio_1", m.ratio_1});
      r.diagnostics.push_back({"ratio_2", m.ratio_2});
      r.diagnostics.push_back({"rel_mapping_error", m.rel_mapping_error});
    } else {
      not_applicable(job, method);
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Output

void emit(const std::vector<RunRecord>& records, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    write_csv(out, records);
  } else {
    for (const auto& r : records) out << to_json_line(r) << '\n';
  }
}

void summarize(const std::vector<RunRecord>& records, std::ostream& err) {
  for (const auto& r : records) {
    err << r.command << " [" << r.method << "] ";
    if (r.ok()) {
      err << format_double(r.value) << ' ' << r.unit;
      if (r.error_estimate > 0.0) err << " +/- " << format_double(r.error_estimate);
    } else {
      err << r.status;
    }
    err << '\n';
  }
}

std::string check_format(const std::string& format) {
  if (format != "jsonl" && format != "json-lines" && format != "csv") {
    throw DomainError("--format must be jsonl or csv");
  }
  return format;
}

// Pulls "--format X" / "--format=X" out of an argument list.
std::string take_format(std::vector<std::string>& args) {
  std::string format = "jsonl";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format" && i + 1 < args.size()) {
      format = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      --i;
    } else if (args[i].starts_with("--format=")) {
      format = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      --i;
    }
  }
  return check_format(format);
}

// ---------------------------------------------------------------------------
// Sweep

void set_variable(Job& job, const std::string& var, double value) {
  if (var == "a") {
    job.a = value;
  } else if (var == "lambda") {
    job.lambda = value;
  } else if (var == "R") {
    job.radius = value;
  } else if (var == "alpha") {
    job.alpha = value;
  } else {
    throw DomainError("--var must be one of a, lambda, R, alpha");
  }
}

int run_sweep(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto sep = std::find(args.begin(), args.end(), "--");
  std::vector<std::string> own(args.begin(), sep);
  std::vector<std::string> base(sep == args.end() ? sep : sep + 1, args.end());

  CLI::App app{"Evaluate a base command over a one-parameter grid.\n"
               "Usage: proxforce sweep --var lambda --from 1nm --to 1um --points 50 "
               "--scale log -- yukawa sphere-plate ...",
               "proxforce sweep"};
  std::string var, from, to, scale = "log", format = "jsonl", jobs_text;
  std::uint64_t points = 0;
  app.add_option("--var", var, "Swept parameter: a, lambda, R, alpha")->required();
  app.add_option("--from", from, "First grid value")->required();
  app.add_option("--to", to, "Last grid value")->required();
  app.add_option("--points", points, "Number of grid points (>= 2)")->required();
  app.add_option("--scale", scale, "log or linear");
  app.add_option("--format", format, "jsonl or csv");
  app.add_option("--jobs", jobs_text, "Concurrent grid points");
  try {
    parse_into(app, own);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  check_format(format);
  if (base.empty()) throw DomainError("sweep needs a base command after '--'");
  unsigned jobs = default_jobs_from_env();
  if (!jobs_text.empty()) jobs = static_cast<unsigned>(std::max(1.0, parse_number(jobs_text)));
  const Job proto = parse_job(base, 1);

  const auto as_value = [&](const std::string& text) {
    return var == "alpha" ? parse_number(text) : parse_length(text);
  };
  const double lo = as_value(from);
  const double hi = as_value(to);
  if (points < 2) throw DomainError("--points must be at least 2");
  if (!(lo < hi)) throw DomainError("--from must be smaller than --to");
  if (scale != "log" && scale != "linear") throw DomainError("--scale must be log or linear");
  if (scale == "log" && !(lo > 0.0)) throw DomainError("log sweep needs a positive range");

  std::vector<double> grid(points);
  for (std::uint64_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = scale == "log" ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  grid.front() = lo;
  grid.back() = hi;

  std::vector<std::vector<RunRecord>> rows(points);
  auto evaluate_point = [&](std::uint64_t i) {
    Job job = proto;
    std::vector<RunRecord> recs;
    try {
      set_variable(job, var, grid[i]);
      recs = evaluate(job);
    } catch (const std::exception& e) {
      recs.clear();
      for (const auto& m : job.methods) {
        RunRecord r = base_record(job, m, "");
        r.value = kNaN;
        r.error_estimate = kNaN;
        r.status = std::string("error: ") + e.what();
        recs.push_back(std::move(r));
      }
    }
    for (auto& r : recs) {
      r.sweep_var = var;
      r.sweep_value = grid[i];
    }
    rows[i] = std::move(recs);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points)));
  if (workers == 1) {
    for (std::uint64_t i = 0; i < points; ++i) evaluate_point(i);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t i = next++; i < points; i = next++) evaluate_point(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<RunRecord> all;
  for (auto& r : rows) {
    for (auto& rec : r) all.push_back(std::move(rec));
  }
  emit(all, format, out);
  const auto failed = std::count_if(all.begin(), all.end(), [](const auto& r) { return !r.ok(); });
  err << "sweep: " << points << " points, " << all.size() << " rows, " << failed
      << " failed\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Validate

int run_validate_command(const std::vector<std::string>& args, std::ostream& out,
                         std::ostream& err) {
  CLI::App app{"Run the built-in validation checks", "proxforce validate"};
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::string jobs_text;
  app.add_option("--suite", suite, "gravity, yukawa, layered or all");
  app.add_option("--seed", seed, "Seed for randomized parameters and Monte Carlo");
  app.add_option("--jobs", jobs_text, "Monte Carlo worker threads");
  try {
    parse_into(app, args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  unsigned jobs = default_jobs_from_env();
  if (!jobs_text.empty()) jobs = static_cast<unsigned>(std::max(1.0, parse_number(jobs_text)));
  const auto s = parse_suite(suite);
  if (!s) throw DomainError("--suite must be gravity, yukawa, layered or all");
  return run_validation(*s, seed, jobs, out) ? kExitOk : kExitValidationFailed;
}

constexpr const char* kUsage =
    "proxforce: gravitational and Yukawa forces by exact, PFA and oracle methods\n"
    "\n"
    "Usage:\n"
    "  proxforce gravity {sphere-plate|plate-plate} [options]\n"
    "  proxforce yukawa {sphere-plate|plate-plate|layered} [options]\n"
    "  proxforce sweep --var V --from X --to Y --points N [--scale log|linear]\n"
    "                  [--format jsonl|csv] [--jobs N] -- <gravity|yukawa command>\n"
    "  proxforce validate [--suite gravity|yukawa|layered|all] [--seed S] [--jobs N]\n"
    "\n"
    "Lengths accept nm, um, mm, cm, m suffixes (bare numbers are metres).\n"
    "Output is JSON lines on stdout (--format csv for CSV); summaries go to stderr.\n"
    "Exit codes: 0 success, 1 validation failure, 2 usage or domain error.\n"
    "Use --help after a subcommand for its options.\n";

}  // namespace

std::string Job::command() const {
  std::string out = physics == Physics::Gravity ? "gravity " : "yukawa ";
  switch (configuration) {
    case Configuration::SpherePlate:
      return out + "sphere-plate";
    case Configuration::PlatePlate:
      return out + "plate-plate";
    case Configuration::Layered:
      return out + "layered";
  }
  return out;
}

unsigned default_jobs_from_env() {
  if (const char* env = std::getenv("PROXFORCE_JOBS")) {
    try {
      const double v = parse_number(env);
      if (v >= 1.0) return static_cast<unsigned>(v);
    } catch (const DomainError&) {
    }
  }
  return 1;
}

Job parse_job(const std::vector<std::string>& args, unsigned default_jobs) {
  Tree tree;
  parse_into(tree.app, args);
  Leaf* leaf = tree.selected();
  if (!leaf) throw DomainError("expected gravity or yukawa command");
  if (const auto path = leaf->table.get("config")) {
    leaf->table.apply_config(load_config(*path));
  }
  return build_job(*leaf, default_jobs);
}

std::vector<RunRecord> evaluate(const Job& job) {
  if (job.configuration == Configuration::Layered) return layered(job);

  std::vector<RunRecord> out;
  for (const auto& method : job.methods) {
    const char* unit = job.configuration == Configuration::SpherePlate ? "N" : "Pa";
    RunRecord r = base_record(job, method, unit);
    if (method == "mc") {
      r.seed = job.seed;
      if (const auto c = cutoff_for(job); c && !job.lateral_cutoff) {
        r.inputs_si.emplace_back("L", *c);
      }
    }
    try {
      fill(r, job.configuration == Configuration::SpherePlate ? sphere_plate(job, method)
                                                              : plate_plate(job, method));
    } catch (const QuadratureError& e) {
      r.value = e.best_estimate();
      r.error_estimate = e.achieved_error();
      r.status = std::string("error: ") + e.what();
    } catch (const NonFiniteIntegrand& e) {
      r.value = kNaN;
      r.error_estimate = kNaN;
      r.status = std::string("error: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw_args;
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    (args.empty() ? err : out) << kUsage;
    return args.empty() ? kExitUsage : kExitOk;
  }
  if (args[0] == "--version") {
    out << "proxforce " << kToolVersion << '\n';
    return kExitOk;
  }
  try {
    if (args[0] == "sweep") {
      return run_sweep({args.begin() + 1, args.end()}, out, err);
    }
    if (args[0] == "validate") {
      return run_validate_command({args.begin() + 1, args.end()}, out, err);
    }
    const std::string format = take_format(args);
    Tree tree;
    try {
      parse_into(tree.app, args);
    } catch (const CLI::ParseError& e) {
      const int code = tree.app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }
    Leaf* leaf = tree.selected();
    if (!leaf) throw DomainError("expected gravity or yukawa command");
    if (const auto path = leaf->table.get("config")) {
      leaf->table.apply_config(load_config(*path));
    }
    const Job job = build_job(*leaf, default_jobs_from_env());
    const auto records = evaluate(job);
    emit(records, format, out);
    summarize(records, err);
    const bool all_ok = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.ok(); });
    return all_ok ? kExitOk : kExitUsage;
  } catch (const PreconditionViolation& e) {
    err << "error: precondition violated: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace proxforce::cli

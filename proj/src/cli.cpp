#include "digon/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "digon/bounds.hpp"
#include "digon/extremal_map.hpp"
#include "digon/harness.hpp"
#include "digon/map_json.hpp"
#include "digon/plot.hpp"

namespace digon::cli {

namespace {

using nlohmann::json;

double parse_number(const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (start == std::string::npos) throw InputError("empty number");
  const char* first = text.data() + start;
  const char* last = text.data() + end + 1;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw InputError("not a number: \"" + text + "\"");
  }
  return value;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw InputError("empty list");
  return out;
}

Complex parse_complex(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 2) throw InputError("complex values use the form re,im");
  return {v[0], v[1]};
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f || !(f << text)) throw InputError("cannot write " + path);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DIGON_SEED")) {
    const std::string s(env);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw InputError("DIGON_SEED must be an unsigned integer");
    return v;
  }
  return 7;
}

// Anchor data from --theta/--alpha[/--beta] or from --config-file.
struct ConfigArgs {
  std::string theta;
  std::string alpha;
  std::string beta;
  std::string file;

  void add(CLI::App* app, bool with_beta) {
    app->add_option("--theta", theta, "anchor angles in radians, comma separated, increasing in [0, 2pi)");
    app->add_option("--alpha", alpha, "heights, comma separated, summing to 1");
    if (with_beta) app->add_option("--beta", beta, "angular derivatives at the anchors, comma separated");
    app->add_option("--config-file", file, "configuration JSON as written by `config`");
  }

  ExtremalConfig load() const {
    if (!file.empty()) {
      if (!theta.empty() || !alpha.empty()) throw InputError("give either --config-file or --theta/--alpha");
      auto config = config_from_json(read_json_file(file));
      if (!beta.empty()) config.anchors = BoundaryAnchorSet::make(config.anchors.angles, parse_list(beta));
      return config;
    }
    if (theta.empty() || alpha.empty()) throw InputError("--theta and --alpha are required");
    const auto anchors = BoundaryAnchorSet::make(parse_list(theta), beta.empty() ? std::vector<double>{} : parse_list(beta));
    return solve_deltas(anchors, HeightVector::make(parse_list(alpha)));
  }
};

struct Output {
  std::ostream& out;
  std::string path;

  void emit(const json& j) const {
    const std::string text = j.dump(2) + "\n";
    if (!path.empty()) write_text_file(path, text);
    out << text;
  }
};

std::vector<double> ray_angles_for(const ExtremalConfig& config, int rays) {
  auto angles = anchor_ray_angles(config);
  for (int k = 0; k < rays; ++k) angles.push_back(kTwoPi * k / rays);
  return angles;
}

json sampled_summary(const SampledMap& s) {
  json rays = json::array();
  for (const auto& r : s.rays) {
    json ray{{"angle", r.angle},
             {"samples", r.samples.size()},
             {"truncated", r.truncated},
             {"last_good_radius", r.last_good_radius}};
    if (!r.reason.empty()) ray["reason"] = r.reason;
    if (!r.samples.empty()) ray["w_end"] = complex_to_json(r.samples.back().w);
    rays.push_back(ray);
  }
  return {{"c", s.origin_slope}, {"max_qd_residual", s.max_qd_residual()}, {"rays", rays}};
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp bounds for univalent self-maps of the disk with boundary fixed points"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");
  int status = kExitOk;
  std::string out_path;
  auto emit = [&](const json& j) { Output{out, out_path}.emit(j); };

  // config
  ConfigArgs config_args;
  auto* config_cmd = app.add_subcommand("config", "solve for the zeros e^{i delta_k} of the extremal configuration");
  config_args.add(config_cmd, true);
  config_cmd->add_option("--out", out_path, "also write the JSON to this file");
  config_cmd->callback([&] { emit(config_to_json(config_args.load())); });

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "evaluate a lower bound for |phi'(z)|");
  bound_cmd->require_subcommand(1);
  std::string z_text, w_text, beta_text, alpha_text, map_file;
  auto* theorem_a = bound_cmd->add_subcommand("theorem-a", "one boundary fixed point at 1");
  theorem_a->add_option("--z", z_text, "point z as re,im")->required();
  theorem_a->add_option("--w", w_text, "image w = phi(z) as re,im");
  theorem_a->add_option("--beta", beta_text, "phi'(1)")->required();
  theorem_a->add_option("--map-file", map_file, "map JSON; supplies w and the actual |phi'(z)|");
  theorem_a->callback([&] {
    const Complex z = parse_complex(z_text);
    const double beta = parse_number(beta_text);
    std::optional<MapExpr> map;
    if (!map_file.empty()) map = map_from_json(read_json_file(map_file));
    if (!map && w_text.empty()) throw InputError("give --w or --map-file");
    const Complex w = map ? map_eval(*map, DiskPoint{z}).value() : parse_complex(w_text);
    BoundReport r;
    r.as_printed = bound_theorem_a(z, w, beta, Variant::AsPrinted);
    r.derived_consistent = bound_theorem_a(z, w, beta, Variant::DerivedConsistent);
    if (map) {
      r.actual = std::abs(map_deriv(*map, DiskPoint{z}));
      r.slack = *r.actual - r.operative_bound();
    }
    json j = report_to_json(r);
    j["w"] = complex_to_json(w);
    emit(j);
    if (r.slack && *r.slack < -1e-8 * std::max(1.0, r.operative_bound())) status = kExitFinding;
  });

  auto* origin = bound_cmd->add_subcommand("origin", "maps fixing 0 with n boundary fixed points");
  origin->add_option("--beta", beta_text, "angular derivatives, comma separated")->required();
  origin->add_option("--alpha", alpha_text, "heights, comma separated")->required();
  origin->callback([&] {
    const auto betas = parse_list(beta_text);
    emit({{"bound", bound_origin(betas, HeightVector::make(parse_list(alpha_text)))}});
  });

  ConfigArgs general_args;
  auto* general = bound_cmd->add_subcommand("general", "n boundary fixed points, z not fixed");
  general_args.add(general, true);
  general->add_option("--z", z_text, "point z as re,im")->required();
  general->add_option("--w", w_text, "image w = phi(z) as re,im");
  general->add_option("--map-file", map_file, "map JSON; supplies w and the actual |phi'(z)|");
  general->callback([&] {
    const auto config = general_args.load();
    if (!config.anchors.has_betas()) throw InputError("--beta is required");
    const Complex z = parse_complex(z_text);
    std::optional<MapExpr> map;
    if (!map_file.empty()) map = map_from_json(read_json_file(map_file));
    if (!map && w_text.empty()) throw InputError("give --w or --map-file");
    const Complex w = map ? map_eval(*map, DiskPoint{z}).value() : parse_complex(w_text);
    BoundReport r;
    r.as_printed = bound_general(z, w, config.anchors, config.heights, Variant::AsPrinted);
    r.derived_consistent = bound_general(z, w, config.anchors, config.heights, Variant::DerivedConsistent);
    if (map) {
      r.actual = std::abs(map_deriv(*map, DiskPoint{z}));
      r.slack = *r.actual - r.operative_bound();
    }
    json j = report_to_json(r);
    j["w"] = complex_to_json(w);
    json moduli = json::object();
    for (std::size_t k = 0; k < config.size(); ++k) {
      moduli[std::to_string(k)] = {
          {"as_printed", {{"z", reduced_modulus_general(config, z, k, Variant::AsPrinted)},
                          {"w", reduced_modulus_general(config, w, k, Variant::AsPrinted)}}},
          {"derived_consistent", {{"z", reduced_modulus_general(config, z, k, Variant::DerivedConsistent)},
                                  {"w", reduced_modulus_general(config, w, k, Variant::DerivedConsistent)}}}};
    }
    j["moduli"] = moduli;
    emit(j);
    if (r.slack && *r.slack < -1e-8 * std::max(1.0, r.operative_bound())) status = kExitFinding;
  });

  // optimal-alpha
  auto* optimal = app.add_subcommand("optimal-alpha", "heights maximizing the origin bound for given betas");
  optimal->add_option("--beta", beta_text, "angular derivatives > 1, comma separated")->required();
  optimal->callback([&] {
    const auto betas = parse_list(beta_text);
    const auto heights = optimal_alpha(betas);
    emit({{"alpha", heights.alphas}, {"bound", bound_origin(betas, heights)}});
  });

  // corollary
  std::string phi0_text;
  auto* corollary = app.add_subcommand("corollary", "check sum 1/log beta_j <= -2/log phi'(0)");
  corollary->add_option("--beta", beta_text, "angular derivatives > 1, comma separated")->required();
  corollary->add_option("--phi0", phi0_text, "phi'(0) in (0, 1]")->required();
  corollary->callback([&] {
    const double slack = corollary_check(parse_list(beta_text), parse_number(phi0_text));
    const bool holds = slack >= -1e-12;
    json j{{"holds", holds}};
    j["slack"] = std::isfinite(slack) ? json(slack) : json("inf");
    emit(j);
    if (!holds) status = kExitFinding;
  });

  // extremal
  auto* extremal = app.add_subcommand("extremal", "construct extremal functions");
  extremal->require_subcommand(1);
  auto* closed = extremal->add_subcommand("closed-form", "B_w^{-1} o p_alpha o B_z for the one-point bound");
  closed->add_option("--z", z_text, "point z as re,im")->required();
  closed->add_option("--w", w_text, "image w as re,im")->required();
  closed->add_option("--beta", beta_text, "phi'(1)")->required();
  closed->add_option("--out", out_path, "also write the JSON to this file");
  closed->callback([&] {
    const Complex z = parse_complex(z_text);
    const Complex w = parse_complex(w_text);
    const double beta = parse_number(beta_text);
    const auto map = extremal_theorem_a(DiskPoint{z}, DiskPoint{w}, beta);
    emit({{"alpha", alpha_star_relation(z, w, beta)}, {"description", describe(map)}, {"map", map_to_json(map)}});
  });

  ConfigArgs ode_args;
  std::string c_text;
  int rays = 8;
  double r_max = 0.9;
  std::string csv_dir;
  auto* ode = extremal->add_subcommand("ode", "integrate the extremal fixing 0 along rays");
  ode_args.add(ode, false);
  ode->add_option("--c", c_text, "phi'(0) in (0, 1]")->required();
  ode->add_option("--rays", rays, "number of equally spaced rays besides the anchor rays")->check(CLI::NonNegativeNumber);
  ode->add_option("--r-max", r_max, "outer radius, below 1");
  ode->add_option("--csv-dir", csv_dir, "write per-ray CSV files and the SVG overlay here");
  ode->callback([&] {
    const auto config = ode_args.load();
    const auto sampled = integrate_extremal_ode(config, parse_number(c_text), ray_angles_for(config, rays), r_max);
    if (!csv_dir.empty()) emit_plot_data(sampled, csv_dir);
    emit(sampled_summary(sampled));
  });

  // measure-beta
  ConfigArgs measure_args;
  auto* measure = app.add_subcommand("measure-beta", "boundary derivatives of the ODE extremal and the equality audit");
  measure_args.add(measure, false);
  measure->add_option("--c", c_text, "phi'(0) in (0, 1]")->required();
  measure->callback([&] {
    const auto config = measure_args.load();
    const double c = parse_number(c_text);
    const auto angles = anchor_ray_angles(config);
    const ExtremalOdeOptions opts;
    const auto sampled = integrate_extremal_ode(config, c, angles, level_radius(opts.finest_level), opts);
    json betas = json::array();
    json errors = json::array();
    for (std::size_t k = 0; k < config.size(); ++k) {
      if (config.heights.alphas[k] == 0.0) {
        betas.push_back(nullptr);
        errors.push_back(nullptr);
        continue;
      }
      const auto e = measure_beta(sampled, k);
      betas.push_back(e.value.real());
      errors.push_back(e.error_bound);
    }
    emit({{"beta", betas}, {"error_bound", errors}, {"equality", equality_to_json(equality_audit(config, c, opts))}});
  });

  // verify suite
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  std::uint64_t seed = 0;
  bool seed_given = false;
  int cases = 1000;
  std::string suite_file;
  auto* suite = verify->add_subcommand("suite", "generate admissible maps and check every bound");
  suite->add_option("--seed", seed, "random seed (default: DIGON_SEED or 7)")->each([&](const std::string&) {
    seed_given = true;
  });
  suite->add_option("--cases", cases, "number of admissible maps in the default suite")->check(CLI::NonNegativeNumber);
  suite->add_option("--suite-file", suite_file, "suite description JSON");
  suite->add_option("--out", out_path, "write the full JSON report to this file");
  suite->callback([&] {
    SuiteConfig config;
    if (!suite_file.empty()) {
      config = suite_from_json(read_json_file(suite_file));
      if (seed_given) config.seed = seed;
    } else {
      config = default_suite(seed_given ? seed : default_seed(), cases);
    }
    const auto report = run_suite(config);
    const json full = report_to_json(report);
    if (!out_path.empty()) write_text_file(out_path, full.dump(2) + "\n");
    json brief{{"summary", full["summary"]}, {"variant_operative", full["variant_operative"]}, {"clean", report.clean()}};
    out << brief.dump(2) << "\n";
    if (!report.clean()) status = kExitFinding;
  });

  // audit variants
  auto* audit = app.add_subcommand("audit", "audits");
  audit->require_subcommand(1);
  auto* variants = audit->add_subcommand("variants", "run the oracle suite against both bound readings");
  variants->add_option("--seed", seed, "random seed (default: DIGON_SEED or 7)")->each([&](const std::string&) {
    seed_given = true;
  });
  variants->add_option("--out", out_path, "also write the JSON to this file");
  variants->callback([&] {
    const auto verdict = audit_variants(seed_given ? seed : default_seed());
    emit(audit_to_json(verdict));
    if (!verdict.all_passed()) status = kExitFinding;
  });

  // plot
  ConfigArgs plot_args;
  std::string plot_dir;
  auto* plot = app.add_subcommand("plot", "write per-ray CSV and an SVG overlay for the ODE extremal");
  plot_args.add(plot, false);
  plot->add_option("--c", c_text, "phi'(0) in (0, 1]")->required();
  plot->add_option("--rays", rays, "number of equally spaced rays besides the anchor rays")->check(CLI::NonNegativeNumber);
  plot->add_option("--r-max", r_max, "outer radius, below 1");
  plot->add_option("--out-dir", plot_dir, "output directory")->required();
  plot->callback([&] {
    const auto config = plot_args.load();
    const auto sampled = integrate_extremal_ode(config, parse_number(c_text), ray_angles_for(config, rays), r_max);
    json files = json::array();
    for (const auto& p : emit_plot_data(sampled, plot_dir)) files.push_back(p.string());
    emit({{"files", files}, {"delta", config.deltas}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return status;
}

}  // namespace digon::cli

// czonal: spherical-harmonic expansions of zonal functions on the unit sphere
// in complex n-space. Subcommands cover the harmonic decomposition, disc
// polynomial and gamma tables, profile expansion, the plane-wave and
// Poisson-Szego tables, weighted disc quadrature, and the identity suite.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "czonal/errors.hpp"
#include "czonal/expansion.hpp"
#include "czonal/polyalg.hpp"
#include "czonal/quadrature.hpp"
#include "czonal/verify.hpp"
#include "czonal/zonal.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSuiteFailure = 2;
constexpr int kExitIo = 3;

struct JobConfig {
  int n = 2;
  int max_bidegree = 10;
  int p = 0;
  int q = 0;
  std::vector<double> r;
  int radial_points = 12;
  int angular_points = 24;
  double tolerance = 1e-10;
  std::string format = "json";
  std::string out;
  std::string input;
  std::string profile = "const";
  bool gamma_table = false;
  std::string export_rule;
};

// Config file: a flat JSON object whose keys mirror the long flags. Unknown
// keys are rejected; flags given on the command line win, with a notice.
void apply_config_file(JobConfig& cfg, const std::string& path, const CLI::App& cmd) {
  std::ifstream in(path);
  if (!in) throw czonal::Error("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  if (!j.is_object()) throw czonal::Error("config file must hold a JSON object");

  const auto flag_given = [&cmd](const std::string& flag) {
    const auto* opt = cmd.get_option_no_throw("--" + flag);
    return opt != nullptr && opt->count() > 0;
  };
  const auto notice = [](const std::string& key) {
    std::cerr << "note: flag --" << key << " overrides the config file value\n";
  };

  for (const auto& [key, value] : j.items()) {
    if (flag_given(key)) {
      notice(key);
      continue;
    }
    if (key == "n") cfg.n = value.get<int>();
    else if (key == "max-bidegree") cfg.max_bidegree = value.get<int>();
    else if (key == "p") cfg.p = value.get<int>();
    else if (key == "q") cfg.q = value.get<int>();
    else if (key == "r") cfg.r = value.is_array() ? value.get<std::vector<double>>()
                                                  : std::vector<double>{value.get<double>()};
    else if (key == "radial-points") cfg.radial_points = value.get<int>();
    else if (key == "angular-points") cfg.angular_points = value.get<int>();
    else if (key == "tolerance") cfg.tolerance = value.get<double>();
    else if (key == "format") cfg.format = value.get<std::string>();
    else if (key == "out") cfg.out = value.get<std::string>();
    else if (key == "input") cfg.input = value.get<std::string>();
    else if (key == "profile") cfg.profile = value.get<std::string>();
    else throw czonal::Error("unknown config key: " + key);
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open output file: " + path);
  return out;
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  auto out = open_output(out_path);
  out << payload;
  if (!out) throw std::ios_base::failure("write failed: " + out_path);
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open input file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_decompose(const JobConfig& cfg) {
  const auto poly = czonal::polyalg::BiPoly::from_json(load_json(cfg.input));
  const auto components = czonal::polyalg::canonical_decompose(poly);
  nlohmann::json j = components.to_json();
  j["n"] = poly.dimension();
  emit(cfg.out, j.dump(2) + "\n");
  return kExitOk;
}

int run_disc_poly(const JobConfig& cfg) {
  std::ostringstream os;
  if (cfg.gamma_table) {
    czonal::zonal::write_gamma_csv(os, cfg.max_bidegree, cfg.n);
  } else {
    czonal::zonal::write_disc_poly_csv(os, czonal::zonal::disc_poly(cfg.p, cfg.q, cfg.n - 2));
  }
  emit(cfg.out, os.str());
  return kExitOk;
}

int run_expand(const JobConfig& cfg) {
  czonal::expansion::ProfileTaylor profile =
      cfg.input.empty()
          ? czonal::expansion::make_builtin_profile(cfg.profile, cfg.n)
          : czonal::expansion::ProfileTaylor::from_json(load_json(cfg.input));
  const auto table = czonal::expansion::expand_profile(profile, cfg.n, cfg.max_bidegree);
  if (cfg.format == "csv") {
    std::ostringstream os;
    table.write_csv(os);
    emit(cfg.out, os.str());
  } else {
    emit(cfg.out, table.to_json().dump(2) + "\n");
  }
  return kExitOk;
}

int run_poisson_szego(const JobConfig& cfg) {
  const auto rs = cfg.r.empty() ? std::vector<double>{0.5} : cfg.r;
  std::ostringstream os;
  os << "p,q,r,S\n";
  for (int tot = 0; tot <= cfg.max_bidegree; ++tot)
    for (int p = 0; p <= tot; ++p)
      for (double r : rs)
        os << p << ',' << tot - p << ',' << format_double(r) << ','
           << format_double(czonal::expansion::poisson_szego_coefficient(r, p, tot - p, cfg.n))
           << '\n';
  emit(cfg.out, os.str());
  return kExitOk;
}

int run_plane_wave(const JobConfig& cfg) {
  const auto rs = cfg.r.empty() ? std::vector<double>{1.0} : cfg.r;
  std::ostringstream os;
  os << "p,q,r,re,im\n";
  for (int tot = 0; tot <= cfg.max_bidegree; ++tot)
    for (int p = 0; p <= tot; ++p)
      for (double r : rs) {
        const auto d = czonal::expansion::plane_wave_coefficient(r, p, tot - p, cfg.n);
        os << p << ',' << tot - p << ',' << format_double(r) << ',' << format_double(d.real())
           << ',' << format_double(d.imag()) << '\n';
      }
  emit(cfg.out, os.str());
  return kExitOk;
}

int run_quad(const JobConfig& cfg) {
  const auto profile = czonal::expansion::make_builtin_profile(cfg.profile, cfg.n);
  const auto rule =
      czonal::quadrature::build_disc_rule(cfg.n - 2, cfg.radial_points, cfg.angular_points);
  if (!cfg.export_rule.empty()) emit(cfg.export_rule, rule.to_json().dump(2) + "\n");
  const auto value = (cfg.p == 0 && cfg.q == 0)
                         ? czonal::quadrature::disc_integrate(profile.evaluator(), rule)
                         : czonal::quadrature::integral_coefficient(profile.evaluator(), cfg.p,
                                                                    cfg.q, cfg.n, rule);
  nlohmann::json j{{"profile", cfg.profile},
                   {"n", cfg.n},
                   {"p", cfg.p},
                   {"q", cfg.q},
                   {"re", value.real()},
                   {"im", value.imag()}};
  emit(cfg.out, j.dump(2) + "\n");
  return kExitOk;
}

int run_verify(const JobConfig& cfg) {
  czonal::verify::Options opt;
  opt.n = cfg.n;
  opt.max_bidegree = cfg.max_bidegree;
  const auto results = czonal::verify::run_identity_suite(opt);
  for (const auto& r : results)
    std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.detail << ")\n";
  // Machine-readable report alongside the human lines.
  if (!cfg.out.empty()) emit(cfg.out, czonal::verify::report_json(results).dump(2) + "\n");
  const bool all_pass =
      std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  return all_pass ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical-harmonic expansions of zonal functions on the complex sphere"};
  app.require_subcommand(1);

  JobConfig cfg;
  std::string config_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", cfg.n, "complex dimension (n >= 2)");
    cmd->add_option("--max-bidegree", cfg.max_bidegree, "largest p+q (or p,q bound)");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", cfg.out, "output path (default: stdout)");
    cmd->add_option("--tolerance", cfg.tolerance, "tolerance for checks");
    cmd->add_option("--config", config_path, "JSON config file (flags win)");
    return cmd;
  };

  auto* decompose = add_common(app.add_subcommand(
      "decompose", "canonical harmonic decomposition of a BiPoly JSON file"));
  decompose->add_option("--input", cfg.input, "BiPoly JSON input")->required();

  auto* disc = add_common(
      app.add_subcommand("disc-poly", "disc polynomial coefficient table (CSV)"));
  disc->add_option("--p", cfg.p, "bidegree p");
  disc->add_option("--q", cfg.q, "bidegree q");
  disc->add_flag("--gamma", cfg.gamma_table,
                 "emit the gamma coefficient table for p,q <= max-bidegree instead");

  auto* expand = add_common(app.add_subcommand(
      "expand", "expansion coefficients d_(p,q) of a profile (builtin or Taylor-table JSON)"));
  expand->add_option("--profile", cfg.profile,
                     "builtin profile: const[(c)], monomial(a,b), plane-wave(r), "
                     "poisson-szego(r), exp-re");
  expand->add_option("--input", cfg.input, "finite Taylor table JSON (overrides --profile)");

  auto* ps = add_common(
      app.add_subcommand("poisson-szego", "table of S_n^(p,q)(r) over bidegrees and r"));
  ps->add_option("--r", cfg.r, "radius values in [0,1]");

  auto* pw = add_common(
      app.add_subcommand("plane-wave", "table of plane-wave coefficients over bidegrees and r"));
  pw->add_option("--r", cfg.r, "radius values (r >= 0)");

  auto* quad = add_common(app.add_subcommand("quad", "integrate a named profile on the disc"));
  quad->add_option("--profile", cfg.profile, "builtin profile name");
  quad->add_option("--p", cfg.p, "pair against W_(q,p) for coefficient d_(p,q)");
  quad->add_option("--q", cfg.q, "see --p");
  quad->add_option("--radial-points", cfg.radial_points, "Gauss points in s = |w|^2");
  quad->add_option("--angular-points", cfg.angular_points, "equispaced angle count");
  quad->add_option("--export-rule", cfg.export_rule, "write the rule as JSON to this path");

  auto* verify = add_common(app.add_subcommand("verify", "run the identity suite"));
  (void)verify;

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* cmd = app.get_subcommands().front();
    if (!config_path.empty()) apply_config_file(cfg, config_path, *cmd);
    if (cfg.n < 2) throw czonal::Error("n must be at least 2");
    if (cfg.max_bidegree < 0) throw czonal::Error("max-bidegree must be non-negative");

    const std::string name = cmd->get_name();
    if (name == "decompose") return run_decompose(cfg);
    if (name == "disc-poly") return run_disc_poly(cfg);
    if (name == "expand") return run_expand(cfg);
    if (name == "poisson-szego") return run_poisson_szego(cfg);
    if (name == "plane-wave") return run_plane_wave(cfg);
    if (name == "quad") return run_quad(cfg);
    if (name == "verify") return run_verify(cfg);
    throw czonal::Error("unknown command: " + name);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

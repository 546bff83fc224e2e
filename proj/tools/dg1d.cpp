// Copyright 2026 The dg1d Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the dg1d C API. Subcommands: run (convergence
// study), infsup (inf-sup spectra per level), check (self-check suite).
// Output is CSV (default) or JSON, to stdout or a file.
//
// Exit codes: 0 success; 1 runtime failure (coercivity, numerics, failed
// checks); 2 invalid configuration; 3 point source on a mesh vertex.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dg1d/dg1d.h"

namespace {

struct CliOptions {
  std::string problem = "smooth";
  int k = 2;
  double sigma0 = 0.0;  // <= 0 selects the default 10 k^2
  double sigma1 = 1.0;
  std::vector<int> meshes = {8, 16, 32, 64};
  std::vector<double> domain = {0.0, 1.0};
  double xbar = 0.6366;
  double c0 = 0.0;
  double c1 = 1.0;
  std::uint64_t seed = 7;
  bool timing = false;
  std::string dump_dir;
  std::string format = "csv";
  std::string output;
  std::string config_path;
};

// Option handles used to let explicit flags win over the config file.
struct OptionRefs {
  CLI::Option* problem = nullptr;
  CLI::Option* k = nullptr;
  CLI::Option* sigma0 = nullptr;
  CLI::Option* sigma1 = nullptr;
  CLI::Option* meshes = nullptr;
  CLI::Option* domain = nullptr;
  CLI::Option* xbar = nullptr;
  CLI::Option* c0 = nullptr;
  CLI::Option* c1 = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* timing = nullptr;
  CLI::Option* dump_dir = nullptr;
};

int fail_config(const std::string& message) {
  std::cerr << "dg1d: error: " << message << "\n";
  return 2;
}

int fail_runtime(const std::string& message) {
  std::cerr << "dg1d: error: " << message << "\n";
  return 1;
}

int status_exit_code(dg1d_status st) {
  switch (st) {
    case DG1D_OK:
      return 0;
    case DG1D_ERR_INVALID_ARGUMENT:
      return 2;
    case DG1D_ERR_SKELETON_COLLISION:
      return 3;
    default:
      return 1;
  }
}

int report_status(dg1d_status st) {
  std::cerr << "dg1d: error: " << dg1d_last_error() << "\n";
  return status_exit_code(st);
}

// 17 significant digits: enough to round-trip any double, used for data.
std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// Shortest round-trip form, used for the parameter comment line.
std::string fmt_short(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double resolved_sigma0(const CliOptions& o) {
  return o.sigma0 > 0.0 ? o.sigma0 : dg1d_default_sigma0(o.k);
}

std::string comment_line(const CliOptions& o) {
  std::ostringstream os;
  os << "# k=" << o.k << " sigma0=" << fmt_short(resolved_sigma0(o))
     << " sigma1=" << fmt_short(o.sigma1) << " xbar=" << fmt_short(o.xbar)
     << " seed=" << o.seed << " version=" << dg1d_version();
  return os.str();
}

nlohmann::ordered_json json_header(const CliOptions& o) {
  nlohmann::ordered_json j;
  j["k"] = o.k;
  j["sigma0"] = resolved_sigma0(o);
  j["sigma1"] = o.sigma1;
  j["xbar"] = o.xbar;
  j["seed"] = o.seed;
  j["version"] = dg1d_version();
  return j;
}

// Applies a JSON config file underneath any explicitly passed flags.
int apply_config_file(CliOptions& o, const OptionRefs& refs) {
  std::ifstream in(o.config_path);
  if (!in) return fail_config("cannot open config file: " + o.config_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    return fail_config("config file " + o.config_path + ": " + e.what());
  }
  if (!j.is_object()) return fail_config("config file must hold a JSON object");
  static const std::set<std::string> known = {
      "problem", "k",  "sigma0", "sigma1", "meshes", "domain_a", "domain_b",
      "xbar",    "c0", "c1",     "seed",   "timing", "dump_dir"};
  for (const auto& item : j.items()) {
    if (known.find(item.key()) == known.end()) {
      return fail_config("unknown config field: " + item.key());
    }
  }
  auto wants = [&](const char* key, const CLI::Option* opt) {
    return j.contains(key) && (opt == nullptr || opt->count() == 0);
  };
  try {
    if (wants("problem", refs.problem)) o.problem = j["problem"].get<std::string>();
    if (wants("k", refs.k)) o.k = j["k"].get<int>();
    if (wants("sigma0", refs.sigma0)) o.sigma0 = j["sigma0"].get<double>();
    if (wants("sigma1", refs.sigma1)) o.sigma1 = j["sigma1"].get<double>();
    if (wants("meshes", refs.meshes)) o.meshes = j["meshes"].get<std::vector<int>>();
    if (wants("domain_a", refs.domain)) o.domain[0] = j["domain_a"].get<double>();
    if (wants("domain_b", refs.domain)) o.domain[1] = j["domain_b"].get<double>();
    if (wants("xbar", refs.xbar)) o.xbar = j["xbar"].get<double>();
    if (wants("c0", refs.c0)) o.c0 = j["c0"].get<double>();
    if (wants("c1", refs.c1)) o.c1 = j["c1"].get<double>();
    if (wants("seed", refs.seed)) o.seed = j["seed"].get<std::uint64_t>();
    if (wants("timing", refs.timing)) o.timing = j["timing"].get<bool>();
    if (wants("dump_dir", refs.dump_dir)) o.dump_dir = j["dump_dir"].get<std::string>();
  } catch (const std::exception& e) {
    return fail_config("config file " + o.config_path + ": " + e.what());
  }
  return 0;
}

int make_config(const CliOptions& o, dg1d_config* cfg) {
  if (o.problem != "smooth" && o.problem != "point_source") {
    return fail_config("problem must be smooth or point_source");
  }
  if (o.format != "csv" && o.format != "json") {
    return fail_config("format must be csv or json");
  }
  dg1d_config_init(cfg);
  cfg->problem =
      o.problem == "point_source" ? DG1D_PROBLEM_POINT_SOURCE : DG1D_PROBLEM_SMOOTH;
  cfg->degree = o.k;
  cfg->sigma0 = o.sigma0;
  cfg->sigma1 = o.sigma1;
  cfg->mesh_counts = o.meshes.data();
  cfg->num_mesh_counts = o.meshes.size();
  cfg->domain_a = o.domain[0];
  cfg->domain_b = o.domain[1];
  cfg->xbar = o.xbar;
  cfg->c0 = o.c0;
  cfg->c1 = o.c1;
  cfg->seed = o.seed;
  cfg->timing = o.timing ? 1 : 0;
  cfg->dump_dir = o.dump_dir.empty() ? nullptr : o.dump_dir.c_str();
  return 0;
}

int write_output(const CliOptions& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return std::cout ? 0 : fail_runtime("cannot write to standard output");
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) return fail_runtime("cannot open output file: " + o.output);
  out << text;
  out.flush();
  if (!out) return fail_runtime("cannot write output file: " + o.output);
  return 0;
}

int cmd_run(const CliOptions& o) {
  dg1d_config cfg;
  if (int rc = make_config(o, &cfg); rc != 0) return rc;
  std::vector<dg1d_run_row> rows(o.meshes.size());
  size_t num_rows = 0;
  dg1d_status st = dg1d_run_convergence(&cfg, rows.data(), rows.size(), &num_rows);
  if (st != DG1D_OK) return report_status(st);
  rows.resize(num_rows);

  std::string text;
  if (o.format == "csv") {
    std::ostringstream os;
    os << comment_line(o) << "\n";
    os << "n_elements,h_max,dofs,err_znorm,err_enorm,err_eenorm,err_l2,"
          "eoc_znorm,eoc_l2,solve_seconds\n";
    for (const auto& r : rows) {
      os << r.n_elements << ',' << fmt17(r.h_max) << ',' << r.dofs << ','
         << fmt17(r.err_znorm) << ',' << fmt17(r.err_enorm) << ',' << fmt17(r.err_eenorm)
         << ',' << fmt17(r.err_l2) << ',' << fmt17(r.eoc_znorm) << ',' << fmt17(r.eoc_l2)
         << ',' << fmt17(r.solve_seconds) << "\n";
    }
    text = os.str();
  } else {
    nlohmann::ordered_json j = json_header(o);
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["n_elements"] = r.n_elements;
      row["h_max"] = r.h_max;
      row["dofs"] = r.dofs;
      row["err_znorm"] = r.err_znorm;
      row["err_enorm"] = r.err_enorm;
      row["err_eenorm"] = r.err_eenorm;
      row["err_l2"] = r.err_l2;
      row["eoc_znorm"] = r.eoc_znorm;
      row["eoc_l2"] = r.eoc_l2;
      row["solve_seconds"] = r.solve_seconds;
      j["rows"].push_back(row);
    }
    text = j.dump(2) + "\n";
  }
  return write_output(o, text);
}

int cmd_infsup(const CliOptions& o) {
  dg1d_config cfg;
  if (int rc = make_config(o, &cfg); rc != 0) return rc;
  std::vector<dg1d_infsup_row> rows(o.meshes.size());
  size_t num_rows = 0;
  dg1d_status st = dg1d_run_infsup(&cfg, rows.data(), rows.size(), &num_rows);
  if (st != DG1D_OK) return report_status(st);
  rows.resize(num_rows);

  std::string text;
  if (o.format == "csv") {
    std::ostringstream os;
    os << comment_line(o) << "\n";
    os << "n_elements,h_max,gamma_V,gamma_W,lambda_coercivity,sigma_max_continuity\n";
    for (const auto& r : rows) {
      os << r.n_elements << ',' << fmt17(r.h_max) << ',' << fmt17(r.gamma_v) << ','
         << fmt17(r.gamma_w) << ',' << fmt17(r.lambda_coercivity) << ','
         << fmt17(r.sigma_max_continuity) << "\n";
    }
    text = os.str();
  } else {
    nlohmann::ordered_json j = json_header(o);
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["n_elements"] = r.n_elements;
      row["h_max"] = r.h_max;
      row["gamma_V"] = r.gamma_v;
      row["gamma_W"] = r.gamma_w;
      row["lambda_coercivity"] = r.lambda_coercivity;
      row["sigma_max_continuity"] = r.sigma_max_continuity;
      j["rows"].push_back(row);
    }
    text = j.dump(2) + "\n";
  }
  if (int rc = write_output(o, text); rc != 0) return rc;
  for (const auto& r : rows) {
    if (!(r.lambda_coercivity > 0.0)) {
      std::ostringstream msg;
      msg << "coercivity eigenvalue " << fmt_short(r.lambda_coercivity)
          << " is not positive at n=" << r.n_elements << "; raise sigma0 (resolved "
          << fmt_short(resolved_sigma0(o)) << ")";
      return fail_runtime(msg.str());
    }
  }
  return 0;
}

int cmd_check(const CliOptions& o) {
  dg1d_config cfg;
  if (int rc = make_config(o, &cfg); rc != 0) return rc;
  std::vector<dg1d_check_row> rows(64);
  size_t num_rows = 0;
  dg1d_status st = dg1d_run_check(&cfg, rows.data(), rows.size(), &num_rows);
  if (st != DG1D_OK) return report_status(st);
  rows.resize(num_rows);

  std::string text;
  if (o.format == "csv") {
    std::ostringstream os;
    os << comment_line(o) << "\n";
    os << "name,passed,observed,threshold\n";
    for (const auto& r : rows) {
      os << r.name << ',' << r.passed << ',' << fmt17(r.observed) << ','
         << fmt17(r.threshold) << "\n";
    }
    text = os.str();
  } else {
    nlohmann::ordered_json j = json_header(o);
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["name"] = std::string(r.name);
      row["passed"] = r.passed != 0;
      row["observed"] = r.observed;
      row["threshold"] = r.threshold;
      j["rows"].push_back(row);
    }
    text = j.dump(2) + "\n";
  }
  if (int rc = write_output(o, text); rc != 0) return rc;
  int failed = 0;
  for (const auto& r : rows) {
    if (r.passed == 0) ++failed;
  }
  if (failed > 0) {
    std::ostringstream msg;
    msg << failed << " of " << rows.size() << " self-checks failed";
    return fail_runtime(msg.str());
  }
  return 0;
}

// what: bitmask of extras; 1 = problem/xbar/c0/c1, 2 = meshes, 4 = timing,
// 8 = dump-matrices.
OptionRefs add_options(CLI::App* cmd, CliOptions& o, unsigned what) {
  OptionRefs refs;
  cmd->add_option("--config", o.config_path, "JSON configuration file; flags win");
  refs.k = cmd->add_option("--k", o.k, "polynomial degree k");
  refs.sigma0 =
      cmd->add_option("--sigma0", o.sigma0, "jump penalty; <= 0 selects 10 k^2");
  refs.sigma1 = cmd->add_option("--sigma1", o.sigma1, "gradient-jump stabilization");
  refs.domain = cmd->add_option("--domain", o.domain, "domain endpoints a b")->expected(2);
  refs.seed = cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--format", o.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", o.output, "output file; default stdout");
  if (what & 1u) {
    refs.problem = cmd->add_option("--problem", o.problem, "smooth or point_source")
                       ->check(CLI::IsMember({"smooth", "point_source"}));
    refs.xbar = cmd->add_option("--xbar", o.xbar, "point-source location");
    refs.c0 = cmd->add_option("--c0", o.c0, "Dirac weight");
    refs.c1 = cmd->add_option("--c1", o.c1, "dipole weight");
  }
  if (what & 2u) {
    refs.meshes = cmd->add_option("--meshes", o.meshes, "element counts per level")
                      ->delimiter(',');
  }
  if (what & 4u) {
    refs.timing = cmd->add_flag("--timing", o.timing, "report wall-clock solve times");
  }
  if (what & 8u) {
    refs.dump_dir =
        cmd->add_option("--dump-matrices", o.dump_dir, "write operator matrices here");
  }
  return refs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D interior penalty discontinuous Galerkin studies"};
  app.set_version_flag("--version", dg1d_version());
  app.require_subcommand(1);

  CliOptions run_opts, infsup_opts, check_opts;
  CLI::App* run = app.add_subcommand("run", "convergence study");
  OptionRefs run_refs = add_options(run, run_opts, 1u | 2u | 4u | 8u);
  CLI::App* infsup = app.add_subcommand("infsup", "inf-sup spectra per mesh level");
  OptionRefs infsup_refs = add_options(infsup, infsup_opts, 2u | 8u);
  CLI::App* check = app.add_subcommand("check", "self-check suite");
  OptionRefs check_refs = add_options(check, check_opts, 0u);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (run->parsed()) {
    if (!run_opts.config_path.empty()) {
      if (int rc = apply_config_file(run_opts, run_refs); rc != 0) return rc;
    }
    return cmd_run(run_opts);
  }
  if (infsup->parsed()) {
    if (!infsup_opts.config_path.empty()) {
      if (int rc = apply_config_file(infsup_opts, infsup_refs); rc != 0) return rc;
    }
    return cmd_infsup(infsup_opts);
  }
  if (!check_opts.config_path.empty()) {
    if (int rc = apply_config_file(check_opts, check_refs); rc != 0) return rc;
  }
  return cmd_check(check_opts);
}

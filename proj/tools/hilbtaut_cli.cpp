#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hilbtaut.h"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int finish(ht_status st, ht_report* rep, bool as_json) {
  if (st != HT_OK) {
    std::cerr << "error: " << ht_last_error() << "\n";
    return 2;
  }
  std::cout << (as_json ? ht_report_json(rep) : ht_report_text(rep));
  int code = ht_report_passed(rep) ? 0 : 1;
  ht_report_free(rep);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tautological sheaves on Hilbert schemes of points: exact invariants and stability checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ht_version()));

  bool as_json = false;
  std::string config, inject, ring, expr;
  std::int64_t bound = 0;
  long k = 0;

  auto* verify = app.add_subcommand("verify", "Re-derive every reference constant through both engines");
  verify->add_flag("--json", as_json, "Machine-readable report");
  verify->add_option("--inject-mismatch", inject, "Corrupt the expected value of the named row (harness check)")
      ->group("");

  auto* slope = app.add_subcommand("slope", "Slope of the tautological sheaf");
  auto* stab = app.add_subcommand("stability", "Stability verdict and destabiliser search");
  auto* coh = app.add_subcommand("cohomology", "Tautological cohomology, Ext groups and Mukai data");
  for (auto* sub : {slope, stab, coh}) {
    sub->add_option("--config", config, "Job configuration (JSON)")->required();
    sub->add_flag("--json", as_json, "Machine-readable report");
  }
  stab->add_option("--search-bound", bound, "Bound on |params| (default: config value)")->check(CLI::Range(1, 1000));

  auto* def = app.add_subcommand("deform", "Deformation ledger");
  auto* k_opt = def->add_option("--k", k, "Base-point ideal on the elliptic K3 with L = C + kE");
  auto* def_cfg = def->add_option("--config", config, "Job configuration (JSON) for a deformation split");
  def->add_flag("--json", as_json, "Machine-readable report");

  auto* eval = app.add_subcommand("eval", "Evaluate a class expression in the cohomology oracle");
  eval->add_option("--ring", ring, "A2, A3 or Xn:n,gram")->required();
  eval->add_option("--expr", expr, "Class expression")->required();
  eval->add_flag("--json", as_json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string text;
  bool need_config = slope->parsed() || stab->parsed() || coh->parsed() || (def->parsed() && def_cfg->count());
  if (need_config && !read_file(config, text)) {
    std::cerr << "error: CONFIG_INVALID: cannot read " << config << "\n";
    return 2;
  }

  ht_report* rep = nullptr;
  ht_status st = HT_OK;
  if (verify->parsed()) {
    st = ht_verify(0, inject.empty() ? nullptr : inject.c_str(), &rep);
  } else if (slope->parsed()) {
    st = ht_run_slope(text.c_str(), &rep);
  } else if (stab->parsed()) {
    st = ht_run_stability(text.c_str(), bound, 0, &rep);
  } else if (coh->parsed()) {
    st = ht_run_cohomology(text.c_str(), &rep);
  } else if (def->parsed()) {
    if (!k_opt->count() && !def_cfg->count()) {
      std::cerr << "error: deform needs --k or --config\n";
      return 2;
    }
    st = ht_run_deform(k_opt->count() ? 1 : 0, k, def_cfg->count() ? text.c_str() : nullptr, &rep);
  } else if (eval->parsed()) {
    st = ht_eval(ring.c_str(), expr.c_str(), &rep);
  }
  return finish(st, rep, as_json);
}

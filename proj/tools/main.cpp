#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mconc/commands.hpp"
#include "mconc/errors.hpp"

namespace {

void add_common(CLI::App* sub, mconc::cli::GlobalOptions& g) {
  sub->add_option("--seed", g.seed, "base seed for every stochastic step")
      ->envname("MCONC_SEED");
  sub->add_option("--restarts", g.restarts,
                  "multistart count for the optimizers")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", g.threads, "worker cap for parallel restarts")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--json", g.json, "full-precision JSON instead of CSV");
  sub->add_option("--out", g.out, "write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized multipartite concurrences: pure-state values, "
               "mixed-state lower bounds, quasi-pure approximation, and a "
               "direct convex-roof search."};
  app.require_subcommand(1);
  mconc::cli::GlobalOptions g;
  int rc = 0;

  std::string state_path, spec_arg;

  auto* eval = app.add_subcommand("eval-pure", "concurrence of a pure state");
  eval->add_option("state", state_path, "state JSON file")->required();
  eval->add_option("--spec", spec_arg, "named spec, inline JSON, or file")
      ->required();
  add_common(eval, g);
  eval->callback(
      [&] { rc = mconc::cli::cmd_eval_pure(state_path, spec_arg, g); });

  bool with_qp = false;
  int roof_m = -1;
  auto* bound = app.add_subcommand(
      "bound-mixed", "optimized lower bound for a mixed state");
  bound->add_option("state", state_path, "state JSON file")->required();
  bound->add_option("--spec", spec_arg, "named spec, inline JSON, or file")
      ->required();
  bound->add_flag("--quasi-pure", with_qp, "also report the quasi-pure value");
  auto* roof_opt = bound->add_option(
      "--roof", roof_m,
      "also run the convex-roof search with this decomposition size "
      "(0 = default)");
  add_common(bound, g);
  bound->callback([&] {
    rc = mconc::cli::cmd_bound_mixed(state_path, spec_arg, with_qp,
                                     roof_opt->count() ? roof_m : -1, g);
  });

  auto* finger = app.add_subcommand(
      "fingerprint", "all named concurrences for a 3- or 4-party state");
  finger->add_option("state", state_path, "state JSON file")->required();
  add_common(finger, g);
  finger->callback([&] { rc = mconc::cli::cmd_fingerprint(state_path, g); });

  int draws = 50;
  auto* table = app.add_subcommand(
      "table1", "regenerate the bi-separable/GHZ reference table");
  table->add_option("--draws", draws, "randomized draws per cell")
      ->check(CLI::PositiveNumber);
  add_common(table, g);
  table->callback([&] { rc = mconc::cli::cmd_table1(draws, g); });

  std::string family;
  int num_parties = 3;
  std::vector<double> grid;
  bool scan_qp = false;
  int scan_roof = -1;
  auto* scan = app.add_subcommand(
      "scan", "lower bound versus white-noise visibility");
  scan->add_option("family", family, "ghz or w")->required();
  scan->add_option("--n", num_parties, "party count")
      ->check(CLI::Range(2, 16));
  scan->add_option("--spec", spec_arg, "named spec, inline JSON, or file")
      ->required();
  scan->add_option("--visibility-grid", grid, "visibilities in [0,1]")
      ->delimiter(',');
  scan->add_flag("--quasi-pure", scan_qp, "also report the quasi-pure value");
  auto* scan_roof_opt = scan->add_option(
      "--roof", scan_roof, "also run the convex-roof search (0 = default m)");
  add_common(scan, g);
  scan->callback([&] {
    rc = mconc::cli::cmd_scan(family, num_parties, spec_arg, grid, scan_qp,
                              scan_roof_opt->count() ? scan_roof : -1, g);
  });

  mconc::cli::MakeOptions mk;
  auto* make = app.add_subcommand("make", "emit a factory state as JSON");
  make->add_option("family", mk.family,
                   "ghz | w | bell | product | random-pure | random-density | "
                   "werner | noisy-ghz | noisy-w | separable")
      ->required();
  make->add_option("--n", mk.num_parties, "party count");
  make->add_option("--d", mk.dim, "local dimension for ghz families");
  make->add_option("--dims", mk.dims, "explicit dimension list")
      ->delimiter(',');
  make->add_option("--weights", mk.weights, "Schmidt weights, must sum to 1")
      ->delimiter(',');
  make->add_option("--visibility", mk.visibility, "white-noise visibility");
  make->add_option("--rank", mk.rank, "rank for random-density (0 = full)");
  make->add_option("--terms", mk.terms, "terms for separable mixtures");
  add_common(make, g);
  make->callback([&] { rc = mconc::cli::cmd_make(mk, g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const mconc::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mconc::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

// Acceptance gate: eight end-to-end checks, one pass/fail line each.
// Returns a nonzero exit code when any check fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "mconc/mixed_concurrence.hpp"
#include "mconc/pure_concurrence.hpp"
#include "mconc/state_factory.hpp"
#include "mconc/state_io.hpp"
#include "mconc/tensor_core.hpp"
#include "oracles.hpp"

using namespace mconc;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int index, std::string label)
      : index_(index), label_(std::move(label)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (ok) return;
    pass_ = false;
    if (first_failure_.empty()) first_failure_ = detail;
  }

  ~Criterion() {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    std::printf("criterion %d: %s  %s (%.1f s)%s%s\n", index_,
                pass_ ? "PASS" : "FAIL", label_.c_str(), seconds,
                pass_ ? "" : " -- ", first_failure_.c_str());
    std::fflush(stdout);
    if (!pass_) ++g_failures;
  }

 private:
  int index_;
  std::string label_;
  std::chrono::steady_clock::time_point start_;
  bool pass_ = true;
  std::string first_failure_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

void criterion1_closed_form() {
  Criterion c(1, "two-copy evaluation matches the reduced-purity closed form");
  const std::vector<std::vector<int>> shapes = {
      {2, 2}, {2, 2, 2}, {2, 2, 2, 2}, {2, 2, 2, 2, 2}, {3, 3}, {3, 3, 3}};
  for (const auto& dims : shapes) {
    const SystemShape shape{dims};
    const ConcurrenceSpec spec = named_spec("CN", shape);
    Rng rng(static_cast<std::uint64_t>(1000 + dims.size() * 10 + dims[0]));
    for (int t = 0; t < 100; ++t) {
      const StateVector psi = random_pure(shape, rng);
      const double a = evaluate(spec, psi);
      const double b = closed_form_CN(psi);
      c.require(std::abs(a - b) <= 1e-10,
                "deviation " + fmt(std::abs(a - b)) + " on " +
                    std::to_string(dims.size()) + " parties of dim " +
                    std::to_string(dims[0]));
    }
  }
}

void criterion2_wootters() {
  Criterion c(2, "rank-one bound equals the independent spin-flip concurrence");
  const SystemShape q2{{2, 2}};
  const ConcurrenceSpec bip = named_spec("bipartite", q2);
  Rng rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const int rank = 1 + t % 4;
    const DensityMatrix rho = random_density(q2, rank, rng);
    const double mine = exact_rank_one(rho, bip);
    const double ref = oracles::wootters_mixed(rho.matrix());
    c.require(std::abs(mine - ref) <= 1e-8,
              "rank " + std::to_string(rank) + " deviation " +
                  fmt(std::abs(mine - ref)));
  }
  for (int i = 0; i < 50; ++i) {
    const double p = static_cast<double>(i) / 49.0;
    const double mine = exact_rank_one(white_noise_mix(bell_pair(), p), bip);
    const double curve = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    c.require(std::abs(mine - curve) <= 1e-12,
              "visibility " + std::to_string(p) + " deviation " +
                  fmt(std::abs(mine - curve)));
  }
}

void criterion3_table() {
  Criterion c(3, "reference table rows reproduce (row-2 ratio exactly 2)");
  const SystemShape q1{{2}}, q2{{2, 2}}, q3{{2, 2, 2}}, q4{{2, 2, 2, 2}};
  const ConcurrenceSpec bip = named_spec("bipartite", q2);
  for (int draw = 0; draw < 50; ++draw) {
    Rng rng = Rng::derive(3, static_cast<std::uint64_t>(draw));

    // Row 1 pattern: pair + singlet across all three placements.
    const StateVector phi2 = random_pure(q2, rng);
    const StateVector zeta1 = random_pure(q1, rng);
    const double cp = evaluate(bip, phi2);
    const std::array<std::array<int, 3>, 3> placements = {
        {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    const std::array<int, 3> entangled_slot = {3, 2, 1};  // 1-based split
    for (int p = 0; p < 3; ++p) {
      const StateVector psi = biseparable(phi2, zeta1, placements[p]);
      for (int k = 1; k <= 3; ++k) {
        const double val =
            evaluate(named_spec("c3_" + std::to_string(k), q3), psi);
        const double want = k == entangled_slot[p] ? cp : 0.0;
        c.require(std::abs(val - want) <= 1e-10,
                  "split value deviation " + fmt(std::abs(val - want)));
      }
      c.require(std::abs(evaluate(named_spec("C3", q3), psi) - cp) <= 1e-10,
                "tri-partite total deviation");
    }

    // Row 1, four parties: entangled triple times a singlet.
    const StateVector phi3 = random_pure(q3, rng);
    const StateVector psi4 = biseparable(phi3, zeta1, std::array{0, 1, 2, 3});
    const double c33 = evaluate(named_spec("c3_3", q3), phi3);
    c.require(evaluate(named_spec("c4_12", q4), psi4) <= 1e-10,
              "separable split not zero");
    c.require(std::abs(evaluate(named_spec("c4_34", q4), psi4) - 2.0 * c33) <=
                  1e-10,
              "embedded tri-partite value deviation");
    c.require(evaluate(named_spec("C4", q4), psi4) <= 1e-10,
              "product-factor C4 not zero");

    // Row 2: pair times pair; the c4 cells carry the documented factor 2.
    const StateVector pa = random_pure(q2, rng);
    const StateVector pb = random_pure(q2, rng);
    const StateVector pp = biseparable(pa, pb, std::array{0, 1, 2, 3});
    const double t12 = evaluate(bip, pb) * eta(pa, bip);
    const double t34 = evaluate(bip, pa) * eta(pb, bip);
    const double r12 = evaluate(named_spec("c4_12", q4), pp) / t12;
    const double r34 = evaluate(named_spec("c4_34", q4), pp) / t34;
    c.require(std::abs(r12 - 2.0) <= 1e-9,
              "pair-pair ratio " + fmt(r12) + " not 2");
    c.require(std::abs(r34 - 2.0) <= 1e-9,
              "pair-pair ratio " + fmt(r34) + " not 2");
    c.require(std::abs(evaluate(named_spec("C4", q4), pp) -
                       evaluate(bip, pa) * evaluate(bip, pb)) <= 1e-10,
              "pair-pair C4 product deviation");

    // Row 3: GHZ with random Schmidt weights, all cells 2 sqrt(l1 l2).
    const SchmidtWeights lambda = SchmidtWeights::random(2, rng);
    const StateVector g = ghz(lambda, 4, 2);
    const double want =
        2.0 * std::sqrt(lambda.lambdas()[0] * lambda.lambdas()[1]);
    for (const char* name : {"c4_12", "c4_13", "c4_34", "C4"})
      c.require(std::abs(evaluate(named_spec(name, q4), g) - want) <= 1e-10,
                std::string("GHZ cell ") + name + " deviation");
  }

  // Uniform weights: the landmark unit value.
  c.require(std::abs(evaluate(named_spec("C4", q4),
                              ghz(SchmidtWeights::uniform(2), 4, 2)) -
                     1.0) <= 1e-10,
            "uniform GHZ C4 not 1");
}

void criterion4_w_ghz() {
  Criterion c(4, "four-party concurrence separates W from GHZ");
  const SystemShape q4{{2, 2, 2, 2}};
  const ConcurrenceSpec c4 = named_spec("C4", q4);
  c.require(evaluate(c4, w_state(4)) <= 1e-10, "W state value not zero");
  Rng rng(4000);
  for (int t = 0; t < 50; ++t) {
    const SchmidtWeights lambda = SchmidtWeights::random(2, rng);
    const double want =
        2.0 * std::sqrt(lambda.lambdas()[0] * lambda.lambdas()[1]);
    const double got = evaluate(c4, ghz(lambda, 4, 2));
    c.require(std::abs(got - want) <= 1e-10,
              "GHZ law deviation " + fmt(std::abs(got - want)));
  }
}

void criterion5_sandwich() {
  Criterion c(5, "lower bound never exceeds the direct roof estimate");
  const SystemShape q3{{2, 2, 2}};
  const ConcurrenceSpec c3 = named_spec("C3", q3);
  const ChiBasis chi3 = chi_vectors(c3);
  Rng rng(5000);
  for (int t = 0; t < 100; ++t) {
    const int rank = 1 + t % 4;
    const DensityMatrix rho = random_density(q3, rank, rng);
    const SpectralEnsemble ens = SpectralEnsemble::from_density(rho);
    BoundOptions bo;
    bo.restarts = 6;
    bo.seed = static_cast<std::uint64_t>(t);
    const double lower =
        optimize_lower_bound(coefficient_matrices(ens, chi3), bo).lower_bound;
    RoofOptions ro;
    ro.restarts = 2;
    ro.iterations = 400;
    ro.seed = static_cast<std::uint64_t>(t);
    const double upper = roof_direct_search(rho, c3, ro).upper_bound;
    c.require(lower <= upper + 1e-6,
              "lower " + fmt(lower) + " above roof " + fmt(upper));
  }

  // Two qubits: both ends land on the known exact value.
  const SystemShape q2{{2, 2}};
  const ConcurrenceSpec bip = named_spec("bipartite", q2);
  const ChiBasis chi2 = chi_vectors(bip);
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density(q2, 1 + t % 4, rng);
    const double exact = oracles::wootters_mixed(rho.matrix());
    const SpectralEnsemble ens = SpectralEnsemble::from_density(rho);
    const double bound =
        optimize_lower_bound(coefficient_matrices(ens, chi2), BoundOptions{})
            .lower_bound;
    c.require(std::abs(bound - exact) <= 1e-8,
              "bound deviation " + fmt(std::abs(bound - exact)));
    RoofOptions ro;
    ro.restarts = 6;
    ro.iterations = 4000;
    ro.seed = static_cast<std::uint64_t>(100 + t);
    const double roof = roof_direct_search(rho, bip, ro).upper_bound;
    c.require(std::abs(roof - exact) <= 1e-3,
              "roof deviation " + fmt(std::abs(roof - exact)));
  }
  const DensityMatrix werner = white_noise_mix(bell_pair(), 0.9);
  RoofOptions ro;
  ro.m = 4;
  ro.restarts = 6;
  ro.iterations = 4000;
  ro.seed = 9;
  c.require(std::abs(roof_direct_search(werner, bip, ro).upper_bound - 0.85) <=
                1e-3,
            "Werner roof missed the exact value");
}

void criterion6_quasi_pure() {
  Criterion c(6, "quasi-pure value tracks the exact value near purity");
  const ConcurrenceSpec bip = named_spec("bipartite", SystemShape{{2, 2}});
  const ChiBasis chi = chi_vectors(bip);
  double prev_err = -1.0;
  for (double eps : {1e-4, 1e-3, 1e-2}) {
    const DensityMatrix rho = white_noise_mix(bell_pair(), 1.0 - eps);
    const double qp =
        quasi_pure(SpectralEnsemble::from_density(rho), chi).value;
    const double exact = oracles::wootters_mixed(rho.matrix());
    const double err = std::abs(qp - exact);
    c.require(err <= 0.05, "error " + fmt(err) + " at eps " + fmt(eps));
    c.require(err >= prev_err - 1e-12,
              "error not monotone in the noise weight");
    prev_err = err;
  }
}

void criterion7_invariance() {
  Criterion c(7, "local-unitary invariance, odd-minus nullity, homogeneity");
  Rng rng(7000);
  int pairs = 0;
  const auto check_invariance = [&](const ConcurrenceSpec& spec) {
    const StateVector psi = random_pure(spec.shape(), rng);
    const StateVector rotated =
        apply_local_unitaries(psi, random_local_unitaries(spec.shape(), rng));
    const double a = evaluate(spec, psi);
    const double b = evaluate(spec, rotated);
    c.require(std::abs(a - b) <= 1e-10,
              spec.id() + " deviation " + fmt(std::abs(a - b)));
    ++pairs;
  };

  const SystemShape q2{{2, 2}}, q3{{2, 2, 2}}, q4{{2, 2, 2, 2}};
  for (int t = 0; t < 20; ++t) check_invariance(named_spec("bipartite", q2));
  for (int t = 0; t < 10; ++t)
    for (const auto& name : named_specs_for_arity(3))
      check_invariance(named_spec(name, q3));
  for (int t = 0; t < 5; ++t)
    for (const auto& name : named_specs_for_arity(4))
      check_invariance(named_spec(name, q4));
  c.require(pairs == 100, "pair budget wrong");

  // Odd-minus strings contribute nothing.
  const ConcurrenceSpec odd3(q3, {{"+-+", 4.0}, {"---", 4.0}}, true);
  const ConcurrenceSpec odd4(q4, {{"+++-", 16.0}}, true);
  for (int t = 0; t < 10; ++t) {
    c.require(evaluate(odd3, random_pure(q3, rng)) <= 1e-12,
              "odd-minus tri-partite value above 1e-12");
    c.require(evaluate(odd4, random_pure(q4, rng)) <= 1e-12,
              "odd-minus four-partite value above 1e-12");
  }

  // Degree-2 homogeneity in the state.
  const ConcurrenceSpec c3 = named_spec("C3", q3);
  for (int t = 0; t < 10; ++t) {
    const StateVector psi = random_pure(q3, rng);
    const double base = evaluate(c3, psi);
    for (double scale : {0.3, 0.75}) {
      const double got = evaluate(c3, psi.scaled(scale));
      c.require(std::abs(got - scale * scale * base) <= 1e-10,
                "homogeneity deviation " +
                    fmt(std::abs(got - scale * scale * base)));
    }
  }
}

void criterion8_determinism() {
  Criterion c(8, "CLI bound reports are byte-identical across thread counts");
  const auto tmp = std::filesystem::temp_directory_path();
  const std::string state = (tmp / "mconc_acc_state.json").string();
  write_text_file(state, state_to_json(random_density(SystemShape{{2, 2, 2}},
                                                      3, std::uint64_t{88}))
                             .dump());
  std::vector<std::string> outputs;
  for (const std::string threads : {"1", "2", "4", "1"}) {
    const std::string out =
        (tmp / ("mconc_acc_out_" + std::to_string(outputs.size()) + ".json"))
            .string();
    const std::string cmd = std::string("\"") + MCONC_BIN + "\" bound-mixed " +
                            state +
                            " --spec C3 --restarts 4 --seed 17 --threads " +
                            threads + " --json --out " + out;
    const int raw = std::system(cmd.c_str());
    c.require(WIFEXITED(raw) && WEXITSTATUS(raw) == 0,
              "CLI exited with a failure");
    outputs.push_back(read_text_file(out));
  }
  for (size_t i = 1; i < outputs.size(); ++i)
    c.require(outputs[i] == outputs[0],
              "output " + std::to_string(i) + " differs from the first run");
}

}  // namespace

int main() {
  criterion1_closed_form();
  criterion2_wootters();
  criterion3_table();
  criterion4_w_ghz();
  criterion5_sandwich();
  criterion6_quasi_pure();
  criterion7_invariance();
  criterion8_determinism();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}

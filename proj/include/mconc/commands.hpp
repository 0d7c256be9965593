#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mconc::cli {

struct GlobalOptions {
  std::uint64_t seed = 0;
  int restarts = 32;
  int threads = 1;
  bool json = false;
  std::string out;  // empty means stdout
};

int cmd_eval_pure(const std::string& state_path, const std::string& spec_arg,
                  const GlobalOptions& g);

// roof_m: -1 disables the roof search, 0 requests the default size.
int cmd_bound_mixed(const std::string& state_path, const std::string& spec_arg,
                    bool with_quasi_pure, int roof_m, const GlobalOptions& g);

int cmd_fingerprint(const std::string& state_path, const GlobalOptions& g);

int cmd_table1(int draws, const GlobalOptions& g);

int cmd_scan(const std::string& family, int num_parties,
             const std::string& spec_arg, std::vector<double> grid,
             bool with_quasi_pure, int roof_m, const GlobalOptions& g);

struct MakeOptions {
  std::string family;
  int num_parties = 0;
  int dim = 2;
  std::vector<int> dims;
  std::vector<double> weights;
  double visibility = 1.0;
  int rank = 0;
  int terms = 2;
};

int cmd_make(const MakeOptions& mk, const GlobalOptions& g);

}  // namespace mconc::cli

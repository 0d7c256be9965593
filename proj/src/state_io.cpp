#include "mconc/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mconc/errors.hpp"

namespace mconc {

namespace {

std::complex<double> parse_entry(const nlohmann::json& e,
                                 const char* context) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw ValidationError(std::string(context) +
                          " entries must be [re, im] pairs");
  return {e[0].get<double>(), e[1].get<double>()};
}

nlohmann::json dump_entry(std::complex<double> v) {
  return nlohmann::json::array({v.real(), v.imag()});
}

}  // namespace

LoadedState state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("kind"))
    throw ValidationError("state JSON must carry \"dims\" and \"kind\"");
  SystemShape shape{j.at("dims").get<std::vector<int>>()};
  const Index d = shape.total_dim();
  const std::string kind = j.at("kind").get<std::string>();
  const bool renormalize = j.value("renormalize", false);

  if (kind == "pure") {
    if (!j.contains("amplitudes"))
      throw ValidationError("pure state JSON must carry \"amplitudes\"");
    const auto& entries = j.at("amplitudes");
    if (!entries.is_array() || static_cast<Index>(entries.size()) != d)
      throw ShapeError("expected " + std::to_string(d) + " amplitudes, got " +
                       std::to_string(entries.size()));
    Eigen::VectorXcd amps(d);
    for (Index i = 0; i < d; ++i) amps(i) = parse_entry(entries[i], "amplitude");
    if (renormalize) {
      const double n2 = amps.squaredNorm();
      if (std::abs(n2 - 1.0) > 1e-6)
        throw NumericError("squared norm " + std::to_string(n2) +
                           " too far from 1 to renormalize");
      if (n2 <= 0) throw NumericError("cannot renormalize a zero state");
      amps /= std::sqrt(n2);
    }
    return {StateVector(std::move(shape), std::move(amps)), std::nullopt};
  }

  if (kind == "mixed") {
    if (!j.contains("matrix"))
      throw ValidationError("mixed state JSON must carry \"matrix\"");
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || static_cast<Index>(rows.size()) != d)
      throw ShapeError("expected a " + std::to_string(d) + "x" +
                       std::to_string(d) + " matrix");
    Eigen::MatrixXcd m(d, d);
    for (Index r = 0; r < d; ++r) {
      const auto& row = rows[r];
      if (!row.is_array() || static_cast<Index>(row.size()) != d)
        throw ShapeError("matrix row " + std::to_string(r) + " has length " +
                         std::to_string(row.size()) + ", expected " +
                         std::to_string(d));
      for (Index c = 0; c < d; ++c) m(r, c) = parse_entry(row[c], "matrix");
    }
    if (renormalize) {
      const double tr = m.trace().real();
      if (std::abs(tr - 1.0) > 1e-6)
        throw NumericError("trace " + std::to_string(tr) +
                           " too far from 1 to renormalize");
      m /= tr;
    }
    return {std::nullopt, DensityMatrix::from_matrix(shape, m)};
  }

  throw ValidationError("unknown state kind '" + kind +
                        "' (expected \"pure\" or \"mixed\")");
}

LoadedState load_state(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("cannot parse " + path + ": " + e.what());
  }
  return state_from_json(j);
}

nlohmann::json state_to_json(const StateVector& psi) {
  nlohmann::json amps = nlohmann::json::array();
  for (Index i = 0; i < psi.amplitudes().size(); ++i)
    amps.push_back(dump_entry(psi.amplitudes()(i)));
  return {{"dims", psi.shape().dims()},
          {"kind", "pure"},
          {"amplitudes", std::move(amps)}};
}

nlohmann::json state_to_json(const DensityMatrix& rho) {
  const Index d = rho.shape().total_dim();
  nlohmann::json rows = nlohmann::json::array();
  for (Index r = 0; r < d; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < d; ++c) row.push_back(dump_entry(rho.matrix()(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"dims", rho.shape().dims()},
          {"kind", "mixed"},
          {"matrix", std::move(rows)}};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw InputError("failed writing " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace mconc

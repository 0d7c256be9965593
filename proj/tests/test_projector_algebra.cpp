#include <Eigen/Dense>
#include <complex>

#include "doctest.h"
#include "mconc/projector_algebra.hpp"
#include "mconc/rng.hpp"
#include "mconc/state_factory.hpp"
#include "mconc/tensor_core.hpp"
#include "oracles.hpp"

using namespace mconc;

TEST_SUITE_BEGIN("projector_algebra");

namespace {

Eigen::VectorXcd two_copy(const StateVector& psi) {
  const Eigen::VectorXcd& a = psi.amplitudes();
  Eigen::VectorXcd out(a.size() * a.size());
  for (Index i = 0; i < a.size(); ++i)
    out.segment(i * a.size(), a.size()) = a(i) * a;
  return two_copy_reorder(out, psi.shape());
}

}  // namespace

TEST_CASE("sign string helpers") {
  CHECK(minus_count("+--+") == 2);
  CHECK(is_even_minus("++"));
  CHECK(is_even_minus("--"));
  CHECK(!is_even_minus("-++"));
}

TEST_CASE("spec construction rules") {
  const SystemShape q2{{2, 2}};
  CHECK_THROWS_AS(ConcurrenceSpec(q2, {{"--", -1.0}}), ValidationError);
  CHECK_THROWS_AS(ConcurrenceSpec(q2, {{"--", 0.0}}), ValidationError);
  CHECK_THROWS_AS(ConcurrenceSpec(q2, {{"---", 4.0}}), ValidationError);
  CHECK_THROWS_AS(ConcurrenceSpec(q2, {{"-x", 4.0}}), ValidationError);
  CHECK_THROWS_AS(ConcurrenceSpec(q2, {{"-+", 4.0}}), ValidationError);

  const ConcurrenceSpec with_odd(q2, {{"-+", 4.0}, {"--", 4.0}}, true);
  CHECK(with_odd.weights().size() == 2);
  CHECK(with_odd.even_minus_weights().size() == 1);
  CHECK(with_odd.warnings().size() == 1);

  // Zero weights dropped silently.
  const ConcurrenceSpec dropped(q2, {{"++", 0.0}, {"--", 4.0}});
  CHECK(dropped.weights().size() == 1);
  CHECK(validate_spec(dropped).empty());
}

TEST_CASE("named specs") {
  const SystemShape q3{{2, 2, 2}};
  const ConcurrenceSpec c31 = named_spec("c3_1", q3);
  CHECK(c31.weights().size() == 1);
  CHECK(c31.weights().count("+--") == 1);
  CHECK(c31.weights().at("+--") == 4.0);
  CHECK(c31.id() == "c3_1[2,2,2]");

  const ConcurrenceSpec c3 = named_spec("C3", q3);
  CHECK(c3.weights().size() == 3);
  CHECK(c3.weights().count("-+-") == 1);

  const SystemShape q4{{2, 2, 2, 2}};
  const ConcurrenceSpec c412 = named_spec("c4_12", q4);
  CHECK(c412.weights().count("++--") == 1);
  CHECK(c412.weights().at("++--") == 16.0);
  const ConcurrenceSpec c4 = named_spec("C4", q4);
  CHECK(c4.weights().at("----") == 16.0);

  const ConcurrenceSpec cn4 = named_spec("CN", q4);
  CHECK(cn4.weights().size() == 7);  // six double-minus strings plus "----"
  for (const auto& [s, p] : cn4.weights()) {
    CHECK(p == 4.0);
    CHECK(is_even_minus(s));
    CHECK(minus_count(s) >= 2);
  }
  const ConcurrenceSpec cn2 = named_spec("CN", SystemShape{{2, 2}});
  CHECK(cn2.weights().size() == 1);
  CHECK(cn2.weights().at("--") == 4.0);

  CHECK_THROWS_AS(named_spec("c3_1", q4), ValidationError);
  CHECK_THROWS_AS(named_spec("bipartite", q3), ValidationError);
  CHECK_THROWS_AS(named_spec("c4_21", q4), ValidationError);
  CHECK_THROWS_AS(named_spec("nope", q3), ValidationError);

  CHECK(named_specs_for_arity(3) ==
        std::vector<std::string>{"c3_1", "c3_2", "c3_3", "C3"});
  CHECK(named_specs_for_arity(4).size() == 8);
  CHECK_THROWS_AS(named_specs_for_arity(2), ValidationError);
}

TEST_CASE("spec JSON round trip") {
  const ConcurrenceSpec spec = named_spec("C3", SystemShape{{2, 2, 2}});
  const nlohmann::json j = spec.to_json();
  CHECK(j.at("dims") == nlohmann::json({2, 2, 2}));
  const ConcurrenceSpec back = ConcurrenceSpec::from_json(j);
  CHECK(back.shape() == spec.shape());
  CHECK(back.weights() == spec.weights());
  CHECK_THROWS_AS(ConcurrenceSpec::from_json(nlohmann::json{{"dims", {2, 2}}}),
                  ValidationError);
}

TEST_CASE("single-party bases are orthonormal and orthogonal across sectors") {
  for (int n : {2, 3, 4}) {
    const auto anti = antisym_basis(n);
    const auto sym = sym_basis(n);
    CHECK(static_cast<int>(anti.size()) == n * (n - 1) / 2);
    CHECK(static_cast<int>(sym.size()) == n * (n + 1) / 2);
    for (size_t a = 0; a < anti.size(); ++a)
      for (size_t b = 0; b < anti.size(); ++b)
        CHECK(std::abs(anti[a].dot(anti[b]) -
                       std::complex<double>(a == b ? 1.0 : 0.0)) <= 1e-15);
    for (size_t a = 0; a < sym.size(); ++a)
      for (size_t b = 0; b < sym.size(); ++b)
        CHECK(std::abs(sym[a].dot(sym[b]) -
                       std::complex<double>(a == b ? 1.0 : 0.0)) <= 1e-15);
    for (const auto& a : anti)
      for (const auto& s : sym) CHECK(std::abs(a.dot(s)) <= 1e-15);
  }
  CHECK_THROWS_AS(antisym_basis(1), InputError);
}

TEST_CASE("spectral vector counts and scales") {
  const ChiBasis bell = chi_vectors(named_spec("bipartite", SystemShape{{2, 2}}));
  CHECK(bell.vectors.size() == 1);
  CHECK(bell.vectors[0].norm() == doctest::Approx(2.0).epsilon(1e-14));

  const ChiBasis qutrit =
      chi_vectors(named_spec("bipartite", SystemShape{{3, 3}}));
  CHECK(qutrit.vectors.size() == 9);

  const ChiBasis c3 = chi_vectors(named_spec("C3", SystemShape{{2, 2, 2}}));
  CHECK(c3.vectors.size() == 9);
  for (const auto& v : c3.vectors)
    CHECK(v.norm() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(c3.source_strings.size() == 9);

  const ChiBasis cn4 = chi_vectors(named_spec("CN", SystemShape{{2, 2, 2, 2}}));
  CHECK(cn4.vectors.size() == 55);  // 6 strings x 9 combinations + 1

  // Distinct vectors stay orthogonal (disjoint strings or disjoint bases).
  for (size_t a = 0; a < c3.vectors.size(); ++a)
    for (size_t b = a + 1; b < c3.vectors.size(); ++b)
      CHECK(std::abs(c3.vectors[a].dot(c3.vectors[b])) <= 1e-14);

  CHECK_THROWS_AS(
      chi_vectors(named_spec("CN", SystemShape{{2, 2, 2, 2, 2, 2, 2}})),
      ValidationError);
}

TEST_CASE("operator equals sum of spectral projectors") {
  for (const auto& dims :
       {std::vector<int>{2, 2}, std::vector<int>{3, 2}, std::vector<int>{2, 2, 2}}) {
    const SystemShape shape{dims};
    const ConcurrenceSpec spec = named_spec("CN", shape);
    const ChiBasis chi = chi_vectors(spec);
    const Index d2 = shape.doubled().total_dim();
    Eigen::MatrixXcd from_chi = Eigen::MatrixXcd::Zero(d2, d2);
    for (const auto& v : chi.vectors) from_chi += v * v.adjoint();
    CHECK((dense_A(spec) - from_chi).norm() <= 1e-12);
  }
}

TEST_CASE("matrix-free application matches the dense oracle") {
  Rng rng(101);
  for (const auto& dims : {std::vector<int>{2, 3}, std::vector<int>{2, 2, 2}}) {
    const SystemShape shape{dims};
    const ConcurrenceSpec spec = named_spec("CN", shape);
    const Eigen::MatrixXcd dense = dense_A(spec);
    const Index d2 = shape.doubled().total_dim();
    for (int trial = 0; trial < 3; ++trial) {
      Eigen::VectorXcd v(d2);
      for (Index i = 0; i < d2; ++i) v(i) = rng.complex_normal();
      CHECK((apply_A(spec, v) - dense * v).norm() <= 1e-11 * v.norm());
    }
  }
  CHECK_THROWS_AS(
      apply_A(named_spec("bipartite", SystemShape{{2, 2}}),
              Eigen::VectorXcd::Zero(8)),
      ShapeError);
  CHECK_THROWS_AS(dense_A(named_spec("CN", SystemShape{{2, 2, 2, 2, 2, 2, 2}})),
                  ValidationError);
}

TEST_CASE("operator is hermitian, positive, and commutes with the copy swap") {
  const ConcurrenceSpec spec = named_spec("C3", SystemShape{{2, 2, 2}});
  const Eigen::MatrixXcd m = dense_A(spec);
  CHECK((m - m.adjoint()).norm() <= 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  CHECK(es.eigenvalues().minCoeff() >= -1e-12);
  CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(4.0).epsilon(1e-12));

  Rng rng(111);
  Eigen::VectorXcd v(m.rows());
  for (Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  const Eigen::VectorXcd lhs = global_copy_swap(apply_A(spec, v), spec.shape());
  const Eigen::VectorXcd rhs = apply_A(spec, global_copy_swap(v, spec.shape()));
  CHECK((lhs - rhs).norm() <= 1e-11 * v.norm());

  // Copy swap is an involution.
  CHECK((global_copy_swap(global_copy_swap(v, spec.shape()), spec.shape()) - v)
            .norm() == 0.0);
}

TEST_CASE("odd-minus strings annihilate two-copy product states") {
  Rng rng(121);
  const SystemShape shape{{2, 2, 2}};
  const ConcurrenceSpec odd(shape, {{"+-+", 4.0}, {"---", 4.0}}, true);
  CHECK(odd.even_minus_weights().empty());
  const StateVector psi = random_pure(shape, rng);
  const Eigen::VectorXcd pp = two_copy(psi);
  // Operator restricted to even strings: empty support applies to zero.
  CHECK(apply_A(odd, pp).norm() == 0.0);
  // The raw projector products themselves vanish on ΨΨ: check via spectral
  // vectors of a mixed-parity string against the symmetric vector.
  const auto anti = antisym_basis(2);
  Eigen::VectorXcd chi = anti[0];
  {
    const auto sym = sym_basis(2);
    Eigen::VectorXcd acc;
    for (const auto& s2 : sym) {
      Eigen::VectorXcd t(chi.size() * s2.size());
      for (Index a = 0; a < chi.size(); ++a)
        t.segment(a * s2.size(), s2.size()) = chi(a) * s2;
      for (const auto& s3 : sym) {
        Eigen::VectorXcd u(t.size() * s3.size());
        for (Index a = 0; a < t.size(); ++a)
          u.segment(a * s3.size(), s3.size()) = t(a) * s3;
        CHECK(std::abs(u.dot(pp)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("two-copy expectation matches the marginal purity expansion") {
  Rng rng(131);
  for (const auto& dims : {std::vector<int>{2, 2}, std::vector<int>{2, 3, 2}}) {
    const SystemShape shape{dims};
    const ConcurrenceSpec spec = named_spec("CN", shape);
    const StateVector psi = random_pure(shape, rng);
    const Eigen::VectorXcd pp = two_copy(psi);
    const double direct = pp.dot(apply_A(spec, pp)).real();
    const double by_purity = oracles::evaluate_by_purities(spec, psi);
    CHECK(direct == doctest::Approx(by_purity * by_purity).epsilon(1e-10));
  }
}

TEST_SUITE_END();

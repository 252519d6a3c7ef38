#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "dicke/optimal_transform.hpp"
#include "dicke/schmidt.hpp"
#include "dicke/sim_oracle.hpp"
#include "dicke/universal_gates.hpp"

using dicke::dicke_vector;
using dicke::StateVector;
using dicke::TransformTask;

namespace {

TransformTask task_of(int qubits, int excitations, int access, int change, int up_change) {
  const dicke::TaskValidation v =
      dicke::validate_task(qubits, excitations, access, change, up_change);
  REQUIRE(v.ok());
  return *v.task;
}

StateVector run_gate(const dicke::GateOperator& gate, const StateVector& input) {
  return dicke::apply_on_subsystem(input, dicke::embed_full(gate), gate.input_qubits);
}

}  // namespace

TEST_CASE("applying an identity block leaves the state untouched") {
  dicke::DenseMatrix identity(2, 2);
  identity.at(0, 0) = 1.0;
  identity.at(1, 1) = 1.0;
  const StateVector state = dicke_vector(3, 2);
  const StateVector out = dicke::apply_on_subsystem(state, identity, 1);
  REQUIRE(out.qubit_count == 3);
  for (std::uint64_t i = 0; i < out.dimension(); ++i) {
    CHECK(out.amplitudes[i] == doctest::Approx(state.amplitudes[i]).epsilon(1e-15));
  }
}

TEST_CASE("the optimal expansion branch carries exactly pmax of the norm") {
  const TransformTask task = task_of(2, 1, 1, 1, 0);
  const dicke::GateOperator gate = dicke::synthesize_optimal_gate(task);
  const StateVector out = run_gate(gate, dicke_vector(2, 1));
  REQUIRE(out.qubit_count == 3);
  CHECK(out.norm_squared() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(dicke::fidelity(out.normalized(), dicke_vector(3, 1)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("deleting a spin-down qubit from the W state") {
  const TransformTask task = task_of(3, 1, 1, -1, 0);
  const dicke::GateOperator gate = dicke::synthesize_deletion_measurement(task);
  const StateVector out = run_gate(gate, dicke_vector(3, 1));
  REQUIRE(out.qubit_count == 2);
  CHECK(out.norm_squared() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(dicke::fidelity(out.normalized(), dicke_vector(2, 1)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("deleting the only spin-up qubit leaves the ground state") {
  const TransformTask task = task_of(3, 1, 1, -1, -1);
  const dicke::GateOperator gate = dicke::synthesize_deletion_measurement(task);
  const StateVector out = run_gate(gate, dicke_vector(3, 1));
  REQUIRE(out.qubit_count == 2);
  CHECK(out.norm_squared() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(dicke::fidelity(out.normalized(), dicke_vector(2, 0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("operator shape mismatches are rejected") {
  dicke::DenseMatrix op(2, 4);
  CHECK_THROWS_AS(dicke::apply_on_subsystem(dicke_vector(2, 1), op, 1), std::invalid_argument);
  dicke::DenseMatrix wide(2, 2);
  CHECK_THROWS_AS(dicke::apply_on_subsystem(dicke_vector(2, 1), wide, 3), std::invalid_argument);
}

TEST_CASE("fidelity basics") {
  const StateVector w = dicke_vector(3, 1);
  CHECK(dicke::fidelity(w, w) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dicke::fidelity(w, dicke_vector(3, 2)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(dicke::fidelity(w, dicke_vector(2, 1)), std::invalid_argument);
}

TEST_CASE("numeric Schmidt coefficients of pinned states") {
  const std::vector<double> bell = dicke::numeric_schmidt(dicke_vector(2, 1), 1);
  REQUIRE(bell.size() == 2);
  CHECK(bell[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bell[1] == doctest::Approx(0.5).epsilon(1e-12));

  const std::vector<double> product = dicke::numeric_schmidt(dicke_vector(4, 0), 2);
  REQUIRE(product.size() == 1);
  CHECK(product[0] == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> half = dicke::numeric_schmidt(dicke_vector(4, 2), 2);
  REQUIRE(half.size() == 3);
  CHECK(half[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(half[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(half[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("cut bounds on the density-matrix helpers") {
  const StateVector w = dicke_vector(3, 1);
  CHECK_THROWS_AS(dicke::numeric_schmidt(w, 0), std::invalid_argument);
  CHECK_THROWS_AS(dicke::numeric_schmidt(w, 3), std::invalid_argument);
  CHECK_THROWS_AS(dicke::reduced_density_accessible(w, -1), std::invalid_argument);
  CHECK_THROWS_AS(dicke::reduced_density_remote(w, 4), std::invalid_argument);
}

TEST_CASE("numeric and exact spectra agree across a moderate grid") {
  for (int qubits = 2; qubits <= 9; ++qubits) {
    for (int excitations = 1; excitations < qubits; ++excitations) {
      const StateVector state = dicke_vector(qubits, excitations);
      for (int cut = 1; cut < qubits; ++cut) {
        const dicke::SchmidtSpectrum exact =
            dicke::schmidt_spectrum(qubits, excitations, cut);
        const std::vector<double> numeric = dicke::numeric_schmidt(state, cut);
        REQUIRE(static_cast<int>(numeric.size()) == exact.size());
        std::vector<double> expected;
        for (int j = exact.alpha; j <= exact.beta; ++j) {
          expected.push_back(dicke::to_double(exact.lambda(j)));
        }
        std::sort(expected.rbegin(), expected.rend());
        for (std::size_t i = 0; i < numeric.size(); ++i) {
          CHECK(std::abs(numeric[i] - expected[i]) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("verify_task confirms a pinned expansion") {
  const dicke::VerificationReport report = dicke::verify_task(task_of(2, 1, 1, 1, 0));
  CHECK(report.passed);
  CHECK(report.expected_feasible);
  CHECK(report.success_probability == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(report.fidelity >= 1.0 - 1e-12);
  CHECK(report.spectrum_error <= 1e-10);
}

TEST_CASE("verify_task confirms refusal on an infeasible task") {
  const dicke::VerificationReport report = dicke::verify_task(task_of(4, 2, 1, 1, 0));
  CHECK(report.passed);
  CHECK_FALSE(report.expected_feasible);
  CHECK(report.expected_probability == 0.0);
  CHECK(report.success_probability == 0.0);
  CHECK(report.fidelity == 0.0);
}

TEST_CASE("verify_task confirms the identity task") {
  const dicke::VerificationReport report = dicke::verify_task(task_of(4, 2, 2, 0, 0));
  CHECK(report.passed);
  CHECK(report.success_probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.fidelity >= 1.0 - 1e-12);
}

TEST_CASE("branch norm matches the exact weighted column sum") {
  const TransformTask task = task_of(5, 2, 3, 1, 1);
  const dicke::GateOperator gate = dicke::synthesize_optimal_gate(task);
  const StateVector out = run_gate(gate, dicke_vector(5, 2));

  const dicke::SchmidtSpectrum spectrum = dicke::schmidt_spectrum(5, 2, 3);
  dicke::Rational exact = 0;
  for (int j = spectrum.alpha; j <= spectrum.beta; ++j) {
    const int u = task.initial_excitations - j;
    exact += spectrum.lambda(j) * gate.column_norm_squared(u);
  }
  CHECK(std::abs(out.norm_squared() - dicke::to_double(exact)) <= 1e-12);
}

TEST_CASE("the remote block is untouched by the accessible gate") {
  const TransformTask task = task_of(4, 2, 2, 1, 1);
  const dicke::GateOperator gate = dicke::synthesize_optimal_gate(task);
  const StateVector out = run_gate(gate, dicke_vector(4, 2)).normalized();
  const StateVector target = dicke_vector(5, 3);

  const dicke::DenseMatrix got = dicke::reduced_density_remote(out, 3);
  const dicke::DenseMatrix want = dicke::reduced_density_remote(target, 3);
  REQUIRE(got.rows == want.rows);
  for (std::int64_t r = 0; r < got.rows; ++r) {
    for (std::int64_t c = 0; c < got.cols; ++c) {
      CHECK(std::abs(got.at(r, c) - want.at(r, c)) <= 1e-10);
    }
  }
}

TEST_CASE("verify_gate_on flags a universal gate outside its optimal regime") {
  const dicke::GateOperator gate = dicke::universal_gate({1, 1, 0, std::nullopt});
  const dicke::UniversalGateSpec spec{1, 1, 0, std::nullopt};
  const dicke::Rational expected = dicke::universal_success_probability(spec, 4, 2);
  const dicke::VerificationReport report = dicke::verify_gate_on(gate, 4, 2, expected);
  CHECK(report.success_probability == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(report.fidelity == doctest::Approx(0.9).epsilon(1e-12));
  CHECK_FALSE(report.passed);
}

TEST_CASE("verify_gate_on accepts the universal gate on its own ladder") {
  const dicke::GateOperator gate = dicke::universal_gate({1, 1, 0, std::nullopt});
  for (int qubits = 2; qubits <= 8; ++qubits) {
    const dicke::Rational expected = dicke::make_rational(qubits + 1, 2 * qubits);
    const dicke::VerificationReport report = dicke::verify_gate_on(gate, qubits, 1, expected);
    CHECK(report.passed);
    CHECK(report.fidelity >= 1.0 - 1e-12);
  }
}

TEST_CASE("verification reports serialize with stable fields") {
  const dicke::VerificationReport report = dicke::verify_task(task_of(2, 1, 1, 1, 0));
  const nlohmann::json doc = dicke::report_to_json(report);
  CHECK(doc.at("subject").is_string());
  CHECK(doc.at("passed").get<bool>());
  CHECK(doc.at("expected_feasible").get<bool>());
  CHECK(doc.at("success_probability").get<double>() == doctest::Approx(0.75));
  CHECK(doc.at("fidelity").get<double>() == doctest::Approx(1.0));
  CHECK(doc.at("spectrum_error").is_number());
  CHECK(doc.contains("task"));
}

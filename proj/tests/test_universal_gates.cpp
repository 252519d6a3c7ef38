#include "doctest.h"

#include "dicke/feasibility.hpp"
#include "dicke/optimal_transform.hpp"
#include "dicke/universal_gates.hpp"

using dicke::GateOperator;
using dicke::make_rational;
using dicke::Rational;
using dicke::universal_gate;
using dicke::UniversalGateSpec;

TEST_CASE("the spin-down adder for single access") {
  const GateOperator gate = universal_gate({1, 1, 0, std::nullopt});
  CHECK(gate.input_qubits == 1);
  CHECK(gate.output_qubits == 2);
  CHECK(gate.universal);
  CHECK(gate.radicand(0, 0) == make_rational(1, 2));
  CHECK(gate.radicand(1, 1) == 1);
  CHECK(gate.normalization_weight == 1);
}

TEST_CASE("the spin-down adder for two-qubit access") {
  const GateOperator gate = universal_gate({2, 1, 0, std::nullopt});
  CHECK(gate.radicand(0, 0) == make_rational(1, 3));
  CHECK(gate.radicand(1, 1) == make_rational(1, 2));
  CHECK(gate.radicand(2, 2) == 1);
  CHECK(gate.normalization_weight == 2);
}

TEST_CASE("identity-shaped spec gives unit columns") {
  const GateOperator gate = universal_gate({1, 0, 0, std::nullopt});
  CHECK(gate.radicand(0, 0) == 1);
  CHECK(gate.radicand(1, 1) == 1);
}

TEST_CASE("spec guards") {
  CHECK_THROWS_AS(universal_gate({1, -1, 0, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(universal_gate({-1, 2, 0, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(universal_gate({1, 1, 5, std::nullopt}), std::invalid_argument);
}

TEST_CASE("normalization override is accepted only at the maximal ratio") {
  const GateOperator defaulted = universal_gate({1, 1, 0, std::nullopt});
  const GateOperator overridden = universal_gate({1, 1, 0, 1});
  CHECK(defaulted == overridden);
  CHECK_THROWS_AS(universal_gate({1, 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(universal_gate({1, 1, 0, 7}), std::invalid_argument);
}

TEST_CASE("columns are nonincreasing contractions") {
  for (int access = 1; access <= 4; ++access) {
    for (int change = 1; change <= 3; ++change) {
      for (int up_change = 0; up_change <= change; ++up_change) {
        const GateOperator gate = universal_gate({access, change, up_change, std::nullopt});
        CHECK(gate.max_column_norm_squared() == 1);
        for (int u = 0; u <= access; ++u) {
          CHECK(gate.column_norm_squared(u) <= 1);
        }
      }
    }
  }
}

TEST_CASE("success probability on the W ladder is (N+1)/(2N)") {
  const UniversalGateSpec spec{1, 1, 0, std::nullopt};
  for (int qubits = 2; qubits <= 10; ++qubits) {
    CHECK(dicke::universal_success_probability(spec, qubits, 1) ==
          make_rational(qubits + 1, 2 * qubits));
  }
}

TEST_CASE("the two-qubit adder is optimal on two excitations for every size") {
  const UniversalGateSpec spec{2, 1, 0, std::nullopt};
  for (int qubits = 3; qubits <= 10; ++qubits) {
    const dicke::TaskValidation v = dicke::validate_task(qubits, 2, 2, 1, 0);
    REQUIRE(v.ok());
    CHECK(dicke::universal_success_probability(spec, qubits, 2) == dicke::pmax(*v.task).value);
    CHECK(dicke::optimality_gap(spec, qubits, 2) == 0);
  }
}

TEST_CASE("optimality gap is nonnegative and zero exactly at minimal access") {
  for (int qubits = 3; qubits <= 9; ++qubits) {
    for (int excitations = 1; excitations < qubits; ++excitations) {
      for (int access = 1; access <= qubits; ++access) {
        for (int change = 1; change <= 2; ++change) {
          const dicke::TaskValidation v =
              dicke::validate_task(qubits, excitations, access, change, 0);
          if (!v.ok() || !dicke::feasible(*v.task).feasible) {
            continue;
          }
          const UniversalGateSpec spec{access, change, 0, std::nullopt};
          const Rational gap = dicke::optimality_gap(spec, qubits, excitations);
          REQUIRE(gap >= 0);
          if (access == excitations) {
            REQUIRE(gap == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("a strictly larger access pays a positive gap") {
  const UniversalGateSpec spec{3, 1, 0, std::nullopt};
  CHECK(dicke::optimality_gap(spec, 5, 2) > 0);
}

TEST_CASE("gap queries reject infeasible tasks") {
  const UniversalGateSpec spec{1, 1, 0, std::nullopt};
  CHECK_THROWS_AS(dicke::optimality_gap(spec, 4, 2), dicke::InfeasibleError);
}

TEST_CASE("universal probability duality under global spin flip") {
  for (int access = 1; access <= 3; ++access) {
    for (int change = 1; change <= 2; ++change) {
      for (int up_change = 0; up_change <= change; ++up_change) {
        const UniversalGateSpec spec{access, change, up_change, std::nullopt};
        const UniversalGateSpec dual{access, change, change - up_change, std::nullopt};
        for (int qubits = 2; qubits <= 8; ++qubits) {
          for (int excitations = 0; excitations <= qubits; ++excitations) {
            if (access > qubits) {
              continue;
            }
            CHECK(dicke::universal_success_probability(spec, qubits, excitations) ==
                  dicke::universal_success_probability(dual, qubits, qubits - excitations));
          }
        }
      }
    }
  }
}

TEST_CASE("spin flip conjugation is an involution that swaps adders") {
  const GateOperator down = universal_gate({1, 1, 0, std::nullopt});
  const GateOperator up = universal_gate({1, 1, 1, std::nullopt});
  const GateOperator flipped = dicke::spin_flip_conjugate(down);
  CHECK(flipped == up);
  CHECK(dicke::spin_flip_conjugate(flipped) == down);

  for (int access = 1; access <= 4; ++access) {
    for (int change = 1; change <= 3; ++change) {
      CHECK(dicke::spin_flip_conjugate(universal_gate({access, change, 0, std::nullopt})) ==
            universal_gate({access, change, change, std::nullopt}));
    }
  }
}

TEST_CASE("spin flip of an identity-shaped gate preserves the matrix") {
  const GateOperator identity = universal_gate({2, 0, 0, std::nullopt});
  const GateOperator flipped = dicke::spin_flip_conjugate(identity);
  CHECK(flipped.radicands == identity.radicands);
  CHECK(flipped.excitation_shift == identity.excitation_shift);
  CHECK(flipped.input_qubits == identity.input_qubits);
  CHECK(flipped.output_qubits == identity.output_qubits);
}

TEST_CASE("spin flip moves optimal-gate columns consistently") {
  const dicke::TaskValidation v = dicke::validate_task(4, 2, 2, 1, 1);
  REQUIRE(v.ok());
  const GateOperator gate = dicke::synthesize_optimal_gate(*v.task);
  const GateOperator flipped = dicke::spin_flip_conjugate(gate);
  CHECK(flipped.excitation_shift == 0);
  for (int v_row = 0; v_row < gate.rows(); ++v_row) {
    for (int u = 0; u < gate.cols(); ++u) {
      CHECK(flipped.radicand(gate.output_qubits - v_row, gate.input_qubits - u) ==
            gate.radicand(v_row, u));
    }
  }
}

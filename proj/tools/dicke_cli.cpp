#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dicke/feasibility.hpp"
#include "dicke/optimal_transform.hpp"
#include "dicke/rational.hpp"
#include "dicke/schmidt.hpp"
#include "dicke/sim_oracle.hpp"
#include "dicke/state_vector.hpp"
#include "dicke/universal_gates.hpp"

namespace {

enum class Format { Human, Json, JsonLines };

struct TaskFlags {
  int qubits = 0;
  int excitations = 0;
  int access = 0;
  int add_up = 0;
  int add_down = 0;

  int qubit_change() const { return add_up + add_down; }
};

void add_task_flags(CLI::App* cmd, TaskFlags& flags) {
  cmd->add_option("--n", flags.qubits, "initial qubit count N")->required();
  cmd->add_option("--m1", flags.excitations, "initial spin-up count M1")->required();
  cmd->add_option("--k", flags.access, "accessible qubit count k")->required();
  cmd->add_option("--add-up", flags.add_up, "spin-up qubits to add (negative deletes)");
  cmd->add_option("--add-down", flags.add_down, "spin-down qubits to add (negative deletes)");
}

dicke::TransformTask parse_task(const TaskFlags& flags) {
  const dicke::TaskValidation validation =
      dicke::validate_task(flags.qubits, flags.excitations, flags.access, flags.qubit_change(),
                           flags.add_up);
  if (!validation.ok()) {
    throw std::invalid_argument(dicke::to_string(validation.error) + ": " + validation.message);
  }
  return *validation.task;
}

std::string fraction_string(const dicke::Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

void print_spectrum_line(const dicke::SchmidtSpectrum& spectrum, const std::string& label) {
  std::cout << label << " spectrum (cut " << spectrum.cut << "):";
  for (int j = spectrum.alpha; j <= spectrum.beta; ++j) {
    std::cout << "  j=" << j << ": " << fraction_string(spectrum.lambda(j)) << " = "
              << dicke::decimal_string(spectrum.lambda(j), 6);
  }
  std::cout << "\n";
}

int cmd_feasible(const TaskFlags& flags, Format format) {
  const dicke::TransformTask task = parse_task(flags);
  const dicke::FeasibilityDecision decision = dicke::feasible(task);
  if (format == Format::Human) {
    std::cout << (decision.feasible ? "feasible" : "infeasible") << " (";
    for (std::size_t i = 0; i < decision.reasons.size(); ++i) {
      std::cout << (i ? ", " : "") << dicke::to_string(decision.reasons[i]);
    }
    std::cout << ")\n";
  } else {
    nlohmann::json out = dicke::decision_to_json(decision);
    out["task"] = dicke::task_to_json(task);
    std::cout << out.dump() << "\n";
  }
  return decision.feasible ? 0 : 3;
}

int cmd_pmax(const TaskFlags& flags, Format format) {
  const dicke::TransformTask task = parse_task(flags);
  const dicke::PmaxResult result = dicke::pmax(task);
  const bool is_feasible = result.value != 0;
  if (format == Format::Human) {
    std::cout << "p_max = " << fraction_string(result.value) << " = "
              << dicke::decimal_string(result.value) << "\n";
    if (result.argmin_j.has_value()) {
      std::cout << "bound is tight at remote weight j = " << *result.argmin_j << "\n";
    } else {
      std::cout << "task is infeasible\n";
    }
    print_spectrum_line(result.initial_spectrum, "initial");
    print_spectrum_line(result.final_spectrum, "final");
  } else {
    nlohmann::json out{
        {"task", dicke::task_to_json(task)},
        {"feasible", is_feasible},
        {"pmax", dicke::rational_to_json(result.value)},
        {"decimal", dicke::decimal_string(result.value)},
        {"argmin_j", result.argmin_j.has_value() ? nlohmann::json(*result.argmin_j)
                                                 : nlohmann::json(nullptr)},
        {"initial_spectrum", dicke::spectrum_to_json(result.initial_spectrum)},
        {"final_spectrum", dicke::spectrum_to_json(result.final_spectrum)},
    };
    std::cout << out.dump() << "\n";
  }
  return is_feasible ? 0 : 3;
}

void print_gate_summary(const dicke::GateOperator& gate) {
  std::cout << (gate.universal ? "universal gate" : "gate") << ": " << gate.input_qubits
            << " -> " << gate.output_qubits << " qubits, spin-up shift "
            << gate.excitation_shift << "\n";
  for (int u = 0; u < gate.cols(); ++u) {
    for (int v = 0; v < gate.rows(); ++v) {
      const dicke::Rational& r = gate.radicand(v, u);
      if (r != 0) {
        std::cout << "  u=" << u << " -> v=" << v << ", c^2 = " << fraction_string(r) << " = "
                  << dicke::decimal_string(r) << "\n";
      }
    }
  }
}

int cmd_gate(const TaskFlags& flags, bool universal, bool have_state, const std::string& export_path,
             Format format) {
  dicke::GateOperator gate;
  if (universal) {
    dicke::UniversalGateSpec spec;
    spec.access_count = flags.access;
    spec.qubit_change = flags.qubit_change();
    spec.excitation_change = flags.add_up;
    gate = dicke::universal_gate(spec);
  } else {
    const dicke::TransformTask task = parse_task(flags);
    gate = task.final_access() == 0 ? dicke::synthesize_deletion_measurement(task)
                                    : dicke::synthesize_optimal_gate(task);
  }
  if (format == Format::Human) {
    print_gate_summary(gate);
    if (universal && have_state) {
      dicke::UniversalGateSpec spec{flags.access, flags.qubit_change(), flags.add_up,
                                    gate.normalization_weight};
      const dicke::Rational p =
          dicke::universal_success_probability(spec, flags.qubits, flags.excitations);
      std::cout << "success probability on N=" << flags.qubits << ", M1=" << flags.excitations
                << ": " << fraction_string(p) << " = " << dicke::decimal_string(p) << "\n";
    }
  } else {
    std::cout << dicke::gate_to_json(gate).dump() << "\n";
  }
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) {
      std::cerr << "error: cannot open " << export_path << " for writing\n";
      return 4;
    }
    out << dicke::gate_to_json(gate).dump(2) << "\n";
    if (!out) {
      std::cerr << "error: failed writing " << export_path << "\n";
      return 4;
    }
    if (format == Format::Human) {
      std::cout << "exported to " << export_path << "\n";
    }
  }
  return 0;
}

void print_report_human(const dicke::VerificationReport& report) {
  std::cout << (report.passed ? "[PASS] " : "[FAIL] ") << report.subject;
  if (report.task.has_value()) {
    std::cout << " N=" << report.task->initial_qubits << " M1=" << report.task->initial_excitations
              << " k=" << report.task->access_count << " add_up=" << report.task->excitation_change
              << " add_down=" << report.task->spin_down_change();
  }
  if (report.expected_feasible) {
    std::cout << "  p=" << report.success_probability << " expected=" << report.expected_probability
              << " fidelity=" << report.fidelity;
  } else {
    std::cout << "  infeasible confirmed";
  }
  std::cout << "\n";
}

/// Collects sweep results: streams them in human/json-lines mode, buffers one
/// document in json mode, and keeps the pass/fail tally either way.
struct SweepSink {
  Format format;
  int total = 0;
  int failed = 0;
  nlohmann::json collected = nlohmann::json::array();

  void add(const nlohmann::json& line, const dicke::VerificationReport* report, bool passed) {
    total += 1;
    failed += passed ? 0 : 1;
    if (format == Format::Human) {
      if (report != nullptr) {
        print_report_human(*report);
      }
    } else if (format == Format::JsonLines) {
      std::cout << line.dump() << "\n";
    } else {
      collected.push_back(line);
    }
  }
};

void sweep_tasks(int qubits, SweepSink& sink) {
  for (int excitations = 1; excitations < qubits; ++excitations) {
    for (int access = 0; access <= qubits; ++access) {
      for (int change = -2; change <= 2; ++change) {
        for (int up_change = -2; up_change <= 2; ++up_change) {
          const dicke::TaskValidation validation =
              dicke::validate_task(qubits, excitations, access, change, up_change);
          if (!validation.ok()) {
            continue;
          }
          const dicke::VerificationReport report = dicke::verify_task(*validation.task);
          sink.add(dicke::report_to_json(report), &report, report.passed);
        }
      }
    }
  }
}

void sweep_universal(int qubits, SweepSink& sink) {
  for (int access = 1; access <= 2; ++access) {
    for (int change = 1; change <= 2; ++change) {
      for (const int up_change : {0, change}) {
        const dicke::UniversalGateSpec spec{access, change, up_change, std::nullopt};
        const dicke::GateOperator gate = dicke::universal_gate(spec);
        for (int excitations = 1; excitations < qubits; ++excitations) {
          const dicke::TaskValidation validation =
              dicke::validate_task(qubits, excitations, access, change, up_change);
          if (!validation.ok() || !dicke::feasible(*validation.task).feasible) {
            continue;
          }
          const dicke::Rational expected =
              dicke::universal_success_probability(spec, qubits, excitations);
          dicke::VerificationReport report =
              dicke::verify_gate_on(gate, qubits, excitations, expected);
          report.subject = "universal-gate";
          report.task = *validation.task;
          sink.add(dicke::report_to_json(report), &report, report.passed);

          const dicke::Rational gap = dicke::optimality_gap(spec, qubits, excitations);
          const bool minimal_access = (up_change == 0 && access == excitations) ||
                                      (up_change == change && access == qubits - excitations);
          const bool gap_ok = gap >= 0 && (!minimal_access || gap == 0);
          if (sink.format == Format::Human) {
            std::cout << (gap_ok ? "[PASS] " : "[FAIL] ") << "optimality-gap N=" << qubits
                      << " M1=" << excitations << " k=" << access << " add_up=" << up_change
                      << " add_down=" << change - up_change << "  gap = " << fraction_string(gap)
                      << (minimal_access ? " (minimal access)" : "") << "\n";
          }
          nlohmann::json line{
              {"subject", "optimality-gap"},
              {"task", dicke::task_to_json(*validation.task)},
              {"gap", dicke::rational_to_json(gap)},
              {"minimal_access", minimal_access},
              {"passed", gap_ok},
          };
          sink.add(line, nullptr, gap_ok);
        }
      }
    }
  }
}

int cmd_verify_sweep(int lo, int hi, Format format) {
  SweepSink sink{format};
  for (int qubits = lo; qubits <= hi; ++qubits) {
    sweep_tasks(qubits, sink);
    sweep_universal(qubits, sink);
  }
  const bool all_passed = sink.failed == 0;
  nlohmann::json summary{{"subject", "summary"},
                         {"total", sink.total},
                         {"failed", sink.failed},
                         {"passed", all_passed}};
  if (format == Format::Human) {
    std::cout << "summary: " << (sink.total - sink.failed) << "/" << sink.total
              << " checks passed\n";
  } else if (format == Format::JsonLines) {
    std::cout << summary.dump() << "\n";
  } else {
    summary["reports"] = std::move(sink.collected);
    std::cout << summary.dump() << "\n";
  }
  return all_passed ? 0 : 1;
}

int cmd_verify_gate(const std::string& gate_path, int qubits, int excitations, Format format) {
  std::ifstream in(gate_path);
  if (!in) {
    std::cerr << "error: cannot open " << gate_path << "\n";
    return 4;
  }
  nlohmann::json parsed;
  try {
    in >> parsed;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("gate file is not valid JSON: ") + e.what());
  }
  const dicke::GateOperator gate = dicke::gate_from_json(parsed);

  dicke::Rational expected;
  if (gate.universal) {
    const dicke::UniversalGateSpec spec{gate.input_qubits,
                                        gate.output_qubits - gate.input_qubits,
                                        gate.excitation_shift, gate.normalization_weight};
    expected = dicke::universal_success_probability(spec, qubits, excitations);
  } else {
    const dicke::TaskValidation validation =
        dicke::validate_task(qubits, excitations, gate.input_qubits,
                             gate.output_qubits - gate.input_qubits, gate.excitation_shift);
    if (!validation.ok()) {
      throw std::invalid_argument("gate does not apply to this state: " + validation.message);
    }
    expected = dicke::pmax(*validation.task).value;
  }

  const dicke::VerificationReport report =
      dicke::verify_gate_on(gate, qubits, excitations, expected);
  if (format == Format::Human) {
    print_report_human(report);
  } else {
    std::cout << dicke::report_to_json(report).dump() << "\n";
  }
  return report.passed ? 0 : 1;
}

std::pair<int, int> parse_sweep_range(const std::string& text) {
  const std::size_t sep = text.find("..");
  if (sep == std::string::npos) {
    throw std::invalid_argument("sweep range must look like 2..6");
  }
  int lo = 0;
  int hi = 0;
  try {
    lo = std::stoi(text.substr(0, sep));
    hi = std::stoi(text.substr(sep + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("sweep range must look like 2..6");
  }
  if (lo < 2 || hi < lo) {
    throw std::invalid_argument("sweep range needs 2 <= lo <= hi");
  }
  return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Dicke-state transformation toolkit"};
  app.require_subcommand(1);

  TaskFlags flags;
  bool universal = false;
  std::string export_path;
  std::string sweep_range;
  std::string gate_path;
  bool json_out = false;
  bool jsonl_out = false;

  CLI::App* feasible_cmd = app.add_subcommand("feasible", "decide whether a task is achievable");
  add_task_flags(feasible_cmd, flags);
  feasible_cmd->add_flag("--json", json_out, "machine-readable output");

  CLI::App* pmax_cmd = app.add_subcommand("pmax", "exact optimal success probability");
  add_task_flags(pmax_cmd, flags);
  pmax_cmd->add_flag("--json", json_out, "machine-readable output");

  CLI::App* gate_cmd = app.add_subcommand("gate", "synthesize a gate, optionally export JSON");
  CLI::Option* gate_n = gate_cmd->add_option("--n", flags.qubits, "initial qubit count N");
  CLI::Option* gate_m1 = gate_cmd->add_option("--m1", flags.excitations, "initial spin-up count M1");
  gate_m1->needs(gate_n);
  gate_n->needs(gate_m1);
  gate_cmd->add_option("--k", flags.access, "accessible qubit count k")->required();
  gate_cmd->add_option("--add-up", flags.add_up, "spin-up qubits to add (negative deletes)");
  gate_cmd->add_option("--add-down", flags.add_down, "spin-down qubits to add (negative deletes)");
  gate_cmd->add_flag("--universal", universal, "size-independent gate (ignores N, M1 if absent)");
  gate_cmd->add_option("--export", export_path, "write gate JSON to this path");
  gate_cmd->add_flag("--json", json_out, "machine-readable output");

  CLI::App* verify_cmd = app.add_subcommand("verify", "dense-oracle verification");
  CLI::Option* sweep_opt =
      verify_cmd->add_option("--sweep-n", sweep_range, "verify all tasks for N in lo..hi");
  CLI::Option* gate_file_opt =
      verify_cmd->add_option("--gate", gate_path, "verify an exported gate JSON file");
  CLI::Option* verify_n = verify_cmd->add_option("--n", flags.qubits, "qubit count to apply to");
  CLI::Option* verify_m1 =
      verify_cmd->add_option("--m1", flags.excitations, "spin-up count to apply to");
  sweep_opt->excludes(gate_file_opt);
  gate_file_opt->needs(verify_n);
  gate_file_opt->needs(verify_m1);
  CLI::Option* verify_json = verify_cmd->add_flag("--json", json_out, "single JSON document");
  CLI::Option* verify_jsonl =
      verify_cmd->add_flag("--jsonl", jsonl_out, "one JSON report per line");
  verify_json->excludes(verify_jsonl);
  verify_jsonl->excludes(verify_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Format format = jsonl_out ? Format::JsonLines : (json_out ? Format::Json : Format::Human);
  try {
    if (app.got_subcommand(feasible_cmd)) {
      return cmd_feasible(flags, format);
    }
    if (app.got_subcommand(pmax_cmd)) {
      return cmd_pmax(flags, format);
    }
    if (app.got_subcommand(gate_cmd)) {
      if (!universal && gate_n->count() == 0) {
        std::cerr << "error: --n and --m1 are required without --universal\n";
        return 2;
      }
      return cmd_gate(flags, universal, gate_n->count() > 0, export_path, format);
    }
    if (app.got_subcommand(verify_cmd)) {
      if (gate_file_opt->count() > 0) {
        return cmd_verify_gate(gate_path, flags.qubits, flags.excitations, format);
      }
      if (sweep_opt->count() == 0) {
        std::cerr << "error: verify needs --sweep-n or --gate\n";
        return 2;
      }
      const auto [lo, hi] = parse_sweep_range(sweep_range);
      return cmd_verify_sweep(lo, hi, format);
    }
  } catch (const dicke::InfeasibleError& e) {
    std::cerr << "error: infeasible: " << e.what() << "\n";
    return 3;
  } catch (const dicke::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

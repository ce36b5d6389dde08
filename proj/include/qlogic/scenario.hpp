#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qlogic/formula.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/truth.hpp"
#include "qlogic/valuation.hpp"

namespace qlogic {

/// Atoms bound to subspaces, an optional state, and the valuation policy.
struct Scenario {
  std::size_t dimension = 0;
  std::map<std::string, Subspace> atoms;
  std::optional<StateVector> state;
  ValuationPolicy policy = ValuationPolicy::born_degree();
  Tolerance tol;
};

/// Policy tags accepted in scenario files and by the CLI:
/// bivalent, born, super, kleene3, lukasiewicz.
bool is_policy_tag(std::string_view tag);

/// Replaces the policy by the one named `tag`. Table-driven tags reuse the
/// scenario's assignment.
Scenario with_policy(Scenario sc, std::string_view tag, const std::map<std::string, TruthValue>& assignment);

struct EvaluationResult {
  TruthValue truth;
  std::optional<double> probability;
  std::optional<Subspace> lattice_element;
};

/// Lattice-backed policies map connectives to lattice operations and value
/// the resulting subspace; table-driven policies use the truth tables.
/// Xor is always expanded as (f | g) & !(f & g).
EvaluationResult bind_and_evaluate(const Formula& f, const Scenario& sc);

/// Subspace denoted by `f` under the atom binding of `sc`.
Subspace lattice_element(const Formula& f, const std::map<std::string, Subspace>& atoms, const Tolerance& tol = {});

/// Truth-table value of `f` under an atom assignment.
TruthValue table_value(const Formula& f, const std::map<std::string, TruthValue>& assignment, LogicSystem sys);

/// Parsed scenario document together with its raw assignment (kept so the
/// policy can be overridden later).
struct ScenarioDocument {
  Scenario scenario;
  std::map<std::string, TruthValue> assignment;
};

ScenarioDocument parse_scenario(std::string_view json_text);
ScenarioDocument load_scenario(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace qlogic

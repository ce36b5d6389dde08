#include "qlogic/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json_io.hpp"

namespace qlogic {

using detail::invalid;
using detail::json;

bool is_policy_tag(std::string_view tag) {
  return tag == "bivalent" || tag == "born" || tag == "super" || tag == "kleene3" || tag == "lukasiewicz";
}

Scenario with_policy(Scenario sc, std::string_view tag, const std::map<std::string, TruthValue>& assignment) {
  if (tag == "bivalent") {
    sc.policy = ValuationPolicy::eigenstate_bivalent();
  } else if (tag == "born") {
    sc.policy = ValuationPolicy::born_degree();
  } else if (tag == "super") {
    sc.policy = ValuationPolicy::supervaluation();
  } else if (tag == "kleene3") {
    sc.policy = ValuationPolicy::table_driven(LogicSystem::Kleene3, assignment);
  } else if (tag == "lukasiewicz") {
    sc.policy = ValuationPolicy::table_driven(LogicSystem::LukasiewiczFuzzy, assignment);
  } else {
    fail(ErrorKind::InvalidArgument, "unknown policy '" + std::string(tag) + "'");
  }
  return sc;
}

Subspace lattice_element(const Formula& f, const std::map<std::string, Subspace>& atoms, const Tolerance& tol) {
  switch (f.op()) {
    case Formula::Op::Atom: {
      const auto it = atoms.find(f.name());
      if (it == atoms.end()) fail(ErrorKind::UnboundAtom, "atom '" + f.name() + "' is not bound");
      return it->second;
    }
    case Formula::Op::Not:
      return orthocomplement(lattice_element(f.lhs(), atoms, tol));
    case Formula::Op::And:
      return meet(lattice_element(f.lhs(), atoms, tol), lattice_element(f.rhs(), atoms, tol), tol);
    case Formula::Op::Or:
      return join(lattice_element(f.lhs(), atoms, tol), lattice_element(f.rhs(), atoms, tol), tol);
    case Formula::Op::Xor: {
      const Subspace a = lattice_element(f.lhs(), atoms, tol);
      const Subspace b = lattice_element(f.rhs(), atoms, tol);
      return meet(join(a, b, tol), orthocomplement(meet(a, b, tol)), tol);
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown connective");
}

TruthValue table_value(const Formula& f, const std::map<std::string, TruthValue>& assignment, LogicSystem sys) {
  switch (f.op()) {
    case Formula::Op::Atom: {
      const auto it = assignment.find(f.name());
      if (it == assignment.end()) fail(ErrorKind::UnboundAtom, "atom '" + f.name() + "' has no assigned value");
      check_legal(it->second, sys);
      return it->second;
    }
    case Formula::Op::Not:
      return neg(table_value(f.lhs(), assignment, sys));
    case Formula::Op::And:
      return conj(table_value(f.lhs(), assignment, sys), table_value(f.rhs(), assignment, sys), sys);
    case Formula::Op::Or:
      return disj(table_value(f.lhs(), assignment, sys), table_value(f.rhs(), assignment, sys), sys);
    case Formula::Op::Xor:
      return xor_compound(table_value(f.lhs(), assignment, sys), table_value(f.rhs(), assignment, sys), sys);
  }
  fail(ErrorKind::InvalidArgument, "unknown connective");
}

EvaluationResult bind_and_evaluate(const Formula& f, const Scenario& sc) {
  if (!sc.policy.lattice_backed()) {
    return {table_value(f, sc.policy.assignment, sc.policy.system), std::nullopt, std::nullopt};
  }
  for (const auto& [name, s] : sc.atoms) {
    if (s.dim() != sc.dimension) fail(ErrorKind::DimensionMismatch, "atom '" + name + "' has the wrong dimension");
  }
  const Valuation v(sc.policy, sc.state, sc.tol);
  Subspace element = lattice_element(f, sc.atoms, sc.tol);
  EvaluationResult out{value_of(v, element), std::nullopt, std::nullopt};
  if (sc.state) out.probability = probability_of(v, element);
  out.lattice_element = std::move(element);
  return out;
}

// ---------------------------------------------------------------------------
// Scenario files

ScenarioDocument parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ConfigInvalid, std::string("scenario: malformed JSON: ") + e.what());
  }
  detail::reject_unknown_keys(doc, "scenario", {"dimension", "atoms", "state", "policy", "assignment", "experiment"});

  ScenarioDocument out;
  Scenario& sc = out.scenario;

  if (doc.contains("dimension")) sc.dimension = detail::parse_positive(doc["dimension"], "dimension");

  if (doc.contains("atoms")) {
    if (!sc.dimension) invalid("atoms", "'dimension' is required when atoms are given");
    const json& atoms = doc["atoms"];
    if (!atoms.is_object()) invalid("atoms", "expected an object mapping names to spanning vectors");
    for (const auto& [name, vectors] : atoms.items()) {
      const std::string field = "atoms." + name;
      if (!valid_atom_name(name)) invalid(field, "invalid atom name");
      if (!vectors.is_array()) invalid(field, "expected an array of vectors");
      std::vector<ComplexVector> span;
      for (std::size_t k = 0; k < vectors.size(); ++k) {
        const std::string vfield = field + "[" + std::to_string(k) + "]";
        span.push_back(detail::parse_complex_vector(vectors[k], vfield));
        if (span.back().size() != sc.dimension) {
          invalid(vfield, "vector length " + std::to_string(span.back().size()) + " differs from dimension " +
                              std::to_string(sc.dimension));
        }
      }
      sc.atoms.emplace(name, Subspace::span(sc.dimension, span, sc.tol));
    }
  }

  if (doc.contains("state")) {
    if (!sc.dimension) invalid("state", "'dimension' is required when a state is given");
    ComplexVector amps = detail::parse_complex_vector(doc["state"], "state");
    if (amps.size() != sc.dimension) invalid("state", "length differs from dimension");
    try {
      sc.state.emplace(std::move(amps), sc.tol);
    } catch (const Error& e) {
      invalid("state", e.what());
    }
  }

  if (doc.contains("assignment")) {
    const json& a = doc["assignment"];
    if (!a.is_object()) invalid("assignment", "expected an object mapping names to degrees or null");
    for (const auto& [name, value] : a.items()) {
      const std::string field = "assignment." + name;
      if (!valid_atom_name(name)) invalid(field, "invalid atom name");
      if (value.is_null()) {
        out.assignment.emplace(name, TruthValue::undefined());
      } else if (value.is_number() && value.get<double>() >= 0.0 && value.get<double>() <= 1.0) {
        out.assignment.emplace(name, TruthValue::degree(value.get<double>()));
      } else {
        invalid(field, "expected a number in [0, 1] or null");
      }
    }
  }

  std::string tag = "born";
  if (doc.contains("policy")) {
    if (!doc["policy"].is_string()) invalid("policy", "expected a string");
    tag = doc["policy"].get<std::string>();
    if (!is_policy_tag(tag)) invalid("policy", "unknown policy '" + tag + "'");
  }
  sc = with_policy(std::move(sc), tag, out.assignment);
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ConfigInvalid, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioDocument load_scenario(const std::filesystem::path& path) { return parse_scenario(read_text_file(path)); }

}  // namespace qlogic

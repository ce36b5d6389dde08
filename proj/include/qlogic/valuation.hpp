#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qlogic/lattice.hpp"
#include "qlogic/numeric.hpp"
#include "qlogic/truth.hpp"

namespace qlogic {

/// How atoms and lattice elements receive truth values.
///
///  - EigenstateBivalent: 1 on ran(P), 0 on ker(P), a gap in between.
///  - BornDegree: the expectation <psi|P|psi> read as a degree of truth.
///  - Supervaluation: only the lattice constants carry values; every proper
///    subspace is a gap, independent of the state.
///  - TableDriven: atoms take assigned values and connectives are the
///    truth tables of `system`; no lattice is involved.
struct ValuationPolicy {
  enum class Kind { EigenstateBivalent, BornDegree, Supervaluation, TableDriven };

  Kind kind = Kind::BornDegree;
  LogicSystem system = LogicSystem::Kleene3;
  std::map<std::string, TruthValue> assignment;

  static ValuationPolicy eigenstate_bivalent() { return {Kind::EigenstateBivalent, {}, {}}; }
  static ValuationPolicy born_degree() { return {Kind::BornDegree, {}, {}}; }
  static ValuationPolicy supervaluation() { return {Kind::Supervaluation, {}, {}}; }
  static ValuationPolicy table_driven(LogicSystem sys, std::map<std::string, TruthValue> assignment) {
    return {Kind::TableDriven, sys, std::move(assignment)};
  }

  bool lattice_backed() const noexcept { return kind != Kind::TableDriven; }
};

std::string_view to_string(ValuationPolicy::Kind kind);

class Valuation {
 public:
  Valuation(ValuationPolicy policy, std::optional<StateVector> state, Tolerance tol = {});

  const ValuationPolicy& policy() const noexcept { return policy_; }
  const std::optional<StateVector>& state() const noexcept { return state_; }
  const Tolerance& tol() const noexcept { return tol_; }

 private:
  ValuationPolicy policy_;
  std::optional<StateVector> state_;
  Tolerance tol_;
};

TruthValue value_of(const Valuation& v, const Subspace& s);
TruthValue value_of_meet(const Valuation& v, const Subspace& a, const Subspace& b);
TruthValue value_of_join(const Valuation& v, const Subspace& a, const Subspace& b);

/// <psi|P|psi>, available whenever the valuation carries a state.
double probability_of(const Valuation& v, const Subspace& s);

struct AgreementReport {
  TruthValue eigenstate_value;
  TruthValue born_value;
  double probability;
  bool agree;
};

AgreementReport agreement_report(const StateVector& state, const Subspace& s, const Tolerance& tol = {});

struct LukasiewiczCoincidence {
  bool join_matches;
  bool meet_matches;
  double lhs_join;  // v(a v b)
  double rhs_join;  // min(v(a) + v(b), 1)
  double lhs_meet;  // v(a ^ b)
  double rhs_meet;  // max(v(a) + v(b) - 1, 0)
};

LukasiewiczCoincidence lukasiewicz_coincidence_check(const StateVector& state, const Subspace& a,
                                                     const Subspace& b, const Tolerance& tol = {});

struct AlternativesReport {
  double p_join;
  double p_sum;
  bool holds;
};

/// Requires a ^ b = 0; throws PreconditionViolation otherwise.
AlternativesReport law_of_alternatives_check(const StateVector& state, const Subspace& a, const Subspace& b,
                                             const Tolerance& tol = {});

}  // namespace qlogic

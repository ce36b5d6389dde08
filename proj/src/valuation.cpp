#include "qlogic/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qlogic/error.hpp"

namespace qlogic {
namespace {

void require_dim(const Valuation& v, const Subspace& s) {
  if (v.state() && v.state()->dim() != s.dim()) {
    std::ostringstream os;
    os << "state dimension " << v.state()->dim() << " does not match subspace dimension " << s.dim();
    fail(ErrorKind::DimensionMismatch, os.str());
  }
}

const StateVector& require_state(const Valuation& v, const char* op) {
  if (!v.state()) fail(ErrorKind::NoState, std::string(op) + ": valuation carries no state");
  return *v.state();
}

}  // namespace

std::string_view to_string(ValuationPolicy::Kind kind) {
  switch (kind) {
    case ValuationPolicy::Kind::EigenstateBivalent: return "bivalent";
    case ValuationPolicy::Kind::BornDegree: return "born";
    case ValuationPolicy::Kind::Supervaluation: return "super";
    case ValuationPolicy::Kind::TableDriven: return "table";
  }
  return "unknown";
}

Valuation::Valuation(ValuationPolicy policy, std::optional<StateVector> state, Tolerance tol)
    : policy_(std::move(policy)), state_(std::move(state)), tol_(tol) {
  tol_.validate();
  const auto kind = policy_.kind;
  if ((kind == ValuationPolicy::Kind::EigenstateBivalent || kind == ValuationPolicy::Kind::BornDegree) && !state_) {
    fail(ErrorKind::NoState, std::string(to_string(kind)) + " valuation needs a state");
  }
}

TruthValue value_of(const Valuation& v, const Subspace& s) {
  require_dim(v, s);
  switch (v.policy().kind) {
    case ValuationPolicy::Kind::EigenstateBivalent: {
      const double e = expectation(s.projector(), require_state(v, "value_of"), v.tol());
      if (e == 1.0) return TruthValue::degree(1.0);
      if (e == 0.0) return TruthValue::degree(0.0);
      return TruthValue::undefined();
    }
    case ValuationPolicy::Kind::BornDegree:
      return TruthValue::degree(expectation(s.projector(), require_state(v, "value_of"), v.tol()));
    case ValuationPolicy::Kind::Supervaluation:
      if (s.is_bottom()) return TruthValue::degree(0.0);
      if (s.is_top()) return TruthValue::degree(1.0);
      return TruthValue::undefined();
    case ValuationPolicy::Kind::TableDriven:
      break;
  }
  fail(ErrorKind::NoState, "table-driven valuations assign atoms, not subspaces");
}

TruthValue value_of_meet(const Valuation& v, const Subspace& a, const Subspace& b) {
  return value_of(v, meet(a, b, v.tol()));
}

TruthValue value_of_join(const Valuation& v, const Subspace& a, const Subspace& b) {
  return value_of(v, join(a, b, v.tol()));
}

double probability_of(const Valuation& v, const Subspace& s) {
  require_dim(v, s);
  if (v.policy().kind == ValuationPolicy::Kind::TableDriven) {
    fail(ErrorKind::NoState, "probability_of: table-driven valuations carry no state");
  }
  return expectation(s.projector(), require_state(v, "probability_of"), v.tol());
}

AgreementReport agreement_report(const StateVector& state, const Subspace& s, const Tolerance& tol) {
  const Valuation bivalent(ValuationPolicy::eigenstate_bivalent(), state, tol);
  const Valuation born(ValuationPolicy::born_degree(), state, tol);
  AgreementReport r{value_of(bivalent, s), value_of(born, s), probability_of(born, s), false};
  r.agree = r.eigenstate_value.defined() && std::abs(r.eigenstate_value.value() - r.born_value.value()) <= tol.eq &&
            std::abs(r.eigenstate_value.value() - r.probability) <= tol.eq;
  return r;
}

LukasiewiczCoincidence lukasiewicz_coincidence_check(const StateVector& state, const Subspace& a, const Subspace& b,
                                                     const Tolerance& tol) {
  const Valuation born(ValuationPolicy::born_degree(), state, tol);
  const double va = value_of(born, a).value();
  const double vb = value_of(born, b).value();
  LukasiewiczCoincidence r{};
  r.lhs_join = value_of_join(born, a, b).value();
  r.rhs_join = std::min(va + vb, 1.0);
  r.lhs_meet = value_of_meet(born, a, b).value();
  r.rhs_meet = std::max(va + vb - 1.0, 0.0);
  r.join_matches = std::abs(r.lhs_join - r.rhs_join) <= tol.eq;
  r.meet_matches = std::abs(r.lhs_meet - r.rhs_meet) <= tol.eq;
  return r;
}

AlternativesReport law_of_alternatives_check(const StateVector& state, const Subspace& a, const Subspace& b,
                                             const Tolerance& tol) {
  if (!meet(a, b, tol).is_bottom()) {
    fail(ErrorKind::PreconditionViolation, "law of alternatives needs mutually exclusive subspaces (a ^ b = 0)");
  }
  const Valuation born(ValuationPolicy::born_degree(), state, tol);
  AlternativesReport r{};
  r.p_join = probability_of(born, join(a, b, tol));
  r.p_sum = probability_of(born, a) + probability_of(born, b);
  r.holds = std::abs(r.p_join - r.p_sum) <= tol.eq;
  return r;
}

}  // namespace qlogic

#include "qlogic/truth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qlogic/error.hpp"

namespace qlogic {
namespace {

bool near(double x, double y, double eps) { return std::abs(x - y) <= eps; }

}  // namespace

TruthValue TruthValue::degree(double t) {
  if (!std::isfinite(t) || t < 0.0 || t > 1.0) {
    std::ostringstream os;
    os.precision(17);
    os << "truth degree " << t << " is outside [0, 1]";
    fail(ErrorKind::InvalidArgument, os.str());
  }
  return TruthValue(t);
}

double TruthValue::value() const {
  if (!degree_) fail(ErrorKind::InvalidArgument, "truth value is undefined");
  return *degree_;
}

std::string to_string(const TruthValue& t, int significant_digits) {
  if (!t.defined()) return "undefined";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, t.value());
  return buf;
}

std::string_view to_string(LogicSystem sys) {
  switch (sys) {
    case LogicSystem::Bivalent: return "bivalent";
    case LogicSystem::Kleene3: return "kleene3";
    case LogicSystem::LukasiewiczFuzzy: return "lukasiewicz";
  }
  return "unknown";
}

std::optional<LogicSystem> logic_system_from_string(std::string_view name) {
  if (name == "bivalent") return LogicSystem::Bivalent;
  if (name == "kleene3") return LogicSystem::Kleene3;
  if (name == "lukasiewicz") return LogicSystem::LukasiewiczFuzzy;
  return std::nullopt;
}

void check_legal(const TruthValue& t, LogicSystem sys) {
  if (!t.defined()) return;
  const double x = t.value();
  bool ok = true;
  switch (sys) {
    case LogicSystem::Bivalent:
      ok = near(x, 0.0, kValueSetTolerance) || near(x, 1.0, kValueSetTolerance);
      break;
    case LogicSystem::Kleene3:
      ok = near(x, 0.0, kValueSetTolerance) || near(x, 0.5, kValueSetTolerance) || near(x, 1.0, kValueSetTolerance);
      break;
    case LogicSystem::LukasiewiczFuzzy:
      break;
  }
  if (!ok) {
    std::ostringstream os;
    os.precision(12);
    os << "value " << x << " is not admitted by the " << to_string(sys) << " system";
    fail(ErrorKind::IllegalValueForSystem, os.str());
  }
}

TruthValue neg(const TruthValue& t) {
  if (!t.defined()) return t;
  return TruthValue::degree(1.0 - t.value());
}

TruthValue disj(const TruthValue& a, const TruthValue& b, LogicSystem sys) {
  check_legal(a, sys);
  check_legal(b, sys);
  if (!a.defined() || !b.defined()) return TruthValue::undefined();
  if (sys == LogicSystem::LukasiewiczFuzzy) return TruthValue::degree(std::min(a.value() + b.value(), 1.0));
  return TruthValue::degree(std::max(a.value(), b.value()));
}

TruthValue conj(const TruthValue& a, const TruthValue& b, LogicSystem sys) {
  check_legal(a, sys);
  check_legal(b, sys);
  if (!a.defined() || !b.defined()) return TruthValue::undefined();
  if (sys == LogicSystem::LukasiewiczFuzzy) return TruthValue::degree(std::max(a.value() + b.value() - 1.0, 0.0));
  return TruthValue::degree(std::min(a.value(), b.value()));
}

TruthValue xor_compound(const TruthValue& a, const TruthValue& b, LogicSystem sys) {
  return conj(disj(a, b, sys), neg(conj(a, b, sys)), sys);
}

bool is_bivalent(const TruthValue& t, double eps) {
  return t.defined() && (near(t.value(), 0.0, eps) || near(t.value(), 1.0, eps));
}

}  // namespace qlogic

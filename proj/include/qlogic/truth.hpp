#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace qlogic {

/// Either a truth gap (Undefined) or a degree in [0, 1].
class TruthValue {
 public:
  static TruthValue undefined() { return TruthValue(); }
  static TruthValue degree(double t);

  bool defined() const noexcept { return degree_.has_value(); }
  /// Precondition: defined().
  double value() const;
  const std::optional<double>& as_optional() const noexcept { return degree_; }

  friend bool operator==(const TruthValue&, const TruthValue&) = default;

 private:
  TruthValue() = default;
  explicit TruthValue(double t) : degree_(t) {}
  std::optional<double> degree_;
};

std::string to_string(const TruthValue& t, int significant_digits = 12);

enum class LogicSystem { Bivalent, Kleene3, LukasiewiczFuzzy };

std::string_view to_string(LogicSystem sys);
std::optional<LogicSystem> logic_system_from_string(std::string_view name);

/// Tolerance used when checking membership in a finite value set.
inline constexpr double kValueSetTolerance = 1e-9;

/// Throws IllegalValueForSystem when a defined t lies outside the value set of sys.
void check_legal(const TruthValue& t, LogicSystem sys);

TruthValue neg(const TruthValue& t);
TruthValue disj(const TruthValue& a, const TruthValue& b, LogicSystem sys);
TruthValue conj(const TruthValue& a, const TruthValue& b, LogicSystem sys);

/// (a v b) ^ ~(a ^ b), composed from the three primitive connectives.
TruthValue xor_compound(const TruthValue& a, const TruthValue& b, LogicSystem sys);

bool is_bivalent(const TruthValue& t, double eps = kValueSetTolerance);

}  // namespace qlogic

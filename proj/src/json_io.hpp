#pragma once

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "qlogic/error.hpp"
#include "qlogic/numeric.hpp"

namespace qlogic::detail {

using nlohmann::json;

[[noreturn]] inline void invalid(const std::string& field, const std::string& what) {
  fail(ErrorKind::ConfigInvalid, field + ": " + what);
}

inline void reject_unknown_keys(const json& obj, const std::string& context, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) invalid(context, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) invalid(context, "unknown key '" + key + "'");
  }
}

inline Complex parse_complex(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    invalid(field, "expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline ComplexVector parse_complex_vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) invalid(field, "expected a non-empty array of [re, im] pairs");
  ComplexVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_complex(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::size_t parse_positive(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) invalid(field, "expected a positive integer");
  return j.get<std::size_t>();
}

}  // namespace qlogic::detail

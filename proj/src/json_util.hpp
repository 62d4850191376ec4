// Copyright 2026 The anonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANONKIT_SRC_JSON_UTIL_HPP
#define ANONKIT_SRC_JSON_UTIL_HPP

#include <cmath>
#include <limits>

#include <json.hpp>

#include "anonkit/error.hpp"

namespace anonkit {

// JSON has no infinity literal (the serializer would emit null), so infinite
// values round-trip as the strings "inf" / "-inf".
inline nlohmann::ordered_json json_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

inline double number_from_json(const nlohmann::ordered_json& value,
                               const char* field) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw Error(ErrorCode::invalid_config,
              std::string(field) + " must be a number or \"inf\"/\"-inf\"");
}

}  // namespace anonkit

#endif  // ANONKIT_SRC_JSON_UTIL_HPP

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

#ifndef ANONKIT_ERROR_HPP
#define ANONKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace anonkit {

enum class ErrorCode {
  invalid_argument,   // bad parameter value (k < 1, t outside [0,1], ...)
  csv_parse,          // malformed CSV input, carries row/column context
  schema_mismatch,    // header does not match the declared schema
  unknown_attribute,  // attribute name not present in the schema
  unknown_value,      // hierarchy is not total over the observed domain
  level_out_of_range, // generalization level beyond max_level
  infeasible,         // no lattice node satisfies the constraints
  io,                 // file system failure
  invalid_config,     // job configuration failed validation
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the anonymizer when every lattice node violates the constraints
// or exceeds the suppression budget.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& message, std::size_t best_achieved_k,
                  double min_suppression_needed)
      : Error(ErrorCode::infeasible, message),
        best_achieved_k_(best_achieved_k),
        min_suppression_needed_(min_suppression_needed) {}

  // Best minimum class size reachable anywhere in the lattice.
  std::size_t best_achieved_k() const { return best_achieved_k_; }
  // Smallest suppression fraction that would have made some node feasible.
  double min_suppression_needed() const { return min_suppression_needed_; }

 private:
  std::size_t best_achieved_k_;
  double min_suppression_needed_;
};

}  // namespace anonkit

#endif  // ANONKIT_ERROR_HPP

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

#ifndef ANONKIT_JOB_HPP
#define ANONKIT_JOB_HPP

#include <ostream>

#include "anonkit/config.hpp"

namespace anonkit {

// Runs one batch job end to end and emits a JSON report, to
// config.report_path when set, otherwise to fallback_report. Returns the
// process exit code: 0 success, 1 invalid config or input errors, 2 when a
// privacy constraint cannot be met (a failing `check` or an infeasible
// `anonymize`). Expected failures become JSON diagnostics in the report
// rather than exceptions. Reports are byte-deterministic given the config.
int run_job(const JobConfig& config, std::ostream& fallback_report);

}  // namespace anonkit

#endif  // ANONKIT_JOB_HPP

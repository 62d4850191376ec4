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

#ifndef ANONKIT_PSEUDONYM_HPP
#define ANONKIT_PSEUDONYM_HPP

#include <string>
#include <string_view>

#include "anonkit/table.hpp"

namespace anonkit {

// Keyed opaque token for a value: SHA-256 over the length-prefixed seed and
// value, truncated to 128 bits, base64 without padding (22 characters).
// Equal inputs map to equal tokens; the seed never appears in the output.
std::string pseudonym_token(std::string_view seed, std::string_view value);

// Replaces every cell of `attr` with its token. Tokens are deterministic per
// seed; different seeds give unrelated token sets. Pseudonymization keeps the
// record linkable by token, so it is a security measure, not anonymization.
Table pseudonymize(const Table& table, std::string_view attr, std::string_view seed);

}  // namespace anonkit

#endif  // ANONKIT_PSEUDONYM_HPP

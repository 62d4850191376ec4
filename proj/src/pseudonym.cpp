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

#include "anonkit/pseudonym.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdint>

namespace anonkit {

namespace {

constexpr char kBase64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_no_padding(const unsigned char* data, std::size_t len) {
  std::string out;
  out.reserve((len * 4 + 2) / 3);
  std::size_t i = 0;
  for (; i + 3 <= len; i += 3) {
    std::uint32_t v = (static_cast<std::uint32_t>(data[i]) << 16) |
                      (static_cast<std::uint32_t>(data[i + 1]) << 8) |
                      static_cast<std::uint32_t>(data[i + 2]);
    out.push_back(kBase64Alphabet[(v >> 18) & 63]);
    out.push_back(kBase64Alphabet[(v >> 12) & 63]);
    out.push_back(kBase64Alphabet[(v >> 6) & 63]);
    out.push_back(kBase64Alphabet[v & 63]);
  }
  if (i + 1 == len) {
    std::uint32_t v = static_cast<std::uint32_t>(data[i]) << 16;
    out.push_back(kBase64Alphabet[(v >> 18) & 63]);
    out.push_back(kBase64Alphabet[(v >> 12) & 63]);
  } else if (i + 2 == len) {
    std::uint32_t v = (static_cast<std::uint32_t>(data[i]) << 16) |
                      (static_cast<std::uint32_t>(data[i + 1]) << 8);
    out.push_back(kBase64Alphabet[(v >> 18) & 63]);
    out.push_back(kBase64Alphabet[(v >> 12) & 63]);
    out.push_back(kBase64Alphabet[(v >> 6) & 63]);
  }
  return out;
}

void append_length_prefixed(std::string& buf, std::string_view s) {
  // 8-byte big-endian length keeps (seed, value) framing unambiguous.
  std::uint64_t n = s.size();
  for (int shift = 56; shift >= 0; shift -= 8) {
    buf.push_back(static_cast<char>((n >> shift) & 0xff));
  }
  buf.append(s);
}

}  // namespace

std::string pseudonym_token(std::string_view seed, std::string_view value) {
  std::string message;
  message.reserve(16 + seed.size() + value.size());
  append_length_prefixed(message, seed);
  append_length_prefixed(message, value);

  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int digest_len = 0;
  if (EVP_Digest(message.data(), message.size(), digest.data(), &digest_len,
                 EVP_sha256(), nullptr) != 1 ||
      digest_len < 16) {
    throw Error(ErrorCode::io, "token digest computation failed");
  }
  return base64_no_padding(digest.data(), 16);
}

Table pseudonymize(const Table& table, std::string_view attr, std::string_view seed) {
  std::size_t col = table.column_index(attr);
  std::vector<AttributeSchema> schema = table.schema();
  schema[col].kind = AttributeKind::text;
  std::vector<std::vector<Cell>> rows = table.rows();
  for (auto& row : rows) {
    row[col] = Cell(pseudonym_token(seed, cell_to_string(row[col])));
  }
  return Table(std::move(schema), std::move(rows));
}

}  // namespace anonkit

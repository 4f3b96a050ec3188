// Copyright 2026 The Specogram Authors
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

#include "specogram/identifier.hpp"

namespace specogram {

bool is_name_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '_';
}

namespace {

std::string describe(char c) {
  if (c == ' ') return "space";
  if (c == '\t') return "tab";
  if (c == '\n') return "line break";
  auto byte = static_cast<unsigned char>(c);
  if (byte < 0x20 || byte >= 0x7f) {
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string("byte 0x") + kHex[byte >> 4] + kHex[byte & 0xf];
  }
  return std::string("'") + c + "'";
}

}  // namespace

Diagnostics check_name_lexeme(std::string_view text) {
  if (text.empty()) {
    return {Diagnostic::error("EmptyInput", "expected an identifier, got empty text",
                              SourceSpan::at_offset(0, 0))};
  }
  if (!is_name_start(text.front())) {
    return {Diagnostic::error(
        "IllegalFirstCharacter",
        "'" + std::string(text) + "' must start with an ASCII letter, not " +
            describe(text.front()),
        SourceSpan::at_offset(0, 1))};
  }
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!is_name_char(text[i])) {
      return {Diagnostic::error(
          "IllegalCharacterAt",
          "'" + std::string(text) + "' is not a well-formed identifier: " +
              describe(text[i]) + " at position " + std::to_string(i),
          SourceSpan::at_offset(i, 1))};
    }
  }
  return {};
}

Result<Identifier> validate_identifier(std::string_view text) {
  return Identifier::make(text);
}

Result<TypeName> validate_type_name(std::string_view text) {
  return TypeName::make(text);
}

}  // namespace specogram

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

#ifndef SPECOGRAM_IDENTIFIER_HPP_
#define SPECOGRAM_IDENTIFIER_HPP_

#include <compare>
#include <string>
#include <string_view>

#include "specogram/diagnostic.hpp"

namespace specogram {

// Lexical rule shared by identifiers and type names: [A-Za-z][A-Za-z0-9_]*.
// The returned list is empty iff `text` is well formed.
//
// Codes: EmptyInput, IllegalFirstCharacter, IllegalCharacterAt. The span
// offset is the 0-based position of the offending character.
Diagnostics check_name_lexeme(std::string_view text);

bool is_name_start(char c);
bool is_name_char(char c);

namespace detail {

template <class Tag>
class Name {
 public:
  static Result<Name> make(std::string_view text) {
    Diagnostics problems = check_name_lexeme(text);
    if (!problems.empty()) return problems;
    return Name(std::string(text));
  }

  const std::string& str() const { return text_; }
  std::string_view view() const { return text_; }

  auto operator<=>(const Name&) const = default;
  bool operator==(const Name&) const = default;

 private:
  explicit Name(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

struct IdentifierTag {};
struct TypeNameTag {};

}  // namespace detail

using Identifier = detail::Name<detail::IdentifierTag>;

// `{CLOCK}` in a specogram yields the string "CLOCK"; same rule as
// Identifier but a distinct type so the two cannot be swapped.
using TypeName = detail::Name<detail::TypeNameTag>;

Result<Identifier> validate_identifier(std::string_view text);
Result<TypeName> validate_type_name(std::string_view text);

}  // namespace specogram

#endif  // SPECOGRAM_IDENTIFIER_HPP_

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

// Line-aware tokenizer shared by the .spec and domain-model readers.

#ifndef SPECOGRAM_SRC_SOURCE_LEXER_HPP_
#define SPECOGRAM_SRC_SOURCE_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "specogram/diagnostic.hpp"

namespace specogram::internal {

enum class SrcTok { kWord, kString, kDot, kColon, kUnknown, kEnd };

struct SrcToken {
  SrcTok kind;
  std::size_t offset;  // of the first byte (the quote, for strings)
  std::size_t length;
  std::size_t line;
  std::size_t column;
  // Word text, or string contents without the quotes.
  std::string_view text;
  bool unterminated = false;
};

class SourceText {
 public:
  SourceText(std::string_view text, std::string_view file) : text_(text), file_(file) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  std::string_view text() const { return text_; }
  const std::string& file() const { return file_; }

  SourceSpan span(std::size_t offset, std::size_t length) const;

  std::vector<SrcToken> tokenize() const;

 private:
  std::string_view text_;
  std::string file_;
  std::vector<std::size_t> line_starts_;
};

}  // namespace specogram::internal

#endif  // SPECOGRAM_SRC_SOURCE_LEXER_HPP_

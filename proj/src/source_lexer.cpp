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

#include "source_lexer.hpp"

#include <algorithm>

#include "specogram/identifier.hpp"

namespace specogram::internal {

SourceSpan SourceText::span(std::size_t offset, std::size_t length) const {
  offset = std::min(offset, text_.size());
  length = std::min(length, text_.size() - offset);
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
  std::size_t column = offset - line_starts_[line - 1] + 1;
  return SourceSpan{file_, line, column, length, offset};
}

std::vector<SrcToken> SourceText::tokenize() const {
  std::vector<SrcToken> out;
  std::size_t i = 0;
  auto push = [&](SrcTok kind, std::size_t start, std::size_t length, std::string_view text,
                  bool unterminated = false) {
    SourceSpan where = span(start, length);
    out.push_back(SrcToken{kind, start, length, where.line, where.column, text, unterminated});
  };
  while (i < text_.size()) {
    char c = text_[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '-' && i + 1 < text_.size() && text_[i + 1] == '-') {
      while (i < text_.size() && text_[i] != '\n') ++i;
    } else if (is_name_char(c)) {
      std::size_t j = i;
      while (j < text_.size() && is_name_char(text_[j])) ++j;
      push(SrcTok::kWord, i, j - i, text_.substr(i, j - i));
      i = j;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < text_.size() && text_[j] != '"' && text_[j] != '\n') ++j;
      bool closed = j < text_.size() && text_[j] == '"';
      push(SrcTok::kString, i, (closed ? j + 1 : j) - i, text_.substr(i + 1, j - i - 1), !closed);
      i = closed ? j + 1 : j;
    } else if (c == '.') {
      push(SrcTok::kDot, i, 1, text_.substr(i, 1));
      ++i;
    } else if (c == ':') {
      push(SrcTok::kColon, i, 1, text_.substr(i, 1));
      ++i;
    } else {
      push(SrcTok::kUnknown, i, 1, text_.substr(i, 1));
      ++i;
    }
  }
  push(SrcTok::kEnd, text_.size(), 0, {});
  return out;
}

}  // namespace specogram::internal

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

// `.spec` files: the textual image of the vocabulary chain.
//
//   specification clock_specification
//
//   requirement requirement_1 states that execution of "clock.tick"
//     does not change "clock.hour"
//     for clock of type CLOCK
//     if in the beginning "clock.minute < 59".
//
// The phrase words are the builder's phrase names with spaces instead of
// underscores; the closing `.` plays the role of `period`. Line breaks and
// indentation between tokens are insignificant and `--` starts a comment
// that runs to the end of the line.

#ifndef SPECOGRAM_TEXTUAL_HPP_
#define SPECOGRAM_TEXTUAL_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "specogram/diagnostic.hpp"
#include "specogram/model.hpp"

namespace specogram {

struct SpecogramParse {
  // Every well-formed requirement, in file order. Absent only when the
  // `specification <name>` header is unusable.
  std::optional<Specification> specification;
  Diagnostics diagnostics;

  bool ok() const { return specification.has_value() && count_errors(diagnostics) == 0; }
};

// Syntax errors recover at the next `.`; the requirement containing the
// error is dropped and parsing resumes with the following one.
SpecogramParse parse_specogram(std::string_view text, std::string_view file_name = {});

// Canonical layout: header, blank line, then one block per requirement with
// one clause per line and a two-space continuation indent. Comments are not
// preserved.
std::string format_specogram(const Specification& spec);

}  // namespace specogram

#endif  // SPECOGRAM_TEXTUAL_HPP_

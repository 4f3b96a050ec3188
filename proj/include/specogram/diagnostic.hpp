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

#ifndef SPECOGRAM_DIAGNOSTIC_HPP_
#define SPECOGRAM_DIAGNOSTIC_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace specogram {

enum class Severity { kError, kWarning };

std::string_view to_string(Severity severity);

// Location of a diagnostic. `offset` is the 0-based byte offset into the
// text that was handed to the failing operation; `line`/`column` are 1-based
// and refer to the same text unless a frontend remapped them into a file.
struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
  std::size_t offset = 0;

  static SourceSpan at_offset(std::size_t offset, std::size_t length) {
    return SourceSpan{{}, 1, offset + 1, length, offset};
  }

  bool operator==(const SourceSpan&) const = default;
};

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  SourceSpan span;

  static Diagnostic error(std::string code, std::string message,
                          SourceSpan span = {});
  static Diagnostic warning(std::string code, std::string message,
                            SourceSpan span = {});

  bool is_error() const { return severity == Severity::kError; }

  // `file:line:col: severity[code]: message`
  std::string format() const;
};

using Diagnostics = std::vector<Diagnostic>;

std::size_t count_errors(const Diagnostics& diagnostics);

// Either a value or the (non-empty) list of diagnostics explaining why there
// is none.
template <class T>
class Result {
 public:
  Result(T value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Result(Diagnostic diagnostic)                  // NOLINT(google-explicit-constructor)
      : state_(Diagnostics{std::move(diagnostic)}) {}
  Result(Diagnostics diagnostics)                // NOLINT(google-explicit-constructor)
      : state_(std::move(diagnostics)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(state_); }
  T& value() & { return std::get<T>(state_); }
  T&& value() && { return std::get<T>(std::move(state_)); }

  const T& operator*() const& { return value(); }
  T&& operator*() && { return std::move(*this).value(); }
  const T* operator->() const { return &value(); }

  const Diagnostics& diagnostics() const { return std::get<Diagnostics>(state_); }

  // The first diagnostic; only valid when !ok().
  const Diagnostic& error() const { return diagnostics().front(); }

 private:
  std::variant<T, Diagnostics> state_;
};

// Thrown by the vocabulary when a phrase receives malformed input.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(Diagnostics diagnostics);
  explicit SpecError(Diagnostic diagnostic)
      : SpecError(Diagnostics{std::move(diagnostic)}) {}

  const Diagnostics& diagnostics() const { return diagnostics_; }
  const Diagnostic& first() const { return diagnostics_.front(); }

 private:
  Diagnostics diagnostics_;
};

}  // namespace specogram

#endif  // SPECOGRAM_DIAGNOSTIC_HPP_

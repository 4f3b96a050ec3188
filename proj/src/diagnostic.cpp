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

#include "specogram/diagnostic.hpp"

#include <algorithm>

namespace specogram {

std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

Diagnostic Diagnostic::error(std::string code, std::string message,
                             SourceSpan span) {
  return Diagnostic{Severity::kError, std::move(code), std::move(message),
                    std::move(span)};
}

Diagnostic Diagnostic::warning(std::string code, std::string message,
                               SourceSpan span) {
  return Diagnostic{Severity::kWarning, std::move(code), std::move(message),
                    std::move(span)};
}

std::string Diagnostic::format() const {
  std::string out = span.file.empty() ? std::string("<input>") : span.file;
  out += ':' + std::to_string(span.line) + ':' + std::to_string(span.column) +
         ": ";
  out += to_string(severity);
  out += '[' + code + "]: " + message;
  return out;
}

std::size_t count_errors(const Diagnostics& diagnostics) {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(),
                    [](const Diagnostic& d) { return d.is_error(); }));
}

namespace {

std::string summarize(const Diagnostics& diagnostics) {
  if (diagnostics.empty()) return "specification error";
  const Diagnostic& d = diagnostics.front();
  std::string out = d.code + ": " + d.message;
  if (diagnostics.size() > 1) {
    out += " (and " + std::to_string(diagnostics.size() - 1) + " more)";
  }
  return out;
}

}  // namespace

SpecError::SpecError(Diagnostics diagnostics)
    : std::runtime_error(summarize(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace specogram

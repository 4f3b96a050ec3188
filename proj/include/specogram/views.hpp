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

// Views generated from a Specification. Every emitter is a pure function of
// its inputs: emitting twice yields byte-identical content.

#ifndef SPECOGRAM_VIEWS_HPP_
#define SPECOGRAM_VIEWS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specogram/diagnostic.hpp"
#include "specogram/model.hpp"

namespace specogram {

enum class ViewKind { kLatex, kPuts, kContracts, kTrace };

std::string_view to_string(ViewKind view);
std::optional<ViewKind> view_from_name(std::string_view name);

struct EmitOptions {
  // Insert `modify (<vars>)` frame clauses into the generated tests.
  bool frames = false;
  std::vector<ViewKind> views = {ViewKind::kLatex, ViewKind::kPuts};
};

struct GeneratedArtifact {
  ViewKind view;
  std::filesystem::path relative_path;
  std::string content;

  bool operator==(const GeneratedArtifact&) const = default;
};

// "Execution of clock.tick does not change clock.hour if, in the beginning,
// clock.minute < 59." An unconditional requirement ends after the effect.
std::string natural_sentence(const Requirement& req);

// "check_" + label.
std::string routine_name(const Requirement& req);

// Postcondition in test notation, e.g. "clock.hour ~ old clock.hour".
std::string postcondition(const Requirement& req, const RenderOptions& options = {});

// Where emit_contracts placed the requirement ("CLOCK.tick ensure 1"), or
// std::nullopt when the requirement cannot be reduced to a single class.
std::optional<std::string> contract_location(const Specification& spec,
                                             const Requirement& req);

GeneratedArtifact emit_latex(const Specification& spec);
GeneratedArtifact emit_puts(const Specification& spec, const EmitOptions& options = {});
GeneratedArtifact emit_contracts(const Specification& spec);
GeneratedArtifact emit_trace(const Specification& spec);

// Emits the selected views in the order listed in `options.views`, without
// duplicates. Fails with NoViews when the selection is empty.
Result<std::vector<GeneratedArtifact>> emit(const Specification& spec,
                                            const EmitOptions& options);

// Writes every artifact under `directory` (created if missing). Either all
// files are replaced or none are. Fails with IoError.
Result<std::vector<std::filesystem::path>> write_artifacts(
    const std::vector<GeneratedArtifact>& artifacts, const std::filesystem::path& directory);

}  // namespace specogram

#endif  // SPECOGRAM_VIEWS_HPP_

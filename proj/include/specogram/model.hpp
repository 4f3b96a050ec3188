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

#ifndef SPECOGRAM_MODEL_HPP_
#define SPECOGRAM_MODEL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specogram/diagnostic.hpp"
#include "specogram/fragment.hpp"
#include "specogram/identifier.hpp"

namespace specogram {

enum class EffectKind { kDoesNotChange, kIncrements, kDecrements };

// Keyword used by the canonical document: does_not_change, increments,
// decrements.
std::string_view keyword(EffectKind kind);
// Natural-language phrase: "does not change", "increments", "decrements".
std::string_view phrase(EffectKind kind);
std::optional<EffectKind> effect_from_keyword(std::string_view text);

// What the action does to its target. Increments/decrements mean
// new value = old value + 1 (resp. - 1).
struct Effect {
  EffectKind kind;
  QueryPath target;

  bool operator==(const Effect&) const = default;
};

struct VariableBinding {
  Identifier variable;
  TypeName declared_type;

  bool operator==(const VariableBinding&) const = default;
};

// Where each component of a requirement came from. Informational only: it
// never takes part in equality.
struct RequirementOrigin {
  SourceSpan label;
  SourceSpan action;
  SourceSpan target;
  std::vector<SourceSpan> bindings;
  SourceSpan guard;
};

struct Requirement {
  Identifier label;
  QualifiedCall action;
  Effect effect;
  std::vector<VariableBinding> bindings;
  // Absent means the constant-true condition.
  std::optional<BoolExpr> guard;
  RequirementOrigin origin;

  // A guard that is absent or literally True.
  bool unconditional() const { return !guard || guard->is_true(); }

  const TypeName* type_of(const Identifier& variable) const;

  bool operator==(const Requirement& other) const {
    return label == other.label && action == other.action && effect == other.effect &&
           bindings == other.bindings && guard == other.guard;
  }
};

// Checks the per-requirement invariants: at least one binding, unique
// variable names, and every root mentioned by action, target or guard is
// bound. Codes: MissingBinding, DuplicateBinding, UnboundVariable (one per
// unbound root).
Diagnostics check_requirement(const Requirement& requirement);

class Specification {
 public:
  explicit Specification(Identifier name) : name_(std::move(name)) {}

  const Identifier& name() const { return name_; }
  const std::vector<Requirement>& requirements() const { return requirements_; }
  bool empty() const { return requirements_.empty(); }
  std::size_t size() const { return requirements_.size(); }

  const Requirement* find(const Identifier& label) const;

  bool operator==(const Specification&) const = default;

 private:
  friend Result<Specification> add_requirement(const Specification& spec, Requirement req);

  Identifier name_;
  std::vector<Requirement> requirements_;
};

// Appends `req`, leaving `spec` untouched. Fails with DuplicateLabel when the
// label is taken, or with the diagnostics of check_requirement.
Result<Specification> add_requirement(const Specification& spec, Requirement req);

// Line-oriented key/value persistence. Deterministic; round-trips every valid
// specification.
std::string to_canonical_text(const Specification& spec);

// Codes: MalformedDocument, SchemaViolation, plus the fragment and
// requirement diagnostics. Spans refer to lines of `text`.
Result<Specification> from_canonical_text(std::string_view text,
                                          std::string_view file_name = {});

}  // namespace specogram

#endif  // SPECOGRAM_MODEL_HPP_

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

#include "specogram/vocabulary.hpp"

#include <utility>

namespace specogram {

namespace detail {

struct Draft {
  Identifier label;
  std::optional<QualifiedCall> action;
  std::optional<Effect> effect;
  std::vector<VariableBinding> bindings;
  std::optional<Identifier> pending_variable;
  std::optional<BoolExpr> guard;
};

StageBase::StageBase(Specogram* target, std::unique_ptr<Draft> draft)
    : target_(target), draft_(std::move(draft)) {}

StageBase::StageBase(StageBase&& other) noexcept
    : target_(other.target_), draft_(std::move(other.draft_)) {}

StageBase& StageBase::operator=(StageBase&& other) noexcept {
  if (this != &other) {
    if (draft_ && target_ != nullptr) target_->abandoned(*draft_);
    target_ = other.target_;
    draft_ = std::move(other.draft_);
  }
  return *this;
}

StageBase::~StageBase() {
  if (draft_ && target_ != nullptr) target_->abandoned(*draft_);
}

std::unique_ptr<Draft> StageBase::take() {
  if (!draft_) {
    throw SpecError(Diagnostic::error(
        "SpentStage", "this stage was already consumed by an earlier phrase"));
  }
  return std::move(draft_);
}

}  // namespace detail

Labeled::Labeled(Specogram* target, std::unique_ptr<detail::Draft> draft)
    : StageBase(target, std::move(draft)) {}
ActionGiven::ActionGiven(Specogram* target, std::unique_ptr<detail::Draft> draft)
    : StageBase(target, std::move(draft)) {}
EffectGiven::EffectGiven(Specogram* target, std::unique_ptr<detail::Draft> draft)
    : StageBase(target, std::move(draft)) {}
VarNamed::VarNamed(Specogram* target, std::unique_ptr<detail::Draft> draft)
    : StageBase(target, std::move(draft)) {}
VarTyped::VarTyped(Specogram* target, std::unique_ptr<detail::Draft> draft)
    : StageBase(target, std::move(draft)) {}
Guarded::Guarded(Specogram* target, std::unique_ptr<detail::Draft> draft)
    : StageBase(target, std::move(draft)) {}

namespace {

template <class T>
T unwrap(Result<T> result) {
  if (!result) throw SpecError(result.diagnostics());
  return *std::move(result);
}

}  // namespace

ActionGiven Labeled::states_that_execution_of(std::string_view call) && {
  auto draft = take();
  draft->action = unwrap(parse_call(call));
  return ActionGiven(target_, std::move(draft));
}

EffectGiven ActionGiven::effect(EffectKind kind, std::string_view query) {
  auto draft = take();
  draft->effect = Effect{kind, unwrap(parse_query(query))};
  return EffectGiven(target_, std::move(draft));
}

EffectGiven ActionGiven::does_not_change(std::string_view query) && {
  return effect(EffectKind::kDoesNotChange, query);
}

EffectGiven ActionGiven::increments(std::string_view query) && {
  return effect(EffectKind::kIncrements, query);
}

EffectGiven ActionGiven::decrements(std::string_view query) && {
  return effect(EffectKind::kDecrements, query);
}

namespace {

void name_variable(detail::Draft& draft, std::string_view variable) {
  Identifier name = unwrap(validate_identifier(variable));
  for (const VariableBinding& b : draft.bindings) {
    if (b.variable == name) {
      throw SpecError(Diagnostic::error(
          "DuplicateBinding",
          "variable " + name.str() + " is bound twice in " + draft.label.str(),
          SourceSpan::at_offset(0, variable.size())));
    }
  }
  draft.pending_variable = std::move(name);
}

}  // namespace

VarNamed EffectGiven::for_(std::string_view variable) && {
  auto draft = take();
  name_variable(*draft, variable);
  return VarNamed(target_, std::move(draft));
}

VarNamed VarTyped::for_(std::string_view variable) && {
  auto draft = take();
  name_variable(*draft, variable);
  return VarNamed(target_, std::move(draft));
}

VarTyped VarNamed::of_type(std::string_view type_name) && {
  auto draft = take();
  TypeName type = unwrap(validate_type_name(type_name));
  draft->bindings.push_back(VariableBinding{*draft->pending_variable, std::move(type)});
  draft->pending_variable.reset();
  return VarTyped(target_, std::move(draft));
}

Guarded VarTyped::if_in_the_beginning(std::string_view condition) && {
  auto draft = take();
  draft->guard = unwrap(parse_bool_expr(condition));
  return Guarded(target_, std::move(draft));
}

void VarTyped::period() && {
  auto draft = take();
  target_->finalize(std::move(*draft));
}

void Guarded::period() && {
  auto draft = take();
  target_->finalize(std::move(*draft));
}

// ---------------------------------------------------------------------------

Specogram Specogram::further_referred_to_as(std::string_view name) {
  return Specogram(Specification(unwrap(validate_identifier(name))));
}

Specogram::Specogram(Specification initial) : spec_(std::move(initial)) {}

Labeled Specogram::requirement(std::string_view label) {
  auto draft = std::make_unique<detail::Draft>(
      detail::Draft{unwrap(validate_identifier(label)), {}, {}, {}, {}, {}});
  return Labeled(this, std::move(draft));
}

void Specogram::finalize(detail::Draft draft) {
  Requirement req{std::move(draft.label), std::move(*draft.action),
                  std::move(*draft.effect), std::move(draft.bindings),
                  std::move(draft.guard), {}};
  spec_ = unwrap(add_requirement(spec_, std::move(req)));
}

void Specogram::abandoned(const detail::Draft& draft) {
  warnings_.push_back(Diagnostic::warning(
      "AbandonedRequirement",
      "requirement " + draft.label.str() +
          " was never finalized with period; nothing was registered"));
}

GeneratedArtifact Specogram::writes_seamless_requirements(const EmitOptions& options) const {
  return emit_puts(spec_, options);
}

GeneratedArtifact Specogram::writes_latex() const { return emit_latex(spec_); }

}  // namespace specogram

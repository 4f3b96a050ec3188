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

// The requirement vocabulary: a staged builder whose every stage offers only
// the phrases that may grammatically follow.
//
//   auto doc = Specogram::further_referred_to_as("clock_specification");
//   doc.requirement("requirement_1")
//       .states_that_execution_of("clock.tick")
//       .does_not_change("clock.hour")
//       .for_("clock").of_type("CLOCK")
//       .if_in_the_beginning("clock.minute < 59")
//       .period();
//
// Stage graph:
//
//   Specogram   --requirement-->                 Labeled
//   Labeled     --states_that_execution_of-->    ActionGiven
//   ActionGiven --does_not_change|increments|decrements--> EffectGiven
//   EffectGiven --for_-->                        VarNamed
//   VarNamed    --of_type-->                     VarTyped
//   VarTyped    --for_-->                        VarNamed
//   VarTyped    --if_in_the_beginning-->         Guarded
//   VarTyped, Guarded --period-->                (nothing)
//
// Stages are move-only and every phrase is &&-qualified, so each stage is
// consumed by the phrase that follows it. Every stage type is [[nodiscard]];
// a stage destroyed without reaching `period` registers nothing and leaves
// an AbandonedRequirement warning on its Specogram.
//
// Malformed input is rejected by the phrase that receives it: the phrase
// throws SpecError and the chain registers nothing. A stage must not outlive
// the Specogram that produced it.

#ifndef SPECOGRAM_VOCABULARY_HPP_
#define SPECOGRAM_VOCABULARY_HPP_

#include <memory>
#include <optional>
#include <string_view>

#include "specogram/diagnostic.hpp"
#include "specogram/model.hpp"
#include "specogram/views.hpp"

namespace specogram {

class Specogram;

namespace detail {

struct Draft;

class StageBase {
 public:
  StageBase(StageBase&& other) noexcept;
  StageBase& operator=(StageBase&& other) noexcept;
  StageBase(const StageBase&) = delete;
  StageBase& operator=(const StageBase&) = delete;
  ~StageBase();

 protected:
  StageBase(Specogram* target, std::unique_ptr<Draft> draft);

  // Takes ownership of the draft; the stage is spent afterwards.
  std::unique_ptr<Draft> take();

  Specogram* target_ = nullptr;
  std::unique_ptr<Draft> draft_;
};

}  // namespace detail

class ActionGiven;
class EffectGiven;
class VarNamed;
class VarTyped;
class Guarded;

class [[nodiscard]] Labeled : public detail::StageBase {
 public:
  ActionGiven states_that_execution_of(std::string_view call) &&;

 private:
  friend class Specogram;
  Labeled(Specogram* target, std::unique_ptr<detail::Draft> draft);
};

class [[nodiscard]] ActionGiven : public detail::StageBase {
 public:
  EffectGiven does_not_change(std::string_view query) &&;
  EffectGiven increments(std::string_view query) &&;
  EffectGiven decrements(std::string_view query) &&;

 private:
  friend class Labeled;
  ActionGiven(Specogram* target, std::unique_ptr<detail::Draft> draft);
  EffectGiven effect(EffectKind kind, std::string_view query);
};

class [[nodiscard]] EffectGiven : public detail::StageBase {
 public:
  VarNamed for_(std::string_view variable) &&;

 private:
  friend class ActionGiven;
  EffectGiven(Specogram* target, std::unique_ptr<detail::Draft> draft);
};

class [[nodiscard]] VarNamed : public detail::StageBase {
 public:
  VarTyped of_type(std::string_view type_name) &&;

 private:
  friend class EffectGiven;
  friend class VarTyped;
  VarNamed(Specogram* target, std::unique_ptr<detail::Draft> draft);
};

class [[nodiscard]] VarTyped : public detail::StageBase {
 public:
  VarNamed for_(std::string_view variable) &&;
  Guarded if_in_the_beginning(std::string_view condition) &&;
  void period() &&;

 private:
  friend class VarNamed;
  VarTyped(Specogram* target, std::unique_ptr<detail::Draft> draft);
};

class [[nodiscard]] Guarded : public detail::StageBase {
 public:
  void period() &&;

 private:
  friend class VarTyped;
  Guarded(Specogram* target, std::unique_ptr<detail::Draft> draft);
};

// A specification under construction; the start stage of every chain.
class Specogram {
 public:
  // Throws SpecError when `name` is not an identifier.
  static Specogram further_referred_to_as(std::string_view name);

  explicit Specogram(Specification initial);
  Specogram(const Specogram&) = delete;
  Specogram& operator=(const Specogram&) = delete;

  // Throws SpecError (EmptyInput, IllegalFirstCharacter,
  // IllegalCharacterAt) for a malformed label.
  Labeled requirement(std::string_view label);

  const Specification& specification() const { return spec_; }

  // AbandonedRequirement warnings for chains that never reached `period`.
  const Diagnostics& warnings() const { return warnings_; }

  GeneratedArtifact writes_seamless_requirements(const EmitOptions& options = {}) const;
  GeneratedArtifact writes_latex() const;

 private:
  friend class VarTyped;
  friend class Guarded;
  friend class detail::StageBase;

  void finalize(detail::Draft draft);
  void abandoned(const detail::Draft& draft);

  Specification spec_;
  Diagnostics warnings_;
};

}  // namespace specogram

#endif  // SPECOGRAM_VOCABULARY_HPP_

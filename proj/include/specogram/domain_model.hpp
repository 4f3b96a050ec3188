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

// Registry of the classes a specification talks about, used to check that
// every type, command and query it mentions exists and is used in the right
// role.
//
//   class CLOCK
//     command tick
//     query hour : INTEGER
//     query minute : INTEGER
//   end

#ifndef SPECOGRAM_DOMAIN_MODEL_HPP_
#define SPECOGRAM_DOMAIN_MODEL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specogram/diagnostic.hpp"
#include "specogram/identifier.hpp"
#include "specogram/model.hpp"

namespace specogram {

// The one numeric type that increments/decrements accept.
inline constexpr std::string_view kIntegerType = "INTEGER";

enum class FeatureKind { kCommand, kQuery };

struct FeatureDecl {
  Identifier name;
  FeatureKind kind;
  std::optional<TypeName> result_type;  // set iff kind == kQuery

  static FeatureDecl command(Identifier name) {
    return {std::move(name), FeatureKind::kCommand, std::nullopt};
  }
  static FeatureDecl query(Identifier name, TypeName result) {
    return {std::move(name), FeatureKind::kQuery, std::move(result)};
  }

  bool operator==(const FeatureDecl&) const = default;
};

struct ClassDecl {
  TypeName name;
  std::vector<FeatureDecl> features;

  const FeatureDecl* find(std::string_view feature) const;

  bool operator==(const ClassDecl&) const = default;
};

struct DomainModel {
  std::vector<ClassDecl> classes;

  const ClassDecl* find(std::string_view type) const;

  bool operator==(const DomainModel&) const = default;
};

// Codes: UnexpectedToken, DuplicateClass, DuplicateFeature, plus identifier
// diagnostics.
Result<DomainModel> parse_domain_model(std::string_view text, std::string_view file_name = {});

std::string format_domain_model(const DomainModel& model);

// Errors: UnknownType, UnknownFeature, ActionNotCommand, EffectNotQuery
// (also raised for guard references that name a command), NonIntegerTarget,
// PathThroughCommand. Warning: UnresolvedPath, for path segments beyond a
// class the model does not declare. Empty result means fully consistent.
Diagnostics check_against_model(const Specification& spec, const DomainModel& model);

}  // namespace specogram

#endif  // SPECOGRAM_DOMAIN_MODEL_HPP_

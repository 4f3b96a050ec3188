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


// Single edits of the CLOCK domain model, each paired with the one
// diagnostic it must provoke against the clock requirement.

#ifndef SPECOGRAM_TESTS_MODEL_MUTATIONS_HPP_
#define SPECOGRAM_TESTS_MODEL_MUTATIONS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "specogram/domain_model.hpp"
#include "specogram/model.hpp"

namespace specogram::mutation {

enum class Role { kAction, kTarget, kGuard };

struct Edit {
  std::string description;
  DomainModel model;
  std::string expected;  // empty: no diagnostic
  Role blamed = Role::kAction;
};

// `base` is the clock model: one class with tick, hour and minute. The
// prediction follows from the role each feature plays in the requirement
// "tick <effect> hour if minute ...".
inline std::vector<Edit> single_edits(const DomainModel& base, bool integer_effect) {
  const std::map<std::string, Role> roles = {
      {"tick", Role::kAction}, {"hour", Role::kTarget}, {"minute", Role::kGuard}};
  auto type = [](const char* s) { return *validate_type_name(s); };
  auto name = [](const char* s) { return *validate_identifier(s); };
  std::vector<Edit> edits;
  const ClassDecl& clock = base.classes.front();

  edits.push_back({"drop class", DomainModel{}, "UnknownType", Role::kAction});
  {
    DomainModel m = base;
    m.classes.front().name = type("TIMER");
    edits.push_back({"rename class", m, "UnknownType", Role::kAction});
  }
  {
    DomainModel m = base;
    m.classes.front().features.push_back(FeatureDecl::command(name("reset")));
    edits.push_back({"add reset", m, "", Role::kAction});
  }
  for (std::size_t i = 0; i < clock.features.size(); ++i) {
    const FeatureDecl& f = clock.features[i];
    Role role = roles.at(f.name.str());
    auto at = [&](DomainModel& m) -> FeatureDecl& { return m.classes.front().features[i]; };

    DomainModel dropped = base;
    dropped.classes.front().features.erase(dropped.classes.front().features.begin() +
                                           static_cast<std::ptrdiff_t>(i));
    edits.push_back({"drop " + f.name.str(), dropped, "UnknownFeature", role});

    DomainModel renamed = base;
    at(renamed).name = name("renamed");
    edits.push_back({"rename " + f.name.str(), renamed, "UnknownFeature", role});

    DomainModel flipped = base;
    at(flipped) = f.kind == FeatureKind::kCommand ? FeatureDecl::query(f.name, type("INTEGER"))
                                                  : FeatureDecl::command(f.name);
    std::string expected;
    switch (role) {
      case Role::kAction: expected = "ActionNotCommand"; break;
      case Role::kTarget:
      case Role::kGuard: expected = "EffectNotQuery"; break;
    }
    edits.push_back({"flip " + f.name.str(), flipped, expected, role});

    if (f.kind == FeatureKind::kQuery) {
      DomainModel retyped = base;
      at(retyped) = FeatureDecl::query(f.name, type("BOOLEAN"));
      std::string e = role == Role::kTarget && integer_effect ? "NonIntegerTarget" : "";
      edits.push_back({"retype " + f.name.str(), retyped, e, role});
    }
  }
  return edits;
}

inline SourceSpan blamed_span(const Requirement& r, Role role, const std::string& expected) {
  if (expected == "UnknownType") return r.origin.bindings.front();
  switch (role) {
    case Role::kAction: return r.origin.action;
    case Role::kTarget: return r.origin.target;
    case Role::kGuard: return r.origin.guard;
  }
  return {};
}

}  // namespace specogram::mutation

#endif  // SPECOGRAM_TESTS_MODEL_MUTATIONS_HPP_

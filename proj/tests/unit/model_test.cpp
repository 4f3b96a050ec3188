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


#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "generators.hpp"
#include "specogram/model.hpp"
#include "specogram/views.hpp"

namespace specogram {
namespace {

using testgen::id;
using testgen::tn;

Requirement clock_requirement(const std::string& label = "requirement_1") {
  return Requirement{id(label),
                     *parse_call("clock.tick"),
                     Effect{EffectKind::kDoesNotChange, *parse_query("clock.hour")},
                     {VariableBinding{id("clock"), tn("CLOCK")}},
                     *parse_bool_expr("clock.minute < 59"),
                     {}};
}

TEST(AddRequirement, AppendsAndLeavesOriginalUntouched) {
  Specification empty(id("clock_specification"));
  auto one = add_requirement(empty, clock_requirement());
  ASSERT_TRUE(one.ok());
  EXPECT_EQ(one->size(), 1u);
  EXPECT_TRUE(empty.empty());
  ASSERT_NE(one->find(id("requirement_1")), nullptr);
}

TEST(AddRequirement, DuplicateLabel) {
  auto one = add_requirement(Specification(id("s")), clock_requirement());
  ASSERT_TRUE(one.ok());
  auto two = add_requirement(*one, clock_requirement());
  ASSERT_FALSE(two.ok());
  EXPECT_EQ(two.error().code, "DuplicateLabel");
}

TEST(AddRequirement, RequirementInvariants) {
  Requirement unbound = clock_requirement();
  unbound.guard = *parse_bool_expr("server.load < 3 and clock.minute < 59 and z.q = server.x");
  auto r = add_requirement(Specification(id("s")), unbound);
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.diagnostics().size(), 2u);
  EXPECT_EQ(r.diagnostics()[0].code, "UnboundVariable");
  EXPECT_NE(r.diagnostics()[0].message.find("server"), std::string::npos);
  EXPECT_NE(r.diagnostics()[1].message.find("z"), std::string::npos);

  Requirement none = clock_requirement();
  none.bindings.clear();
  none.guard.reset();
  auto missing = check_requirement(none);
  ASSERT_FALSE(missing.empty());
  EXPECT_EQ(missing.front().code, "MissingBinding");

  Requirement twice = clock_requirement();
  twice.bindings.push_back(VariableBinding{id("clock"), tn("OTHER")});
  auto dup = check_requirement(twice);
  ASSERT_EQ(dup.size(), 1u);
  EXPECT_EQ(dup.front().code, "DuplicateBinding");
}

TEST(AddRequirement, NoSequenceProducesDuplicates) {
  testgen::Rng rng(5);
  const std::vector<std::string> labels = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 200; ++trial) {
    Specification spec(id("s"));
    for (int k = 0; k < 10; ++k) {
      auto next = add_requirement(spec, clock_requirement(testgen::choose(rng, labels)));
      if (next) spec = *next;
    }
    std::set<Identifier> seen;
    for (const Requirement& r : spec.requirements()) EXPECT_TRUE(seen.insert(r.label).second);
  }
}

// Insertion order survives into every view, for every permutation of three
// labels.
TEST(AddRequirement, ViewsKeepInsertionOrderForAllPermutations) {
  std::vector<std::string> labels = {"r_a", "r_b", "r_c"};
  std::sort(labels.begin(), labels.end());
  do {
    Specification spec(id("s"));
    for (const std::string& l : labels) spec = *add_requirement(spec, clock_requirement(l));
    for (const GeneratedArtifact& a :
         {emit_latex(spec), emit_puts(spec), emit_contracts(spec), emit_trace(spec)}) {
      std::vector<std::size_t> positions;
      for (const std::string& l : labels) {
        std::string needle = a.view == ViewKind::kLatex ? "r\\_" + l.substr(2) : l;
        std::size_t at = a.view == ViewKind::kContracts ? std::string::npos
                                                        : a.content.find(needle);
        if (a.view != ViewKind::kContracts) {
          ASSERT_NE(at, std::string::npos) << to_string(a.view) << " " << l;
          positions.push_back(at);
        }
      }
      EXPECT_TRUE(std::is_sorted(positions.begin(), positions.end())) << to_string(a.view);
    }
    Specification back = *from_canonical_text(to_canonical_text(spec));
    ASSERT_EQ(back.requirements().size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(back.requirements()[i].label.str(), labels[i]);
  } while (std::next_permutation(labels.begin(), labels.end()));
}

TEST(Canonical, EmptySpecification) {
  Specification s(id("s"));
  std::string text = to_canonical_text(s);
  EXPECT_EQ(text, "specification: s\n");
  auto back = from_canonical_text(text);
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, s);
}

TEST(Canonical, ClockRequirementRoundTripsAllComponents) {
  Specification spec = *add_requirement(Specification(id("clock_specification")),
                                        clock_requirement());
  std::string text = to_canonical_text(spec);
  EXPECT_EQ(text,
            "specification: clock_specification\n"
            "\n"
            "requirement: requirement_1\n"
            "action: clock.tick\n"
            "effect: does_not_change\n"
            "target: clock.hour\n"
            "binding: clock : CLOCK\n"
            "guard: clock.minute < 59\n");
  auto back = from_canonical_text(text);
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, spec);
  const Requirement& r = back->requirements().front();
  EXPECT_EQ(r.label, id("requirement_1"));
  EXPECT_EQ(render(r.action), "clock.tick");
  EXPECT_EQ(r.effect.kind, EffectKind::kDoesNotChange);
  EXPECT_EQ(render(r.effect.target), "clock.hour");
  ASSERT_TRUE(r.guard.has_value());
  EXPECT_EQ(render(*r.guard), "clock.minute < 59");
}

TEST(Canonical, RandomSpecificationsRoundTrip) {
  testgen::Rng rng(100);
  for (int n = 0; n < 100; ++n) {
    Specification spec = testgen::random_spec(rng);
    std::string text = to_canonical_text(spec);
    auto back = from_canonical_text(text);
    ASSERT_TRUE(back.ok()) << text << "\n" << back.error().format();
    ASSERT_EQ(*back, spec) << text;
    ASSERT_EQ(to_canonical_text(*back), text);
  }
}

TEST(Canonical, Rejections) {
  auto no_header = from_canonical_text("requirement: r\n");
  ASSERT_FALSE(no_header.ok());
  EXPECT_EQ(no_header.error().code, "SchemaViolation");

  auto no_colon = from_canonical_text("specification: s\nrequirement r\n");
  ASSERT_FALSE(no_colon.ok());
  EXPECT_EQ(no_colon.error().code, "MalformedDocument");
  EXPECT_EQ(no_colon.error().span.line, 2u);

  auto missing_target = from_canonical_text(
      "specification: s\n\nrequirement: r\naction: c.t\neffect: increments\n"
      "binding: c : C\n");
  ASSERT_FALSE(missing_target.ok());
  EXPECT_EQ(missing_target.error().code, "SchemaViolation");
  EXPECT_NE(missing_target.error().message.find("target"), std::string::npos);

  auto bad_effect = from_canonical_text(
      "specification: s\n\nrequirement: r\naction: c.t\neffect: doubles\ntarget: c.v\n"
      "binding: c : C\n");
  ASSERT_FALSE(bad_effect.ok());
  EXPECT_EQ(bad_effect.error().code, "MalformedDocument");

  auto bad_guard = from_canonical_text(
      "specification: s\n\nrequirement: r\naction: c.t\neffect: increments\ntarget: c.v\n"
      "binding: c : C\nguard: c.v <\n", "doc.txt");
  ASSERT_FALSE(bad_guard.ok());
  EXPECT_EQ(bad_guard.error().code, "DanglingOperand");
  EXPECT_EQ(bad_guard.error().span.line, 8u);
  EXPECT_EQ(bad_guard.error().span.column, 12u);
  EXPECT_EQ(bad_guard.error().span.file, "doc.txt");
}

TEST(Canonical, Deterministic) {
  testgen::Rng a(9);
  testgen::Rng b(9);
  EXPECT_EQ(to_canonical_text(testgen::random_spec(a)), to_canonical_text(testgen::random_spec(b)));
}

}  // namespace
}  // namespace specogram

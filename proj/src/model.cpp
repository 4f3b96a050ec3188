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

#include "specogram/model.hpp"

#include <algorithm>
#include <set>

namespace specogram {

std::string_view keyword(EffectKind kind) {
  switch (kind) {
    case EffectKind::kDoesNotChange: return "does_not_change";
    case EffectKind::kIncrements: return "increments";
    case EffectKind::kDecrements: return "decrements";
  }
  return "?";
}

std::string_view phrase(EffectKind kind) {
  switch (kind) {
    case EffectKind::kDoesNotChange: return "does not change";
    case EffectKind::kIncrements: return "increments";
    case EffectKind::kDecrements: return "decrements";
  }
  return "?";
}

std::optional<EffectKind> effect_from_keyword(std::string_view text) {
  for (EffectKind k : {EffectKind::kDoesNotChange, EffectKind::kIncrements,
                       EffectKind::kDecrements}) {
    if (keyword(k) == text) return k;
  }
  return std::nullopt;
}

const TypeName* Requirement::type_of(const Identifier& variable) const {
  for (const VariableBinding& b : bindings) {
    if (b.variable == variable) return &b.declared_type;
  }
  return nullptr;
}

Diagnostics check_requirement(const Requirement& req) {
  Diagnostics out;
  if (req.bindings.empty()) {
    out.push_back(Diagnostic::error(
        "MissingBinding", "requirement " + req.label.str() + " binds no variable",
        req.origin.label));
  }
  std::set<Identifier> bound;
  for (std::size_t i = 0; i < req.bindings.size(); ++i) {
    const VariableBinding& b = req.bindings[i];
    if (!bound.insert(b.variable).second) {
      SourceSpan where = i < req.origin.bindings.size() ? req.origin.bindings[i] : req.origin.label;
      out.push_back(Diagnostic::error(
          "DuplicateBinding",
          "variable " + b.variable.str() + " is bound twice in " + req.label.str(), where));
    }
  }

  // Roots in first-mention order: action, target, guard.
  std::vector<std::pair<Identifier, SourceSpan>> roots;
  auto note = [&](const Identifier& root, const SourceSpan& where) {
    for (const auto& [r, _] : roots) {
      if (r == root) return;
    }
    roots.emplace_back(root, where);
  };
  note(req.action.root, req.origin.action);
  note(req.effect.target.root, req.origin.target);
  if (req.guard) {
    for (const QueryPath& q : query_refs(*req.guard)) note(q.root, req.origin.guard);
  }
  for (const auto& [root, where] : roots) {
    if (!bound.contains(root)) {
      out.push_back(Diagnostic::error(
          "UnboundVariable",
          "variable '" + root.str() + "' is used by " + req.label.str() +
              " but never introduced with 'for " + root.str() + " of type ...'",
          where));
    }
  }
  return out;
}

const Requirement* Specification::find(const Identifier& label) const {
  auto it = std::find_if(requirements_.begin(), requirements_.end(),
                         [&](const Requirement& r) { return r.label == label; });
  return it == requirements_.end() ? nullptr : &*it;
}

Result<Specification> add_requirement(const Specification& spec, Requirement req) {
  Diagnostics problems = check_requirement(req);
  if (spec.find(req.label) != nullptr) {
    problems.insert(problems.begin(),
                    Diagnostic::error("DuplicateLabel",
                                      "requirement " + req.label.str() + " is already specified in " +
                                          spec.name().str(),
                                      req.origin.label));
  }
  if (!problems.empty()) return problems;
  Specification next = spec;
  next.requirements_.push_back(std::move(req));
  return next;
}

// ---------------------------------------------------------------------------
// Canonical text

std::string to_canonical_text(const Specification& spec) {
  std::string out = "specification: " + spec.name().str() + "\n";
  for (const Requirement& r : spec.requirements()) {
    out += "\nrequirement: " + r.label.str() + "\n";
    out += "action: " + render(r.action) + "\n";
    out += "effect: " + std::string(keyword(r.effect.kind)) + "\n";
    out += "target: " + render(r.effect.target) + "\n";
    for (const VariableBinding& b : r.bindings) {
      out += "binding: " + b.variable.str() + " : " + b.declared_type.str() + "\n";
    }
    if (r.guard) out += "guard: " + render(*r.guard) + "\n";
  }
  return out;
}

namespace {

struct Line {
  std::size_t number;
  std::string_view key;
  std::string_view value;
  std::size_t value_column;  // 1-based
};

std::string_view trim(std::string_view s, std::size_t* skipped = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  if (skipped != nullptr) *skipped = b;
  return s.substr(b, e - b);
}

class CanonicalReader {
 public:
  CanonicalReader(std::string_view text, std::string_view file) : file_(file) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      std::string_view raw = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (!trim(raw).empty()) split(raw, number);
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
    last_line_ = number;
  }

  Result<Specification> read() {
    if (!diagnostics_.empty()) return diagnostics_;
    if (lines_.empty() || lines_.front().key != "specification") {
      std::size_t at = lines_.empty() ? 1 : lines_.front().number;
      return Diagnostic::error("SchemaViolation",
                               "missing field 'specification' at the top of the document",
                               span(at, 1, 0));
    }
    const Line& header = lines_.front();
    auto name = validate_identifier(header.value);
    if (!name) return remap(name.diagnostics(), header);
    Specification spec(*name);

    pos_ = 1;
    while (pos_ < lines_.size()) {
      const std::size_t before = diagnostics_.size();
      std::optional<Requirement> req = read_requirement();
      if (!req) {
        // Resynchronise at the next block.
        while (pos_ < lines_.size() && lines_[pos_].key != "requirement") ++pos_;
        continue;
      }
      if (diagnostics_.size() != before) continue;
      auto next = add_requirement(spec, *std::move(req));
      if (!next) {
        diagnostics_.insert(diagnostics_.end(), next.diagnostics().begin(),
                            next.diagnostics().end());
        continue;
      }
      spec = *std::move(next);
    }
    if (!diagnostics_.empty()) return diagnostics_;
    return spec;
  }

 private:
  void split(std::string_view raw, std::size_t number) {
    std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos) {
      diagnostics_.push_back(Diagnostic::error(
          "MalformedDocument", "expected 'field: value', found '" + std::string(raw) + "'",
          span(number, 1, raw.size())));
      return;
    }
    std::size_t key_skip = 0;
    std::string_view key = trim(raw.substr(0, colon), &key_skip);
    std::size_t value_skip = 0;
    std::string_view value = trim(raw.substr(colon + 1), &value_skip);
    lines_.push_back(Line{number, key, value, colon + 2 + value_skip});
    static const std::set<std::string_view> kKnown = {
        "specification", "requirement", "action", "effect", "target", "binding", "guard"};
    if (!kKnown.contains(key)) {
      diagnostics_.push_back(Diagnostic::error("MalformedDocument",
                                               "unknown field '" + std::string(key) + "'",
                                               span(number, key_skip + 1, key.size())));
    }
  }

  SourceSpan span(std::size_t line, std::size_t column, std::size_t length) const {
    return SourceSpan{std::string(file_), line, column, length, 0};
  }

  SourceSpan value_span(const Line& line) const {
    return span(line.number, line.value_column, line.value.size());
  }

  // Fragment diagnostics carry offsets relative to the value.
  Diagnostics remap(const Diagnostics& in, const Line& line, std::size_t shift = 0) const {
    Diagnostics out = in;
    for (Diagnostic& d : out) {
      d.span = span(line.number, line.value_column + shift + d.span.offset, d.span.length);
    }
    return out;
  }

  const Line* expect(std::string_view key) {
    if (pos_ < lines_.size() && lines_[pos_].key == key) return &lines_[pos_++];
    std::size_t at = pos_ < lines_.size() ? lines_[pos_].number : last_line_;
    diagnostics_.push_back(Diagnostic::error(
        "SchemaViolation", "missing field '" + std::string(key) + "'", span(at, 1, 0)));
    return nullptr;
  }

  template <class T>
  std::optional<T> take(Result<T> result, const Line& line, std::size_t shift = 0) {
    if (result) return *std::move(result);
    Diagnostics mapped = remap(result.diagnostics(), line, shift);
    diagnostics_.insert(diagnostics_.end(), mapped.begin(), mapped.end());
    return std::nullopt;
  }

  std::optional<Requirement> read_requirement() {
    const Line* label_line = expect("requirement");
    if (label_line == nullptr) return std::nullopt;
    auto label = take(validate_identifier(label_line->value), *label_line);

    const Line* action_line = expect("action");
    if (action_line == nullptr) return std::nullopt;
    auto action = take(parse_call(action_line->value), *action_line);

    const Line* effect_line = expect("effect");
    if (effect_line == nullptr) return std::nullopt;
    auto kind = effect_from_keyword(effect_line->value);
    if (!kind) {
      diagnostics_.push_back(Diagnostic::error(
          "MalformedDocument",
          "effect must be one of does_not_change, increments, decrements; found '" +
              std::string(effect_line->value) + "'",
          value_span(*effect_line)));
    }

    const Line* target_line = expect("target");
    if (target_line == nullptr) return std::nullopt;
    auto target = take(parse_query(target_line->value), *target_line);

    RequirementOrigin origin;
    std::vector<VariableBinding> bindings;
    bool bindings_ok = true;
    if (pos_ >= lines_.size() || lines_[pos_].key != "binding") {
      expect("binding");
      return std::nullopt;
    }
    while (pos_ < lines_.size() && lines_[pos_].key == "binding") {
      const Line& line = lines_[pos_++];
      std::size_t colon = line.value.find(':');
      if (colon == std::string_view::npos) {
        diagnostics_.push_back(Diagnostic::error(
            "MalformedDocument", "binding must read '<variable> : <TYPE>'", value_span(line)));
        bindings_ok = false;
        continue;
      }
      std::size_t var_skip = 0;
      std::size_t type_skip = 0;
      std::string_view var_text = trim(line.value.substr(0, colon), &var_skip);
      std::string_view type_text = trim(line.value.substr(colon + 1), &type_skip);
      auto var = take(validate_identifier(var_text), line, var_skip);
      auto type = take(validate_type_name(type_text), line, colon + 1 + type_skip);
      if (!var || !type) {
        bindings_ok = false;
        continue;
      }
      bindings.push_back(VariableBinding{*var, *type});
      origin.bindings.push_back(value_span(line));
    }

    std::optional<BoolExpr> guard;
    bool guard_ok = true;
    if (pos_ < lines_.size() && lines_[pos_].key == "guard") {
      const Line& line = lines_[pos_++];
      guard = take(parse_bool_expr(line.value), line);
      guard_ok = guard.has_value();
      origin.guard = value_span(line);
    }

    if (pos_ < lines_.size() && lines_[pos_].key != "requirement") {
      const Line& line = lines_[pos_];
      diagnostics_.push_back(Diagnostic::error(
          "SchemaViolation",
          "field '" + std::string(line.key) + "' is out of order; fields follow requirement, "
          "action, effect, target, binding, guard",
          span(line.number, 1, line.key.size())));
      return std::nullopt;
    }

    if (!label || !action || !kind || !target || !bindings_ok || !guard_ok) {
      return std::nullopt;
    }
    origin.label = value_span(*label_line);
    origin.action = value_span(*action_line);
    origin.target = value_span(*target_line);
    return Requirement{*label, *action, Effect{*kind, *target}, std::move(bindings),
                       std::move(guard), std::move(origin)};
  }

  std::string_view file_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 1;
  Diagnostics diagnostics_;
};

}  // namespace

Result<Specification> from_canonical_text(std::string_view text, std::string_view file_name) {
  return CanonicalReader(text, file_name).read();
}

}  // namespace specogram

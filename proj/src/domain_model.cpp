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

#include "specogram/domain_model.hpp"

#include <algorithm>

#include "source_lexer.hpp"

namespace specogram {

const FeatureDecl* ClassDecl::find(std::string_view feature) const {
  auto it = std::find_if(features.begin(), features.end(),
                         [&](const FeatureDecl& f) { return f.name.view() == feature; });
  return it == features.end() ? nullptr : &*it;
}

const ClassDecl* DomainModel::find(std::string_view type) const {
  auto it = std::find_if(classes.begin(), classes.end(),
                         [&](const ClassDecl& c) { return c.name.view() == type; });
  return it == classes.end() ? nullptr : &*it;
}

// ---------------------------------------------------------------------------
// Reader

namespace {

using internal::SourceText;
using internal::SrcTok;
using internal::SrcToken;

struct ModelSyntaxError {
  Diagnostic diagnostic;
};

class ModelReader {
 public:
  ModelReader(std::string_view text, std::string_view file)
      : source_(text, file), tokens_(source_.tokenize()) {}

  Result<DomainModel> read() {
    DomainModel model;
    while (!at(SrcTok::kEnd)) {
      try {
        read_class(model);
      } catch (const ModelSyntaxError& e) {
        diagnostics_.push_back(e.diagnostic);
        // Resume at the next class declaration.
        advance();
        while (!at(SrcTok::kEnd) && !at_word("class")) advance();
      }
    }
    if (!diagnostics_.empty()) return diagnostics_;
    return model;
  }

 private:
  const SrcToken& peek() const { return tokens_[pos_]; }
  bool at(SrcTok kind) const { return peek().kind == kind; }
  bool at_word(std::string_view w) const { return at(SrcTok::kWord) && peek().text == w; }
  const SrcToken& advance() {
    const SrcToken& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  SourceSpan span_of(const SrcToken& t) const { return source_.span(t.offset, t.length); }

  [[noreturn]] void fail(const std::string& expected) const {
    const SrcToken& t = peek();
    std::string found = t.kind == SrcTok::kEnd ? std::string("end of file")
                                               : "'" + std::string(t.text) + "'";
    throw ModelSyntaxError{
        Diagnostic::error("UnexpectedToken", "expected " + expected + ", found " + found,
                          span_of(t))};
  }

  void keyword(std::string_view w) {
    if (!at_word(w)) fail("'" + std::string(w) + "'");
    advance();
  }

  template <class Name>
  Name name(Result<Name> (*validate)(std::string_view), const std::string& what) {
    if (!at(SrcTok::kWord)) fail(what);
    const SrcToken& t = advance();
    Result<Name> result = validate(t.text);
    if (result) return *std::move(result);
    Diagnostic d = result.error();
    d.span = source_.span(t.offset + d.span.offset, d.span.length);
    throw ModelSyntaxError{std::move(d)};
  }

  void read_class(DomainModel& model) {
    keyword("class");
    const SrcToken& name_token = peek();
    ClassDecl cls{name(&validate_type_name, "a class name"), {}};
    while (!at_word("end")) {
      const SrcToken& feature_token = peek();
      FeatureDecl feature = [&] {
        if (at_word("command")) {
          advance();
          return FeatureDecl::command(name(&validate_identifier, "a command name"));
        }
        if (at_word("query")) {
          advance();
          Identifier id = name(&validate_identifier, "a query name");
          if (!at(SrcTok::kColon)) fail("':' and the result type of query " + id.str());
          advance();
          return FeatureDecl::query(std::move(id), name(&validate_type_name, "a result type"));
        }
        fail("'command', 'query' or 'end'");
      }();
      if (cls.find(feature.name.view()) != nullptr) {
        diagnostics_.push_back(Diagnostic::error(
            "DuplicateFeature",
            "feature " + feature.name.str() + " is declared twice in class " + cls.name.str(),
            source_.span(feature_token.offset, 0)));
        continue;
      }
      cls.features.push_back(std::move(feature));
    }
    advance();
    if (model.find(cls.name.view()) != nullptr) {
      diagnostics_.push_back(Diagnostic::error("DuplicateClass",
                                               "class " + cls.name.str() + " is declared twice",
                                               span_of(name_token)));
      return;
    }
    model.classes.push_back(std::move(cls));
  }

  SourceText source_;
  std::vector<SrcToken> tokens_;
  std::size_t pos_ = 0;
  Diagnostics diagnostics_;
};

}  // namespace

Result<DomainModel> parse_domain_model(std::string_view text, std::string_view file_name) {
  return ModelReader(text, file_name).read();
}

std::string format_domain_model(const DomainModel& model) {
  std::string out;
  for (const ClassDecl& cls : model.classes) {
    if (!out.empty()) out += "\n";
    out += "class " + cls.name.str() + "\n";
    for (const FeatureDecl& f : cls.features) {
      if (f.kind == FeatureKind::kCommand) {
        out += "  command " + f.name.str() + "\n";
      } else {
        out += "  query " + f.name.str() + " : " + f.result_type->str() + "\n";
      }
    }
    out += "end\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checking

namespace {

enum class Role { kAction, kTarget, kGuard };

class ModelChecker {
 public:
  explicit ModelChecker(const DomainModel& model) : model_(model) {}

  Diagnostics check(const Specification& spec) {
    for (const Requirement& req : spec.requirements()) check(req);
    return std::move(out_);
  }

 private:
  void check(const Requirement& req) {
    for (std::size_t i = 0; i < req.bindings.size(); ++i) {
      const VariableBinding& b = req.bindings[i];
      if (model_.find(b.declared_type.view()) == nullptr) {
        SourceSpan where = i < req.origin.bindings.size() ? req.origin.bindings[i]
                                                          : req.origin.label;
        out_.push_back(Diagnostic::error(
            "UnknownType",
            req.label.str() + ": type " + b.declared_type.str() + " of " + b.variable.str() +
                " is not declared in the domain model",
            where));
      }
    }
    resolve(req, req.action.root, req.action.path, Role::kAction, req.origin.action);
    resolve(req, req.effect.target.root, req.effect.target.path, Role::kTarget,
            req.origin.target);
    if (req.guard) {
      for (const QueryPath& q : query_refs(*req.guard)) {
        resolve(req, q.root, q.path, Role::kGuard, req.origin.guard);
      }
    }
  }

  void resolve(const Requirement& req, const Identifier& root,
               const std::vector<Identifier>& path, Role role, const SourceSpan& where) {
    const TypeName* type = req.type_of(root);
    if (type == nullptr) return;
    const ClassDecl* cls = model_.find(type->view());
    if (cls == nullptr) return;  // already reported as UnknownType

    std::string prefix = req.label.str() + ": ";
    std::string so_far = root.str();
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Identifier& segment = path[i];
      const std::string owner = cls->name.str();
      so_far += "." + segment.str();
      const FeatureDecl* feature = cls->find(segment.view());
      if (feature == nullptr) {
        out_.push_back(Diagnostic::error(
            "UnknownFeature",
            prefix + "class " + owner + " has no feature " + segment.str() + " (in " + so_far +
                ")",
            where));
        return;
      }
      if (i + 1 < path.size()) {
        if (feature->kind == FeatureKind::kCommand) {
          out_.push_back(Diagnostic::error(
              "PathThroughCommand",
              prefix + owner + "." + segment.str() + " is a command and yields no object to "
                                                     "continue " + so_far,
              where));
          return;
        }
        const ClassDecl* next = model_.find(feature->result_type->view());
        if (next == nullptr) {
          out_.push_back(Diagnostic::warning(
              "UnresolvedPath",
              prefix + "cannot check the rest of the path after " + so_far + ": class " +
                  feature->result_type->str() + " is not in the domain model",
              where));
          return;
        }
        cls = next;
        continue;
      }
      check_role(prefix, so_far, *feature, role, req, where);
    }
  }

  void check_role(const std::string& prefix, const std::string& path, const FeatureDecl& feature,
                  Role role, const Requirement& req, const SourceSpan& where) {
    switch (role) {
      case Role::kAction:
        if (feature.kind != FeatureKind::kCommand) {
          out_.push_back(Diagnostic::error(
              "ActionNotCommand",
              prefix + "'execution of " + path + "' needs a command, but " +
                  feature.name.str() + " is a query",
              where));
        }
        return;
      case Role::kTarget:
        if (feature.kind != FeatureKind::kQuery) {
          out_.push_back(Diagnostic::error(
              "EffectNotQuery",
              prefix + std::string(phrase(req.effect.kind)) + " " + path +
                  " needs a query, but " + feature.name.str() + " is a command",
              where));
          return;
        }
        if (req.effect.kind != EffectKind::kDoesNotChange &&
            feature.result_type->view() != kIntegerType) {
          out_.push_back(Diagnostic::error(
              "NonIntegerTarget",
              prefix + std::string(phrase(req.effect.kind)) + " needs an " +
                  std::string(kIntegerType) + " query, but " + path + " is of type " +
                  feature.result_type->str(),
              where));
        }
        return;
      case Role::kGuard:
        if (feature.kind != FeatureKind::kQuery) {
          out_.push_back(Diagnostic::error(
              "EffectNotQuery",
              prefix + "the condition reads " + path + ", but " + feature.name.str() +
                  " is a command",
              where));
        }
        return;
    }
  }

  const DomainModel& model_;
  Diagnostics out_;
};

}  // namespace

Diagnostics check_against_model(const Specification& spec, const DomainModel& model) {
  return ModelChecker(model).check(spec);
}

}  // namespace specogram

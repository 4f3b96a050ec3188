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

#include "specogram/views.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <system_error>

namespace specogram {

std::string_view to_string(ViewKind view) {
  switch (view) {
    case ViewKind::kLatex: return "latex";
    case ViewKind::kPuts: return "puts";
    case ViewKind::kContracts: return "contracts";
    case ViewKind::kTrace: return "trace";
  }
  return "?";
}

std::optional<ViewKind> view_from_name(std::string_view name) {
  for (ViewKind v : {ViewKind::kLatex, ViewKind::kPuts, ViewKind::kContracts, ViewKind::kTrace}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

namespace {

using Wrap = std::function<std::string(const std::string&)>;

// "Execution of <action> <phrase> <target>[ if, in the beginning, <guard>]."
std::string sentence(const Requirement& req, const Wrap& fragment) {
  std::string out = "Execution of " + fragment(render(req.action)) + " " +
                    std::string(phrase(req.effect.kind)) + " " +
                    fragment(render(req.effect.target));
  if (!req.unconditional()) out += " if, in the beginning, " + fragment(render(*req.guard));
  return out + ".";
}

std::string latex_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '_') out += '\\';
    out += c;
  }
  return out;
}

std::string upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

bool reducible(const Requirement& req) {
  return req.bindings.size() == 1 && req.action.path.size() == 1;
}

// "old <guard>" keeps the guard unparenthesised only when it is a single
// query compared against constants; otherwise `old` has to cover the whole
// condition.
std::string old_guard(const BoolExpr& guard, const RenderOptions& options) {
  std::string text = render(guard, options);
  const auto* cmp = std::get_if<Comparison>(&guard.node().v);
  bool simple = cmp != nullptr && query_refs(guard).size() == 1 &&
                std::holds_alternative<QueryRef>(cmp->lhs.node().v);
  return simple ? "old " + text : "old ( " + text + " )";
}

std::string contract_clause(const Requirement& req) {
  RenderOptions strip{req.bindings.front().variable};
  std::string effect = postcondition(req, strip);
  if (req.unconditional()) return effect;
  return old_guard(*req.guard, strip) + " implies " + effect;
}

// Reducible requirements grouped by class, then by feature, both in order of
// first appearance.
struct FeatureGroup {
  std::string feature;
  std::vector<const Requirement*> requirements;
};
struct ClassGroup {
  std::string type;
  std::vector<FeatureGroup> features;
};

std::vector<ClassGroup> group_contracts(const Specification& spec) {
  std::vector<ClassGroup> classes;
  for (const Requirement& req : spec.requirements()) {
    if (!reducible(req)) continue;
    const std::string& type = req.bindings.front().declared_type.str();
    const std::string& feature = req.action.path.front().str();
    auto cls = std::find_if(classes.begin(), classes.end(),
                            [&](const ClassGroup& c) { return c.type == type; });
    if (cls == classes.end()) cls = classes.insert(classes.end(), ClassGroup{type, {}});
    auto feat = std::find_if(cls->features.begin(), cls->features.end(),
                             [&](const FeatureGroup& f) { return f.feature == feature; });
    if (feat == cls->features.end()) {
      feat = cls->features.insert(cls->features.end(), FeatureGroup{feature, {}});
    }
    feat->requirements.push_back(&req);
  }
  return classes;
}

}  // namespace

std::string natural_sentence(const Requirement& req) {
  return sentence(req, [](const std::string& s) { return s; });
}

std::string routine_name(const Requirement& req) { return "check_" + req.label.str(); }

std::string postcondition(const Requirement& req, const RenderOptions& options) {
  std::string target = render(req.effect.target, options);
  switch (req.effect.kind) {
    case EffectKind::kDoesNotChange: return target + " ~ old " + target;
    case EffectKind::kIncrements: return target + " = old " + target + " + 1";
    case EffectKind::kDecrements: return target + " = old " + target + " - 1";
  }
  return target;
}

std::optional<std::string> contract_location(const Specification& spec,
                                             const Requirement& req) {
  if (!reducible(req)) return std::nullopt;
  for (const ClassGroup& cls : group_contracts(spec)) {
    for (const FeatureGroup& feat : cls.features) {
      for (std::size_t i = 0; i < feat.requirements.size(); ++i) {
        if (feat.requirements[i]->label == req.label) {
          return cls.type + "." + feat.feature + " ensure " + std::to_string(i + 1);
        }
      }
    }
  }
  return std::nullopt;
}

GeneratedArtifact emit_latex(const Specification& spec) {
  std::string out =
      "\\documentclass{article}\n"
      "\\begin{document}\n"
      "\\section*{" + latex_escape(spec.name().str()) + "}\n"
      "\\begin{description}\n";
  for (const Requirement& req : spec.requirements()) {
    out += "\\item[" + latex_escape(req.label.str()) + ":] " +
           sentence(req, [](const std::string& s) { return "$" + latex_escape(s) + "$"; }) +
           "\n";
  }
  out +=
      "\\end{description}\n"
      "\\end{document}\n";
  return {ViewKind::kLatex, spec.name().str() + "_requirements.tex", std::move(out)};
}

GeneratedArtifact emit_puts(const Specification& spec, const EmitOptions& options) {
  std::string out =
      "note\n"
      "  description: \"Seamless requirements of " + spec.name().str() + ".\"\n"
      "\n"
      "class\n"
      "  " + upper(spec.name().str()) + "_REQUIREMENTS\n"
      "\n"
      "feature -- Requirements\n";
  for (const Requirement& req : spec.requirements()) {
    out += "\n  " + routine_name(req) + "\n";
    std::string head = "execution of " + render(req.action) + " " +
                       std::string(phrase(req.effect.kind)) + " " + render(req.effect.target);
    if (req.unconditional()) {
      out += "  -- " + head + " :\n";
    } else {
      out += "  -- " + head + "\n";
      out += "  -- if in the beginning " + render(*req.guard) + " :\n";
    }
    out += "  -- for any\n";
    std::string params;
    std::string vars;
    for (const VariableBinding& b : req.bindings) {
      if (!params.empty()) {
        params += ", ";
        vars += ", ";
      }
      params += b.variable.str() + ": " + b.declared_type.str();
      vars += b.variable.str();
    }
    out += "      (" + params + ")\n";
    if (options.frames) out += "    modify (" + vars + ")\n";
    if (!req.unconditional()) {
      out += "  -- which\n";
      out += "    require\n";
      out += "  -- that\n";
      out += "      " + render(*req.guard) + "\n";
    }
    out += "    do\n";
    out += "  -- executing\n";
    out += "      " + render(req.action) + "\n";
    out += "  -- will\n";
    out += "    ensure\n";
    out += "  -- that\n";
    out += "      " + postcondition(req) + "\n";
    out += "    end\n";
  }
  out += "\nend\n";
  return {ViewKind::kPuts, spec.name().str() + "_puts.e", std::move(out)};
}

GeneratedArtifact emit_contracts(const Specification& spec) {
  std::string out = "-- Contracts inferred from " + spec.name().str() + ".\n";
  for (const ClassGroup& cls : group_contracts(spec)) {
    out += "\nclass " + cls.type + "\n";
    for (const FeatureGroup& feat : cls.features) {
      out += "  " + feat.feature + "\n";
      out += "    do\n";
      out += "    ensure\n";
      for (const Requirement* req : feat.requirements) {
        out += "      " + contract_clause(*req) + "\n";
      }
      out += "    end\n";
    }
    out += "end\n";
  }
  std::vector<std::string> unreduced;
  for (const Requirement& req : spec.requirements()) {
    if (!reducible(req)) unreduced.push_back(req.label.str());
  }
  if (!unreduced.empty()) {
    out += "\n-- Not reduced to a single-class contract (several bindings or a nested action):\n";
    for (const std::string& label : unreduced) out += "--   " + label + "\n";
  }
  return {ViewKind::kContracts, spec.name().str() + "_contracts.txt", std::move(out)};
}

GeneratedArtifact emit_trace(const Specification& spec) {
  std::string out = "label | sentence | routine | contract\n";
  for (const Requirement& req : spec.requirements()) {
    out += req.label.str() + " | " + natural_sentence(req) + " | " + routine_name(req) + " | " +
           contract_location(spec, req).value_or("unreduced") + "\n";
  }
  return {ViewKind::kTrace, spec.name().str() + "_trace.txt", std::move(out)};
}

Result<std::vector<GeneratedArtifact>> emit(const Specification& spec,
                                            const EmitOptions& options) {
  if (options.views.empty()) {
    return Diagnostic::error("NoViews", "no view selected for generation");
  }
  std::vector<GeneratedArtifact> out;
  std::vector<ViewKind> seen;
  for (ViewKind view : options.views) {
    if (std::find(seen.begin(), seen.end(), view) != seen.end()) continue;
    seen.push_back(view);
    switch (view) {
      case ViewKind::kLatex: out.push_back(emit_latex(spec)); break;
      case ViewKind::kPuts: out.push_back(emit_puts(spec, options)); break;
      case ViewKind::kContracts: out.push_back(emit_contracts(spec)); break;
      case ViewKind::kTrace: out.push_back(emit_trace(spec)); break;
    }
  }
  return out;
}

Result<std::vector<std::filesystem::path>> write_artifacts(
    const std::vector<GeneratedArtifact>& artifacts, const std::filesystem::path& directory) {
  namespace fs = std::filesystem;
  auto io_error = [](const std::string& message) {
    return Diagnostic::error("IoError", message);
  };

  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec || !fs::is_directory(directory)) {
    return io_error("cannot create output directory " + directory.string() +
                    (ec ? ": " + ec.message() : std::string()));
  }

  for (const GeneratedArtifact& a : artifacts) {
    fs::path final_path = directory / a.relative_path;
    if (fs::exists(final_path, ec) && !fs::is_regular_file(final_path, ec)) {
      return io_error("cannot replace " + final_path.string() + ": not a regular file");
    }
  }

  // Stage every file first so a failure leaves the previous outputs intact.
  std::vector<std::pair<fs::path, fs::path>> staged;
  auto discard = [&] {
    for (const auto& [tmp, _] : staged) fs::remove(tmp, ec);
  };
  for (const GeneratedArtifact& a : artifacts) {
    fs::path final_path = directory / a.relative_path;
    fs::path tmp = final_path;
    tmp += ".specogram-tmp";
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (file) staged.emplace_back(tmp, final_path);
    if (!file || !file.write(a.content.data(), static_cast<std::streamsize>(a.content.size())) ||
        !file.flush()) {
      discard();
      return io_error("cannot write " + final_path.string());
    }
  }
  std::vector<fs::path> written;
  for (const auto& [tmp, final_path] : staged) {
    fs::rename(tmp, final_path, ec);
    if (ec) {
      discard();
      return io_error("cannot replace " + final_path.string() + ": " + ec.message());
    }
    written.push_back(final_path);
  }
  return written;
}

}  // namespace specogram

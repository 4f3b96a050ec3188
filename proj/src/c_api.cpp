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

#include "specogram/specogram.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specogram/domain_model.hpp"
#include "specogram/fragment.hpp"
#include "specogram/model.hpp"
#include "specogram/textual.hpp"
#include "specogram/views.hpp"
#include "specogram/vocabulary.hpp"

struct spg_spec {
  specogram::Specification spec;
};

struct spg_model {
  specogram::DomainModel model;
};

struct spg_diagnostics {
  specogram::Diagnostics items;
  std::vector<std::string> formatted;
};

struct spg_artifacts {
  std::vector<specogram::GeneratedArtifact> items;
  std::vector<std::string> paths;
};

namespace {

using specogram::Diagnostic;
using specogram::Diagnostics;

thread_local std::string g_last_error;

spg_status set_error(spg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

spg_status invalid(const char* what) {
  return set_error(SPG_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

void store(spg_diagnostics** slot, Diagnostics items) {
  if (slot == nullptr) return;
  auto* list = new spg_diagnostics{std::move(items), {}};
  for (const Diagnostic& d : list->items) list->formatted.push_back(d.format());
  *slot = list;
}

// Runs `body`, translating escaping exceptions into status codes.
template <class Body>
spg_status guarded(spg_diagnostics** diagnostics, Body&& body) {
  try {
    return body();
  } catch (const specogram::SpecError& e) {
    store(diagnostics, e.diagnostics());
    return SPG_REJECTED;
  } catch (const std::bad_alloc&) {
    return set_error(SPG_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SPG_INTERNAL_ERROR, e.what());
  } catch (...) {
    return set_error(SPG_INTERNAL_ERROR, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::string_view view_of(const char* text, std::size_t length) {
  return text == nullptr ? std::string_view() : std::string_view(text, length);
}

}  // namespace

extern "C" {

const char* spg_version(void) { return SPECOGRAM_VERSION; }

const char* spg_status_string(spg_status status) {
  switch (status) {
    case SPG_OK: return "ok";
    case SPG_INVALID_ARGUMENT: return "invalid argument";
    case SPG_REJECTED: return "rejected";
    case SPG_IO_ERROR: return "i/o error";
    case SPG_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* spg_last_error(void) { return g_last_error.c_str(); }

void spg_string_free(char* text) { std::free(text); }

// ---- diagnostics ----------------------------------------------------------

size_t spg_diagnostics_count(const spg_diagnostics* list) {
  return list == nullptr ? 0 : list->items.size();
}

size_t spg_diagnostics_error_count(const spg_diagnostics* list) {
  return list == nullptr ? 0 : specogram::count_errors(list->items);
}

spg_status spg_diagnostics_get(const spg_diagnostics* list, size_t index, spg_diagnostic* out) {
  if (list == nullptr) return invalid("list");
  if (out == nullptr) return invalid("out");
  if (index >= list->items.size()) {
    return set_error(SPG_INVALID_ARGUMENT, "diagnostic index out of range");
  }
  const Diagnostic& d = list->items[index];
  out->severity = d.is_error() ? SPG_SEVERITY_ERROR : SPG_SEVERITY_WARNING;
  out->code = d.code.c_str();
  out->message = d.message.c_str();
  out->file = d.span.file.c_str();
  out->line = d.span.line;
  out->column = d.span.column;
  out->length = d.span.length;
  out->formatted = list->formatted[index].c_str();
  return SPG_OK;
}

void spg_diagnostics_free(spg_diagnostics* list) { delete list; }

// ---- specifications -------------------------------------------------------

spg_status spg_spec_create(const char* name, spg_spec** out, spg_diagnostics** diagnostics) {
  if (name == nullptr) return invalid("name");
  if (out == nullptr) return invalid("out");
  return guarded(diagnostics, [&] {
    auto id = specogram::validate_identifier(name);
    if (!id) {
      store(diagnostics, id.diagnostics());
      return SPG_REJECTED;
    }
    *out = new spg_spec{specogram::Specification(*id)};
    store(diagnostics, {});
    return SPG_OK;
  });
}

spg_status spg_spec_add_requirement(spg_spec* spec, const spg_requirement_desc* desc,
                                    spg_diagnostics** diagnostics) {
  if (spec == nullptr) return invalid("spec");
  if (desc == nullptr) return invalid("desc");
  if (desc->label == nullptr || desc->action == nullptr || desc->target == nullptr) {
    return invalid("label, action and target");
  }
  if (desc->binding_count == 0 || desc->variables == nullptr || desc->types == nullptr) {
    return set_error(SPG_INVALID_ARGUMENT, "at least one variable binding is required");
  }
  for (size_t i = 0; i < desc->binding_count; ++i) {
    if (desc->variables[i] == nullptr || desc->types[i] == nullptr) return invalid("binding");
  }
  if (desc->effect < SPG_DOES_NOT_CHANGE || desc->effect > SPG_DECREMENTS) {
    return set_error(SPG_INVALID_ARGUMENT, "unknown effect");
  }
  return guarded(diagnostics, [&] {
    specogram::Specogram doc(spec->spec);
    auto action = doc.requirement(desc->label).states_that_execution_of(desc->action);
    auto effect = desc->effect == SPG_DOES_NOT_CHANGE ? std::move(action).does_not_change(desc->target)
                  : desc->effect == SPG_INCREMENTS    ? std::move(action).increments(desc->target)
                                                      : std::move(action).decrements(desc->target);
    auto typed = std::move(effect).for_(desc->variables[0]).of_type(desc->types[0]);
    for (size_t i = 1; i < desc->binding_count; ++i) {
      auto next = std::move(typed).for_(desc->variables[i]).of_type(desc->types[i]);
      typed = std::move(next);
    }
    if (desc->guard != nullptr) {
      std::move(typed).if_in_the_beginning(desc->guard).period();
    } else {
      std::move(typed).period();
    }
    spec->spec = doc.specification();
    store(diagnostics, {});
    return SPG_OK;
  });
}

spg_status spg_spec_parse(const char* text, size_t length, const char* file_name,
                          spg_spec** out, spg_diagnostics** diagnostics) {
  if (text == nullptr && length != 0) return invalid("text");
  if (out == nullptr) return invalid("out");
  return guarded(diagnostics, [&] {
    specogram::SpecogramParse parsed =
        specogram::parse_specogram(view_of(text, length), file_name ? file_name : "");
    const bool ok = parsed.ok();
    if (ok) *out = new spg_spec{*std::move(parsed.specification)};
    store(diagnostics, std::move(parsed.diagnostics));
    return ok ? SPG_OK : SPG_REJECTED;
  });
}

spg_status spg_spec_from_canonical(const char* text, size_t length, const char* file_name,
                                   spg_spec** out, spg_diagnostics** diagnostics) {
  if (text == nullptr && length != 0) return invalid("text");
  if (out == nullptr) return invalid("out");
  return guarded(diagnostics, [&] {
    auto parsed =
        specogram::from_canonical_text(view_of(text, length), file_name ? file_name : "");
    if (!parsed) {
      store(diagnostics, parsed.diagnostics());
      return SPG_REJECTED;
    }
    *out = new spg_spec{*std::move(parsed)};
    store(diagnostics, {});
    return SPG_OK;
  });
}

spg_status spg_spec_to_canonical(const spg_spec* spec, char** out) {
  if (spec == nullptr) return invalid("spec");
  if (out == nullptr) return invalid("out");
  return guarded(nullptr, [&] {
    *out = copy_string(specogram::to_canonical_text(spec->spec));
    return SPG_OK;
  });
}

spg_status spg_spec_format(const spg_spec* spec, char** out) {
  if (spec == nullptr) return invalid("spec");
  if (out == nullptr) return invalid("out");
  return guarded(nullptr, [&] {
    *out = copy_string(specogram::format_specogram(spec->spec));
    return SPG_OK;
  });
}

const char* spg_spec_name(const spg_spec* spec) {
  return spec == nullptr ? nullptr : spec->spec.name().str().c_str();
}

size_t spg_spec_requirement_count(const spg_spec* spec) {
  return spec == nullptr ? 0 : spec->spec.size();
}

const char* spg_spec_requirement_label(const spg_spec* spec, size_t index) {
  if (spec == nullptr || index >= spec->spec.size()) return nullptr;
  return spec->spec.requirements()[index].label.str().c_str();
}

void spg_spec_free(spg_spec* spec) { delete spec; }

// ---- fragments ------------------------------------------------------------

spg_status spg_fragment_normalize(spg_fragment_kind kind, const char* text, size_t length,
                                  char** rendered, spg_diagnostics** diagnostics) {
  if (text == nullptr && length != 0) return invalid("text");
  return guarded(diagnostics, [&] {
    std::string_view input = view_of(text, length);
    std::optional<std::string> result;
    Diagnostics problems;
    switch (kind) {
      case SPG_FRAGMENT_CALL: {
        auto r = specogram::parse_call(input);
        if (r) result = specogram::render(*r); else problems = r.diagnostics();
        break;
      }
      case SPG_FRAGMENT_QUERY: {
        auto r = specogram::parse_query(input);
        if (r) result = specogram::render(*r); else problems = r.diagnostics();
        break;
      }
      case SPG_FRAGMENT_CONDITION: {
        auto r = specogram::parse_bool_expr(input);
        if (r) result = specogram::render(*r); else problems = r.diagnostics();
        break;
      }
      default: return set_error(SPG_INVALID_ARGUMENT, "unknown fragment kind");
    }
    store(diagnostics, problems);
    if (!result) return SPG_REJECTED;
    if (rendered != nullptr) *rendered = copy_string(*result);
    return SPG_OK;
  });
}

// ---- domain model ---------------------------------------------------------

spg_status spg_model_parse(const char* text, size_t length, const char* file_name,
                           spg_model** out, spg_diagnostics** diagnostics) {
  if (text == nullptr && length != 0) return invalid("text");
  if (out == nullptr) return invalid("out");
  return guarded(diagnostics, [&] {
    auto parsed =
        specogram::parse_domain_model(view_of(text, length), file_name ? file_name : "");
    if (!parsed) {
      store(diagnostics, parsed.diagnostics());
      return SPG_REJECTED;
    }
    *out = new spg_model{*std::move(parsed)};
    store(diagnostics, {});
    return SPG_OK;
  });
}

void spg_model_free(spg_model* model) { delete model; }

spg_status spg_check(const spg_spec* spec, const spg_model* model,
                     spg_diagnostics** diagnostics) {
  if (spec == nullptr) return invalid("spec");
  if (model == nullptr) return invalid("model");
  return guarded(diagnostics, [&] {
    Diagnostics found = specogram::check_against_model(spec->spec, model->model);
    const bool clean = specogram::count_errors(found) == 0;
    store(diagnostics, std::move(found));
    return clean ? SPG_OK : SPG_REJECTED;
  });
}

// ---- views ----------------------------------------------------------------

spg_status spg_views_parse(const char* list, unsigned* mask) {
  if (list == nullptr) return invalid("list");
  if (mask == nullptr) return invalid("mask");
  unsigned bits = 0;
  std::string_view rest(list);
  while (true) {
    std::size_t comma = rest.find(',');
    std::string_view name = rest.substr(0, comma);
    auto view = specogram::view_from_name(name);
    if (!view) {
      return set_error(SPG_INVALID_ARGUMENT,
                       "unknown view '" + std::string(name) +
                           "'; expected latex, puts, contracts or trace");
    }
    bits |= 1u << static_cast<unsigned>(*view);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  *mask = bits;
  return SPG_OK;
}

spg_status spg_generate(const spg_spec* spec, unsigned views, int frames, spg_artifacts** out) {
  if (spec == nullptr) return invalid("spec");
  if (out == nullptr) return invalid("out");
  if (views == 0 || (views & ~0xfu) != 0) {
    return set_error(SPG_INVALID_ARGUMENT, "views must be a non-empty set of SPG_VIEW_* bits");
  }
  return guarded(nullptr, [&] {
    specogram::EmitOptions options;
    options.frames = frames != 0;
    options.views.clear();
    for (auto kind : {specogram::ViewKind::kLatex, specogram::ViewKind::kPuts,
                      specogram::ViewKind::kContracts, specogram::ViewKind::kTrace}) {
      if ((views & (1u << static_cast<unsigned>(kind))) != 0) options.views.push_back(kind);
    }
    auto emitted = specogram::emit(spec->spec, options);
    if (!emitted) return set_error(SPG_INVALID_ARGUMENT, emitted.error().message);
    auto* artifacts = new spg_artifacts{*std::move(emitted), {}};
    for (const auto& a : artifacts->items) artifacts->paths.push_back(a.relative_path.string());
    *out = artifacts;
    return SPG_OK;
  });
}

size_t spg_artifacts_count(const spg_artifacts* artifacts) {
  return artifacts == nullptr ? 0 : artifacts->items.size();
}

spg_status spg_artifact_get(const spg_artifacts* artifacts, size_t index,
                            const char** relative_path, const char** content, size_t* length) {
  if (artifacts == nullptr) return invalid("artifacts");
  if (index >= artifacts->items.size()) {
    return set_error(SPG_INVALID_ARGUMENT, "artifact index out of range");
  }
  const auto& a = artifacts->items[index];
  if (relative_path != nullptr) *relative_path = artifacts->paths[index].c_str();
  if (content != nullptr) *content = a.content.c_str();
  if (length != nullptr) *length = a.content.size();
  return SPG_OK;
}

spg_status spg_artifacts_write(const spg_artifacts* artifacts, const char* directory,
                               spg_diagnostics** diagnostics) {
  if (artifacts == nullptr) return invalid("artifacts");
  if (directory == nullptr) return invalid("directory");
  return guarded(diagnostics, [&] {
    auto written = specogram::write_artifacts(artifacts->items, directory);
    if (!written) {
      store(diagnostics, written.diagnostics());
      return set_error(SPG_IO_ERROR, written.error().message);
    }
    store(diagnostics, {});
    return SPG_OK;
  });
}

void spg_artifacts_free(spg_artifacts* artifacts) { delete artifacts; }

}  // extern "C"

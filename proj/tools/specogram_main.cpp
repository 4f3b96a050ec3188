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

// specogram check|gen|fmt <file> [flags]
//
// Exit status: 0 success, 1 at least one error diagnostic (or a file that
// `fmt --check` would change), 2 usage or I/O failure. Diagnostics go to
// standard error; standard output carries only `wrote <path>` lines and
// formatted text.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "specogram/specogram.h"

namespace {

constexpr int kSuccess = 0;
constexpr int kDiagnostics = 1;
constexpr int kUsageOrIo = 2;

struct DiagnosticsDeleter {
  void operator()(spg_diagnostics* d) const { spg_diagnostics_free(d); }
};
struct SpecDeleter {
  void operator()(spg_spec* s) const { spg_spec_free(s); }
};
struct ModelDeleter {
  void operator()(spg_model* m) const { spg_model_free(m); }
};
struct ArtifactsDeleter {
  void operator()(spg_artifacts* a) const { spg_artifacts_free(a); }
};
struct StringDeleter {
  void operator()(char* s) const { spg_string_free(s); }
};

using DiagnosticsPtr = std::unique_ptr<spg_diagnostics, DiagnosticsDeleter>;
using SpecPtr = std::unique_ptr<spg_spec, SpecDeleter>;
using ModelPtr = std::unique_ptr<spg_model, ModelDeleter>;
using ArtifactsPtr = std::unique_ptr<spg_artifacts, ArtifactsDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::optional<std::string> read_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Prints every diagnostic; returns the number of errors among them.
std::size_t report(spg_diagnostics* raw) {
  DiagnosticsPtr list(raw);
  const std::size_t n = spg_diagnostics_count(list.get());
  for (std::size_t i = 0; i < n; ++i) {
    spg_diagnostic d;
    if (spg_diagnostics_get(list.get(), i, &d) == SPG_OK) std::cerr << d.formatted << '\n';
  }
  return spg_diagnostics_error_count(list.get());
}

int io_failure(const std::string& message) {
  std::cerr << "specogram: " << message << '\n';
  return kUsageOrIo;
}

struct Loaded {
  SpecPtr spec;
  std::size_t errors = 0;
};

// Parses the specogram and, when given, checks it against the domain model.
// Returns std::nullopt on an I/O failure (already reported).
std::optional<Loaded> load(const std::string& spec_path, const std::string& model_path) {
  auto text = read_file(spec_path);
  if (!text) {
    io_failure("cannot read " + spec_path);
    return std::nullopt;
  }
  std::optional<std::string> model_text;
  if (!model_path.empty()) {
    model_text = read_file(model_path);
    if (!model_text) {
      io_failure("cannot read " + model_path);
      return std::nullopt;
    }
  }

  Loaded out;
  spg_spec* spec = nullptr;
  spg_diagnostics* diags = nullptr;
  spg_status status = spg_spec_parse(text->data(), text->size(), spec_path.c_str(), &spec, &diags);
  out.errors += report(diags);
  out.spec.reset(spec);
  if (status != SPG_OK && status != SPG_REJECTED) {
    io_failure(spg_last_error());
    return std::nullopt;
  }

  if (model_text) {
    spg_model* model = nullptr;
    diags = nullptr;
    status = spg_model_parse(model_text->data(), model_text->size(), model_path.c_str(), &model,
                             &diags);
    out.errors += report(diags);
    ModelPtr owned(model);
    if (owned && out.spec) {
      diags = nullptr;
      spg_check(out.spec.get(), owned.get(), &diags);
      out.errors += report(diags);
    }
  }
  return out;
}

int cmd_check(const std::string& spec_path, const std::string& model_path) {
  auto loaded = load(spec_path, model_path);
  if (!loaded) return kUsageOrIo;
  return loaded->errors == 0 ? kSuccess : kDiagnostics;
}

int cmd_gen(const std::string& spec_path, const std::string& model_path,
            const std::string& views, bool frames, const std::string& out_dir) {
  unsigned mask = 0;
  if (spg_views_parse(views.c_str(), &mask) != SPG_OK) {
    return io_failure(spg_last_error());
  }
  auto loaded = load(spec_path, model_path);
  if (!loaded) return kUsageOrIo;
  if (loaded->errors != 0) return kDiagnostics;

  spg_artifacts* raw = nullptr;
  if (spg_generate(loaded->spec.get(), mask, frames ? 1 : 0, &raw) != SPG_OK) {
    return io_failure(spg_last_error());
  }
  ArtifactsPtr artifacts(raw);
  spg_diagnostics* diags = nullptr;
  spg_status status = spg_artifacts_write(artifacts.get(), out_dir.c_str(), &diags);
  DiagnosticsPtr owned(diags);
  if (status != SPG_OK) return io_failure(spg_last_error());

  for (std::size_t i = 0; i < spg_artifacts_count(artifacts.get()); ++i) {
    const char* path = nullptr;
    spg_artifact_get(artifacts.get(), i, &path, nullptr, nullptr);
    std::cout << "wrote " << (std::filesystem::path(out_dir) / path).string() << '\n';
  }
  return kSuccess;
}

int cmd_fmt(const std::string& spec_path, bool write, bool check) {
  auto text = read_file(spec_path);
  if (!text) return io_failure("cannot read " + spec_path);

  spg_spec* raw = nullptr;
  spg_diagnostics* diags = nullptr;
  spg_spec_parse(text->data(), text->size(), spec_path.c_str(), &raw, &diags);
  SpecPtr spec(raw);
  if (report(diags) != 0 || !spec) return kDiagnostics;

  char* formatted_raw = nullptr;
  if (spg_spec_format(spec.get(), &formatted_raw) != SPG_OK) return io_failure(spg_last_error());
  StringPtr formatted(formatted_raw);
  const std::string canonical(formatted.get());

  if (check) {
    if (canonical == *text) return kSuccess;
    std::cerr << spec_path << ": not in canonical format\n";
    return kDiagnostics;
  }
  if (write) {
    if (canonical == *text) return kSuccess;
    std::ofstream out(spec_path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(canonical.data(), static_cast<std::streamsize>(canonical.size())) ||
        !out.flush()) {
      return io_failure("cannot write " + spec_path);
    }
    return kSuccess;
  }
  std::cout << canonical;
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile structured-natural-language requirements into specification views."};
  app.set_version_flag("--version", std::string(spg_version()));
  app.require_subcommand(1);

  std::string spec_path;
  std::string model_path;

  auto* check = app.add_subcommand("check", "Parse a specogram and report diagnostics.");
  check->add_option("file", spec_path, "Specogram (.spec) file")->required();
  std::string positional_model;
  check->add_option("model_file", positional_model, "Domain model file (same as --model)");
  check->add_option("--model,-m", model_path, "Domain model file");

  auto* gen = app.add_subcommand("gen", "Generate views from a specogram.");
  std::string views = "latex,puts";
  bool frames = false;
  std::string out_dir = ".";
  gen->add_option("file", spec_path, "Specogram (.spec) file")->required();
  gen->add_option("--views", views, "Comma-separated views: latex,puts,contracts,trace")
      ->capture_default_str();
  gen->add_flag("--frames", frames, "Add modify (...) frame clauses to the generated tests");
  gen->add_option("--out,-o", out_dir, "Output directory")->capture_default_str();
  gen->add_option("--model,-m", model_path, "Domain model file to check against first");

  auto* fmt = app.add_subcommand("fmt", "Rewrite a specogram in canonical layout.");
  bool write = false;
  bool check_only = false;
  fmt->add_option("file", spec_path, "Specogram (.spec) file")->required();
  auto* write_flag = fmt->add_flag("--write,-w", write, "Rewrite the file in place");
  auto* check_flag =
      fmt->add_flag("--check", check_only, "Exit with 1 if the file is not canonical");
  write_flag->excludes(check_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageOrIo;
  }

  if (check->parsed()) {
    if (!positional_model.empty() && !model_path.empty()) {
      return io_failure("give the domain model either positionally or with --model, not both");
    }
    return cmd_check(spec_path, model_path.empty() ? positional_model : model_path);
  }
  if (gen->parsed()) return cmd_gen(spec_path, model_path, views, frames, out_dir);
  return cmd_fmt(spec_path, write, check_only);
}

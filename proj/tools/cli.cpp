// Copyright 2026 The okc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include <CLI11.hpp>

#include "okc/compiler.hpp"
#include "okc/frontend.hpp"
#include "okc/validator.hpp"

namespace okc::cli {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string out_dir;
  std::optional<TimePoint> at;
  std::string format = "text";
  bool werror = false;
  bool kernel = false;
};

void report(std::ostream& err, const Options& opt, const Diagnostics& diags) {
  if (opt.format == "json") {
    err << diagnostics_to_json(diags);
  } else {
    print_diagnostics(err, diags);
  }
}

int exit_for(const Options& opt, const Diagnostics& diags) {
  if (has_errors(diags)) return kErrors;
  if (opt.werror && count_severity(diags, Severity::Warning) > 0) return kWarningsAsErrors;
  return kClean;
}

int do_check(const Options& opt, std::ostream& err) {
  Diagnostics all;
  for (const auto& file : opt.inputs) {
    LoadResult loaded = load_file(file);
    all.insert(all.end(), loaded.diagnostics.begin(), loaded.diagnostics.end());
    if (!loaded.ok()) continue;
    auto found = validate(loaded.ontology);
    all.insert(all.end(), found.begin(), found.end());
  }
  sort_diagnostics(all);
  report(err, opt, all);
  return exit_for(opt, all);
}

int do_compile(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.inputs.size() != 1) {
    err << "okc compile: expected exactly one input file\n";
    return kUsage;
  }
  const auto& file = opt.inputs.front();
  LoadResult loaded = load_file(file);
  if (!loaded.ok()) {
    report(err, opt, loaded.diagnostics);
    return kErrors;
  }
  const TimePoint snapshot = opt.at.value_or(loaded.ontology.max_label_time());
  CompileResult compiled = compile_bundle(loaded.ontology, snapshot);
  Diagnostics diags = loaded.diagnostics;
  diags.insert(diags.end(), compiled.diagnostics.begin(), compiled.diagnostics.end());
  sort_diagnostics(diags);
  report(err, opt, diags);
  if (!compiled.bundle) return kErrors;
  const int code = exit_for(opt, diags);
  if (code != kClean) return code;
  emit_bundle(*compiled.bundle, opt.out_dir);
  out << "compiled " << file << " at snapshot " << snapshot << ": " << compiled.bundle->task.size() << " task(s), "
      << compiled.bundle->inference.size() << " inference(s), " << compiled.bundle->domain.size()
      << " domain concept(s) -> " << opt.out_dir << '\n';
  return kClean;
}

int do_explain(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.kernel) {
    out << render_kernel();
    return kClean;
  }
  if (opt.inputs.empty() || opt.inputs.size() > 2) {
    err << "okc explain: expected FILE [INSTANCE] or --kernel\n";
    return kUsage;
  }
  LoadResult loaded = load_file(opt.inputs[0]);
  if (!loaded.ok()) {
    report(err, opt, loaded.diagnostics);
    return kErrors;
  }
  const std::string instance = opt.inputs.size() == 2 ? opt.inputs[1] : "";
  if (!instance.empty() && !loaded.ontology.has_instance(instance)) {
    err << "okc explain: '" << instance << "' is not a declared instance\n";
    return kUsage;
  }
  Analysis a = analyze(loaded.ontology);
  if (!a.facts) {
    report(err, opt, a.diagnostics);
    return kErrors;
  }
  print_derivations(out, *a.facts, instance);
  return kClean;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"okc: check, compile and explain problem-solving ontologies", "okc"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Diagnostic format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--werror", opt.werror, "Exit 2 when only warnings are reported");
  };

  auto* check = app.add_subcommand("check", "Parse and validate .oks files");
  check->add_option("files", opt.inputs, "Input files")->required();
  add_format(check);

  auto* compile = app.add_subcommand("compile", "Validate and emit the domain/inference/task bundle");
  compile->add_option("file", opt.inputs, "Input file")->required();
  compile->add_option("--out", opt.out_dir, "Output directory")->required();
  compile->add_option("--at", opt.at, "Snapshot time (defaults to the latest label time)");
  add_format(compile);

  auto* explain = app.add_subcommand("explain", "Print derivation traces, or the kernel with --kernel");
  explain->add_option("args", opt.inputs, "FILE [INSTANCE]");
  explain->add_flag("--kernel", opt.kernel, "Print the kernel catalog in .oks syntax");
  add_format(explain);

  auto* kernel = app.add_subcommand("kernel", "Print the kernel catalog in .oks syntax");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kClean;
  } catch (const CLI::ParseError& e) {
    err << "okc: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) return do_check(opt, err);
    if (compile->parsed()) return do_compile(opt, out, err);
    if (explain->parsed()) return do_explain(opt, out, err);
    if (kernel->parsed()) {
      out << render_kernel();
      return kClean;
    }
  } catch (const std::exception& e) {
    err << "okc: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace okc::cli

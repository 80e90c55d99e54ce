// Copyright 2026 The revseq Authors
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

#include "revseq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "revseq/corpus.hpp"
#include "revseq/netlist.hpp"
#include "revseq/report.hpp"
#include "revseq/synthesize.hpp"

namespace revseq::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Either a built-in design (corpus:<id>) or a netlist file.
SequentialCircuit load_circuit(const std::string& spec, bool keep_foreign = false) {
  if (spec.starts_with("corpus:")) {
    auto id = design_from_string(spec.substr(7));
    if (!id) throw std::runtime_error("unknown corpus design '" + spec + "'");
    return build_design(*id);
  }
  ParseOptions options;
  options.keep_foreign = keep_foreign;
  return parse_netlist(read_file(spec), options);
}

Trace parse_trace(const std::string& text) {
  Trace trace;
  std::istringstream steps(text);
  std::string step_text;
  while (std::getline(steps, step_text, ';')) {
    BitAssignment step;
    std::istringstream bindings(step_text);
    std::string binding;
    while (std::getline(bindings, binding, ',')) {
      auto eq = binding.find('=');
      if (eq == std::string::npos || eq + 2 != binding.size() ||
          (binding[eq + 1] != '0' && binding[eq + 1] != '1'))
        throw std::runtime_error("bad trace binding '" + binding + "' (expected name=0|1)");
      step[binding.substr(0, eq)] = binding[eq + 1] == '1';
    }
    if (step.empty()) throw std::runtime_error("empty trace step");
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

int cmd_sim(const std::string& file, const std::string& trace_text, std::ostream& out) {
  const SequentialCircuit seq = load_circuit(file);
  const Trace trace = parse_trace(trace_text);
  const auto outputs = run_trace(seq, trace);
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    out << "step " << i << ":";
    for (const auto& [name, value] : outputs[i]) out << ' ' << name << '=' << value;
    out << "\n";
  }
  return exit_ok;
}

int cmd_opt(const std::string& file, const std::string& passes, const std::string& template_file,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  SequentialCircuit seq = load_circuit(file);

  OptConfig config;
  config.passes = 0;
  std::istringstream pass_list(passes);
  std::string pass;
  while (std::getline(pass_list, pass, ',')) {
    if (pass == "deletion")
      config.passes |= static_cast<unsigned>(Pass::Deletion);
    else if (pass == "moving")
      config.passes |= static_cast<unsigned>(Pass::Moving);
    else if (pass == "template")
      config.passes |= static_cast<unsigned>(Pass::TemplateMatch);
    else
      throw std::runtime_error("unknown pass '" + pass + "'");
  }
  if (!template_file.empty()) {
    auto loaded = parse_templates(read_file(template_file));
    config.templates.insert(config.templates.end(), loaded.begin(), loaded.end());
  }

  const Circuit optimized = optimize(seq.body, config);
  // Soundness gate: never write a rewrite that changed the function.
  if (seq.body.width() <= max_enum_width &&
      !(permutation_of(optimized) == permutation_of(seq.body))) {
    err << "internal soundness abort: optimization changed the circuit function\n";
    return exit_internal;
  }
  seq.body = optimized;
  write_output(out_path, emit_netlist(seq), out);
  return exit_ok;
}

int cmd_synth(const std::string& table_file, const std::string& method,
              const std::string& out_path, std::ostream& out) {
  unsigned width = 0;
  const auto rows = parse_truth_table(read_file(table_file), width);
  const Permutation perm = truth_table_to_permutation(rows, width);
  const SynthMethod m = method == "uni" ? SynthMethod::Unidirectional
                                        : SynthMethod::Bidirectional;
  const Circuit circuit = synthesize(perm, m);

  SequentialCircuit seq;
  seq.body = circuit;
  for (unsigned i = 0; i < circuit.width(); ++i) {
    seq.input_lines[circuit.line_name(i)] = i;
    seq.output_lines[circuit.line_name(i)] = i;
  }
  write_output(out_path, emit_netlist(seq), out);
  return exit_ok;
}

int cmd_cost(const std::string& file, const std::string& model_name, std::ostream& out) {
  const SequentialCircuit seq = load_circuit(file);
  const CostReport report = count_report(seq);
  const CostModel model =
      model_name == "phase-cnot" ? CostModel::phase_cnot() : CostModel::nct();
  out << "lines " << seq.body.width() << "\n";
  out << "gates " << report.total << " (not " << report.not_count << ", cnot "
      << report.cnot_count << ", toffoli " << report.toffoli_count << ")\n";
  out << "garbage " << report.garbage << "\n";
  out << "weighted " << weighted_cost(report, model) << " (" << model_name << ")\n";
  return exit_ok;
}

int cmd_verify(const std::string& file, std::string family_name, std::ostream& out,
               std::ostream& err) {
  if (family_name.empty()) {
    if (!file.starts_with("corpus:"))
      throw std::runtime_error("--family is required for netlist files");
    family_name = to_string(design_from_string(file.substr(7))->family);
  }
  auto family = family_from_string(family_name);
  if (!family) throw std::runtime_error("unknown family '" + family_name + "'");

  const SequentialCircuit seq = load_circuit(file);
  const VerificationReport report = verify_design(seq, flipflop_spec(*family));
  if (report.pass) {
    out << "PASS " << report.cases_checked << "/" << report.cases_checked << "\n";
    return exit_ok;
  }
  err << "FAIL after " << report.cases_checked << " cases\n";
  if (report.counterexample) {
    const Counterexample& ce = *report.counterexample;
    err << "counterexample:";
    for (const auto& [name, value] : ce.state) err << " " << name << '=' << value;
    for (const auto& [name, value] : ce.inputs) err << " " << name << '=' << value;
    err << "\n  expected:";
    for (const auto& [name, value] : ce.expected) err << " " << name << '=' << value;
    err << "\n  actual:  ";
    for (const auto& [name, value] : ce.actual) err << " " << name << '=' << value;
    err << "\n";
  }
  return exit_verification;
}

int cmd_report(const std::string& format, std::ostream& out) {
  const auto rows = corpus_report();
  out << render_report(rows, format == "csv" ? ReportFormat::Csv : ReportFormat::Markdown);
  return exit_ok;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"reversible sequential circuit toolkit"};
  app.require_subcommand(1);

  std::string file, trace_text, passes = "deletion,moving,template", template_file, out_path;
  std::string table_file, method = "bi", model = "nct", family, format = "md";

  auto* sim = app.add_subcommand("sim", "simulate a clocked trace");
  sim->add_option("file", file)->required();
  sim->add_option("--trace", trace_text, "steps 'a=1,b=0;a=0,...'")->required();

  auto* opt = app.add_subcommand("opt", "optimize a netlist");
  opt->add_option("file", file)->required();
  opt->add_option("--passes", passes);
  opt->add_option("--templates", template_file);
  opt->add_option("-o,--output", out_path);

  auto* synth = app.add_subcommand("synth", "synthesize from a truth table");
  synth->add_option("--table", table_file)->required();
  synth->add_option("--method", method)->check(CLI::IsMember({"uni", "bi"}));
  synth->add_option("-o,--output", out_path);

  auto* cost = app.add_subcommand("cost", "gate and garbage accounting");
  cost->add_option("file", file)->required();
  cost->add_option("--model", model)->check(CLI::IsMember({"nct", "phase-cnot"}));

  auto* verify = app.add_subcommand("verify", "check a design against its family");
  verify->add_option("file", file)->required();
  verify->add_option("--family", family);

  auto* report = app.add_subcommand("report", "corpus comparison tables");
  report->add_option("--format", format)->check(CLI::IsMember({"csv", "md"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (sim->parsed()) return cmd_sim(file, trace_text, out);
    if (opt->parsed()) return cmd_opt(file, passes, template_file, out_path, out, err);
    if (synth->parsed()) return cmd_synth(table_file, method, out_path, out);
    if (cost->parsed()) return cmd_cost(file, model, out);
    if (verify->parsed()) return cmd_verify(file, family, out, err);
    if (report->parsed()) return cmd_report(format, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_parse;
  } catch (const SynthesisError& e) {
    err << "synthesis error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  return exit_usage;
}

}  // namespace revseq::cli

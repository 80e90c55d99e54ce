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

#include "revseq/netlist.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "revseq/corpus.hpp"

namespace revseq {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char ch : s)
    if (!((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_')) return false;
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string stripped = line;
  if (auto hash = stripped.find('#'); hash != std::string::npos) stripped.resize(hash);
  std::istringstream in(stripped);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

struct NetlistParser {
  explicit NetlistParser(const ParseOptions& options) : options(options) {}

  const ParseOptions& options;
  std::size_t lineno = 0;
  bool in_body = false;
  bool saw_begin = false;
  bool saw_end = false;

  std::vector<std::string> line_names;
  std::map<std::string, Line> line_index;
  std::vector<Gate> gates;
  SequentialCircuit seq;
  std::set<std::string> state_vars;
  std::optional<unsigned> declared_numlines;

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(lineno, message); }

  Line lookup(const std::string& name) const {
    auto it = line_index.find(name);
    if (it == line_index.end()) fail("undeclared line name '" + name + "'");
    return it->second;
  }

  std::pair<std::string, bool> parse_bit_binding(const std::string& token) const {
    auto eq = token.find('=');
    if (eq == std::string::npos) fail("expected name=bit in '" + token + "'");
    const std::string name = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (value != "0" && value != "1") fail("bit value must be 0 or 1 in '" + token + "'");
    return {name, value == "1"};
  }

  void directive(const std::vector<std::string>& tokens) {
    const std::string& head = tokens[0];
    auto args = std::vector<std::string>(tokens.begin() + 1, tokens.end());

    if (head == ".version") {
      if (args.size() != 1 || args[0] != "revseq-1") fail("unsupported version");
    } else if (head == ".numlines") {
      if (args.size() != 1) fail(".numlines takes one count");
      declared_numlines = static_cast<unsigned>(std::stoul(args[0]));
    } else if (head == ".lines") {
      for (const std::string& name : args) {
        if (!is_identifier(name)) fail("bad line identifier '" + name + "'");
        if (line_index.count(name)) fail("duplicate line declaration '" + name + "'");
        line_index[name] = static_cast<Line>(line_names.size());
        line_names.push_back(name);
      }
    } else if (head == ".inputs") {
      for (const std::string& name : args) seq.input_lines[name] = lookup(name);
    } else if (head == ".state") {
      for (const std::string& name : args) {
        const Line l = lookup(name);
        seq.state_lines[name] = {l, l};
        state_vars.insert(name);
      }
    } else if (head == ".statemap") {
      // out-line -> state-variable (the input-side line names the variable)
      for (const std::string& entry : args) {
        auto arrow = entry.find("->");
        if (arrow == std::string::npos) fail("expected out->in in '" + entry + "'");
        const std::string out_name = entry.substr(0, arrow);
        const std::string var = entry.substr(arrow + 2);
        if (!state_vars.count(var)) fail("statemap names unknown state variable '" + var + "'");
        seq.state_lines[var].out_line = lookup(out_name);
      }
    } else if (head == ".init") {
      for (const std::string& entry : args) {
        auto [name, value] = parse_bit_binding(entry);
        if (!state_vars.count(name)) fail("initial value for unknown state variable '" + name + "'");
        seq.initial_state[name] = value;
      }
    } else if (head == ".constants") {
      for (const std::string& entry : args) {
        auto [name, value] = parse_bit_binding(entry);
        seq.constant_lines[lookup(name)] = value;
      }
    } else if (head == ".refresh") {
      for (const std::string& entry : args) {
        auto [name, value] = parse_bit_binding(entry);
        const Line l = lookup(name);
        auto it = seq.constant_lines.find(l);
        if (it == seq.constant_lines.end()) fail("refresh line '" + name + "' is not a constant");
        if (it->second != value) fail("refresh value disagrees with constant '" + name + "'");
        seq.refresh_lines.insert(l);
      }
    } else if (head == ".outputs") {
      for (const std::string& entry : args) {
        auto eq = entry.find('=');
        const std::string name = eq == std::string::npos ? entry : entry.substr(0, eq);
        const std::string line = eq == std::string::npos ? entry : entry.substr(eq + 1);
        seq.output_lines[name] = lookup(line);
      }
    } else if (head == ".begin") {
      if (saw_begin) fail("duplicate .begin");
      saw_begin = true;
      in_body = true;
    } else if (head == ".end") {
      if (!saw_begin) fail(".end without .begin");
      saw_end = true;
      in_body = false;
    } else {
      fail("unknown directive '" + head + "'");
    }
  }

  void gate_line(const std::vector<std::string>& tokens) {
    const std::string& mnemonic = tokens[0];
    std::vector<Line> lines;
    for (std::size_t i = 1; i < tokens.size(); ++i) lines.push_back(lookup(tokens[i]));
    auto distinct = [&](std::initializer_list<Line> ls) {
      std::set<Line> set(ls);
      if (set.size() != ls.size()) fail("duplicate control/target overlap");
    };

    if (mnemonic == "t1") {
      if (lines.size() != 1) fail("t1 takes one line");
      gates.push_back(Gate::not_gate(lines[0]));
    } else if (mnemonic == "t2") {
      if (lines.size() != 2) fail("t2 takes control target");
      distinct({lines[0], lines[1]});
      gates.push_back(Gate::cnot(lines[0], lines[1]));
    } else if (mnemonic == "t3") {
      if (lines.size() != 3) fail("t3 takes two controls and a target");
      distinct({lines[0], lines[1], lines[2]});
      gates.push_back(Gate::toffoli(lines[0], lines[1], lines[2]));
    } else if (mnemonic == "f3") {
      if (options.keep_foreign)
        fail("foreign gate 'f3' needs expansion but --keep-foreign is set");
      if (lines.size() != 3) fail("f3 takes control and two swap lines");
      distinct({lines[0], lines[1], lines[2]});
      const MacroExpansion fredkin = expand_macro(MacroKind::Fredkin);
      for (const Gate& g : fredkin.circuit.gates()) {
        auto remap = [&](Line l) { return lines[l]; };
        if (g.kind() == GateKind::Cnot)
          gates.push_back(Gate::cnot(remap(g.controls()[0]), remap(g.target())));
        else
          gates.push_back(
              Gate::toffoli(remap(g.controls()[0]), remap(g.controls()[1]), remap(g.target())));
      }
    } else {
      fail("unknown gate mnemonic '" + mnemonic + "'");
    }
  }

  SequentialCircuit finish() {
    if (saw_begin && !saw_end) fail("missing .end");
    if (!saw_begin) fail("missing .begin");
    if (declared_numlines && *declared_numlines != line_names.size())
      fail(".numlines disagrees with .lines");

    seq.body = Circuit(static_cast<unsigned>(line_names.size()), std::move(gates), line_names);

    std::vector<std::string> names(state_vars.begin(), state_vars.end());
    for (const std::string& name : names)
      if (!seq.initial_state.count(name))
        seq.initial_state[name] = default_initial_bit(name, names);

    Diagnostics diags = validate_sequential(seq);
    if (!diags.ok()) fail("invalid circuit: " + diags.items.front().message);
    return seq;
  }
};

}  // namespace

SequentialCircuit parse_netlist(const std::string& text, const ParseOptions& options) {
  NetlistParser parser(options);
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++parser.lineno;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '.')
      parser.directive(tokens);
    else if (parser.in_body)
      parser.gate_line(tokens);
    else
      parser.fail("gate outside .begin/.end body");
  }
  ++parser.lineno;
  return parser.finish();
}

std::string emit_netlist(const SequentialCircuit& seq) {
  require_valid(seq);
  const Circuit& body = seq.body;
  std::ostringstream out;
  out << ".version revseq-1\n";
  out << ".numlines " << body.width() << "\n";
  out << ".lines";
  for (const std::string& name : body.line_names()) out << ' ' << name;
  out << "\n";

  // Name-carrying directives are ordered by line index.
  std::vector<std::pair<Line, std::string>> inputs;
  for (const auto& [name, line] : seq.input_lines) inputs.emplace_back(line, name);
  std::sort(inputs.begin(), inputs.end());
  out << ".inputs";
  for (const auto& [line, name] : inputs) out << ' ' << name;
  out << "\n";

  std::vector<std::pair<Line, std::string>> states;
  for (const auto& [name, binding] : seq.state_lines) states.emplace_back(binding.in_line, name);
  std::sort(states.begin(), states.end());
  out << ".state";
  for (const auto& [line, name] : states) out << ' ' << name;
  out << "\n";
  out << ".statemap";
  for (const auto& [line, name] : states)
    out << ' ' << body.line_name(seq.state_lines.at(name).out_line) << "->" << name;
  out << "\n";
  out << ".init";
  for (const auto& [line, name] : states) out << ' ' << name << '=' << seq.initial_state.at(name);
  out << "\n";

  out << ".constants";
  for (const auto& [line, value] : seq.constant_lines)
    out << ' ' << body.line_name(line) << '=' << value;
  out << "\n";
  out << ".refresh";
  for (Line line : seq.refresh_lines)
    out << ' ' << body.line_name(line) << '=' << seq.constant_lines.at(line);
  out << "\n";

  out << ".outputs";
  for (const auto& [name, line] : seq.output_lines) {
    out << ' ' << name;
    if (body.line_name(line) != name) out << '=' << body.line_name(line);
  }
  out << "\n";

  out << ".begin\n";
  for (const Gate& g : body.gates()) {
    switch (g.kind()) {
      case GateKind::Not: out << "t1"; break;
      case GateKind::Cnot: out << "t2"; break;
      case GateKind::Toffoli: out << "t3"; break;
    }
    for (Line c : g.controls()) out << ' ' << body.line_name(c);
    out << ' ' << body.line_name(g.target()) << "\n";
  }
  out << ".end\n";
  return out.str();
}

std::vector<TableRow> parse_truth_table(const std::string& text, unsigned& width_out) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::vector<TableRow> rows;
  unsigned width = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || tokens[1] != "->")
      throw ParseError(lineno, "expected 'bits -> bits'");
    const std::string& lhs = tokens[0];
    const std::string& rhs = tokens[2];
    if (lhs.size() != rhs.size()) throw ParseError(lineno, "input/output widths differ");
    if (width == 0)
      width = static_cast<unsigned>(lhs.size());
    else if (lhs.size() != width)
      throw ParseError(lineno, "row width differs from the first row");
    try {
      rows.push_back({bits::parse(lhs), bits::parse(rhs)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (rows.empty()) throw ParseError(lineno, "empty truth table");
  width_out = width;
  return rows;
}

Permutation truth_table_to_permutation(const std::vector<TableRow>& rows, unsigned width) {
  BijectivityReport report = check_bijective(rows, width);
  if (!report.is_bijective) {
    const Collision& c = report.collisions.front();
    throw std::invalid_argument("table is not bijective: inputs " +
                                bits::format(c.input_a, width) + " and " +
                                bits::format(c.input_b, width) + " share output " +
                                bits::format(c.output, width));
  }
  const std::size_t n = std::size_t{1} << width;
  if (rows.size() != n)
    throw std::invalid_argument("truth table must list all " + std::to_string(n) + " rows");
  Permutation perm;
  perm.width = width;
  perm.table.assign(n, 0);
  for (const TableRow& row : rows)
    perm.table[row.input] = static_cast<std::uint32_t>(row.output);
  return perm;
}

std::vector<Template> parse_templates(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::vector<Template> templates;
  std::optional<Template> current;
  std::size_t counter = 0;

  auto line_of = [&](const std::string& token) -> Line {
    if (token.size() < 2 || token[0] != 'x')
      throw ParseError(lineno, "template lines are named x0..x<width-1>");
    const unsigned idx = static_cast<unsigned>(std::stoul(token.substr(1)));
    if (!current || idx >= current->width)
      throw ParseError(lineno, "template line index out of range: " + token);
    return idx;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens[0] == ".template") {
      if (current) throw ParseError(lineno, "nested .template");
      if (tokens.size() != 2) throw ParseError(lineno, ".template takes a width");
      current = Template{static_cast<unsigned>(std::stoul(tokens[1])), {},
                         "file-template-" + std::to_string(++counter)};
    } else if (tokens[0] == ".end") {
      if (!current) throw ParseError(lineno, ".end without .template");
      try {
        validate_template(*current);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      templates.push_back(std::move(*current));
      current.reset();
    } else if (tokens[0] == "t1" && tokens.size() == 2 && current) {
      current->gates.push_back(Gate::not_gate(line_of(tokens[1])));
    } else if (tokens[0] == "t2" && tokens.size() == 3 && current) {
      current->gates.push_back(Gate::cnot(line_of(tokens[1]), line_of(tokens[2])));
    } else if (tokens[0] == "t3" && tokens.size() == 4 && current) {
      current->gates.push_back(
          Gate::toffoli(line_of(tokens[1]), line_of(tokens[2]), line_of(tokens[3])));
    } else {
      throw ParseError(lineno, "unexpected template line");
    }
  }
  if (current) throw ParseError(lineno, "missing .end");
  return templates;
}

}  // namespace revseq

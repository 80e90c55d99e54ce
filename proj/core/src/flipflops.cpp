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

#include "revseq/flipflops.hpp"

#include <algorithm>
#include <stdexcept>

namespace revseq {

std::string to_string(Family family) {
  switch (family) {
    case Family::SR: return "sr";
    case Family::D: return "d";
    case Family::JK: return "jk";
    case Family::T: return "t";
    case Family::MSD: return "msd";
    case Family::MSJK: return "msjk";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& name) {
  if (name == "sr") return Family::SR;
  if (name == "d") return Family::D;
  if (name == "jk") return Family::JK;
  if (name == "t") return Family::T;
  if (name == "msd") return Family::MSD;
  if (name == "msjk") return Family::MSJK;
  return std::nullopt;
}

NextStateSpec flipflop_spec(Family family) {
  NextStateSpec spec;
  spec.family = family;
  switch (family) {
    case Family::SR:
      spec.inputs = {"c", "s", "r"};
      spec.state_vars = {"q"};
      spec.outputs = {"q", "qbar"};
      break;
    case Family::D:
      spec.inputs = {"c", "d"};
      spec.state_vars = {"q"};
      spec.outputs = {"q"};
      break;
    case Family::JK:
      spec.inputs = {"c", "j", "k"};
      spec.state_vars = {"q"};
      spec.outputs = {"q", "qbar"};
      break;
    case Family::T:
      spec.inputs = {"c", "t"};
      spec.state_vars = {"q"};
      spec.outputs = {"q"};
      break;
    case Family::MSD:
      spec.inputs = {"c", "d"};
      spec.state_vars = {"m", "q"};
      spec.outputs = {"q"};
      break;
    case Family::MSJK:
      spec.inputs = {"c", "j", "k"};
      spec.state_vars = {"m", "q"};
      spec.outputs = {"q", "qbar"};
      break;
  }
  return spec;
}

BitAssignment NextStateSpec::next(const BitAssignment& state, const BitAssignment& in) const {
  auto bit = [](const BitAssignment& a, const char* name) {
    auto it = a.find(name);
    if (it == a.end()) throw std::invalid_argument(std::string("missing bit '") + name + "'");
    return it->second;
  };
  const bool c = bit(in, "c");
  BitAssignment out;
  switch (family) {
    case Family::SR: {
      const bool q = bit(state, "q");
      const bool x = c && (bit(in, "s") != bit(in, "r"));
      out["q"] = x ? bit(in, "s") : q;  // holds on S == R: no unstable state
      break;
    }
    case Family::D: {
      out["q"] = c ? bit(in, "d") : bit(state, "q");
      break;
    }
    case Family::JK: {
      const bool q = bit(state, "q");
      out["q"] = c ? ((bit(in, "j") && !q) || (!bit(in, "k") && q)) : q;
      break;
    }
    case Family::T: {
      out["q"] = bit(state, "q") != (c && bit(in, "t"));
      break;
    }
    case Family::MSD: {
      const bool m = bit(state, "m");
      const bool q = bit(state, "q");
      out["m"] = c ? bit(in, "d") : m;
      out["q"] = c ? q : m;
      break;
    }
    case Family::MSJK: {
      // The master stage is a JK latch over its own bit; the slave
      // copies the master on the low clock phase.
      const bool m = bit(state, "m");
      const bool q = bit(state, "q");
      out["m"] = c ? ((bit(in, "j") && !m) || (!bit(in, "k") && m)) : m;
      out["q"] = c ? q : m;
      break;
    }
  }
  return out;
}

BitAssignment NextStateSpec::output_bits(const BitAssignment& next_state) const {
  BitAssignment out;
  const bool q = next_state.at("q");
  for (const std::string& name : outputs) out[name] = name == "qbar" ? !q : q;
  return out;
}

namespace {

// State enumeration assigns the primary variables freely and pins each
// complement-named variable to the negation of its base.
struct StatePlan {
  std::vector<std::string> free_vars;
  std::vector<std::pair<std::string, std::string>> complements;  // (var, base)
};

StatePlan plan_states(const SequentialCircuit& seq, const NextStateSpec& spec) {
  StatePlan plan;
  for (const std::string& name : spec.state_vars) {
    if (!seq.state_lines.count(name))
      throw std::invalid_argument("circuit has no state variable '" + name + "'");
    plan.free_vars.push_back(name);
  }
  for (const auto& [name, binding] : seq.state_lines) {
    (void)binding;
    if (std::find(spec.state_vars.begin(), spec.state_vars.end(), name) != spec.state_vars.end())
      continue;
    auto base = complement_base(name);
    if (base && seq.state_lines.count(*base))
      plan.complements.emplace_back(name, *base);
    else
      throw std::invalid_argument("circuit state variable '" + name +
                                  "' matches neither the spec nor a complement pair");
  }
  return plan;
}

}  // namespace

VerificationReport verify_design(const SequentialCircuit& seq, const NextStateSpec& spec) {
  require_valid(seq);
  for (const std::string& name : spec.inputs)
    if (!seq.input_lines.count(name))
      throw std::invalid_argument("circuit has no input '" + name + "'");
  for (const auto& [name, line] : seq.input_lines) {
    (void)line;
    if (std::find(spec.inputs.begin(), spec.inputs.end(), name) == spec.inputs.end())
      throw std::invalid_argument("circuit input '" + name + "' is not in the spec");
  }
  for (const std::string& name : spec.outputs)
    if (!seq.output_lines.count(name))
      throw std::invalid_argument("circuit has no output '" + name + "'");

  const StatePlan plan = plan_states(seq, spec);

  // Bijectivity of the body is part of every design check.
  VerificationReport report;
  if (!permutation_of(seq.body).is_valid()) {
    report.pass = false;
    return report;
  }

  const std::size_t n_states = std::size_t{1} << plan.free_vars.size();
  const std::size_t n_inputs = std::size_t{1} << spec.inputs.size();
  for (std::size_t s = 0; s < n_states; ++s) {
    BitAssignment state;
    for (std::size_t i = 0; i < plan.free_vars.size(); ++i)
      state[plan.free_vars[i]] = (s >> i) & 1;
    for (const auto& [name, base] : plan.complements) state[name] = !state[base];

    for (std::size_t in = 0; in < n_inputs; ++in) {
      BitAssignment inputs;
      for (std::size_t i = 0; i < spec.inputs.size(); ++i)
        inputs[spec.inputs[i]] = (in >> i) & 1;

      const StepResult got = step(seq, state, inputs);
      const BitAssignment want_state = spec.next(state, inputs);
      const BitAssignment want_out = spec.output_bits(want_state);

      BitAssignment expected;
      BitAssignment actual;
      bool mismatch = false;
      for (const auto& [name, value] : want_state) {
        expected["state." + name] = value;
        actual["state." + name] = got.next_state.at(name);
        mismatch |= got.next_state.at(name) != value;
      }
      for (const auto& [name, base] : plan.complements) {
        const bool value = !want_state.at(base);
        expected["state." + name] = value;
        actual["state." + name] = got.next_state.at(name);
        mismatch |= got.next_state.at(name) != value;
      }
      for (const auto& [name, value] : got.outputs) {
        bool want;
        if (want_out.count(name)) {
          want = want_out.at(name);
        } else if (auto base = complement_base(name); base && want_out.count(*base)) {
          want = !want_out.at(*base);
        } else {
          throw std::invalid_argument("circuit output '" + name + "' is not in the spec");
        }
        expected["out." + name] = want;
        actual["out." + name] = value;
        mismatch |= value != want;
      }

      ++report.cases_checked;
      if (mismatch && !report.counterexample)
        report.counterexample = Counterexample{state, inputs, expected, actual};
    }
  }
  report.pass = !report.counterexample.has_value();
  return report;
}

}  // namespace revseq

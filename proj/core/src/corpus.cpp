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

#include "revseq/corpus.hpp"

#include <stdexcept>
#include <unordered_map>

namespace revseq {

std::string to_string(Variant variant) {
  switch (variant) {
    case Variant::D1: return "d1";
    case Variant::D2: return "d2";
    case Variant::D3: return "d3";
  }
  return "?";
}

std::string DesignId::name() const { return to_string(family) + "-" + to_string(variant); }

std::optional<DesignId> design_from_string(const std::string& name) {
  const auto dash = name.rfind('-');
  if (dash == std::string::npos) return std::nullopt;
  auto family = family_from_string(name.substr(0, dash));
  if (!family) return std::nullopt;
  const std::string v = name.substr(dash + 1);
  Variant variant;
  if (v == "d1")
    variant = Variant::D1;
  else if (v == "d2")
    variant = Variant::D2;
  else if (v == "d3")
    variant = Variant::D3;
  else
    return std::nullopt;
  return DesignId{*family, variant};
}

std::vector<DesignId> all_designs() {
  std::vector<DesignId> ids;
  for (Family f : {Family::SR, Family::D, Family::JK, Family::T, Family::MSD, Family::MSJK})
    for (Variant v : {Variant::D1, Variant::D2, Variant::D3}) ids.push_back({f, v});
  return ids;
}

namespace {

/// Assembles a SequentialCircuit from named lines; purely a
/// construction convenience for the built-in designs.
class DesignBuilder {
public:
  Line input(const std::string& name) {
    const Line l = add_line(name);
    seq_.input_lines[name] = l;
    return l;
  }
  /// State variable living on its own line (input side = output side).
  Line state(const std::string& name) {
    const Line l = add_line(name);
    seq_.state_lines[name] = {l, l};
    return l;
  }
  Line constant(const std::string& name, bool value) {
    const Line l = add_line(name);
    seq_.constant_lines[l] = value;
    return l;
  }
  Line refresh(const std::string& name, bool value) {
    const Line l = constant(name, value);
    seq_.refresh_lines.insert(l);
    return l;
  }
  /// Re-routes a state variable's feedback to read from `out_line`.
  void feedback(const std::string& name, Line out_line) {
    seq_.state_lines.at(name).out_line = out_line;
  }
  void output(const std::string& name, Line line) { seq_.output_lines[name] = line; }

  void t1(Line t) { gates_.push_back(Gate::not_gate(t)); }
  void t2(Line c, Line t) { gates_.push_back(Gate::cnot(c, t)); }
  void t3(Line c0, Line c1, Line t) { gates_.push_back(Gate::toffoli(c0, c1, t)); }

  SequentialCircuit finish() {
    seq_.body = Circuit(static_cast<unsigned>(names_.size()), std::move(gates_), names_);
    std::vector<std::string> state_names;
    for (const auto& [name, binding] : seq_.state_lines) {
      (void)binding;
      state_names.push_back(name);
    }
    for (const std::string& name : state_names)
      seq_.initial_state[name] = default_initial_bit(name, state_names);
    require_valid(seq_);
    return seq_;
  }

private:
  Line add_line(const std::string& name) {
    names_.push_back(name);
    return static_cast<Line>(names_.size() - 1);
  }

  std::vector<std::string> names_;
  std::vector<Gate> gates_;
  SequentialCircuit seq_;
};

// The SR comparison stage shared by the D1 designs: x collects
// C.S xor C.R, the targets of the next two Toffolis pick up the new
// value, the NOT turns x into the hold condition.
SequentialCircuit build_sr_d1() {
  DesignBuilder b;
  const Line c = b.input("c"), s = b.input("s"), r = b.input("r");
  const Line x = b.constant("x", 0);
  const Line q = b.state("q"), qbar = b.state("qbar");
  const Line a = b.constant("a", 0), bb = b.constant("b", 0);
  const Line oq = b.constant("oq", 0), oqbar = b.constant("oqbar", 0);
  b.t3(c, s, x);
  b.t3(c, r, x);
  b.t3(x, s, a);
  b.t3(x, r, bb);
  b.t1(x);
  b.t3(x, q, a);
  b.t3(x, qbar, bb);
  b.t2(a, oq);
  b.t2(bb, oqbar);
  b.feedback("q", a);
  b.feedback("qbar", bb);
  b.output("q", oq);
  b.output("qbar", oqbar);
  return b.finish();
}

// D2 keeps the state in place: copy it aside, zero the state lines,
// rebuild them from the comparison stage and the copies.
SequentialCircuit build_sr_d2(bool with_fanout) {
  DesignBuilder b;
  const Line c = b.input("c"), s = b.input("s"), r = b.input("r");
  const Line q = b.state("q"), qbar = b.state("qbar");
  const Line x = with_fanout ? b.constant("x", 0) : b.refresh("x", 0);
  const Line cq = with_fanout ? b.constant("cq", 0) : b.refresh("cq", 0);
  const Line cqbar = with_fanout ? b.constant("cqbar", 0) : b.refresh("cqbar", 0);
  b.t2(q, cq);
  b.t2(cq, q);
  b.t2(qbar, cqbar);
  b.t2(cqbar, qbar);
  b.t3(c, s, x);
  b.t3(c, r, x);
  b.t3(x, s, q);
  b.t3(x, r, qbar);
  b.t1(x);
  b.t3(x, cq, q);
  b.t3(x, cqbar, qbar);
  if (with_fanout) {
    const Line oq = b.constant("oq", 0), oqbar = b.constant("oqbar", 0);
    b.t2(q, oq);
    b.t2(qbar, oqbar);
    b.output("q", oq);
    b.output("qbar", oqbar);
  } else {
    b.output("q", q);
    b.output("qbar", qbar);
  }
  return b.finish();
}

SequentialCircuit build_d_d1() {
  DesignBuilder b;
  const Line c = b.input("c"), d = b.input("d");
  const Line rl = b.constant("rl", 1);  // becomes the complement of D
  const Line x = b.constant("x", 0);
  const Line q = b.state("q"), qbar = b.state("qbar");
  const Line a = b.constant("a", 0), bb = b.constant("b", 0);
  const Line oq = b.constant("oq", 0), oqbar = b.constant("oqbar", 0);
  b.t2(d, rl);
  b.t3(c, d, x);
  b.t3(c, rl, x);  // x = C.(D xor notD) = C
  b.t3(x, d, a);
  b.t3(x, rl, bb);
  b.t1(x);
  b.t3(x, q, a);
  b.t3(x, qbar, bb);
  b.t2(a, oq);
  b.t2(bb, oqbar);
  b.feedback("q", a);
  b.feedback("qbar", bb);
  b.output("q", oq);
  b.output("qbar", oqbar);
  return b.finish();
}

SequentialCircuit build_d_d2() {
  DesignBuilder b;
  const Line c = b.input("c"), d = b.input("d");
  const Line q = b.state("q");
  const Line oq = b.constant("oq", 0);
  const Line cp = b.constant("cp", 0);
  b.t3(c, q, cp);  // copy Q aside while the clock is high
  b.t2(cp, q);     // Q xor Q clears the state line
  b.t3(c, d, q);   // store D
  b.t2(q, oq);
  b.output("q", oq);
  return b.finish();
}

SequentialCircuit build_d_d3() {
  DesignBuilder b;
  const Line c = b.input("c"), d = b.input("d");
  const Line q = b.state("q");
  const Line rf = b.refresh("rf", 0);
  b.t3(c, q, rf);
  b.t2(rf, q);
  b.t3(c, d, q);
  b.output("q", q);
  return b.finish();
}

// JK input stage: jp/kp gate J and K with the clock, the next two
// Toffolis compare against the fed-back state.
SequentialCircuit build_jk_d1() {
  DesignBuilder b;
  const Line c = b.input("c"), j = b.input("j"), k = b.input("k");
  const Line jp = b.constant("jp", 0), kp = b.constant("kp", 0);
  const Line q = b.state("q"), qbar = b.state("qbar");
  const Line s = b.constant("s", 0), r = b.constant("r", 0);
  const Line x = b.constant("x", 0);
  const Line a = b.constant("a", 0), bb = b.constant("b", 0);
  const Line oq = b.constant("oq", 0), oqbar = b.constant("oqbar", 0);
  b.t3(c, j, jp);
  b.t3(c, k, kp);
  b.t3(jp, qbar, s);
  b.t3(kp, q, r);
  b.t2(s, x);
  b.t2(r, x);
  b.t3(x, s, a);
  b.t3(x, r, bb);
  b.t1(x);
  b.t3(x, q, a);
  b.t3(x, qbar, bb);
  b.t2(a, oq);
  b.t2(bb, oqbar);
  b.feedback("q", a);
  b.feedback("qbar", bb);
  b.output("q", oq);
  b.output("qbar", oqbar);
  return b.finish();
}

SequentialCircuit build_jk_d2() {
  DesignBuilder b;
  const Line c = b.input("c"), j = b.input("j"), k = b.input("k");
  const Line jp = b.constant("jp", 0), kp = b.constant("kp", 0);
  const Line q = b.state("q"), qbar = b.state("qbar");
  const Line cq = b.constant("cq", 0), cqbar = b.constant("cqbar", 0);
  const Line s = b.constant("s", 0), r = b.constant("r", 0);
  const Line x = b.constant("x", 0);
  const Line oq = b.constant("oq", 0), oqbar = b.constant("oqbar", 0);
  b.t3(c, j, jp);
  b.t3(c, k, kp);
  b.t2(q, cq);
  b.t2(cq, q);
  b.t2(qbar, cqbar);
  b.t2(cqbar, qbar);
  b.t3(jp, cqbar, s);
  b.t3(kp, cq, r);
  b.t2(s, x);
  b.t2(r, x);
  b.t3(x, s, q);
  b.t3(x, r, qbar);
  b.t1(x);
  b.t3(x, cq, q);
  b.t3(x, cqbar, qbar);
  b.t2(q, oq);
  b.t2(qbar, oqbar);
  b.output("q", oq);
  b.output("qbar", oqbar);
  return b.finish();
}

// The refresh variant drops the copy gates: the state update is folded
// into the comparison lines, and the five working lines are refreshed.
SequentialCircuit build_jk_d3() {
  DesignBuilder b;
  const Line c = b.input("c"), j = b.input("j"), k = b.input("k");
  const Line jp = b.refresh("jp", 0), kp = b.refresh("kp", 0);
  const Line s = b.refresh("s", 0), r = b.refresh("r", 0);
  const Line x = b.refresh("x", 0);
  const Line q = b.state("q"), qbar = b.state("qbar");
  b.t3(c, j, jp);
  b.t3(c, k, kp);
  b.t3(jp, qbar, s);
  b.t3(kp, q, r);
  b.t2(s, x);
  b.t2(r, x);
  b.t2(q, s);    // s now carries s xor Q, the in-place update term
  b.t2(qbar, r);
  b.t3(x, s, q);
  b.t3(x, r, qbar);
  b.output("q", q);
  b.output("qbar", qbar);
  return b.finish();
}

// T flip flop as a JK with joined inputs: one CNOT copies T onto the
// K line.
SequentialCircuit build_t_d1() {
  DesignBuilder b;
  const Line c = b.input("c"), t = b.input("t");
  const Line kl = b.constant("kl", 0);
  const Line jp = b.constant("jp", 0), kp = b.constant("kp", 0);
  const Line q = b.state("q"), qbar = b.state("qbar");
  const Line s = b.constant("s", 0), r = b.constant("r", 0);
  const Line x = b.constant("x", 0);
  const Line a = b.constant("a", 0), bb = b.constant("b", 0);
  const Line oq = b.constant("oq", 0), oqbar = b.constant("oqbar", 0);
  b.t2(t, kl);
  b.t3(c, t, jp);
  b.t3(c, kl, kp);
  b.t3(jp, qbar, s);
  b.t3(kp, q, r);
  b.t2(s, x);
  b.t2(r, x);
  b.t3(x, s, a);
  b.t3(x, r, bb);
  b.t1(x);
  b.t3(x, q, a);
  b.t3(x, qbar, bb);
  b.t2(a, oq);
  b.t2(bb, oqbar);
  b.feedback("q", a);
  b.feedback("qbar", bb);
  b.output("q", oq);
  b.output("qbar", oqbar);
  return b.finish();
}

SequentialCircuit build_t_d2() {
  DesignBuilder b;
  const Line c = b.input("c"), t = b.input("t");
  const Line q = b.state("q");
  const Line oq = b.constant("oq", 0);
  b.t3(c, t, q);
  b.t2(q, oq);  // copy the output for delivery
  b.output("q", oq);
  return b.finish();
}

// A line holds its own last state, so the whole flip flop is one
// Toffoli: no feedback wiring and no refresh.
SequentialCircuit build_t_d3() {
  DesignBuilder b;
  const Line c = b.input("c"), t = b.input("t");
  const Line q = b.state("q");
  b.t3(c, t, q);
  b.output("q", q);
  return b.finish();
}

// Master-slave composition: the master block runs on C, a NOT flips
// the clock line, the slave block runs on the complement. The slave of
// the D1 style reads the master fan-out, so it needs no input inverter.
SequentialCircuit build_msd_d1() {
  DesignBuilder b;
  const Line c = b.input("c"), d = b.input("d");
  const Line rl = b.constant("rl", 1);
  const Line x = b.constant("x", 0);
  const Line m = b.state("m"), mbar = b.state("mbar");
  const Line a = b.constant("a", 0), bb = b.constant("b", 0);
  const Line om = b.constant("om", 0), ombar = b.constant("ombar", 0);
  const Line x2 = b.constant("x2", 0);
  const Line q = b.state("q"), qbar = b.state("qbar");
  const Line a2 = b.constant("a2", 0), b2 = b.constant("b2", 0);
  const Line oq = b.constant("oq", 0), oqbar = b.constant("oqbar", 0);
  // master: D flip flop of D1
  b.t2(d, rl);
  b.t3(c, d, x);
  b.t3(c, rl, x);
  b.t3(x, d, a);
  b.t3(x, rl, bb);
  b.t1(x);
  b.t3(x, m, a);
  b.t3(x, mbar, bb);
  b.t2(a, om);
  b.t2(bb, ombar);
  b.t1(c);  // clock line now carries the complement
  // slave: same block without the input inverter
  b.t3(c, om, x2);
  b.t3(c, ombar, x2);
  b.t3(x2, om, a2);
  b.t3(x2, ombar, b2);
  b.t1(x2);
  b.t3(x2, q, a2);
  b.t3(x2, qbar, b2);
  b.t2(a2, oq);
  b.t2(b2, oqbar);
  b.feedback("m", a);
  b.feedback("mbar", bb);
  b.feedback("q", a2);
  b.feedback("qbar", b2);
  b.output("q", oq);
  b.output("qbar", oqbar);
  return b.finish();
}

SequentialCircuit build_msd_d2() {
  DesignBuilder b;
  const Line c = b.input("c"), d = b.input("d");
  const Line m = b.state("m");
  const Line am = b.constant("am", 0);
  const Line om = b.constant("om", 0);
  const Line q = b.state("q");
  const Line as = b.constant("as", 0);
  const Line oq = b.constant("oq", 0);
  b.t3(c, m, am);
  b.t2(am, m);
  b.t3(c, d, m);
  b.t2(m, om);
  b.t1(c);
  b.t3(c, q, as);
  b.t2(as, q);
  b.t3(c, om, q);
  b.t2(q, oq);
  b.output("q", oq);
  return b.finish();
}

SequentialCircuit build_msd_d3() {
  DesignBuilder b;
  const Line c = b.input("c"), d = b.input("d");
  const Line m = b.state("m");
  const Line rm = b.refresh("rm", 0);
  const Line q = b.state("q");
  const Line rs = b.refresh("rs", 0);
  b.t3(c, m, rm);
  b.t2(rm, m);
  b.t3(c, d, m);
  b.t1(c);
  b.t3(c, q, rs);
  b.t2(rs, q);
  b.t3(c, m, q);  // slave reads the master line directly
  b.output("q", q);
  return b.finish();
}

SequentialCircuit build_msjk_d1() {
  DesignBuilder b;
  const Line c = b.input("c"), j = b.input("j"), k = b.input("k");
  const Line jp = b.constant("jp", 0), kp = b.constant("kp", 0);
  const Line m = b.state("m"), mbar = b.state("mbar");
  const Line s = b.constant("s", 0), r = b.constant("r", 0);
  const Line x = b.constant("x", 0);
  const Line a = b.constant("a", 0), bb = b.constant("b", 0);
  const Line om = b.constant("om", 0), ombar = b.constant("ombar", 0);
  const Line x2 = b.constant("x2", 0);
  const Line q = b.state("q"), qbar = b.state("qbar");
  const Line a2 = b.constant("a2", 0), b2 = b.constant("b2", 0);
  const Line oq = b.constant("oq", 0), oqbar = b.constant("oqbar", 0);
  // master: JK flip flop of D1 over its own m/mbar pair
  b.t3(c, j, jp);
  b.t3(c, k, kp);
  b.t3(jp, mbar, s);
  b.t3(kp, m, r);
  b.t2(s, x);
  b.t2(r, x);
  b.t3(x, s, a);
  b.t3(x, r, bb);
  b.t1(x);
  b.t3(x, m, a);
  b.t3(x, mbar, bb);
  b.t2(a, om);
  b.t2(bb, ombar);
  b.t1(c);
  // slave: SR block of D1 fed by the master fan-out
  b.t3(c, om, x2);
  b.t3(c, ombar, x2);
  b.t3(x2, om, a2);
  b.t3(x2, ombar, b2);
  b.t1(x2);
  b.t3(x2, q, a2);
  b.t3(x2, qbar, b2);
  b.t2(a2, oq);
  b.t2(b2, oqbar);
  b.feedback("m", a);
  b.feedback("mbar", bb);
  b.feedback("q", a2);
  b.feedback("qbar", b2);
  b.output("q", oq);
  b.output("qbar", oqbar);
  return b.finish();
}

SequentialCircuit build_msjk_d2() {
  DesignBuilder b;
  const Line c = b.input("c"), j = b.input("j"), k = b.input("k");
  const Line jp = b.constant("jp", 0), kp = b.constant("kp", 0);
  const Line m = b.state("m"), mbar = b.state("mbar");
  const Line cm = b.constant("cm", 0), cmbar = b.constant("cmbar", 0);
  const Line s = b.constant("s", 0), r = b.constant("r", 0);
  const Line x = b.constant("x", 0);
  const Line om = b.constant("om", 0), ombar = b.constant("ombar", 0);
  const Line q = b.state("q"), qbar = b.state("qbar");
  const Line cq = b.constant("cq", 0), cqbar = b.constant("cqbar", 0);
  const Line x2 = b.constant("x2", 0);
  const Line oq = b.constant("oq", 0), oqbar = b.constant("oqbar", 0);
  // master: JK of D2
  b.t3(c, j, jp);
  b.t3(c, k, kp);
  b.t2(m, cm);
  b.t2(cm, m);
  b.t2(mbar, cmbar);
  b.t2(cmbar, mbar);
  b.t3(jp, cmbar, s);
  b.t3(kp, cm, r);
  b.t2(s, x);
  b.t2(r, x);
  b.t3(x, s, m);
  b.t3(x, r, mbar);
  b.t1(x);
  b.t3(x, cm, m);
  b.t3(x, cmbar, mbar);
  b.t2(m, om);
  b.t2(mbar, ombar);
  b.t1(c);
  // slave: SR block of D2 fed by the master fan-out
  b.t2(q, cq);
  b.t2(cq, q);
  b.t2(qbar, cqbar);
  b.t2(cqbar, qbar);
  b.t3(c, om, x2);
  b.t3(c, ombar, x2);
  b.t3(x2, om, q);
  b.t3(x2, ombar, qbar);
  b.t1(x2);
  b.t3(x2, cq, q);
  b.t3(x2, cqbar, qbar);
  b.t2(q, oq);
  b.t2(qbar, oqbar);
  b.output("q", oq);
  b.output("qbar", oqbar);
  return b.finish();
}

SequentialCircuit build_msjk_d3() {
  DesignBuilder b;
  const Line c = b.input("c"), j = b.input("j"), k = b.input("k");
  const Line jp = b.refresh("jp", 0), kp = b.refresh("kp", 0);
  const Line s = b.refresh("s", 0), r = b.refresh("r", 0);
  const Line x = b.refresh("x", 0);
  const Line m = b.state("m"), mbar = b.state("mbar");
  const Line cq = b.refresh("cq", 0), cqbar = b.refresh("cqbar", 0);
  const Line x2 = b.refresh("x2", 0);
  const Line q = b.state("q"), qbar = b.state("qbar");
  // master: JK of D3
  b.t3(c, j, jp);
  b.t3(c, k, kp);
  b.t3(jp, mbar, s);
  b.t3(kp, m, r);
  b.t2(s, x);
  b.t2(r, x);
  b.t2(m, s);
  b.t2(mbar, r);
  b.t3(x, s, m);
  b.t3(x, r, mbar);
  b.t1(c);
  // slave: SR block of D3 reading the master lines
  b.t2(q, cq);
  b.t2(cq, q);
  b.t2(qbar, cqbar);
  b.t2(cqbar, qbar);
  b.t3(c, m, x2);
  b.t3(c, mbar, x2);
  b.t3(x2, m, q);
  b.t3(x2, mbar, qbar);
  b.t1(x2);
  b.t3(x2, cq, q);
  b.t3(x2, cqbar, qbar);
  b.output("q", q);
  b.output("qbar", qbar);
  return b.finish();
}

}  // namespace

SequentialCircuit build_design(DesignId id) {
  switch (id.family) {
    case Family::SR:
      switch (id.variant) {
        case Variant::D1: return build_sr_d1();
        case Variant::D2: return build_sr_d2(true);
        case Variant::D3: return build_sr_d2(false);
      }
      break;
    case Family::D:
      switch (id.variant) {
        case Variant::D1: return build_d_d1();
        case Variant::D2: return build_d_d2();
        case Variant::D3: return build_d_d3();
      }
      break;
    case Family::JK:
      switch (id.variant) {
        case Variant::D1: return build_jk_d1();
        case Variant::D2: return build_jk_d2();
        case Variant::D3: return build_jk_d3();
      }
      break;
    case Family::T:
      switch (id.variant) {
        case Variant::D1: return build_t_d1();
        case Variant::D2: return build_t_d2();
        case Variant::D3: return build_t_d3();
      }
      break;
    case Family::MSD:
      switch (id.variant) {
        case Variant::D1: return build_msd_d1();
        case Variant::D2: return build_msd_d2();
        case Variant::D3: return build_msd_d3();
      }
      break;
    case Family::MSJK:
      switch (id.variant) {
        case Variant::D1: return build_msjk_d1();
        case Variant::D2: return build_msjk_d2();
        case Variant::D3: return build_msjk_d3();
      }
      break;
  }
  throw std::invalid_argument("unknown design id");
}

DesignInfo design_info(DesignId id) {
  DesignInfo info;
  info.id = id;
  info.provenance = Provenance::Reconstruction;
  const std::string name = id.name();
  if (name == "t-d3") {
    info.provenance = Provenance::Prose;
    info.note = "single Toffoli; no feedback, no refresh";
  } else if (name == "t-d2") {
    info.provenance = Provenance::Prose;
    info.note = "Toffoli plus an output copy";
  } else if (name == "d-d2" || name == "d-d3") {
    info.provenance = Provenance::Prose;
    info.note = "copy, clear and store stage as described";
  } else if (name == "msd-d1") {
    info.provenance = Provenance::Prose;
    info.note = "master 10 gates, slave 9, one NOT for the clock";
  } else if (name == "msjk-d1") {
    info.note = "reconstruction; published total of 25 conflicts with the "
                "comparison table value 23, the table value governs";
  } else if (name == "jk-d3") {
    info.note = "reconstruction; copy gates removed, five working lines refreshed";
  } else {
    info.note = "reconstruction constrained by the described gate roles";
  }
  return info;
}

std::string to_string(MacroKind kind) {
  switch (kind) {
    case MacroKind::Fredkin: return "fredkin";
    case MacroKind::Copy: return "copy";
    case MacroKind::And: return "and";
    case MacroKind::Nand: return "nand";
    case MacroKind::Or: return "or";
    case MacroKind::Nor: return "nor";
  }
  return "?";
}

MacroExpansion expand_macro(MacroKind kind) {
  MacroExpansion m;
  switch (kind) {
    case MacroKind::Fredkin:
      // Controlled swap of lines a and b.
      m.circuit = Circuit(3,
                          {Gate::cnot(2, 1), Gate::toffoli(0, 1, 2), Gate::cnot(2, 1)},
                          {"c", "a", "b"});
      m.data_lines = {0, 1, 2};
      break;
    case MacroKind::Copy:
      m.circuit = Circuit(2, {Gate::cnot(0, 1)}, {"a", "anc"});
      m.ancilla = 1;
      m.ancilla_preset = false;
      m.data_lines = {0};
      break;
    case MacroKind::And:
      m.circuit = Circuit(3, {Gate::toffoli(0, 1, 2)}, {"a", "b", "anc"});
      m.ancilla = 2;
      m.ancilla_preset = false;
      m.data_lines = {0, 1};
      break;
    case MacroKind::Nand:
      m.circuit = Circuit(3, {Gate::toffoli(0, 1, 2)}, {"a", "b", "anc"});
      m.ancilla = 2;
      m.ancilla_preset = true;
      m.data_lines = {0, 1};
      break;
    case MacroKind::Or:
    case MacroKind::Nor:
      m.circuit = Circuit(3,
                          {Gate::not_gate(0), Gate::not_gate(1), Gate::toffoli(0, 1, 2),
                           Gate::not_gate(0), Gate::not_gate(1)},
                          {"a", "b", "anc"});
      m.ancilla = 2;
      m.ancilla_preset = kind == MacroKind::Or;
      m.data_lines = {0, 1};
      break;
  }
  return m;
}

}  // namespace revseq

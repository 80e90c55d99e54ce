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

#include "revseq/synthesize.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace revseq {

namespace {

constexpr unsigned max_synth_width = 12;

void require_perm(const Permutation& perm) {
  if (perm.width > max_synth_width)
    throw std::invalid_argument("synthesis is capped at 12 lines");
  if (!perm.is_valid()) throw std::invalid_argument("invalid permutation");
}

bool is_even_permutation(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm.table[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// A gate with control set C moves some already-fixed row j < fixed_below
// exactly when C is a subset of the bits of such a j; the smallest
// superset of C is the value of C itself, so safety is one compare.
bool controls_safe(Bits control_value, std::size_t fixed_below) {
  return control_value >= fixed_below;
}

// Multi-control Toffoli over borrowed lines: [B A B A] with
// A = C^aX(high controls -> borrow) and B = C^(b+1)X(low + borrow -> t)
// toggles t by the AND of all controls and restores the borrow, which
// may hold anything. Recurses down to plain NCT gates; needs one line
// beyond controls and target, i.e. arity <= width - 2.
void emit_mcx(std::vector<Gate>& out, std::vector<Line> controls, Line target, unsigned width) {
  std::sort(controls.begin(), controls.end());
  if (controls.empty()) {
    out.push_back(Gate::not_gate(target));
    return;
  }
  if (controls.size() == 1) {
    out.push_back(Gate::cnot(controls[0], target));
    return;
  }
  if (controls.size() == 2) {
    out.push_back(Gate::toffoli(controls[0], controls[1], target));
    return;
  }

  std::optional<Line> borrow;
  for (Line l = 0; l < width && !borrow; ++l)
    if (l != target && std::find(controls.begin(), controls.end(), l) == controls.end())
      borrow = l;
  if (!borrow) throw SynthesisError("multi-control gate has no borrowable line");

  const std::size_t half = (controls.size() + 1) / 2;
  std::vector<Line> high(controls.begin(), controls.begin() + half);
  std::vector<Line> low(controls.begin() + half, controls.end());
  low.push_back(*borrow);

  emit_mcx(out, low, target, width);
  emit_mcx(out, high, *borrow, width);
  emit_mcx(out, low, target, width);
  emit_mcx(out, high, *borrow, width);
}

// Cheapest safe gate flipping bit `b` of the value `w`: NOT, a CNOT on
// the lowest safe 1-line, a Toffoli on the lowest safe pair, then a
// multi-control gate obtained by shrinking the full 1-set. Arities
// above width-2 have no borrowed-line expansion and report failure.
bool emit_flip(std::vector<Gate>& out, Bits w, Line b, unsigned width, std::size_t fixed_below) {
  if (controls_safe(0, fixed_below)) {
    out.push_back(Gate::not_gate(b));
    return true;
  }
  std::vector<Line> ones;
  for (Line l = 0; l < width; ++l)
    if (l != b && bits::get(w, l)) ones.push_back(l);
  for (Line c : ones)
    if (controls_safe(Bits{1} << c, fixed_below)) {
      out.push_back(Gate::cnot(c, b));
      return true;
    }
  for (std::size_t i = 0; i < ones.size(); ++i)
    for (std::size_t j = i + 1; j < ones.size(); ++j)
      if (controls_safe((Bits{1} << ones[i]) | (Bits{1} << ones[j]), fixed_below)) {
        out.push_back(Gate::toffoli(ones[i], ones[j], b));
        return true;
      }

  Bits value = 0;
  for (Line c : ones) value |= Bits{1} << c;
  if (!controls_safe(value, fixed_below)) return false;
  std::vector<Line> controls = ones;
  for (Line c : ones) {
    if (controls.size() <= 3) break;
    if (controls_safe(value - (Bits{1} << c), fixed_below)) {
      value -= Bits{1} << c;
      controls.erase(std::find(controls.begin(), controls.end(), c));
    }
  }
  if (controls.size() > width - 2 || width < 2) return false;
  emit_mcx(out, std::move(controls), b, width);
  return true;
}

// ---------------------------------------------------------------------
// Fallback for rows the row-local greedy cannot fix: a 3-cycle on
// arbitrary values, built from two double-transpositions that share an
// auxiliary pair. Each double-transposition is a conjugated
// multi-control flip: route the four values onto the four corners of
// the square selected by "all high lines set", flip line 0 under those
// controls, and undo the routing.

struct PolarityControl {
  Line line;
  bool positive;
};

void emit_polarity_gate(std::vector<Gate>& out, const std::vector<PolarityControl>& controls,
                        Line target) {
  for (const PolarityControl& c : controls)
    if (!c.positive) out.push_back(Gate::not_gate(c.line));
  if (controls.empty()) {
    out.push_back(Gate::not_gate(target));
  } else if (controls.size() == 1) {
    out.push_back(Gate::cnot(controls[0].line, target));
  } else {
    out.push_back(Gate::toffoli(controls[0].line, controls[1].line, target));
  }
  for (const PolarityControl& c : controls)
    if (!c.positive) out.push_back(Gate::not_gate(c.line));
}

// Routing scratchpad for one double-transposition.
struct SquareRouter {
  unsigned width;
  Line entry;            // the high line flipped to enter the square
  Bits high_mask;        // lines 2..width-1
  std::vector<Gate> gates;
  std::vector<Bits> tracked;  // current values of the four points
  std::vector<Bits> placed;   // occupied square corners

  explicit SquareRouter(unsigned width)
      : width(width), entry(width - 1) {
    high_mask = 0;
    for (Line l = 2; l < width; ++l) high_mask |= Bits{1} << l;
  }

  bool in_square(Bits v) const { return (v & high_mask) == high_mask; }

  void apply(const std::vector<Gate>& gs) {
    for (const Gate& g : gs) {
      gates.push_back(g);
      for (Bits& v : tracked) v = apply_gate(g, v, width);
    }
  }

  // Controls on the low lines that match `value` and exclude every
  // placed corner (corners differ pairwise on lines 0 and 1).
  std::vector<PolarityControl> low_guards(Bits value) const {
    std::vector<PolarityControl> guards;
    for (Bits corner : placed) {
      bool excluded = false;
      for (const PolarityControl& g : guards)
        excluded |= bits::get(corner, g.line) != g.positive;
      if (excluded) continue;
      for (Line l : {Line{0}, Line{1}}) {
        if (bits::get(corner, l) != bits::get(value, l)) {
          guards.push_back({l, bits::get(value, l)});
          break;
        }
      }
    }
    return guards;
  }

  // Move the point currently at `from` to the square corner `corner`,
  // leaving every corner in `placed` untouched.
  void place(std::size_t point, Bits corner) {
    Bits cur = tracked[point];
    if (cur == corner) {
      placed.push_back(corner);
      return;
    }

    if (placed.empty()) {
      // Unconstrained: plain NOTs on every differing line.
      std::vector<Gate> gs;
      for (Line l = 0; l < width; ++l)
        if (bits::get(cur ^ corner, l)) gs.push_back(Gate::not_gate(l));
      apply(gs);
      placed.push_back(corner);
      return;
    }

    // Step 1: leave the square if inside (guards distinguish from the
    // placed corners on the low lines).
    if (in_square(cur)) {
      std::vector<Gate> gs;
      emit_polarity_gate(gs, low_guards(cur), entry);
      apply(gs);
      cur = tracked[point];
    }
    // Step 2: make the entry line 0 so it witnesses "outside".
    if (bits::get(cur, entry)) {
      Line witness = entry;
      for (Line l = 2; l < width; ++l)
        if (!bits::get(cur, l)) witness = l;
      std::vector<Gate> gs;
      emit_polarity_gate(gs, {{witness, false}}, entry);
      apply(gs);
      cur = tracked[point];
    }
    // Step 3: walk to the pre-entry position with the entry line as a
    // negative witness control; placed corners all have it set.
    const Bits pre_entry = corner ^ (Bits{1} << entry);
    for (Line l = 0; l < width; ++l) {
      if (l == entry || !bits::get(cur ^ pre_entry, l)) continue;
      std::vector<Gate> gs;
      emit_polarity_gate(gs, {{entry, false}}, l);
      apply(gs);
      cur = tracked[point];
    }
    // Step 4: enter on the low-line guards.
    std::vector<Gate> gs;
    emit_polarity_gate(gs, low_guards(corner), entry);
    apply(gs);
    placed.push_back(corner);
  }
};

// (p q)(u v) on arbitrary distinct values, everything else fixed.
std::vector<Gate> double_transposition(Bits p, Bits q, Bits u, Bits v, unsigned width) {
  SquareRouter router(width);
  router.tracked = {p, q, u, v};
  const Bits s00 = router.high_mask;
  router.place(0, s00);
  router.place(1, s00 | 1);
  router.place(2, s00 | 2);
  router.place(3, s00 | 3);

  std::vector<Gate> forward = router.gates;
  std::vector<Gate> out = forward;
  // The square flip: line 0 controlled on every high line.
  std::vector<Line> controls;
  for (Line l = 2; l < width; ++l) controls.push_back(l);
  emit_mcx(out, std::move(controls), 0, width);
  out.insert(out.end(), forward.rbegin(), forward.rend());
  return out;
}

// Net 3-cycle x -> y -> z -> x through a shared auxiliary pair: the
// auxiliary values are swapped twice, so only the cycle survives.
std::vector<Gate> three_cycle(Bits x, Bits y, Bits z, unsigned width) {
  Bits aux0 = 0;
  while (aux0 == x || aux0 == y || aux0 == z) ++aux0;
  Bits aux1 = aux0 + 1;
  while (aux1 == x || aux1 == y || aux1 == z) ++aux1;

  std::vector<Gate> out = double_transposition(x, y, aux0, aux1, width);
  const std::vector<Gate> second = double_transposition(x, z, aux0, aux1, width);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

// Gate sequence sending the value `from` to the value `to` while fixing
// every row below `fixed_below`: greedy bit flips (set bits first, so
// the working value only grows), with the conjugated 3-cycle as the
// fallback when a flip would need every other line as a control.
std::vector<Gate> map_value(Bits from, Bits to, unsigned width, std::size_t fixed_below) {
  std::vector<Gate> gates;
  Bits w = from;
  while (w != to) {
    std::size_t before = gates.size();
    bool flipped = false;
    for (Line b = 0; b < width && !flipped; ++b)
      if (bits::get(to, b) && !bits::get(w, b)) flipped = emit_flip(gates, w, b, width, fixed_below);
    for (Line b = 0; b < width && !flipped; ++b)
      if (!bits::get(to, b) && bits::get(w, b)) flipped = emit_flip(gates, w, b, width, fixed_below);
    if (!flipped) {
      if (width < 4) throw SynthesisError("row transformation failed below four lines");
      // Third cycle point: the smallest unfixed row distinct from the
      // endpoints; the cycle continues from wherever the greedy got.
      Bits spare = fixed_below;
      while (spare == w || spare == to) ++spare;
      const std::vector<Gate> cycle = three_cycle(w, to, spare, width);
      gates.insert(gates.end(), cycle.begin(), cycle.end());
      return gates;
    }
    for (std::size_t g = before; g < gates.size(); ++g) w = apply_gate(gates[g], w, width);
  }
  return gates;
}

void apply_to_table(std::vector<std::uint32_t>& table, const Gate& gate, unsigned width,
                    bool output_side) {
  if (output_side) {
    for (auto& v : table) v = static_cast<std::uint32_t>(apply_gate(gate, v, width));
  } else {
    // Input-side gates permute the row indices: new_f = f o g, and g
    // is self-inverse, so new_f[x] = f[g(x)].
    std::vector<std::uint32_t> updated(table.size());
    for (std::size_t x = 0; x < table.size(); ++x)
      updated[x] = table[apply_gate(gate, static_cast<Bits>(x), width)];
    table = updated;
  }
}

Circuit synth_impl(const Permutation& perm, bool bidirectional) {
  require_perm(perm);
  if (perm.width >= 4 && !is_even_permutation(perm))
    throw SynthesisError("odd permutations on four or more lines are not NCT-realisable");

  const unsigned width = perm.width;
  std::vector<std::uint32_t> table = perm.table;
  std::vector<Gate> output_gates;
  std::vector<Gate> input_gates;

  for (std::size_t i = 0; i < table.size(); ++i) {
    const Bits image = table[i];
    if (image == static_cast<Bits>(i)) continue;

    std::vector<Gate> out_seq = map_value(image, static_cast<Bits>(i), width, i);
    std::optional<std::vector<Gate>> in_seq;
    if (bidirectional) {
      // The inverse image of i: the row that must be steered onto i.
      std::size_t u = 0;
      while (table[u] != i) ++u;
      in_seq = map_value(static_cast<Bits>(i), static_cast<Bits>(u), width, i);
    }

    if (in_seq && in_seq->size() < out_seq.size()) {
      // map_value emits first-applied first; composing f o g per gate
      // consumes the sequence from the other end.
      for (auto it = in_seq->rbegin(); it != in_seq->rend(); ++it) {
        apply_to_table(table, *it, width, false);
        input_gates.push_back(*it);
      }
    } else {
      for (const Gate& g : out_seq) {
        apply_to_table(table, g, width, true);
        output_gates.push_back(g);
      }
    }
  }

  std::vector<Gate> gates = std::move(input_gates);
  gates.insert(gates.end(), output_gates.rbegin(), output_gates.rend());
  return Circuit(width, std::move(gates));
}

}  // namespace

Circuit synth_unidirectional(const Permutation& perm) { return synth_impl(perm, false); }

Circuit synth_bidirectional(const Permutation& perm) { return synth_impl(perm, true); }

Circuit synthesize(const Permutation& perm, SynthMethod method) {
  return method == SynthMethod::Unidirectional ? synth_unidirectional(perm)
                                               : synth_bidirectional(perm);
}

}  // namespace revseq

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ks/diagram.hpp"
#include "ks/invariants.hpp"

namespace ks {

// The auxiliary long knot K with a marked crossing c (a letter of its braid
// word) and the side of the passage: under the over-branch of c, or over
// the under-branch.
struct scan_parameter {
  braid_word aux;
  int aux_letter = 0;
  bool under = true;
  bool cabled = false;
  int aux_curls = 0;  // negative kinks appended to the auxiliary knot

  int letter_sign() const { return aux.letters[size_t(aux_letter)] > 0 ? 1 : -1; }
  std::string str() const;
};

// Pick the unique 1-crossing of the long closure of w; throws if not unique.
int unique_one_crossing_letter(const braid_word& w);

struct move_event {
  enum class kind_t { r3, r2 };
  kind_t kind = kind_t::r3;
  bool identical = false;   // r2: tangent directions agree (contributing)
  int local_type = 0;       // r3: 1..8
  int sign = 0;
  int t_token = -1;         // token index in the scanned tangle
  bool red_branch = false;  // event against the companion branch of a cable
  color d_color_a = color::none;  // the two strands of the distinguished crossing
  color d_color_b = color::none;
  color middle_color = color::none;  // r3 only
  bool contributes() const { return kind == kind_t::r3 || identical; }
  bool d_green() const { return d_color_a == color::green && d_color_b == color::green; }
};

struct value_term {
  std::int64_t coeff = 0;
  diagram dia;            // simplified tangle, long components open
  int event_index = -1;   // provenance into the move list
  int smoothing_side = 0; // 0: first smoothing term, 1: second
  std::string signature;
};

struct cocycle_value {
  std::vector<move_event> moves;
  std::vector<value_term> terms;
};

struct scan_filters {
  bool d_green = false;
  int d_class = -1;  // -1 any, else 0 or 1; compared against the class of c
  bool drop_middle_red_3457 = false;
};

// All moves of the sweep, ordered by sweep time. The scanned tangle must be
// a long 1-1 diagram, or its 2-cable (2-2) when p.cabled is set; crossings
// between counter-directed strands are normalized away first.
std::vector<move_event> enumerate_moves(const diagram& T, const scan_parameter& p);

cocycle_value evaluate(const diagram& T, const scan_parameter& p,
                       const scan_filters& f);

// Merge terms with equal invariant signatures, dropping zero coefficients.
cocycle_value cancel_by_vector(const cocycle_value& v);

// Every contributing move's distinguished crossing lies on the trace
// component of c.
bool trace_distinguished(const diagram& T, const scan_parameter& p);

// The four scans of the commutator loop: d1 through the 1-crossing of d2's
// factor and back. Both knots must be long braid closures.
struct bracket_result {
  cocycle_value combined;
  std::vector<cocycle_value> scans;  // the four constituents
};
bracket_result bracket_cycle(const braid_word& d1, const braid_word& d2, bool cabled,
                             int d1_curls = 0);

// Class (0 or 1) of the letter c inside the long closure of w.
int aux_crossing_class(const braid_word& w, int letter);

// Parallel map helper used for per-term invariant evaluation.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace ks

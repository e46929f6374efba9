#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ks/braid.hpp"

namespace ks {

// Model errors: configurations the machinery must reject (star-like triple
// crossings and friends). Resource errors: configured caps exceeded.
struct model_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class color : std::uint8_t { none, green, red, black };
std::string color_name(color c);

enum class token_kind : std::uint8_t { cup, cap, cross };

// One Morse slice, acting on the stack of strand points at levels 0..w-1.
//   cup(l):   inserts two strands at levels l, l+1 (a "(" turn).
//   cap(l):   joins the strands at levels l, l+1 (a ")" turn).
//   cross(l): the strands at levels l, l+1 exchange levels.
// flag: for cross, the NE segment (lower-left to upper-right) goes under
// (true reproduces a positive braid letter when both strands run
// rightward); for cup/cap, the turn's tip points up.
struct token {
  token_kind kind;
  int level;
  bool flag;
  color col = color::none;  // cups: component color at birth

  friend bool operator==(const token&, const token&) = default;
};

inline token cup(int level, bool tip_up, color c = color::none) {
  return token{token_kind::cup, level, tip_up, c};
}
inline token cap(int level, bool tip_up) { return token{token_kind::cap, level, tip_up}; }
inline token cross(int level, bool ne_under) {
  return token{token_kind::cross, level, ne_under};
}

// An oriented tangle diagram in Morse position, read left to right. Left
// boundary strands are oriented into the diagram, right boundary strands
// out of it; long components therefore run left to right. Closed component
// orientations are carried by the cup/cap variants.
struct diagram {
  int left = 0;
  std::vector<color> left_colors;
  std::vector<token> tokens;

  int right_count() const;
  int max_width() const;
  size_t crossing_count() const;
  void check() const;  // throws std::logic_error on malformed words

  std::string canonical_string() const;
  std::uint64_t hash() const;
  friend bool operator==(const diagram&, const diagram&) = default;
};

struct component_info {
  color col = color::none;
  bool closed = false;
  int left_point = -1;  // boundary level for long components
  int first_token = -1;
};

struct crossing_info {
  int tok = -1;          // token index; doubles as the crossing id
  int sign = 0;
  int ne_comp = -1, se_comp = -1;  // components of the two segments
  bool ne_dir_right = false, se_dir_right = false;
  int over_comp = -1, under_comp = -1;
};

// Passage of a component through a crossing, in traversal order.
struct passage {
  int tok = -1;
  bool over = false;
  int sign = 0;
  int other_comp = -1;
};

struct trace_info {
  int n_comps = 0;
  std::vector<component_info> comps;
  std::vector<crossing_info> crossings;     // one per cross token, token order
  std::vector<int> comp_of_left;            // left boundary level -> comp
  std::vector<int> comp_of_right;
  std::vector<std::array<int, 2>> tok_comps;  // per token: comps of the two strands

  int crossing_index(int tok) const;        // -1 if tok is not a cross
  // Ordered passages along one component, starting at its left endpoint
  // (long) or an arbitrary basepoint (closed).
  std::vector<passage> walk(const diagram& d, int comp) const;
};

trace_info trace(const diagram& d);

// Constructions -------------------------------------------------------------

enum class closure_mode { closed, long_open_top };

diagram from_braid(const braid_word& w, closure_mode mode);

diagram product(const diagram& a, const diagram& b);
diagram two_cable(const diagram& d);
diagram add_curl(const diagram& d, int sign, bool at_right_end);
diagram invert(const diagram& d);
diagram standard_closure(const diagram& d);
diagram delete_components(const diagram& d, const std::vector<int>& comps);
diagram keep_components(const diagram& d, const std::vector<int>& comps);

diagram smooth_crossing(const diagram& d, int tok);
diagram switch_crossing(const diagram& d, int tok);

// 1 iff, after smoothing the self-crossing of the single long component,
// the piece running from the over-cross to the under-cross is the long one.
int crossing_class(const diagram& d, int tok);

int writhe(const diagram& d);                       // all crossings
int component_writhe(const diagram& d, int comp);   // self-crossings only
int whitney_index(const diagram& d, int comp);

// Diagram-level split components (crossing-connectivity of link components).
std::vector<std::vector<int>> split_parts(const diagram& d);

std::string dump(const diagram& d);  // debug text form

}  // namespace ks

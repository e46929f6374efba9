#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ks/diagram.hpp"
#include "ks/laurent.hpp"
#include "ks/seifert.hpp"

namespace ks {

// Conway polynomial of the diagram's closure (long ends close below).
// Split diagrams give 0.
laurent conway(const diagram& d);

// One-variable Alexander polynomial, unit-normalized (lowest exponent 0,
// positive leading coefficient); equality testing is up to units.
laurent alexander(const diagram& d);

// Independent exponential-time oracle via the crossing-switch recursion.
laurent conway_skein_oracle(const diagram& d, size_t max_crossings = 14);

// Half the signed count of crossings between two components.
int linking_number(const diagram& d, int comp_a, int comp_b);

// Order-2 invariant of a long knot from its Gauss sequence.
std::int64_t v2(const diagram& d);

// The polynomial tuple attached to a colored link: the whole link, then
// green-black, green-red, red-black pairs, then green, black, red knots.
// Extra black components extend the black slots in canonical order.
struct alex_vector {
  std::vector<std::pair<std::string, laurent>> entries;
  int lk_green_black = 0;
  int lk_green_red = 0;
  int lk_red_black = 0;
  std::string key() const;  // canonical form for multiset comparison
  friend bool operator==(const alex_vector& a, const alex_vector& b) {
    return a.key() == b.key();
  }
};

// d must be a closed diagram with one green, one red and >=1 black
// component (or green and black only, for uncabled runs).
alex_vector alexander_vector(const diagram& d);

// Canonical invariant signature for identifying tangle values: colored
// component polynomials, pairwise linking data and the whole-link Conway
// polynomial of the standard closure.
std::string invariant_signature(const diagram& tangle);

}  // namespace ks

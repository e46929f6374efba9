#pragma once

#include <cstdint>
#include <vector>

#include "ks/diagram.hpp"
#include "ks/laurent.hpp"

namespace ks {

struct seifert_data {
  int circles = 0;
  int rank = 0;
  std::vector<std::vector<std::int64_t>> v;  // rank x rank, lk(a_i, a_j^+)
};

// Seifert matrix of a connected diagram (crossing-connected as a 4-valent
// graph). Throws std::invalid_argument on disconnected input.
seifert_data seifert_matrix(const diagram& d);

// det(x V - x^{-1} V^T) rewritten in z = x - x^{-1}.
laurent conway_det(const seifert_data& s);

// det(V - t V^T), unit-normalized (lowest exponent 0, positive lead).
laurent alexander_det(const seifert_data& s);

// Fraction-free determinant of a Laurent-polynomial matrix.
laurent bareiss_det(std::vector<std::vector<laurent>> m);

}  // namespace ks

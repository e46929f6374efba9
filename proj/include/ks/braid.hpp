#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ks {

// A word in the braid group B_n. Letters are nonzero integers k meaning
// sigma_{|k|}^{sign k}; generator indices run from 1 to strands-1.
struct braid_word {
  int strands = 1;
  std::vector<int> letters;

  braid_word() = default;
  braid_word(int n, std::vector<int> ls);

  braid_word inverse() const;
  braid_word reversed() const;  // letters read backwards, exponents kept
  friend braid_word operator*(const braid_word& a, const braid_word& b);
  friend bool operator==(const braid_word& a, const braid_word& b) = default;

  int exponent_sum() const;
  std::string str() const;
};

// Parse a whitespace-separated list of nonzero integers. The strand count
// is max|k|+1 unless a larger one is forced by the caller.
braid_word parse_braid(const std::string& text, int strands = 0);

// Garside left normal form: Delta^inf . f_1 ... f_k with permutation-braid
// factors in left-weighted order. Equal group elements produce equal forms.
struct normal_form {
  int strands = 1;
  int inf = 0;
  std::vector<std::vector<int>> factors;  // each a permutation table

  friend bool operator==(const normal_form& a, const normal_form& b) = default;
  friend auto operator<=>(const normal_form& a, const normal_form& b) = default;
  bool is_identity() const { return inf == 0 && factors.empty(); }
  std::string str() const;
};

normal_form garside_normal_form(const braid_word& w);
bool braids_equal(const braid_word& a, const braid_word& b);

// Formal Z-linear combination of braid-group elements, keyed by normal form.
class formal_braid_sum {
public:
  void add(std::int64_t coeff, const braid_word& w);
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<normal_form, std::int64_t>& terms() const { return terms_; }

private:
  std::map<normal_form, std::int64_t> terms_;
};

formal_braid_sum sum_reduce(const std::vector<std::pair<std::int64_t, braid_word>>& ts);

// The eight strata around a positive quadruple point, each contributing a
// signed pair of words in B_4 after the sigma_1^2 - sigma_2^2 smoothing.
enum class tetra_stratum { P1, P1b, P2, P2b, P3, P3b, P4, P4b };

std::vector<std::pair<std::int64_t, braid_word>> tetra_contribution(tetra_stratum s);
formal_braid_sum tetrahedron_sum();
formal_braid_sum tetrahedron_sum_without(tetra_stratum omit);

// Equator edges of the cube of triple-crossing types.
enum class cube_edge { e17, e74, e48, e83, e35, e15 };

cube_edge parse_cube_edge(const std::string& name);
std::vector<std::pair<std::int64_t, braid_word>> cube_edge_terms(cube_edge e);
formal_braid_sum cube_edge_sum(cube_edge e);

}  // namespace ks

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ks/braid.hpp"

using namespace ks;

TEST_CASE("parse_braid") {
  braid_word w = parse_braid("2 2 2 1 -3 -2 -2 1 -2 1 -3");
  CHECK(w.strands == 4);
  CHECK(w.letters.size() == 11);
  CHECK(w.letters[4] == -3);

  braid_word kt = parse_braid("1 1 1 3 3 2 -3 -1 -1 2 -1 -3 -2");
  CHECK(kt.strands == 4);
  CHECK(kt.letters.size() == 13);

  CHECK(parse_braid("").letters.empty());
  CHECK(parse_braid("").strands == 1);

  CHECK_THROWS_AS(parse_braid("1 x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("3", 3), std::invalid_argument);
}

TEST_CASE("normal form decides the word problem") {
  braid_word a = parse_braid("1 2 1", 3);
  braid_word b = parse_braid("2 1 2", 3);
  CHECK(braids_equal(a, b));
  CHECK(garside_normal_form(parse_braid("1 -1", 2)).is_identity());
  CHECK_FALSE(braids_equal(parse_braid("1", 3), parse_braid("2", 3)));

  // sigma2 sigma3 sigma2 = sigma3 sigma2 sigma3 inside a longer word
  braid_word w1 = parse_braid("1 -3 2 3 2 1 -2", 4);
  braid_word w2 = parse_braid("1 -3 3 2 3 1 -2", 4);
  CHECK(braids_equal(w1, w2));
}

TEST_CASE("normal form is a fixed point and inverses cancel") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> ls;
    int len = 1 + int(rng() % 30);
    for (int i = 0; i < len; ++i) {
      int g = 1 + int(rng() % 3);
      ls.push_back(rng() % 2 ? g : -g);
    }
    braid_word w(4, ls);
    CHECK(garside_normal_form(w * w.inverse()).is_identity());
    CHECK(garside_normal_form(w) == garside_normal_form(w));

    // insert a braid relation at a random spot
    std::vector<int> rel = {2, 3, 2, -3, -2, -3};
    std::vector<int> ls2(ls);
    size_t cut = rng() % (ls2.size() + 1);
    ls2.insert(ls2.begin() + long(cut), rel.begin(), rel.end());
    CHECK(braids_equal(w, braid_word(4, ls2)));
  }
}

TEST_CASE("sum_reduce groups by group element") {
  braid_word a = parse_braid("1 2 1", 3);
  braid_word b = parse_braid("2 1 2", 3);
  auto s = sum_reduce({{+1, a}, {-1, b}});
  CHECK(s.empty());
  auto t = sum_reduce({{+1, a}});
  CHECK(t.size() == 1);
  CHECK_THROWS_AS(sum_reduce({{1, parse_braid("1", 2)}, {1, parse_braid("1", 3)}}),
                  std::invalid_argument);
}

TEST_CASE("tetrahedron contributions cancel") {
  CHECK(tetrahedron_sum().empty());
  for (int s = 0; s < 8; ++s)
    CHECK_FALSE(tetrahedron_sum_without(tetra_stratum(s)).empty());

  auto p1 = tetra_contribution(tetra_stratum::P1);
  auto s1 = sum_reduce(p1);
  CHECK(s1.size() == 2);

  // x + (-x) = 0 for the P4bar block
  auto p4b = tetra_contribution(tetra_stratum::P4b);
  std::vector<std::pair<std::int64_t, braid_word>> both;
  for (auto& [c, w] : p4b) both.emplace_back(-c, w);
  for (auto& [c, w] : p4b) both.emplace_back(c, w);
  CHECK(sum_reduce(both).empty());

  // P2 cancels against P2bar alone
  std::vector<std::pair<std::int64_t, braid_word>> p2pair;
  for (auto& t : tetra_contribution(tetra_stratum::P2)) p2pair.push_back(t);
  for (auto& t : tetra_contribution(tetra_stratum::P2b)) p2pair.push_back(t);
  CHECK(sum_reduce(p2pair).empty());
}

TEST_CASE("cube equator edges cancel") {
  for (auto e : {cube_edge::e17, cube_edge::e74, cube_edge::e48, cube_edge::e83,
                 cube_edge::e35, cube_edge::e15})
    CHECK(cube_edge_sum(e).empty());
  CHECK_THROWS_AS(parse_cube_edge("7-2"), std::domain_error);
  CHECK_THROWS_AS(parse_cube_edge("9-9"), std::invalid_argument);
  CHECK(parse_cube_edge("1-7") == cube_edge::e17);
}

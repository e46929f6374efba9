#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ks/invariants.hpp"
#include "ks/simplify.hpp"

using namespace ks;

static diagram long_knot(const std::string& w) {
  return from_braid(parse_braid(w), closure_mode::long_open_top);
}
static diagram closed(const std::string& w) {
  return from_braid(parse_braid(w), closure_mode::closed);
}
static laurent zpoly(std::initializer_list<std::pair<int, std::int64_t>> cs) {
  laurent p;
  for (auto [e, c] : cs) p += laurent::monomial(c, e);
  return p;
}

TEST_CASE("conway of small standards") {
  CHECK(conway(long_knot("")) == laurent(1));
  CHECK(conway(closed("1 1")) == zpoly({{1, 1}}));                   // Hopf+
  CHECK(conway(closed("-1 -1")) == zpoly({{1, -1}}));                // Hopf-
  CHECK(conway(closed("1 1 1")) == zpoly({{0, 1}, {2, 1}}));         // trefoil
  CHECK(conway(long_knot("1 1 1")) == zpoly({{0, 1}, {2, 1}}));
  CHECK(conway(closed("-1 -1 -1")) == zpoly({{0, 1}, {2, 1}}));
  CHECK(conway(long_knot("-1 2 -1 2")) == zpoly({{0, 1}, {2, -1}})); // 4_1
  CHECK(conway(closed("1 -1")).is_zero());                           // unlink
  CHECK(conway(closed("1 1 1 1")) == zpoly({{1, 2}, {3, 1}}));       // (2,4) torus
}

TEST_CASE("seifert data of the trefoil") {
  seifert_data s = seifert_matrix(closed("1 1 1"));
  CHECK(s.circles == 2);
  CHECK(s.rank == 2);
  // V - V^T must be unimodular for a knot
  std::int64_t a = s.v[0][0], b = s.v[0][1], c = s.v[1][0], dd = s.v[1][1];
  (void)a; (void)dd;
  CHECK(std::abs(b - c) == 1);
  CHECK(conway_det(s) == zpoly({{0, 1}, {2, 1}}));

  seifert_data u = seifert_matrix(long_knot(""));
  CHECK(u.rank == 0);
}

TEST_CASE("alexander of standards, up to units") {
  laurent tref = alexander(closed("1 1 1"));
  laurent expect = zpoly({{0, 1}, {1, -1}, {2, 1}});  // 1 - t + t^2
  CHECK(tref.equals_up_to_units(expect));

  laurent f8 = alexander(long_knot("-1 2 -1 2"));
  CHECK(f8.equals_up_to_units(zpoly({{0, 1}, {1, -3}, {2, 1}})));

  // agreement with conway under z = sqrt(t) - 1/sqrt(t): check via the
  // stated identity on the conway side instead (exponents double)
  laurent c = conway(closed("1 1 1"));
  laurent viaz;
  for (int e = c.lo(); e <= c.hi(); ++e) {
    if (c.at(e) == 0) continue;
    laurent zk(1);
    laurent zz = laurent::monomial(1, 1) + laurent::monomial(-1, -1);  // s-1/s
    for (int i = 0; i < e; ++i) zk = zk * zz;
    viaz += zk * laurent(c.at(e));
  }
  // viaz is Delta(s^2) up to units; compare against alexander with doubled exps
  laurent alex = alexander(closed("1 1 1"));
  laurent doubled;
  for (int e = alex.lo(); e <= alex.hi(); ++e)
    doubled += laurent::monomial(alex.at(e), 2 * e);
  CHECK(viaz.equals_up_to_units(doubled));
}

TEST_CASE("skein oracle matches conway on small standards") {
  for (const char* w : {"", "1 1", "1 1 1", "-1 2 -1 2", "1 -1", "1 1 1 1 1"}) {
    diagram d = long_knot(w);
    CHECK(conway(d) == conway_skein_oracle(d));
  }
  CHECK(conway_skein_oracle(closed("1 1")) == zpoly({{1, 1}}));
  CHECK_THROWS_AS(conway_skein_oracle(closed("1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1"), 4),
                  resource_error);
}

namespace {

// Random connected-ish diagrams: braid closures with extra perturbations so
// that leftward strands and nested circles show up.
diagram random_diagram(std::mt19937_64& rng, int max_letters) {
  int n = 2 + int(rng() % 3);
  int len = 1 + int(rng() % max_letters);
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) {
    int g = 1 + int(rng() % (n - 1));
    ls.push_back(rng() % 2 ? g : -g);
  }
  diagram d = from_braid(braid_word(n, ls),
                         rng() % 2 ? closure_mode::closed : closure_mode::long_open_top);
  d = perturb(d, int(rng() % 3), rng());
  return d;
}

}  // namespace

TEST_CASE("skein relation holds at every crossing of random diagrams") {
  std::mt19937_64 rng(20240817);
  laurent z = laurent::monomial(1, 1);
  int diagrams = 0;
  while (diagrams < 60) {
    diagram d = random_diagram(rng, 7);
    if (d.crossing_count() > 9) continue;
    ++diagrams;
    laurent base = conway(d);
    CHECK(base == conway_skein_oracle(d, 40));
    trace_info tr = trace(d);
    for (const auto& c : tr.crossings) {
      diagram sw = switch_crossing(d, c.tok);
      diagram sm = smooth_crossing(d, c.tok);
      laurent plus = c.sign > 0 ? base : conway(sw);
      laurent minus = c.sign > 0 ? conway(sw) : base;
      CHECK(plus - minus == z * conway(sm));
    }
  }
}

TEST_CASE("conway is invariant under simplify and perturbations") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    diagram d = random_diagram(rng, 6);
    laurent c0 = conway(d);
    CHECK(conway(simplify(d)) == c0);
    CHECK(conway(perturb(d, 2, rng())) == c0);
    CHECK(conway(make_scannable(standard_closure(
              d.left == 1 ? d : long_knot("1 1 1")))) ==
          conway(standard_closure(d.left == 1 ? d : long_knot("1 1 1"))));
  }
}

TEST_CASE("linking numbers") {
  diagram hopf = closed("1 1");
  CHECK(linking_number(hopf, 0, 1) == 1);
  diagram hopfneg = closed("-1 -1");
  CHECK(linking_number(hopfneg, 0, 1) == -1);
  CHECK_THROWS_AS(linking_number(hopf, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(linking_number(hopf, 0, 5), std::invalid_argument);

  // lowest conway coefficient of a 2-component link equals lk
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    diagram d = random_diagram(rng, 6);
    trace_info tr = trace(d);
    if (tr.n_comps != 2) continue;
    laurent c = conway(d);
    int lk = linking_number(d, 0, 1);
    if (c.is_zero()) {
      CHECK(lk == 0);
    } else {
      CHECK(c.lo() >= 1);
      CHECK(c.at(1) == lk);
    }
  }
}

TEST_CASE("v2 calibration and conway coefficient identity") {
  CHECK(v2(long_knot("1 1 1")) == 1);
  CHECK(v2(long_knot("-1 -1 -1")) == 1);
  CHECK(v2(long_knot("-1 2 -1 2")) == -1);
  CHECK(v2(long_knot("")) == 0);

  std::mt19937_64 rng(4242);
  int done = 0;
  while (done < 25) {
    diagram d = random_diagram(rng, 8);
    if (d.left != 1) continue;
    trace_info tr = trace(d);
    if (tr.n_comps != 1) continue;
    ++done;
    CHECK(v2(d) == conway(d).at(2));
  }
}

TEST_CASE("alexander vector of a colored split union") {
  // green trefoil, red circle, black circle: assemble manually
  diagram g = standard_closure(long_knot("1 1 1"));
  // repaint: closure colors green
  diagram d = g;
  for (auto& t : d.tokens)
    if (t.kind == token_kind::cup && t.col == color::none) t.col = color::green;
  d.tokens.insert(d.tokens.end(), {cup(0, true, color::red), cap(0, false)});
  d.tokens.insert(d.tokens.end(), {cup(0, true, color::black), cap(0, false)});
  d.check();

  alex_vector v = alexander_vector(d);
  CHECK(v.entries.size() == 7);
  CHECK(v.entries[0].second.is_zero());                      // whole: split
  CHECK(v.entries[4].second == zpoly({{0, 1}, {2, 1}}));     // green knot
  CHECK(v.entries[5].second == laurent(1));                  // black unknot
  CHECK(v.entries[6].second == laurent(1));                  // red unknot
  CHECK(v.lk_green_black == 0);
  CHECK(v.lk_green_red == 0);
}

TEST_CASE("invariant signatures separate and merge correctly") {
  diagram a = standard_closure(long_knot("1 1 1"));
  diagram b = standard_closure(perturb(long_knot("1 1 1"), 3, 5));
  CHECK(invariant_signature(a) == invariant_signature(b));
  diagram c = standard_closure(long_knot("-1 2 -1 2"));
  CHECK(invariant_signature(a) != invariant_signature(c));
}

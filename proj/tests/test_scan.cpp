#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ks/scan.hpp"
#include "ks/simplify.hpp"

using namespace ks;

static diagram long_knot(const std::string& w) {
  return from_braid(parse_braid(w), closure_mode::long_open_top);
}

static scan_parameter fig8_param(bool under, bool cabled) {
  scan_parameter p;
  p.aux = parse_braid("-1 2 -1 2");
  p.aux_letter = unique_one_crossing_letter(p.aux);
  p.under = under;
  p.cabled = cabled;
  return p;
}

TEST_CASE("the standard parameter has a unique negative 1-crossing") {
  braid_word f8 = parse_braid("-1 2 -1 2");
  int c = unique_one_crossing_letter(f8);
  CHECK(f8.letters[size_t(c)] < 0);
  CHECK(aux_crossing_class(f8, c) == 1);

  braid_word tref = parse_braid("1 1 1");
  int cb = unique_one_crossing_letter(tref);
  CHECK(cb == 1);
  CHECK(tref.letters[1] > 0);
  CHECK(aux_crossing_class(tref, cb) == 1);
}

TEST_CASE("trefoil scan events match the worked example") {
  diagram t = long_knot("1 1 1");
  scan_parameter p = fig8_param(true, false);
  auto moves = enumerate_moves(t, p);

  int r3 = 0, r2i = 0, r2o = 0;
  for (const auto& m : moves) {
    if (m.kind == move_event::kind_t::r3) {
      ++r3;
      CHECK(m.local_type == 4);
      CHECK(m.sign == -1);
    } else if (m.identical) {
      ++r2i;
    } else {
      ++r2o;
    }
  }
  CHECK(r3 == 3);
  CHECK(r2i == 1);
  CHECK(r2o == 1);
}

TEST_CASE("negative crossings give positive type 8 moves") {
  diagram t = long_knot("-1 -1 -1");
  scan_parameter p = fig8_param(true, false);
  auto moves = enumerate_moves(t, p);
  for (const auto& m : moves) {
    if (m.kind != move_event::kind_t::r3) continue;
    CHECK(m.local_type == 8);
    CHECK(m.sign == +1);
  }
}

TEST_CASE("8_17 scan has ten contributing moves") {
  diagram t = long_knot("1 1 -2 1 -2 1 -2 -2");
  scan_parameter p = fig8_param(true, false);
  auto moves = enumerate_moves(t, p);
  int contributing = 0;
  for (const auto& m : moves) contributing += m.contributes() ? 1 : 0;
  CHECK(contributing == 10);
}

TEST_CASE("scan of the trefoil reproduces the linking-number buckets") {
  diagram t = long_knot("1 1 1");
  scan_parameter p = fig8_param(true, false);
  scan_filters f;
  cocycle_value v = evaluate(t, p, f);
  CHECK(v.terms.size() == 8);

  // bucket the terms by lk(green, black) of the closed-up tangle
  std::map<int, std::vector<const value_term*>> buckets;
  for (const auto& t2 : v.terms) {
    diagram cl = standard_closure(t2.dia);
    trace_info tr = trace(cl);
    REQUIRE(tr.n_comps == 2);
    int green = tr.comps[0].col == color::green ? 0 : 1;
    buckets[linking_number(cl, green, 1 - green)].push_back(&t2);
  }
  CHECK(buckets.count(1));
  CHECK(buckets.count(2));
  CHECK(buckets.count(3));

  // lk 2 and lk 3 cancel pairwise by signature; lk 1 survives with a green
  // trefoil term and a black trefoil term
  cocycle_value c = cancel_by_vector(v);
  std::multiset<int> lks;
  for (const auto& t2 : c.terms) {
    diagram cl = standard_closure(t2.dia);
    trace_info tr = trace(cl);
    int green = tr.comps[0].col == color::green ? 0 : 1;
    lks.insert(linking_number(cl, green, 1 - green));
  }
  CHECK(lks == std::multiset<int>{1, 1});

  laurent tref_poly;
  tref_poly += laurent::monomial(1, 0);
  tref_poly += laurent::monomial(1, 2);
  int green_trefoil = 0, black_trefoil = 0;
  for (const auto& t2 : c.terms) {
    diagram cl = standard_closure(t2.dia);
    trace_info tr = trace(cl);
    for (int comp = 0; comp < tr.n_comps; ++comp) {
      laurent poly = conway(keep_components(cl, {comp}));
      if (poly == tref_poly) {
        if (tr.comps[size_t(comp)].col == color::green) ++green_trefoil;
        if (tr.comps[size_t(comp)].col == color::black) ++black_trefoil;
      }
    }
  }
  CHECK(green_trefoil == 1);
  CHECK(black_trefoil == 1);
}

TEST_CASE("the linking-number-3 terms close to L8a10") {
  diagram t = long_knot("1 1 1");
  scan_parameter p = fig8_param(true, false);
  cocycle_value v = evaluate(t, p, {});
  laurent expect = laurent::monomial(3, 1) + laurent::monomial(-1, 5);
  int found = 0;
  for (const auto& t2 : v.terms) {
    diagram cl = standard_closure(t2.dia);
    if (conway(cl) == expect) ++found;
  }
  CHECK(found == 2);
}

TEST_CASE("trace_distinguished holds for the example scans") {
  scan_parameter p = fig8_param(true, false);
  CHECK(trace_distinguished(long_knot("1 1 1"), p));
  CHECK(trace_distinguished(long_knot("1 1 -2 1 -2 1 -2 -2"), p));
  CHECK(trace_distinguished(long_knot(""), p));
}

TEST_CASE("filters split the value by the class of c") {
  diagram t = long_knot("1 1 1");
  scan_parameter p = fig8_param(true, false);
  scan_filters any, cls0, cls1;
  cls0.d_class = 0;
  cls1.d_class = 1;
  auto va = evaluate(t, p, any);
  auto v0 = evaluate(t, p, cls0);
  auto v1 = evaluate(t, p, cls1);
  CHECK(v0.terms.size() + v1.terms.size() == va.terms.size());
  CHECK(v0.terms.empty());  // c is a 1-crossing
}

TEST_CASE("empty tangle gives an empty value") {
  diagram t = long_knot("");
  scan_parameter p = fig8_param(true, false);
  auto v = evaluate(t, p, {});
  CHECK(v.terms.empty());
}

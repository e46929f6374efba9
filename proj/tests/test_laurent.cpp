#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ks/laurent.hpp"

using ks::laurent;

TEST_CASE("basic arithmetic and trimming") {
  laurent a = laurent::monomial(2, 3) + laurent::monomial(-1, -1);
  CHECK(a.at(3) == 2);
  CHECK(a.at(-1) == -1);
  CHECK(a.at(0) == 0);
  laurent b = a - a;
  CHECK(b.is_zero());
  laurent c = a * laurent::monomial(1, 2);
  CHECK(c.lo() == 1);
  CHECK(c.hi() == 5);
}

TEST_CASE("multiplication distributes") {
  laurent x = laurent::monomial(1, 1);
  laurent p = x + laurent(1);
  laurent q = x - laurent(1);
  CHECK(p * q == x * x - laurent(1));
}

TEST_CASE("exact division") {
  laurent x = laurent::monomial(1, 1);
  laurent p = (x + laurent(2)) * (x * x - laurent(3));
  CHECK(p.divided_by(x + laurent(2)) == x * x - laurent(3));
  CHECK_THROWS(p.divided_by(x + laurent(1)));
}

TEST_CASE("unit normalization") {
  laurent p = laurent::monomial(-1, 2) + laurent::monomial(3, 5);
  laurent q = p.unit_normalized();
  CHECK(q.lo() == 0);
  CHECK(q.lead() > 0);
  CHECK(p.equals_up_to_units(q));
  CHECK(p.equals_up_to_units(p.invert_variable()));
}

TEST_CASE("rewrite in z and back") {
  laurent x = laurent::monomial(1, 1);
  laurent xinv = laurent::monomial(1, -1);
  laurent z = x - xinv;
  laurent p = z * z * z + z * laurent(3) + laurent(1) + z * z * laurent(-2);
  laurent pz = ks::rewrite_in_z(p);
  CHECK(pz.at(3) == 1);
  CHECK(pz.at(2) == -2);
  CHECK(pz.at(1) == 3);
  CHECK(pz.at(0) == 1);
  CHECK(ks::substitute_z(pz) == p);
  CHECK_THROWS(ks::rewrite_in_z(x));
}

TEST_CASE("string form") {
  laurent p = laurent::monomial(3, 1) + laurent::monomial(-1, 5);
  CHECK(p.str() == "3z - z^5");
}

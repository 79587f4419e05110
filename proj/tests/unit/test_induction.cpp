#include "doctest.h"

#include "gpq/error.hpp"
#include "gpq/induction.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gpq;
using namespace gpq::testing;

TEST_CASE("split data validation") {
  auto d = klein_over_z2();
  CHECK_NOTHROW(validate(d));
  auto bad = d;
  bad.lifts[1] = Word{};
  CHECK_THROWS_AS(validate(bad), NotSplit);
  bad = d;
  bad.projection.pop_back();
  CHECK_THROWS_AS(validate(bad), NotSplit);
}

TEST_CASE("basic relations") {
  auto        d = klein_over_z2();
  auto const& A = d.group.alphabet;
  CHECK(trivial_y(d, 1));
  CHECK_FALSE(trivial_y(d, 0));
  YWord t = basic_relation(w(A, "x s x s"), d);
  REQUIRE(t.size() == 2);
  CHECK(t[0].conjugator == d.quotient.identity());
  CHECK(t[1].conjugator == d.quotient.generator(0));
  CHECK(to_string(d, t) == "x x^[s]");
  CHECK_THROWS_AS(basic_relation(w(A, "x s"), d), DoesNotCloseUp);
  auto c = conjugate_relation(t, d.quotient.generator(0), d.quotient);
  CHECK(c[0].conjugator == d.quotient.generator(0));
  CHECK(c[1].conjugator == d.quotient.identity());
}

TEST_CASE("inducing the Klein four-group over Z/2") {
  auto d   = klein_over_z2();
  auto ind = induce_presentation(d);
  CHECK(ind.full_letters.size() == d.quotient.order() * d.group.alphabet.size());
  CHECK(group_order(ind.presentation) == 2);
  CHECK(!ind.log.empty());
}

TEST_CASE("inducing refuses inverse letters") {
  auto d = klein_over_z2();
  Alphabet A({"x", "s"});
  d.group = Presentation{"k", A, {w(A, "x x"), w(A, "s s"), w(A, "x s x' s")}};
  CHECK_THROWS_AS(induce_presentation(d), NonPositiveRelator);
}

TEST_CASE("Hall composition") {
  Alphabet     K({"k"}), M({"m"});
  Presentation kernel{"k", K, {w(K, "k k")}};
  Presentation quotient{"q", M, {w(M, "m m")}};
  auto         z2z2 = hall_compose(kernel, quotient, {Word{}}, {{w(K, "k")}});
  CHECK(group_order(z2z2) == 4);
  auto z4 = hall_compose(kernel, quotient, {w(K, "k")}, {{w(K, "k")}});
  CHECK(group_order(z4) == 4);
  // m k m^-1 = k^-1 with m^2 = 1: still order 4, but a relator is different
  CHECK(z4.relators != z2z2.relators);
  CHECK_THROWS_AS(hall_compose(kernel, quotient, {}, {{w(K, "k")}}), ArityMismatch);
  CHECK_THROWS_AS(hall_compose(kernel, quotient, {Word{}}, {}), ArityMismatch);
  CHECK_THROWS_AS(hall_compose(kernel, quotient, {Word{}}, {{}}), ArityMismatch);
}

TEST_CASE("direct products") {
  Alphabet     a({"a"});
  Presentation z2{"z2", a, {w(a, "a a")}};
  Presentation z3{"z3", a, {w(a, "a a a")}};
  auto         p = product_presentation(z2, z3);
  CHECK(p.alphabet.names() == std::vector<std::string>{"a_1", "a_2"});
  CHECK(group_order(p) == 6);
}

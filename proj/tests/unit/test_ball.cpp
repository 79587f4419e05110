#include "doctest.h"

#include <set>

#include "gpq/cayley_ball.hpp"
#include "gpq/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gpq;
using namespace gpq::testing;

TEST_CASE("Z^2 ball of radius 2") {
  auto o = free_abelian_oracle(2);
  auto b = build_ball(*o, zk(2), 2);
  CHECK(b.vertices.size() == 13);
  CHECK(b.edges.size() == 16);
  CHECK(b.cells.size() == 4);
  CHECK(std::is_sorted(b.vertices.begin(), b.vertices.end(), ShortlexLess{}));
  CHECK(b.index_of(Word{}) == b.root());
  CHECK(b.contains_loop(w(b.presentation.alphabet, "a b a' b'")));
  CHECK_FALSE(b.contains_loop(w(b.presentation.alphabet, "a a a a' a' a'")));
  auto s = build_sphere(*o, zk(2), 2);
  CHECK(s.vertices.size() == 8);
  CHECK(s.edges.empty());
}

TEST_CASE("oracle mismatches are refused") {
  auto o = free_oracle(2);
  CHECK_THROWS_AS(build_ball(*o, zk(2), 1), OracleMismatch);
  auto o3 = free_oracle(3);
  CHECK_THROWS_AS(build_ball(*o3, f2(), 1), OracleMismatch);
}

TEST_CASE("pi1 generators are closed loops in the ball") {
  auto o  = free_abelian_oracle(2);
  auto b  = build_ball(*o, zk(2), 2);
  auto ls = pi1_generators(b);
  CHECK(ls.generators.size() == b.edges.size() - b.vertices.size() + 1);
  for (auto const& g : ls.generators) {
    CHECK(b.contains_loop(g));
    CHECK(o->is_identity(g));
  }
  auto s = build_sphere(*o, zk(2), 2);
  CHECK_THROWS_AS(pi1_generators(s), Disconnected);
}

TEST_CASE("null-homotopy search") {
  auto o      = free_abelian_oracle(2);
  auto p      = zk(2);
  auto region = build_ball(*o, p, 2);
  Word loop   = w(p.alphabet, "a b a' b'");
  auto res    = null_homotopy_search(region, p.relators, loop);
  REQUIRE(res.found());
  CHECK(res.witness->replays(region, p.relators));
  Word big = w(p.alphabet, "a a b a' a' b'");
  auto small = build_ball(*o, p, 1);
  CHECK_THROWS_AS(null_homotopy_search(small, p.relators, big), PreconditionFailed);
  auto none = null_homotopy_search(region, {}, loop);
  CHECK_FALSE(none.found());
  CHECK_FALSE(none.cap_hit);
}

TEST_CASE("kill radius, bounded balls and isodiametric estimates") {
  auto o = free_abelian_oracle(2);
  auto k = pi1_kill_radius(*o, zk(2), 1, 3);
  REQUIRE(k.radius.has_value());
  CHECK(*k.radius == 1);
  CHECK(k.witnesses.size() == k.generators);
  auto c = check_pi1_bounded_balls(*o, zk(2), 1, 5);
  CHECK(c.certified);
  auto iso = isodiametric_estimate(*o, zk(2), w(zk(2).alphabet, "a a b a' a' b'"), 4);
  REQUIRE(iso.diameter.has_value());
  CHECK(*iso.diameter == 3);  // the loop itself reaches a a b
  CHECK_THROWS_AS(isodiametric_estimate(*o, zk(2), w(zk(2).alphabet, "a"), 2), NotNullHomotopic);
  // the free group has no relators: nothing to kill
  auto f = free_oracle(2);
  CHECK(pi1_kill_radius(*f, f2(), 2, 3).generators == 0);
}

TEST_CASE("geodesic combings") {
  auto o = free_abelian_oracle(2);
  auto c = geodesic_0_combing(*o, zk(2), 3);
  CHECK(c.vertices.size() == lattice_ball(2, 3));
  CHECK(c.tame);
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    CHECK(o->normal_form(c.paths[i]) == c.vertices[i]);
  }
  CHECK(geodesic_0_combing(*o, zk(2), 0).vertices.empty());
}

TEST_CASE("the D8 cycle closes at radius 4") {
  FiniteGroupOracle o(dihedral_group(8, "a", "d"));
  auto              b  = build_ball(o, d8_presentation(), 4);
  auto              ls = pi1_generators(b);
  REQUIRE(ls.generators.size() == 1);
  CHECK(ls.generators[0].size() == 8);
  CHECK(b.cells.size() == 8);
}

TEST_CASE("identity resolution of a simply connected ball") {
  FiniteGroupOracle o(dihedral_group(8, "a", "d"));
  auto              b = build_ball(o, d8_presentation(), 4);
  auto              r = identity_resolution(b);
  CHECK(r.bijective_over_c());
  CHECK(r.vertex_map.size() == b.vertices.size());
}

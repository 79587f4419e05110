#include "doctest.h"

#include "gpq/error.hpp"
#include "fixtures.hpp"

using namespace gpq;
using namespace gpq::testing;

TEST_CASE("reduction traces replay") {
  auto       rs = d8_rewriting();
  auto const& A = rs.alphabet();
  auto       r  = reduce(rs, w(A, "a d a d a"));
  CHECK(r.word == w(A, "d a d"));
  CHECK(r.trace.replays(rs, w(A, "a d a d a")));
  CHECK(is_irreducible(rs, r.word));
  auto o = reduce(rs, w(A, "a d a d a"), Strategy::leftmost_outermost);
  CHECK(o.word == r.word);
  CHECK(o.trace.replays(rs, w(A, "a d a d a")));
}

TEST_CASE("non-terminating systems hit the step limit") {
  Alphabet        A({"a"});
  RewritingSystem rs(A, {{w(A, "a"), w(A, "a a")}});
  CHECK_THROWS_AS(reduce(rs, w(A, "a"), Strategy::leftmost_innermost, 50), LimitExceeded);
  CHECK_THROWS_AS(reduce(rs, w(A, "a")), LimitExceeded);
  CHECK_FALSE(is_geodesic(rs));
}

TEST_CASE("critical pairs and confluence") {
  auto rs = d8_rewriting();
  CHECK(is_geodesic(rs));
  CHECK_FALSE(critical_pairs(rs).empty());
  auto c = certify_local_confluence(rs);
  CHECK(c.certified());
  CHECK(c.termination.all_terminated);

  Alphabet        A({"a", "b", "c"});
  RewritingSystem bad(A, {{w(A, "a b"), w(A, "c")}, {w(A, "b c"), w(A, "a")}});
  auto            v = certify_local_confluence(bad);
  REQUIRE(std::holds_alternative<ConfluenceCounterexample>(v.verdict));
  auto const& ce = std::get<ConfluenceCounterexample>(v.verdict);
  CHECK(ce.peak == w(A, "a b c"));
}

TEST_CASE("free reduction system") {
  Alphabet A({"a", "x"}, {false, true});
  auto     rs = RewritingSystem::free_reduction(A);
  CHECK(rs.rules().size() == 3);
  CHECK(reduce(rs, w(A, "a x x a'")).word.empty());
  CHECK(certify_local_confluence(rs).certified());
}

TEST_CASE("word enumeration") {
  Alphabet A({"a", "x"}, {false, true});
  CHECK(alphabet_letters(A).size() == 3);
  CHECK(all_words(A, 2).size() == 9);
  auto ws = all_words(A, 2);
  CHECK(std::is_sorted(ws.begin(), ws.end(), ShortlexLess{}));
}

TEST_CASE("ball witnesses stay inside 2r+1") {
  auto rep = ball_null_homotopy_witness(d8_rewriting(), d8_rule_presentation(), 1);
  CHECK(rep.ok());
  CHECK(rep.radius == 1);
  for (auto const& h : rep.witnesses) {
    CHECK(h.word.size() <= 3);
    CHECK(h.trace.replays(d8_rewriting(), h.word));
  }
  Alphabet        A({"a"});
  RewritingSystem grow(A, {{w(A, "a"), w(A, "a a")}});
  CHECK_THROWS(ball_null_homotopy_witness(grow, Presentation{"g", A, {w(A, "a'")}}, 1));
}

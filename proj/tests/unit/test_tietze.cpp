#include "doctest.h"

#include "gpq/error.hpp"
#include "gpq/parser.hpp"
#include "gpq/tietze.hpp"
#include "fixtures.hpp"

using namespace gpq;
using namespace gpq::testing;

TEST_CASE("derivations evaluate to products of conjugates") {
  Alphabet          A({"a", "b"});
  std::vector<Word> R{w(A, "a b a' b'")};
  Derivation        d{{w(A, "b"), 0, 1}, {Word{}, 0, -1}};
  CHECK(evaluate(A, R, d) == w(A, "b a b a' b' b' b a b' a'"));
  CHECK(derives(A, R, d, free_reduce(A, evaluate(A, R, d))));
  CHECK_FALSE(derives(A, R, d, Word{}));
  CHECK_THROWS_AS(evaluate(A, R, Derivation{{Word{}, 0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(evaluate(A, R, Derivation{{Word{}, 1, 1}}), InvalidArgument);
}

TEST_CASE("T1 then T2 restores the presentation") {
  Presentation p = zk(2);
  auto         q = apply_move(p, tietze::AddGenerator{"c", w(p.alphabet, "a b"), false, {}, {}});
  CHECK(q.alphabet.size() == 3);
  CHECK(q.relators.size() == 2);
  auto back = apply_move(q, tietze::RemoveGenerator{"c"});
  CHECK(print(back) == print(p));
  CHECK(std::holds_alternative<tietze::RemoveGenerator>(inverse_move(p, tietze::AddGenerator{"c", w(p.alphabet, "a b"), false, {}, {}})));
}

TEST_CASE("T3 and T4 need certificates") {
  Presentation p = zk(2);
  Alphabet const& A = p.alphabet;
  Word conj = free_reduce(A, w(A, "b a b a' b' b'"));
  auto q = apply_move(p, tietze::AddRelator{conj, {{w(A, "b"), 0, 1}}, {}});
  CHECK(q.relators.size() == 2);
  CHECK_THROWS_AS(apply_move(p, tietze::AddRelator{w(A, "a"), {{Word{}, 0, 1}}, {}}), DerivationDoesNotReduce);
  CHECK_THROWS_AS(apply_move(q, tietze::RemoveRelator{1, {{w(A, "b"), 1, 1}}}), InvalidMove);
  CHECK_THROWS_AS(apply_move(q, tietze::RemoveRelator{1, {{Word{}, 0, 1}}}), DerivationDoesNotReduce);
  CHECK(apply_move(q, tietze::RemoveRelator{1, {{w(A, "b"), 0, 1}}}) == p);
}

TEST_CASE("T2 rejects generators that are not eliminable") {
  Presentation p = zk(2);
  CHECK_THROWS_AS(apply_move(p, tietze::RemoveGenerator{"z"}), InvalidMove);
  CHECK_THROWS_AS(apply_move(p, tietze::RemoveGenerator{"a"}), InvalidMove);
  Presentation three = zk(3);
  CHECK_THROWS_AS(apply_move(three, tietze::RemoveGenerator{"a"}), InvalidMove);
}

TEST_CASE("finite equivalence traces replay and invert") {
  Presentation           p = zk(2);
  FiniteEquivalenceTrace t(p);
  t.push(tietze::AddGenerator{"c", w(p.alphabet, "a a"), false, {}, {}});
  t.push(tietze::AddRelator{Word{}, {}, {}});
  CHECK(t.moves().size() == 2);
  CHECK(t.replay() == t.current());
  auto inv = t.inverted();
  CHECK(inv.start() == t.current());
  CHECK(inv.current() == p);
  CHECK(!describe(t.moves()[0]).empty());
}

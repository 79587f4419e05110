#include "doctest.h"

#include <random>

#include "gpq/endomorphic.hpp"
#include "gpq/error.hpp"
#include "gpq/grigorchuk.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gpq;
using namespace gpq::testing;

TEST_CASE("relator expansion") {
  auto ep = grigorchuk::endomorphic_presentation();
  auto e0 = expand_relators(ep, 0);
  CHECK(e0.size() == ep.q.size() + ep.r.size());
  auto e2 = expand_relators(ep, 2);
  for (auto const& r : e2) {
    if (r.seed) {
      Word expected = ep.r[*r.seed];
      for (std::size_t i = 0; i < r.composition.size(); ++i) {
        expected = substitute(ep.phi[0].images, expected);
      }
      CHECK(r.word == expected);
    }
  }
  CHECK(e2.size() == ep.q.size() + 3 * ep.r.size());
}

TEST_CASE("HNN presentation and stable projection") {
  auto ep = grigorchuk::endomorphic_presentation();
  auto h  = hnn_presentation(ep);
  CHECK(h.alphabet.size() == 4);
  CHECK(h.relators.size() == 8);
  CHECK(quotient_alphabet(ep).size() == 1);
  Alphabet const S = stable_alphabet(ep);
  CHECK(stable_projection(ep, w(S, "t a t' c")).empty());
  CHECK(stable_projection(ep, w(S, "t a t c")) == w(quotient_alphabet(ep), "t t"));
}

TEST_CASE("orders on the stable quotient") {
  Alphabet Q({"t"});
  CHECK(is_positive_element(Q, w(Q, "t")));
  CHECK_FALSE(is_positive_element(Q, Word{}));
  CHECK_FALSE(is_positive_element(Q, w(Q, "t'")));
  CHECK(order_less(Q, w(Q, "t"), w(Q, "t t")));
  CHECK_FALSE(order_less(Q, w(Q, "t t"), w(Q, "t")));
}

TEST_CASE("substitution decoding") {
  auto s = grigorchuk::sigma(grigorchuk::Variant::acd);
  auto const& A = s.alphabet;
  auto d = sigma_decode(s, w(A, "a c a c d c"));
  CHECK(d.preimage == w(A, "a c d"));
  CHECK_FALSE(d.ambiguous);
  CHECK_THROWS_AS(sigma_decode(s, w(A, "d")), NotInImage);
  CHECK_FALSE(try_sigma_decode(s, w(A, "a c")).has_value());
  Alphabet          B({"x", "y"});
  Substitution      amb("u", B, {w(B, "x"), w(B, "x x")});
  auto              dd = sigma_decode(amb, w(B, "x x"));
  CHECK(dd.ambiguous);
  CHECK(dd.preimage == w(B, "y"));
}

TEST_CASE("pinch reduction") {
  auto     ep = grigorchuk::endomorphic_presentation();
  Alphabet S  = stable_alphabet(ep);
  Word     u  = w(S, "t a t'");
  auto     r  = britton_pinch_reduce(ep, u);
  CHECK(r.word == w(S, "a c a"));
  CHECK(r.replays(ep, u));
  auto back = britton_pinch_reduce(ep, w(S, "t' a c a t"));
  CHECK(back.word == w(S, "a"));
  auto stuck = britton_pinch_reduce(ep, w(S, "t' d t"));
  CHECK(stuck.stuck);
}

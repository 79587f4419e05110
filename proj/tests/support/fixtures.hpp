// Presentations and oracles shared by the unit and acceptance tests.

#ifndef GPQ_TESTS_FIXTURES_HPP_
#define GPQ_TESTS_FIXTURES_HPP_

#include <memory>
#include <string>
#include <vector>

#include "gpq/group_backends.hpp"
#include "gpq/induction.hpp"
#include "gpq/rewriting.hpp"
#include "gpq/words.hpp"

namespace gpq::testing {

  inline Word w(Alphabet const& A, std::string const& text) {
    return parse_word(A, text);
  }

  inline Presentation zk(std::size_t k) {
    Presentation p{"z" + std::to_string(k), standard_alphabet(k), {}};
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = i + 1; j < k; ++j) {
        p.relators.push_back(Word{{i, 1}, {j, 1}, {i, -1}, {j, -1}});
      }
    }
    return p;
  }

  inline Presentation f2() {
    return Presentation{"f2", standard_alphabet(2), {}};
  }

  inline Presentation bs12() {
    Alphabet A({"a", "b"});
    return Presentation{"bs12", A, {w(A, "a b a' b' b'")}};
  }

  inline Alphabet d8_alphabet() {
    return Alphabet::involutions({"a", "d"});
  }

  inline Presentation d8_presentation() {
    Alphabet A = d8_alphabet();
    return Presentation{"d8", A, {w(A, "(a d)^4")}};
  }

  // Geodesic complete system for D8 over involutive a, d, with one relator per rule.
  inline RewritingSystem d8_rewriting() {
    Alphabet A = d8_alphabet();
    return RewritingSystem(A, {{w(A, "a a"), Word{}}, {w(A, "d d"), Word{}}, {w(A, "d a d a"), w(A, "a d a d")}});
  }

  inline Presentation d8_rule_presentation() {
    Alphabet A = d8_alphabet();
    return Presentation{"d8", A, {w(A, "a a"), w(A, "d d"), w(A, "d a d a d' a' d' a'")}};
  }

  // Klein four-group on involutive x, s over F = Z/2 generated by the image of s.
  inline SplitExtensionData klein_over_z2() {
    Alphabet         A = Alphabet::involutions({"x", "s"});
    Presentation     G{"klein4", A, {w(A, "x x"), w(A, "s s"), w(A, "x s x s")}};
    FiniteGroupTable F = FiniteGroupTable::from_permutations(Alphabet::involutions({"s"}), {{1, 0}});
    return SplitExtensionData{G, F, {F.identity(), F.generator(0)}, {Word{}, w(A, "s")}};
  }

}  // namespace gpq::testing

#endif  // GPQ_TESTS_FIXTURES_HPP_

// Moving presentations across a finite quotient 1 -> K -> G -> F -> 1:
// inducing a presentation of K from one of G when the extension splits and
// the relators are positive, Hall's composition of presentations of K and F
// into one of G, and direct products.

#ifndef GPQ_INDUCTION_HPP_
#define GPQ_INDUCTION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "gpq/group_backends.hpp"
#include "gpq/words.hpp"

namespace gpq {

  struct SplitExtensionData {
    Presentation             group;
    FiniteGroupTable         quotient;
    //! F-element of every generator of `group`.
    std::vector<std::size_t> projection;
    //! Word over group.alphabet for every F-element (the splitting section);
    //! the lift of the identity is the empty word.
    std::vector<Word>        lifts;
  };

  //! Throws NotSplit unless every relator projects to the identity, every
  //! lift projects back to its element and the identity lifts to the empty word.
  void validate(SplitExtensionData const& d);

  //! The symbol ^f y_j: the conjugate of y_j = x_j lift(p(x_j))^-1 by lift(f).
  struct YLetter {
    std::size_t conjugator = 0;  // F-element
    std::size_t base       = 0;  // generator of the group

    auto operator<=>(YLetter const&) const = default;
  };

  using YWord = std::vector<YLetter>;

  //! y_j is trivial when the generator is its own lift.
  bool trivial_y(SplitExtensionData const& d, std::size_t generator);
  //! "b" for the identity conjugator, otherwise "b^[ad]".
  std::string y_name(SplitExtensionData const& d, YLetter y);
  std::string to_string(SplitExtensionData const& d, YWord const& w);

  //! The relation read off a positive word: one y-letter per occurrence of a
  //! generator with nontrivial y, conjugated by the F-value of the prefix
  //! before it.  Throws DoesNotCloseUp if the word does not project to e.
  YWord basic_relation(Word const& w, SplitExtensionData const& d);
  //! Every conjugator multiplied on the left by x.
  YWord conjugate_relation(YWord const& t, std::size_t x, FiniteGroupTable const& f);

  struct InducedPresentation {
    Presentation             presentation;
    //! presentation.alphabet letter i is letters[i].
    std::vector<YLetter>     letters;
    //! All |F| * |S| y-letters and the full relator list before simplification.
    std::vector<YLetter>     full_letters;
    std::vector<YWord>       full_relators;
    std::vector<std::string> log;
  };

  //! Throws NonPositiveRelator, or NotSplit via validate().
  InducedPresentation induce_presentation(SplitExtensionData const& d);

  //! <k, m | R, S_n(m) A_n(k)^-1, m_j k_i m_j^-1 B_ji(k)^-1>.  `lift_relations`
  //! holds A_n for each relator of `quotient`; `conjugations[j][i]` is B_ji.
  //! Throws ArityMismatch when the word lists do not match the presentations.
  Presentation hall_compose(Presentation const&                   kernel,
                            Presentation const&                   quotient,
                            std::vector<Word> const&              lift_relations,
                            std::vector<std::vector<Word>> const& conjugations);

  //! Disjoint union of the generators (suffixed _1 and _2), both relator
  //! lists and every commutator [g_1, h_2].
  Presentation product_presentation(Presentation const& first, Presentation const& second);

}  // namespace gpq

#endif  // GPQ_INDUCTION_HPP_

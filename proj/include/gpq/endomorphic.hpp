// Endomorphic presentations <S | Q | Phi | R>, relator-family expansion, the
// HNN extension with one stable letter per endomorphism, the free quotient on
// the stable letters, substitution decoding and Britton pinch reduction.

#ifndef GPQ_ENDOMORPHIC_HPP_
#define GPQ_ENDOMORPHIC_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gpq/words.hpp"

namespace gpq {

  //! Each substitution in `phi` names its stable letter.  Injectivity of the
  //! induced group endomorphisms is assumed, not checked.
  struct EndomorphicPresentation {
    std::string               name;
    Alphabet                  alphabet;
    std::vector<Word>         q;
    std::vector<Substitution> phi;
    std::vector<Word>         r;

    bool ascending() const noexcept {
      return q.empty();
    }
    bool operator==(EndomorphicPresentation const& other) const;
  };

  void validate(EndomorphicPresentation const& ep);

  struct ExpandedRelator {
    Word                     word;
    //! phi[c[0]] o ... o phi[c[k-1]] applied to the seed; c[k-1] acts first.
    std::vector<std::size_t> composition;
    //! Index into R, or nullopt for members of Q.
    std::optional<std::size_t> seed;
    //! Free-reduces to the empty word under the involutive convention.
    bool redundant = false;
  };

  //! Q followed by phi_{i_1} o ... o phi_{i_k}(r) for every r in R and every
  //! composition of length <= depth.  Unreduced, deduplicated by letters,
  //! ordered by (composition length, composition, relator index).
  std::vector<ExpandedRelator> expand_relators(EndomorphicPresentation const& ep, std::size_t depth);

  //! The orientation convention for the conjugacy relators.
  inline constexpr char const* hnn_orientation = "t s t^-1 = phi(s)";

  //! <S, stable letters | Q, R, t s t^-1 phi(s)^-1>.  Stable letters follow S
  //! in the alphabet; relators are Q, then R, then one per (t, s) pair.
  Presentation hnn_presentation(EndomorphicPresentation const& ep);

  //! Combined alphabet of the HNN presentation.
  Alphabet stable_alphabet(EndomorphicPresentation const& ep);
  //! Free alphabet on the stable letter names.
  Alphabet quotient_alphabet(EndomorphicPresentation const& ep);

  //! Deletes S-letters and free-reduces in the free group on the stable letters.
  Word stable_projection(EndomorphicPresentation const& ep, Word const& w);

  //! Nonempty with every exponent +1 (after free reduction).
  bool is_positive_element(Alphabet const& quotient, Word const& l);
  //! y < x iff y^-1 x is positive.
  bool order_less(Alphabet const& quotient, Word const& y, Word const& x);

  struct Decoding {
    Word        preimage;
    //! More than one preimage exists; `preimage` is the shortlex-least.
    bool        ambiguous = false;
    std::size_t parse_count = 0;  // saturates at 2
  };

  //! Preimage of w under the substitution, if w is letter-identical to an image.
  std::optional<Decoding> try_sigma_decode(Substitution const& s, Word const& w);
  //! As try_sigma_decode; throws NotInImage.
  Decoding sigma_decode(Substitution const& s, Word const& w);

  struct PinchStep {
    Word        before;
    std::size_t position = 0;  // index of the leading stable letter
    bool        decoded  = false;  // t^-1 u t -> preimage; otherwise t u t^-1 -> phi(u)
    Word        after;             // freely reduced
  };

  struct PinchReduction {
    Word                   word;
    std::vector<PinchStep> steps;
    //! Some t^-1 u t remains whose u is not letter-identical to an image.
    bool                   stuck = false;

    bool replays(EndomorphicPresentation const& ep, Word const& start) const;
  };

  //! Britton-style pinch removal for a single stable letter, over the
  //! alphabet stable_alphabet(ep).  Throws LimitExceeded after step_cap steps.
  PinchReduction britton_pinch_reduce(EndomorphicPresentation const& ep,
                                      Word const&                    w,
                                      std::size_t                    step_cap = 100'000);

}  // namespace gpq

#endif  // GPQ_ENDOMORPHIC_HPP_

// String rewriting over group words: reduction with traces, critical pairs,
// local confluence certificates and ball null-homotopy witnesses.

#ifndef GPQ_REWRITING_HPP_
#define GPQ_REWRITING_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gpq/words.hpp"

namespace gpq {

  struct RewriteRule {
    Word lhs;
    Word rhs;

    bool operator==(RewriteRule const&) const = default;
  };

  class RewritingSystem {
   public:
    RewritingSystem() = default;
    RewritingSystem(Alphabet alphabet, std::vector<RewriteRule> rules);

    Alphabet const&                 alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<RewriteRule> const& rules() const noexcept {
      return _rules;
    }

    //! The rules x x^-1 -> e, x^-1 x -> e (and x x -> e for involutions).
    static RewritingSystem free_reduction(Alphabet const& alphabet);

   private:
    Alphabet                 _alphabet;
    std::vector<RewriteRule> _rules;
  };

  enum class Strategy {
    //! Redex with the leftmost end; ties go to the shortest, then lowest rule.
    leftmost_innermost,
    //! Redex with the leftmost start; ties go to the longest, then lowest rule.
    leftmost_outermost,
  };

  std::string to_string(Strategy s);

  struct ReductionStep {
    Word        before;
    std::size_t rule     = 0;
    std::size_t position = 0;
    Word        after;
  };

  struct ReductionTrace {
    Strategy                   strategy = Strategy::leftmost_innermost;
    std::vector<ReductionStep> steps;

    //! Each step replaces the rule lhs at its position and the steps chain.
    bool replays(RewritingSystem const& rs, Word const& start) const;
  };

  struct Reduction {
    Word           word;
    ReductionTrace trace;
  };

  //! Throws LimitExceeded once step_limit rewrites have been made without
  //! reaching an irreducible word.
  Reduction reduce(RewritingSystem const& rs,
                   Word const&            w,
                   Strategy               strategy   = Strategy::leftmost_innermost,
                   std::size_t            step_limit = 100'000);

  bool is_irreducible(RewritingSystem const& rs, Word const& w);
  bool is_geodesic(RewritingSystem const& rs);

  struct CriticalPair {
    Word        peak;
    Word        left;   // first rule applied
    Word        right;  // second rule applied
    std::size_t left_rule  = 0;
    std::size_t right_rule = 0;
  };

  //! All overlap and containment ambiguities between left-hand sides.
  std::vector<CriticalPair> critical_pairs(RewritingSystem const& rs);

  struct TerminationEvidence {
    bool        geodesic = false;
    std::size_t checked_length = 0;  // all words up to this length were reduced
    std::size_t words_checked  = 0;
    bool        all_terminated = false;
  };

  struct ConfluenceCertified {};
  struct ConfluenceCounterexample {
    Word peak;
    Word left;
    Word right;
  };
  struct ConfluenceInconclusive {
    std::string reason;
  };

  struct ConfluenceCertificate {
    std::variant<ConfluenceCertified, ConfluenceCounterexample, ConfluenceInconclusive> verdict;
    std::size_t         pairs_checked = 0;
    TerminationEvidence termination;

    bool certified() const noexcept {
      return std::holds_alternative<ConfluenceCertified>(verdict);
    }
  };

  //! Joins every critical pair, then reduces every word up to
  //! `evidence_length` as termination evidence.  Certified only if both pass.
  ConfluenceCertificate certify_local_confluence(RewritingSystem const& rs,
                                                 std::size_t            step_limit      = 10'000,
                                                 std::size_t            evidence_length = 6);

  struct HomotopyWitness {
    Word           word;
    ReductionTrace trace;
  };

  struct BallWitnessReport {
    std::size_t                  radius = 0;
    std::size_t                  words_enumerated = 0;
    std::vector<HomotopyWitness> witnesses;
    //! First identity word whose reduction left the length bound 2r+1.
    std::optional<Word>          failure;

    bool ok() const noexcept {
      return !failure.has_value();
    }
  };

  //! For every word of length <= 2r+1 that reduces to the empty word, records
  //! its trace and checks every intermediate word has length <= 2r+1.
  //! Requires a geodesic system and one relator of `p` per rule; throws
  //! CombinatorialExplosion past `word_cap` enumerated words.
  BallWitnessReport ball_null_homotopy_witness(RewritingSystem const& rs,
                                               Presentation const&    p,
                                               std::size_t            radius,
                                               std::size_t            word_cap   = 5'000'000,
                                               std::size_t            step_limit = 10'000);

  //! All words of exactly `length` letters: involutive letters appear with
  //! exponent +1 only.  Shortlex order.
  std::vector<Word> all_words(Alphabet const& alphabet, std::size_t length);
  //! Letters of the alphabet in shortlex order (x, x', y, y', ...).
  std::vector<Letter> alphabet_letters(Alphabet const& alphabet);

}  // namespace gpq

#endif  // GPQ_REWRITING_HPP_

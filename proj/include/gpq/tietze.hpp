// Elementary Tietze moves with derivation certificates, and replayable
// finite sequences of them.

#ifndef GPQ_TIETZE_HPP_
#define GPQ_TIETZE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gpq/words.hpp"

namespace gpq {

  //! conjugator * relator^exponent * conjugator^-1
  struct ConjugateFactor {
    Word        conjugator;
    std::size_t relator  = 0;
    int         exponent = 1;

    bool operator==(ConjugateFactor const&) const = default;
  };

  //! A product of conjugates of relators, read left to right.
  using Derivation = std::vector<ConjugateFactor>;

  //! The unreduced product the derivation spells out.
  Word evaluate(Alphabet const& alphabet, std::span<Word const> relators, Derivation const& d);
  //! Does the derivation free-reduce to the same element as `target`?
  bool derives(Alphabet const& alphabet,
               std::span<Word const> relators,
               Derivation const&     d,
               Word const&           target);

  namespace tietze {
    //! T1: new generator y with defining relator y * definition^-1.
    struct AddGenerator {
      std::string                name;
      Word                       definition;  // over the alphabet before the move
      bool                       involutive = false;
      std::optional<std::size_t> letter_position;
      std::optional<std::size_t> relator_position;

      bool operator==(AddGenerator const&) const = default;
    };

    //! T2: remove a generator that occurs once, as the leading letter of
    //! a relator y * s^-1 with s free of y.
    struct RemoveGenerator {
      std::string name;

      bool operator==(RemoveGenerator const&) const = default;
    };

    //! T3: add a relator that the derivation proves is a consequence.
    struct AddRelator {
      Word                       relator;
      Derivation                 derivation;  // indices into the relators before the move
      std::optional<std::size_t> position;

      bool operator==(AddRelator const&) const = default;
    };

    //! T4: drop a relator, certified by a derivation from the others.
    struct RemoveRelator {
      std::size_t index = 0;
      Derivation  derivation;  // indices into the relators before the move; must avoid `index`

      bool operator==(RemoveRelator const&) const = default;
    };
  }  // namespace tietze

  using TietzeMove
      = std::variant<tietze::AddGenerator, tietze::RemoveGenerator, tietze::AddRelator, tietze::RemoveRelator>;

  Presentation apply_move(Presentation const& p, TietzeMove const& move);
  //! The move that undoes `move` when applied to apply_move(before, move).
  TietzeMove inverse_move(Presentation const& before, TietzeMove const& move);
  std::string describe(TietzeMove const& move);

  class FiniteEquivalenceTrace {
   public:
    explicit FiniteEquivalenceTrace(Presentation start);

    //! Applies the move to the current end presentation and records it.
    Presentation const& push(TietzeMove move);

    Presentation const&            start() const noexcept {
      return _start;
    }
    Presentation const&            current() const noexcept {
      return _current;
    }
    std::vector<TietzeMove> const& moves() const noexcept {
      return _moves;
    }

    //! Re-applies every move from the start.
    Presentation replay() const;
    //! The trace running from current() back to start().
    FiniteEquivalenceTrace inverted() const;

   private:
    Presentation              _start;
    Presentation              _current;
    std::vector<TietzeMove>   _moves;
    std::vector<Presentation> _history;
  };

}  // namespace gpq

#endif  // GPQ_TIETZE_HPP_

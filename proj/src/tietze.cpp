#include "gpq/tietze.hpp"

#include <algorithm>

#include "gpq/error.hpp"

namespace gpq {

  Word evaluate(Alphabet const& alphabet, std::span<Word const> relators, Derivation const& d) {
    Word out;
    for (auto const& f : d) {
      if (f.relator >= relators.size()) {
        throw InvalidArgument("derivation references relator " + std::to_string(f.relator)
                              + " of " + std::to_string(relators.size()));
      }
      if (f.exponent != 1 && f.exponent != -1) {
        throw InvalidArgument("derivation exponents must be +1 or -1");
      }
      out += f.conjugator;
      out += f.exponent > 0 ? relators[f.relator] : inverse(alphabet, relators[f.relator]);
      out += inverse(alphabet, f.conjugator);
    }
    return out;
  }

  bool derives(Alphabet const& alphabet,
               std::span<Word const> relators,
               Derivation const&     d,
               Word const&           target) {
    return free_reduce(alphabet, evaluate(alphabet, relators, d)) == free_reduce(alphabet, target);
  }

  namespace {
    // Letter indices >= `from` move by `delta`.
    Word shift_letters(Word const& w, std::size_t from, int delta) {
      std::vector<Letter> out(w.begin(), w.end());
      for (auto& l : out) {
        if (l.generator >= from) {
          l.generator = static_cast<std::uint32_t>(static_cast<long>(l.generator) + delta);
        }
      }
      return Word(std::move(out));
    }

    Derivation shift_relators(Derivation d, std::size_t from, int delta) {
      for (auto& f : d) {
        if (f.relator >= from) {
          f.relator = static_cast<std::size_t>(static_cast<long>(f.relator) + delta);
        }
      }
      return d;
    }

    struct DefiningRelator {
      std::size_t relator_index;
      std::size_t letter_index;
      Word        definition;  // over the alphabet without the letter
    };

    DefiningRelator find_defining_relator(Presentation const& p, std::string const& name) {
      auto y = p.alphabet.index_of(name);
      if (!y) {
        throw InvalidMove("T2: no generator named '" + name + "'");
      }
      std::optional<std::size_t> where;
      for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (p.relators[i].count(static_cast<std::uint32_t>(*y)) > 0) {
          if (where) {
            throw InvalidMove("T2: generator '" + name + "' occurs in more than one relator");
          }
          where = i;
        }
      }
      if (!where) {
        throw InvalidMove("T2: generator '" + name + "' occurs in no relator");
      }
      Word const& r = p.relators[*where];
      if (r.count(static_cast<std::uint32_t>(*y)) != 1 || r[0].generator != *y || r[0].exponent != 1) {
        throw InvalidMove("T2: relator containing '" + name + "' is not of the form " + name
                          + " s^-1");
      }
      Word s = inverse(p.alphabet, r.subword(1, r.size() - 1));
      return {*where, *y, shift_letters(s, *y + 1, -1)};
    }

    void check_derivation_indices(Derivation const& d, std::size_t count, std::optional<std::size_t> forbidden) {
      for (auto const& f : d) {
        if (f.relator >= count) {
          throw InvalidMove("derivation references a missing relator");
        }
        if (forbidden && f.relator == *forbidden) {
          throw InvalidMove("T4: derivation uses the relator being removed");
        }
      }
    }

    Presentation apply(Presentation const& p, tietze::AddGenerator const& m) {
      validate(p.alphabet, m.definition);
      std::size_t pos = m.letter_position.value_or(p.alphabet.size());
      Presentation out = p;
      out.alphabet.insert(pos, m.name, m.involutive);
      for (auto& r : out.relators) {
        r = shift_letters(r, pos, 1);
      }
      Word definition = shift_letters(m.definition, pos, 1);
      Word relator{make_letter(out.alphabet, pos, 1)};
      relator += inverse(out.alphabet, definition);
      std::size_t rpos = m.relator_position.value_or(out.relators.size());
      if (rpos > out.relators.size()) {
        throw InvalidMove("T1: relator position out of range");
      }
      out.relators.insert(out.relators.begin() + rpos, std::move(relator));
      return out;
    }

    Presentation apply(Presentation const& p, tietze::RemoveGenerator const& m) {
      auto         def = find_defining_relator(p, m.name);
      Presentation out = p;
      out.relators.erase(out.relators.begin() + def.relator_index);
      out.alphabet.erase(def.letter_index);
      for (auto& r : out.relators) {
        r = shift_letters(r, def.letter_index + 1, -1);
      }
      return out;
    }

    Presentation apply(Presentation const& p, tietze::AddRelator const& m) {
      validate(p.alphabet, m.relator);
      check_derivation_indices(m.derivation, p.relators.size(), std::nullopt);
      if (!derives(p.alphabet, p.relators, m.derivation, m.relator)) {
        throw DerivationDoesNotReduce("T3: derivation does not free-reduce to the new relator");
      }
      std::size_t pos = m.position.value_or(p.relators.size());
      if (pos > p.relators.size()) {
        throw InvalidMove("T3: relator position out of range");
      }
      Presentation out = p;
      out.relators.insert(out.relators.begin() + pos, m.relator);
      return out;
    }

    Presentation apply(Presentation const& p, tietze::RemoveRelator const& m) {
      if (m.index >= p.relators.size()) {
        throw InvalidMove("T4: relator index out of range");
      }
      check_derivation_indices(m.derivation, p.relators.size(), m.index);
      if (!derives(p.alphabet, p.relators, m.derivation, p.relators[m.index])) {
        throw DerivationDoesNotReduce("T4: derivation does not free-reduce to the removed relator");
      }
      Presentation out = p;
      out.relators.erase(out.relators.begin() + m.index);
      return out;
    }
  }  // namespace

  Presentation apply_move(Presentation const& p, TietzeMove const& move) {
    return std::visit([&p](auto const& m) { return apply(p, m); }, move);
  }

  TietzeMove inverse_move(Presentation const& before, TietzeMove const& move) {
    if (auto const* m = std::get_if<tietze::AddGenerator>(&move)) {
      return tietze::RemoveGenerator{m->name};
    }
    if (auto const* m = std::get_if<tietze::RemoveGenerator>(&move)) {
      auto def = find_defining_relator(before, m->name);
      return tietze::AddGenerator{m->name,
                                  def.definition,
                                  before.alphabet.involutive(def.letter_index),
                                  def.letter_index,
                                  def.relator_index};
    }
    if (auto const* m = std::get_if<tietze::AddRelator>(&move)) {
      std::size_t pos = m->position.value_or(before.relators.size());
      return tietze::RemoveRelator{pos, shift_relators(m->derivation, pos, 1)};
    }
    auto const& m = std::get<tietze::RemoveRelator>(move);
    if (m.index >= before.relators.size()) {
      throw InvalidMove("T4: relator index out of range");
    }
    return tietze::AddRelator{
        before.relators[m.index], shift_relators(m.derivation, m.index + 1, -1), m.index};
  }

  std::string describe(TietzeMove const& move) {
    struct {
      std::string operator()(tietze::AddGenerator const& m) const {
        return "T1 add generator " + m.name;
      }
      std::string operator()(tietze::RemoveGenerator const& m) const {
        return "T2 remove generator " + m.name;
      }
      std::string operator()(tietze::AddRelator const& m) const {
        return "T3 add relator (" + std::to_string(m.derivation.size()) + " factors)";
      }
      std::string operator()(tietze::RemoveRelator const& m) const {
        return "T4 remove relator " + std::to_string(m.index);
      }
    } visitor;
    return std::visit(visitor, move);
  }

  FiniteEquivalenceTrace::FiniteEquivalenceTrace(Presentation start)
      : _start(start), _current(std::move(start)) {}

  Presentation const& FiniteEquivalenceTrace::push(TietzeMove move) {
    Presentation next = apply_move(_current, move);
    _history.push_back(_current);
    _moves.push_back(std::move(move));
    _current = std::move(next);
    return _current;
  }

  Presentation FiniteEquivalenceTrace::replay() const {
    Presentation p = _start;
    for (auto const& m : _moves) {
      p = apply_move(p, m);
    }
    return p;
  }

  FiniteEquivalenceTrace FiniteEquivalenceTrace::inverted() const {
    FiniteEquivalenceTrace back(_current);
    for (std::size_t i = _moves.size(); i-- > 0;) {
      back.push(inverse_move(_history[i], _moves[i]));
    }
    return back;
  }

}  // namespace gpq

// Word-problem oracles: finite groups given by multiplication tables, free and
// free abelian groups, Baumslag-Solitar groups B(1,n) and complete rewriting
// systems.  Everything that walks a Cayley complex talks to a WordOracle.

#ifndef GPQ_GROUP_BACKENDS_HPP_
#define GPQ_GROUP_BACKENDS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpq/rewriting.hpp"
#include "gpq/words.hpp"

namespace gpq {

  class WordOracle {
   public:
    virtual ~WordOracle() = default;

    virtual Alphabet const& alphabet() const = 0;
    //! Canonical word for the group element; idempotent.
    virtual Word normal_form(Word const& w) const = 0;
    virtual bool is_identity(Word const& w) const {
      return normal_form(w).empty();
    }
    //! Which group this oracle answers for.
    virtual std::string description() const = 0;
  };

  using Permutation = std::vector<std::uint32_t>;

  //! A finite group by multiplication table.  Element 0 is the identity and
  //! every element is named by its shortlex-least word in the generators.
  class FiniteGroupTable {
   public:
    //! Closure of the permutations under composition; images[i] acts as
    //! alphabet letter i, composed left to right.
    static FiniteGroupTable from_permutations(Alphabet alphabet, std::vector<Permutation> const& images);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::size_t order() const noexcept {
      return _words.size();
    }
    std::size_t identity() const noexcept {
      return 0;
    }
    std::size_t mul(std::size_t x, std::size_t y) const {
      return _mul[x * order() + y];
    }
    std::size_t inv(std::size_t x) const {
      return _inv.at(x);
    }
    //! Element index of each alphabet letter.
    std::size_t generator(std::size_t letter) const {
      return _generator_map.at(letter);
    }
    Word const& word(std::size_t x) const {
      return _words.at(x);
    }
    //! "e" for the identity, otherwise the compact canonical word.
    std::string const& name(std::size_t x) const {
      return _names.at(x);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<std::size_t> index_of_name(std::string const& name) const;

    std::size_t evaluate(Word const& w) const;

    //! Associativity, two-sided inverses and generation by the generator map.
    bool verify() const;

   private:
    Alphabet                 _alphabet;
    std::vector<Word>        _words;
    std::vector<std::string> _names;
    std::vector<std::size_t> _mul;
    std::vector<std::size_t> _inv;
    std::vector<std::size_t> _generator_map;
  };

  //! Dihedral group of the given order 2m on two involutive letters with
  //! (xy)^m = 1.  Throws BadOrder for odd or non-positive orders.
  FiniteGroupTable dihedral_group(std::size_t order, std::string x = "x", std::string y = "y");

  class FiniteGroupOracle : public WordOracle {
   public:
    explicit FiniteGroupOracle(FiniteGroupTable table, std::string label = "finite group");
    Alphabet const& alphabet() const override {
      return _table.alphabet();
    }
    Word        normal_form(Word const& w) const override;
    std::string description() const override;
    FiniteGroupTable const& table() const noexcept {
      return _table;
    }

   private:
    FiniteGroupTable _table;
    std::string      _label;
  };

  class FreeOracle : public WordOracle {
   public:
    explicit FreeOracle(Alphabet alphabet) : _alphabet(std::move(alphabet)) {}
    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    Word        normal_form(Word const& w) const override;
    std::string description() const override;

   private:
    Alphabet _alphabet;
  };

  //! Z^k; normal forms are a^i b^j ... in alphabet order.
  class FreeAbelianOracle : public WordOracle {
   public:
    explicit FreeAbelianOracle(Alphabet alphabet);
    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    Word        normal_form(Word const& w) const override;
    std::string description() const override;

   private:
    Alphabet _alphabet;
  };

  //! B(1,n) = <a, b | a b a^-1 = b^n>, normal forms a^-p b^q a^r with p, r >= 0
  //! and n not dividing q when p, r > 0.
  class BaumslagSolitarOracle : public WordOracle {
   public:
    BaumslagSolitarOracle(std::int64_t m, std::int64_t n, Alphabet alphabet = Alphabet({"a", "b"}));
    Alphabet const& alphabet() const override {
      return _alphabet;
    }
    Word        normal_form(Word const& w) const override;
    std::string description() const override;

    //! Element as (q, p, k) standing for the pair (q / n^p, k) of Z[1/n] x| Z,
    //! with p minimal.
    struct Element {
      std::int64_t q = 0;
      std::int64_t p = 0;
      std::int64_t k = 0;
      bool operator==(Element const&) const = default;
    };
    Element evaluate(Word const& w) const;

   private:
    std::int64_t _n;
    Alphabet     _alphabet;
  };

  class RewritingOracle : public WordOracle {
   public:
    explicit RewritingOracle(RewritingSystem rs, std::size_t step_limit = 100'000)
        : _rs(std::move(rs)), _step_limit(step_limit) {}
    Alphabet const& alphabet() const override {
      return _rs.alphabet();
    }
    Word        normal_form(Word const& w) const override;
    std::string description() const override;
    RewritingSystem const& system() const noexcept {
      return _rs;
    }

   private:
    RewritingSystem _rs;
    std::size_t     _step_limit;
  };

  //! Letters a, b, c, ... (non-involutive).
  Alphabet standard_alphabet(std::size_t k);
  std::unique_ptr<WordOracle> free_oracle(std::size_t k);
  std::unique_ptr<WordOracle> free_abelian_oracle(std::size_t k);
  std::unique_ptr<WordOracle> bs_oracle(std::int64_t m, std::int64_t n);

}  // namespace gpq

#endif  // GPQ_GROUP_BACKENDS_HPP_

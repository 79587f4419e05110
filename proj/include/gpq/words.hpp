// Words over finite alphabets of group generators, free reduction, monoid
// substitutions and the presentation data model.

#ifndef GPQ_WORDS_HPP_
#define GPQ_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpq {

  //! Ordered list of generator names.  An involutive letter satisfies g^2 = 1
  //! and its inverse is identified with itself.
  class Alphabet {
   public:
    Alphabet() = default;
    Alphabet(std::vector<std::string> names, std::vector<bool> involutive);
    explicit Alphabet(std::vector<std::string> names);

    //! All letters involutive.
    static Alphabet involutions(std::vector<std::string> names);

    std::size_t size() const noexcept {
      return _names.size();
    }
    bool empty() const noexcept {
      return _names.empty();
    }
    std::string const& name(std::size_t i) const {
      return _names.at(i);
    }
    bool involutive(std::size_t i) const {
      return _involutive.at(i);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t at(std::string_view name) const;

    //! True when every name is a single character, which permits the compact
    //! "adad" spelling of words.
    bool single_character() const;

    void insert(std::size_t pos, std::string name, bool involutive);
    void erase(std::size_t pos);

    bool operator==(Alphabet const&) const = default;

   private:
    std::vector<std::string> _names;
    std::vector<bool>        _involutive;
  };

  struct Letter {
    std::uint32_t generator = 0;
    std::int8_t   exponent  = 1;

    auto operator<=>(Letter const&) const = default;
  };

  //! Shortlex position of a letter: generators in alphabet order, x before x'.
  inline std::uint64_t letter_rank(Letter l) noexcept {
    return 2 * static_cast<std::uint64_t>(l.generator) + (l.exponent < 0);
  }

  class Word {
   public:
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }
    const_iterator begin() const noexcept {
      return _letters.begin();
    }
    const_iterator end() const noexcept {
      return _letters.end();
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::span<Letter const> view() const noexcept {
      return _letters;
    }

    void push_back(Letter l) {
      _letters.push_back(l);
    }
    void pop_back() {
      _letters.pop_back();
    }
    Letter const& back() const {
      return _letters.back();
    }
    void reserve(std::size_t n) {
      _letters.reserve(n);
    }
    Word& operator+=(Word const& other) {
      _letters.insert(_letters.end(), other.begin(), other.end());
      return *this;
    }
    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }

    Word subword(std::size_t pos, std::size_t len) const;
    //! Replace [pos, pos + len) by `replacement`.
    Word replaced(std::size_t pos, std::size_t len, Word const& replacement) const;
    //! Does `pattern` occur at `pos`?
    bool matches_at(std::size_t pos, Word const& pattern) const;
    std::size_t count(std::uint32_t generator) const;

    bool operator==(Word const&) const = default;
    auto operator<=>(Word const&) const = default;

   private:
    std::vector<Letter> _letters;
  };

  bool shortlex_less(Word const& u, Word const& v);

  struct ShortlexLess {
    bool operator()(Word const& u, Word const& v) const {
      return shortlex_less(u, v);
    }
  };

  //! Single letter, normalized to exponent +1 when involutive.
  Letter make_letter(Alphabet const& alphabet, std::size_t generator, int exponent = 1);
  //! Normalize exponents of involutive letters to +1.
  Word normalize(Alphabet const& alphabet, Word w);
  Word word_from_generators(Alphabet const& alphabet, std::initializer_list<std::size_t> gens);

  //! The reduced representative of w in the free product of Z (for ordinary
  //! letters) and Z/2 (for involutive ones).
  Word free_reduce(Alphabet const& alphabet, Word const& w);
  bool is_freely_reduced(Alphabet const& alphabet, Word const& w);
  Word inverse(Alphabet const& alphabet, Word const& w);
  Word power(Alphabet const& alphabet, Word const& w, long k);
  //! Freely reduced cyclic representative, with the conjugator stripped.
  Word cyclically_reduce(Alphabet const& alphabet, Word const& w);
  bool is_positive(Word const& w) noexcept;
  //! Net exponent of every generator.
  std::vector<long> exponent_sums(Alphabet const& alphabet, Word const& w);

  enum class WordStyle {
    spaced,   // "a b' (c d)^2"-style tokens separated by spaces
    compact,  // "adad" when every letter name is a single character
  };

  //! Plain letter sequence, no run compression.
  std::string to_string(Alphabet const& alphabet, Word const& w, WordStyle style = WordStyle::spaced);
  //! Whole-word periodicity folded into "(u)^k"; used by the file printer.
  std::string to_string_folded(Alphabet const& alphabet, Word const& w, WordStyle style = WordStyle::spaced);
  //! Parses the word grammar of the presentation file format.
  Word parse_word(Alphabet const& alphabet, std::string_view text);

  //! A homomorphism between free products given by the images of generators;
  //! inverses are mapped to inverse images.
  struct Homomorphism {
    Alphabet          source;
    Alphabet          target;
    std::vector<Word> images;

    Word operator()(Word const& w) const;
  };

  //! Monoid endomorphism of the positive words over one alphabet.
  struct Substitution {
    std::string       name;
    Alphabet          alphabet;
    std::vector<Word> images;

    Substitution() = default;
    Substitution(std::string name, Alphabet alphabet, std::vector<Word> images);

    bool operator==(Substitution const&) const = default;
  };

  //! Letterwise image, concatenated and left unreduced.
  Word apply_substitution(Substitution const& s, Word const& w);
  Word iterate_substitution(Substitution const& s, Word const& w, std::size_t n);
  //! Length of the n-th iterate, computed from letter counts alone.
  std::uint64_t iterated_length(Substitution const& s, Word const& w, std::size_t n);
  //! The substitution extended to a free-group endomorphism.
  Word apply_endomorphism(Substitution const& s, Word const& w);

  struct Presentation {
    std::string       name;
    Alphabet          alphabet;
    std::vector<Word> relators;

    bool operator==(Presentation const&) const = default;
  };

  //! Throws InvalidArgument if a word uses a generator outside the alphabet.
  void validate(Alphabet const& alphabet, Word const& w);
  void validate(Presentation const& p);

}  // namespace gpq

#endif  // GPQ_WORDS_HPP_

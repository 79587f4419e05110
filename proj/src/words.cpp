#include "gpq/words.hpp"

#include <algorithm>

#include "gpq/error.hpp"

namespace gpq {

  Alphabet::Alphabet(std::vector<std::string> names, std::vector<bool> involutive)
      : _names(std::move(names)), _involutive(std::move(involutive)) {
    if (_involutive.size() != _names.size()) {
      throw InvalidArgument("alphabet: involutive flags do not match letter count");
    }
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (_names[i].empty()) {
        throw InvalidArgument("alphabet: empty letter name");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (_names[i] == _names[j]) {
          throw InvalidArgument("alphabet: duplicate letter name '" + _names[i] + "'");
        }
      }
    }
  }

  Alphabet::Alphabet(std::vector<std::string> names)
      : Alphabet(names, std::vector<bool>(names.size(), false)) {}

  Alphabet Alphabet::involutions(std::vector<std::string> names) {
    std::vector<bool> flags(names.size(), true);
    return Alphabet(std::move(names), std::move(flags));
  }

  std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _names.begin());
  }

  std::size_t Alphabet::at(std::string_view name) const {
    auto i = index_of(name);
    if (!i) {
      throw InvalidArgument("unknown letter '" + std::string(name) + "'");
    }
    return *i;
  }

  bool Alphabet::single_character() const {
    return std::all_of(_names.begin(), _names.end(), [](auto const& n) { return n.size() == 1; });
  }

  void Alphabet::insert(std::size_t pos, std::string name, bool involutive) {
    if (pos > _names.size()) {
      throw InvalidArgument("alphabet: insertion position out of range");
    }
    if (name.empty() || index_of(name)) {
      throw InvalidArgument("alphabet: letter name '" + name + "' is empty or already used");
    }
    _names.insert(_names.begin() + pos, std::move(name));
    _involutive.insert(_involutive.begin() + pos, involutive);
  }

  void Alphabet::erase(std::size_t pos) {
    if (pos >= _names.size()) {
      throw InvalidArgument("alphabet: erase position out of range");
    }
    _names.erase(_names.begin() + pos);
    _involutive.erase(_involutive.begin() + pos);
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(_letters.begin() + pos, _letters.begin() + pos + len));
  }

  Word Word::replaced(std::size_t pos, std::size_t len, Word const& replacement) const {
    std::vector<Letter> out;
    out.reserve(_letters.size() - len + replacement.size());
    out.insert(out.end(), _letters.begin(), _letters.begin() + pos);
    out.insert(out.end(), replacement.begin(), replacement.end());
    out.insert(out.end(), _letters.begin() + pos + len, _letters.end());
    return Word(std::move(out));
  }

  bool Word::matches_at(std::size_t pos, Word const& pattern) const {
    if (pos + pattern.size() > _letters.size()) {
      return false;
    }
    return std::equal(pattern.begin(), pattern.end(), _letters.begin() + pos);
  }

  std::size_t Word::count(std::uint32_t generator) const {
    return std::count_if(_letters.begin(), _letters.end(),
                         [generator](Letter l) { return l.generator == generator; });
  }

  bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto ru = letter_rank(u[i]);
      auto rv = letter_rank(v[i]);
      if (ru != rv) {
        return ru < rv;
      }
    }
    return false;
  }

  Letter make_letter(Alphabet const& alphabet, std::size_t generator, int exponent) {
    if (generator >= alphabet.size()) {
      throw InvalidArgument("letter index " + std::to_string(generator) + " out of range");
    }
    if (exponent != 1 && exponent != -1) {
      throw InvalidArgument("letter exponent must be +1 or -1");
    }
    if (alphabet.involutive(generator)) {
      exponent = 1;
    }
    return Letter{static_cast<std::uint32_t>(generator), static_cast<std::int8_t>(exponent)};
  }

  Word normalize(Alphabet const& alphabet, Word w) {
    std::vector<Letter> out(w.begin(), w.end());
    for (auto& l : out) {
      l = make_letter(alphabet, l.generator, l.exponent);
    }
    return Word(std::move(out));
  }

  Word word_from_generators(Alphabet const& alphabet, std::initializer_list<std::size_t> gens) {
    Word w;
    for (auto g : gens) {
      w.push_back(make_letter(alphabet, g, 1));
    }
    return w;
  }

  namespace {
    bool cancels(Alphabet const& alphabet, Letter x, Letter y) {
      if (x.generator != y.generator) {
        return false;
      }
      return alphabet.involutive(x.generator) || x.exponent == -y.exponent;
    }
  }  // namespace

  Word free_reduce(Alphabet const& alphabet, Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (Letter l : w) {
      if (!stack.empty() && cancels(alphabet, stack.back(), l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  bool is_freely_reduced(Alphabet const& alphabet, Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (cancels(alphabet, w[i - 1], w[i])) {
        return false;
      }
    }
    return true;
  }

  Word inverse(Alphabet const& alphabet, Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      Letter l = *it;
      if (!alphabet.involutive(l.generator)) {
        l.exponent = static_cast<std::int8_t>(-l.exponent);
      }
      out.push_back(l);
    }
    return Word(std::move(out));
  }

  Word power(Alphabet const& alphabet, Word const& w, long k) {
    Word base = k < 0 ? inverse(alphabet, w) : w;
    Word out;
    out.reserve(base.size() * static_cast<std::size_t>(k < 0 ? -k : k));
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
      out += base;
    }
    return out;
  }

  Word cyclically_reduce(Alphabet const& alphabet, Word const& w) {
    Word r     = free_reduce(alphabet, w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && cancels(alphabet, r[lo], r[hi - 1])) {
      ++lo;
      --hi;
    }
    return r.subword(lo, hi - lo);
  }

  bool is_positive(Word const& w) noexcept {
    return std::all_of(w.begin(), w.end(), [](Letter l) { return l.exponent > 0; });
  }

  std::vector<long> exponent_sums(Alphabet const& alphabet, Word const& w) {
    std::vector<long> sums(alphabet.size(), 0);
    for (Letter l : w) {
      sums.at(l.generator) += l.exponent;
    }
    return sums;
  }

  namespace {
    std::string letter_text(Alphabet const& alphabet, Letter l) {
      std::string s = alphabet.name(l.generator);
      if (l.exponent < 0) {
        s += '\'';
      }
      return s;
    }

    std::string join_letters(Alphabet const& alphabet, std::span<Letter const> letters, WordStyle style) {
      bool        compact = style == WordStyle::compact && alphabet.single_character();
      std::string out;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0 && !compact) {
          out += ' ';
        }
        out += letter_text(alphabet, letters[i]);
      }
      return out;
    }

    std::size_t minimal_period(Word const& w) {
      std::size_t n = w.size();
      for (std::size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) {
          ok = w[i] == w[i - p];
        }
        if (ok) {
          return p;
        }
      }
      return n;
    }
  }  // namespace

  std::string to_string(Alphabet const& alphabet, Word const& w, WordStyle style) {
    return join_letters(alphabet, w.view(), style);
  }

  std::string to_string_folded(Alphabet const& alphabet, Word const& w, WordStyle style) {
    std::size_t p = minimal_period(w);
    if (w.empty() || p == w.size()) {
      return to_string(alphabet, w, style);
    }
    auto        unit = w.view().subspan(0, p);
    std::string k    = std::to_string(w.size() / p);
    if (p == 1) {
      return letter_text(alphabet, unit[0]) + "^" + k;
    }
    return "(" + join_letters(alphabet, unit, style) + ")^" + k;
  }

  Word Homomorphism::operator()(Word const& w) const {
    Word out;
    for (Letter l : w) {
      if (l.generator >= images.size()) {
        throw InvalidArgument("homomorphism: letter outside the source alphabet");
      }
      if (l.exponent > 0 || source.involutive(l.generator)) {
        out += images[l.generator];
      } else {
        out += inverse(target, images[l.generator]);
      }
    }
    return out;
  }

  Substitution::Substitution(std::string n, Alphabet a, std::vector<Word> imgs)
      : name(std::move(n)), alphabet(std::move(a)), images(std::move(imgs)) {
    if (images.size() != alphabet.size()) {
      throw InvalidArgument("substitution '" + name + "' must define an image for every letter");
    }
    for (auto& img : images) {
      if (img.empty()) {
        throw InvalidArgument("substitution '" + name + "' has an empty image");
      }
      if (!is_positive(img)) {
        throw NegativeExponent("substitution '" + name + "' has a non-positive image");
      }
      validate(alphabet, img);
    }
  }

  Word apply_substitution(Substitution const& s, Word const& w) {
    Word out;
    for (Letter l : w) {
      if (l.exponent < 0) {
        throw NegativeExponent("apply_substitution: word has an inverse letter");
      }
      out += s.images.at(l.generator);
    }
    return out;
  }

  Word iterate_substitution(Substitution const& s, Word const& w, std::size_t n) {
    if (!is_positive(w)) {
      throw NegativeExponent("iterate_substitution: word has an inverse letter");
    }
    Word out = w;
    for (std::size_t i = 0; i < n; ++i) {
      out = apply_substitution(s, out);
    }
    return out;
  }

  std::uint64_t iterated_length(Substitution const& s, Word const& w, std::size_t n) {
    std::vector<std::uint64_t> counts(s.alphabet.size(), 0);
    for (Letter l : w) {
      ++counts.at(l.generator);
    }
    for (std::size_t step = 0; step < n; ++step) {
      std::vector<std::uint64_t> next(counts.size(), 0);
      for (std::size_t g = 0; g < counts.size(); ++g) {
        for (Letter l : s.images[g]) {
          next[l.generator] += counts[g];
        }
      }
      counts = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto c : counts) {
      total += c;
    }
    return total;
  }

  Word apply_endomorphism(Substitution const& s, Word const& w) {
    Word out;
    for (Letter l : w) {
      if (l.exponent > 0) {
        out += s.images.at(l.generator);
      } else {
        out += inverse(s.alphabet, s.images.at(l.generator));
      }
    }
    return out;
  }

  void validate(Alphabet const& alphabet, Word const& w) {
    for (Letter l : w) {
      if (l.generator >= alphabet.size()) {
        throw InvalidArgument("word uses generator index " + std::to_string(l.generator)
                              + " outside an alphabet of size " + std::to_string(alphabet.size()));
      }
      if (l.exponent != 1 && l.exponent != -1) {
        throw InvalidArgument("word letter exponent must be +1 or -1");
      }
      if (alphabet.involutive(l.generator) && l.exponent != 1) {
        throw InvalidArgument("involutive letter '" + alphabet.name(l.generator)
                              + "' stored with exponent -1");
      }
    }
  }

  void validate(Presentation const& p) {
    for (auto const& r : p.relators) {
      validate(p.alphabet, r);
    }
  }

}  // namespace gpq

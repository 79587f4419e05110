#include "gpq/group_backends.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>

#include "gpq/error.hpp"

namespace gpq {

  namespace {
    Permutation compose(Permutation const& first, Permutation const& second) {
      Permutation out(first.size());
      for (std::size_t i = 0; i < first.size(); ++i) {
        out[i] = second[first[i]];
      }
      return out;
    }

    Permutation invert(Permutation const& p) {
      Permutation out(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        out[p[i]] = static_cast<std::uint32_t>(i);
      }
      return out;
    }
  }  // namespace

  FiniteGroupTable FiniteGroupTable::from_permutations(Alphabet alphabet, std::vector<Permutation> const& images) {
    if (images.size() != alphabet.size()) {
      throw InvalidArgument("finite group: need one permutation per letter");
    }
    std::size_t degree = images.empty() ? 0 : images[0].size();
    for (std::size_t g = 0; g < images.size(); ++g) {
      auto const& p = images[g];
      if (p.size() != degree) {
        throw InvalidArgument("finite group: permutations of different degrees");
      }
      auto sorted = p;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < degree; ++i) {
        if (sorted[i] != i) {
          throw InvalidArgument("finite group: image is not a permutation");
        }
      }
      if (alphabet.involutive(g)) {
        for (std::size_t i = 0; i < degree; ++i) {
          if (p[p[i]] != i) {
            throw InvalidArgument("finite group: involutive letter '" + alphabet.name(g)
                                  + "' is not an involution");
          }
        }
      }
    }
    // Letter actions in shortlex order, inverses included for ordinary letters.
    std::vector<std::pair<Letter, Permutation>> actions;
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      actions.emplace_back(make_letter(alphabet, g, 1), images[g]);
      if (!alphabet.involutive(g)) {
        actions.emplace_back(make_letter(alphabet, g, -1), invert(images[g]));
      }
    }

    Permutation identity(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      identity[i] = static_cast<std::uint32_t>(i);
    }
    std::map<Permutation, std::size_t> index;
    std::vector<Permutation>           elements{identity};
    std::vector<Word>                  words{Word{}};
    index.emplace(identity, 0);
    // Breadth-first in shortlex order: the first word reaching an element is
    // its shortlex-least spelling.
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& [letter, perm] : actions) {
        Permutation next = compose(elements[i], perm);
        if (index.emplace(next, elements.size()).second) {
          elements.push_back(next);
          Word w = words[i];
          w.push_back(letter);
          words.push_back(std::move(w));
        }
      }
    }

    FiniteGroupTable t;
    t._alphabet = std::move(alphabet);
    std::size_t n = elements.size();
    t._mul.resize(n * n);
    t._inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t._mul[i * n + j] = index.at(compose(elements[i], elements[j]));
      }
      t._inv[i] = index.at(invert(elements[i]));
    }
    for (std::size_t g = 0; g < images.size(); ++g) {
      t._generator_map.push_back(index.at(images[g]));
    }
    t._words = std::move(words);
    for (auto const& w : t._words) {
      t._names.push_back(w.empty() ? std::string("e") : to_string(t._alphabet, w, WordStyle::compact));
    }
    return t;
  }

  std::optional<std::size_t> FiniteGroupTable::index_of_name(std::string const& name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _names.begin());
  }

  std::size_t FiniteGroupTable::evaluate(Word const& w) const {
    std::size_t x = identity();
    for (Letter l : w) {
      std::size_t g = generator(l.generator);
      x             = mul(x, l.exponent > 0 ? g : inv(g));
    }
    return x;
  }

  bool FiniteGroupTable::verify() const {
    std::size_t n = order();
    if (n == 0) {
      return false;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (mul(0, x) != x || mul(x, 0) != x) {
        return false;
      }
      if (mul(x, inv(x)) != 0 || mul(inv(x), x) != 0) {
        return false;
      }
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            return false;
          }
        }
      }
    }
    // closure of the generator images must be everything
    std::vector<bool>        seen(n, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto g : _generator_map) {
        for (auto h : {g, inv(g)}) {
          std::size_t y = mul(queue[i], h);
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
    return queue.size() == n;
  }

  FiniteGroupTable dihedral_group(std::size_t order, std::string x, std::string y) {
    if (order < 2 || order % 2 != 0) {
      throw BadOrder("dihedral group order must be even and at least 2, got " + std::to_string(order));
    }
    // Right-regular action on the elements (k, s) : i -> (-1)^s i + k of Z/m.
    std::size_t m   = order / 2;
    auto        idx = [m](std::size_t k, std::size_t s) { return static_cast<std::uint32_t>(2 * k + s); };
    auto        act = [&](std::size_t gk, std::size_t gs) {
      Permutation p(order);
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t s = 0; s < 2; ++s) {
          // (k, s) * (gk, gs) = (k + (-1)^s gk, s xor gs)
          std::size_t nk = s == 0 ? (k + gk) % m : (k + m - gk % m) % m;
          p[idx(k, s)]   = idx(nk, s ^ gs);
        }
      }
      return p;
    };
    return FiniteGroupTable::from_permutations(Alphabet::involutions({std::move(x), std::move(y)}),
                                               {act(0, 1), act(1 % m, 1)});
  }

  FiniteGroupOracle::FiniteGroupOracle(FiniteGroupTable table, std::string label)
      : _table(std::move(table)), _label(std::move(label)) {}

  Word FiniteGroupOracle::normal_form(Word const& w) const {
    return _table.word(_table.evaluate(w));
  }

  std::string FiniteGroupOracle::description() const {
    return _label + " of order " + std::to_string(_table.order());
  }

  Word FreeOracle::normal_form(Word const& w) const {
    return free_reduce(_alphabet, w);
  }

  std::string FreeOracle::description() const {
    return "free group of rank " + std::to_string(_alphabet.size());
  }

  FreeAbelianOracle::FreeAbelianOracle(Alphabet alphabet) : _alphabet(std::move(alphabet)) {
    for (std::size_t g = 0; g < _alphabet.size(); ++g) {
      if (_alphabet.involutive(g)) {
        throw InvalidArgument("free abelian oracle: letters must not be involutive");
      }
    }
  }

  Word FreeAbelianOracle::normal_form(Word const& w) const {
    auto sums = exponent_sums(_alphabet, w);
    Word out;
    for (std::size_t g = 0; g < sums.size(); ++g) {
      for (long i = 0; i < std::labs(sums[g]); ++i) {
        out.push_back(make_letter(_alphabet, g, sums[g] > 0 ? 1 : -1));
      }
    }
    return out;
  }

  std::string FreeAbelianOracle::description() const {
    return "free abelian group of rank " + std::to_string(_alphabet.size());
  }

  namespace {
    using i128 = __int128;

    std::int64_t narrow(i128 v) {
      if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw LimitExceeded("B(1,n) oracle: coefficient overflow");
      }
      return static_cast<std::int64_t>(v);
    }

    i128 ipow(std::int64_t base, std::int64_t e) {
      i128 r = 1;
      for (std::int64_t i = 0; i < e; ++i) {
        r *= base;
        if (r > std::numeric_limits<std::int64_t>::max()) {
          throw LimitExceeded("B(1,n) oracle: coefficient overflow");
        }
      }
      return r;
    }
  }  // namespace

  BaumslagSolitarOracle::BaumslagSolitarOracle(std::int64_t m, std::int64_t n, Alphabet alphabet)
      : _n(n), _alphabet(std::move(alphabet)) {
    if (m != 1) {
      throw Unsupported("B(m,n) oracle: only m = 1 is implemented");
    }
    if (n < 1) {
      throw InvalidArgument("B(1,n) oracle: n must be at least 1");
    }
    if (_alphabet.size() != 2 || _alphabet.involutive(0) || _alphabet.involutive(1)) {
      throw InvalidArgument("B(1,n) oracle: needs two non-involutive letters");
    }
  }

  BaumslagSolitarOracle::Element BaumslagSolitarOracle::evaluate(Word const& w) const {
    // (x, k) * b^e = (x + e n^k, k);  (x, k) * a^e = (x, k + e)
    Element x;
    for (Letter l : w) {
      if (l.generator == 0) {
        x.k += l.exponent;
        continue;
      }
      i128 q = x.q;
      if (x.k >= 0) {
        q += static_cast<i128>(l.exponent) * ipow(_n, x.k) * ipow(_n, x.p);
      } else if (-x.k <= x.p) {
        q += static_cast<i128>(l.exponent) * ipow(_n, x.p + x.k);
      } else {
        q = q * ipow(_n, -x.k - x.p) + l.exponent;
        x.p = -x.k;
      }
      x.q = narrow(q);
      while (x.p > 0 && _n > 1 && x.q % _n == 0) {
        x.q /= _n;
        --x.p;
      }
      if (_n == 1) {
        x.p = 0;
      }
    }
    return x;
  }

  Word BaumslagSolitarOracle::normal_form(Word const& w) const {
    Element      x = evaluate(w);
    std::int64_t P = std::max(x.p, -x.k);
    std::int64_t Q = narrow(static_cast<i128>(x.q) * ipow(_n, P - x.p));
    std::int64_t R = x.k + P;
    Word         out;
    for (std::int64_t i = 0; i < P; ++i) {
      out.push_back(make_letter(_alphabet, 0, -1));
    }
    for (std::int64_t i = 0; i < (Q < 0 ? -Q : Q); ++i) {
      out.push_back(make_letter(_alphabet, 1, Q < 0 ? -1 : 1));
    }
    for (std::int64_t i = 0; i < R; ++i) {
      out.push_back(make_letter(_alphabet, 0, 1));
    }
    return out;
  }

  std::string BaumslagSolitarOracle::description() const {
    return "Baumslag-Solitar group B(1," + std::to_string(_n) + ")";
  }

  Word RewritingOracle::normal_form(Word const& w) const {
    return reduce(_rs, w, Strategy::leftmost_innermost, _step_limit).word;
  }

  std::string RewritingOracle::description() const {
    return "rewriting system with " + std::to_string(_rs.rules().size()) + " rules";
  }

  Alphabet standard_alphabet(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
    }
    return Alphabet(std::move(names));
  }

  std::unique_ptr<WordOracle> free_oracle(std::size_t k) {
    if (k < 1) {
      throw InvalidArgument("free_oracle: rank must be at least 1");
    }
    return std::make_unique<FreeOracle>(standard_alphabet(k));
  }

  std::unique_ptr<WordOracle> free_abelian_oracle(std::size_t k) {
    if (k < 1) {
      throw InvalidArgument("free_abelian_oracle: rank must be at least 1");
    }
    return std::make_unique<FreeAbelianOracle>(standard_alphabet(k));
  }

  std::unique_ptr<WordOracle> bs_oracle(std::int64_t m, std::int64_t n) {
    return std::make_unique<BaumslagSolitarOracle>(m, n);
  }

}  // namespace gpq

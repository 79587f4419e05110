// Reference computations for the tests.  None of them call into the library
// algorithms they check: coset enumeration for finite presented groups,
// lattice counting, affine arithmetic for B(1,n) and brute-force substitution
// images.

#ifndef GPQ_TESTS_ORACLES_HPP_
#define GPQ_TESTS_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gpq/words.hpp"

namespace gpq::testing {

  // Hand-rolled HLT Todd-Coxeter over the trivial subgroup.  An involutive
  // generator gets both columns plus the relator g g.  nullopt when more than
  // max_cosets cosets are defined.
  class CosetEnumerator {
   public:
    CosetEnumerator(Presentation const& p, std::size_t max_cosets) : _max(max_cosets) {
      _cols = 2 * p.alphabet.size();
      for (auto const& r : p.relators) {
        std::vector<std::size_t> cols;
        for (auto l : r) {
          cols.push_back(2 * l.generator + (l.exponent < 0));
        }
        if (!cols.empty()) {
          _relators.push_back(std::move(cols));
        }
      }
      for (std::size_t g = 0; g < p.alphabet.size(); ++g) {
        if (p.alphabet.involutive(g)) {
          _relators.push_back({2 * g, 2 * g});
        }
      }
    }

    std::optional<std::size_t> order() {
      new_coset();
      for (std::size_t c = 0; c < _table.size(); ++c) {
        for (auto const& r : _relators) {
          if (!live(c)) {
            break;
          }
          scan_and_fill(c, r);
          if (_overflow) {
            return std::nullopt;
          }
        }
        for (std::size_t x = 0; x < _cols && live(c); ++x) {
          if (_table[c][x] == none) {
            define(c, x);
            if (_overflow) {
              return std::nullopt;
            }
          }
        }
      }
      std::size_t n = 0;
      for (std::size_t c = 0; c < _table.size(); ++c) {
        n += live(c);
      }
      return n;
    }

   private:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    static std::size_t inv(std::size_t x) {
      return x ^ 1U;
    }
    bool live(std::size_t c) const {
      return _parent[c] == c;
    }
    std::size_t new_coset() {
      _table.emplace_back(_cols, none);
      _parent.push_back(_parent.size());
      if (_table.size() > _max) {
        _overflow = true;
      }
      return _table.size() - 1;
    }
    void define(std::size_t c, std::size_t x) {
      std::size_t d = new_coset();
      _table[c][x]      = d;
      _table[d][inv(x)] = c;
    }
    std::size_t rep(std::size_t c) {
      std::size_t r = c;
      while (_parent[r] != r) {
        r = _parent[r];
      }
      while (_parent[c] != r) {
        std::size_t next = _parent[c];
        _parent[c]       = r;
        c                = next;
      }
      return r;
    }
    void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
      a = rep(a);
      b = rep(b);
      if (a == b) {
        return;
      }
      if (a > b) {
        std::swap(a, b);
      }
      _parent[b] = a;
      queue.push_back(b);
    }
    void coincidence(std::size_t a, std::size_t b) {
      std::vector<std::size_t> queue;
      merge(a, b, queue);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        std::size_t e = queue[i];
        for (std::size_t x = 0; x < _cols; ++x) {
          std::size_t f = _table[e][x];
          if (f == none) {
            continue;
          }
          if (_table[f][inv(x)] == e) {
            _table[f][inv(x)] = none;
          }
          std::size_t e1 = rep(e), f1 = rep(f);
          if (_table[e1][x] != none) {
            merge(f1, _table[e1][x], queue);
          } else if (_table[f1][inv(x)] != none) {
            merge(e1, _table[f1][inv(x)], queue);
          } else {
            _table[e1][x]      = f1;
            _table[f1][inv(x)] = e1;
          }
        }
      }
    }
    void scan_and_fill(std::size_t c, std::vector<std::size_t> const& r) {
      std::size_t f = c, b = c;
      std::size_t i = 0, j = r.size();  // unscanned: [i, j)
      while (true) {
        while (i < j && _table[f][r[i]] != none) {
          f = _table[f][r[i++]];
        }
        if (i == j) {
          if (f != b) {
            coincidence(f, b);
          }
          return;
        }
        while (j > i && _table[b][inv(r[j - 1])] != none) {
          b = _table[b][inv(r[--j])];
        }
        if (j == i) {
          coincidence(f, b);
          return;
        }
        if (j == i + 1) {
          _table[f][r[i]]      = b;
          _table[b][inv(r[i])] = f;
          return;
        }
        define(f, r[i]);
        if (_overflow) {
          return;
        }
      }
    }

    std::size_t                           _max;
    std::size_t                           _cols = 0;
    std::vector<std::vector<std::size_t>> _relators;
    std::vector<std::vector<std::size_t>> _table;
    std::vector<std::size_t>              _parent;
    bool                                  _overflow = false;
  };

  inline std::optional<std::size_t> group_order(Presentation const& p, std::size_t max_cosets = 100'000) {
    return CosetEnumerator(p, max_cosets).order();
  }

  // Points of Z^k with |x_1| + ... + |x_k| <= r, by scanning the cube.
  inline std::size_t lattice_ball(std::size_t k, long r) {
    std::vector<long> x(k, -r);
    std::size_t       count = 0;
    while (true) {
      long norm = 0;
      for (long v : x) {
        norm += std::labs(v);
      }
      count += norm <= r;
      std::size_t i = 0;
      while (i < k && x[i] == r) {
        x[i++] = -r;
      }
      if (i == k) {
        return count;
      }
      ++x[i];
    }
  }

  // B(1,n) as affine maps x -> n^e x + num / n^p acting on Q, with a: x -> n x
  // and b: x -> x + 1; a word acts right to left like a composite function.
  struct Affine {
    long     n = 2;
    long     e = 0;
    __int128 num = 0;
    long     p = 0;

    friend bool operator==(Affine const& f, Affine const& g) {
      return f.e == g.e && f.num == g.num && f.p == g.p;
    }
  };

  inline __int128 ipow(long n, long k) {
    __int128 r = 1;
    while (k-- > 0) {
      r *= n;
    }
    return r;
  }

  inline Affine normalise(Affine f) {
    while (f.p > 0 && f.num % f.n == 0) {
      f.num /= f.n;
      --f.p;
    }
    while (f.p < 0) {
      f.num *= f.n;
      ++f.p;
    }
    return f;
  }

  // f o g: x -> s_f (s_g x + t_g) + t_f.
  inline Affine compose(Affine const& f, Affine const& g) {
    Affine out{f.n, f.e + g.e, 0, 0};
    // s_f t_g = n^{e_f} num_g / n^{p_g}
    long const     p_1 = g.p - f.e;
    long const     p   = std::max({p_1, f.p, 0L});
    __int128 const a   = g.num * ipow(f.n, p - p_1);
    __int128 const b   = f.num * ipow(f.n, p - f.p);
    out.num            = a + b;
    out.p              = p;
    return normalise(out);
  }

  // Letters: generator 0 is a, generator 1 is b.
  inline Affine affine_value(long n, Word const& w) {
    Affine f{n, 0, 0, 0};
    for (auto l : w) {
      Affine g{n, 0, 0, 0};
      if (l.generator == 0) {
        g.e = l.exponent;
      } else {
        g.num = l.exponent;
      }
      f = compose(f, g);
    }
    return f;
  }

  // Random helpers.
  inline Word random_positive(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t length) {
    std::uniform_int_distribution<std::uint32_t> g(0, static_cast<std::uint32_t>(alphabet_size - 1));
    Word                                         w;
    for (std::size_t i = 0; i < length; ++i) {
      w.push_back(Letter{g(rng), 1});
    }
    return w;
  }

  inline Word random_word(std::mt19937_64& rng, Alphabet const& A, std::size_t length) {
    std::uniform_int_distribution<std::uint32_t> g(0, static_cast<std::uint32_t>(A.size() - 1));
    std::bernoulli_distribution                  coin(0.5);
    Word                                         w;
    for (std::size_t i = 0; i < length; ++i) {
      std::uint32_t x = g(rng);
      w.push_back(Letter{x, static_cast<std::int8_t>(A.involutive(x) || coin(rng) ? 1 : -1)});
    }
    return w;
  }

  // Every positive word u with |image(u)| == |w| is tried.
  inline bool brute_force_in_image(std::vector<Word> const& images, Word const& w) {
    std::vector<std::pair<Word, Word>> frontier{{Word{}, Word{}}};
    while (!frontier.empty()) {
      std::vector<std::pair<Word, Word>> next;
      for (auto const& [u, image] : frontier) {
        if (image.size() == w.size()) {
          if (image == w) {
            return true;
          }
          continue;
        }
        for (std::uint32_t x = 0; x < images.size(); ++x) {
          Word longer = image + images[x];
          if (longer.size() <= w.size()) {
            Word v = u;
            v.push_back(Letter{x, 1});
            next.emplace_back(std::move(v), std::move(longer));
          }
        }
      }
      frontier = std::move(next);
    }
    return false;
  }

  // Letterwise substitution, written out here so tests do not lean on the library's.
  inline Word substitute(std::vector<Word> const& images, Word const& w) {
    Word out;
    for (auto l : w) {
      out += images.at(l.generator);
    }
    return out;
  }

}  // namespace gpq::testing

#endif  // GPQ_TESTS_ORACLES_HPP_

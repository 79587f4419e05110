#include "gpq/endomorphic.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "gpq/error.hpp"

namespace gpq {

  bool EndomorphicPresentation::operator==(EndomorphicPresentation const& other) const {
    if (name != other.name || alphabet != other.alphabet || q != other.q || r != other.r
        || phi.size() != other.phi.size()) {
      return false;
    }
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (phi[i].name != other.phi[i].name || phi[i].images != other.phi[i].images) {
        return false;
      }
    }
    return true;
  }

  void validate(EndomorphicPresentation const& ep) {
    for (auto const& w : ep.q) {
      validate(ep.alphabet, w);
    }
    for (auto const& w : ep.r) {
      validate(ep.alphabet, w);
    }
    for (auto const& s : ep.phi) {
      if (s.alphabet != ep.alphabet) {
        throw InvalidArgument("endomorphic presentation: substitution '" + s.name
                              + "' is over a different alphabet");
      }
      if (ep.alphabet.index_of(s.name)) {
        throw InvalidArgument("endomorphic presentation: stable letter '" + s.name
                              + "' clashes with a generator");
      }
    }
  }

  std::vector<ExpandedRelator> expand_relators(EndomorphicPresentation const& ep, std::size_t depth) {
    validate(ep);
    Alphabet const&              A = ep.alphabet;
    std::vector<ExpandedRelator> out;
    std::set<Word>               seen;
    auto push = [&](Word w, std::vector<std::size_t> c, std::optional<std::size_t> seed) {
      if (seen.insert(w).second) {
        bool redundant = free_reduce(A, w).empty();
        out.push_back({std::move(w), std::move(c), seed, redundant});
      }
    };
    for (auto const& w : ep.q) {
      push(w, {}, std::nullopt);
    }
    // level[k][rank * |R| + j]: composition of length k with the given rank in
    // base |Phi|, applied to R[j].
    std::size_t const  nphi = ep.phi.size();
    std::vector<Word> level(ep.r.begin(), ep.r.end());
    std::size_t       count = 1;  // |Phi|^k
    for (std::size_t k = 0;; ++k) {
      for (std::size_t rank = 0; rank < count; ++rank) {
        std::vector<std::size_t> c(k);
        for (std::size_t i = 0, x = rank; i < k; ++i, x /= nphi) {
          c[k - 1 - i] = x % nphi;
        }
        for (std::size_t j = 0; j < ep.r.size(); ++j) {
          push(level[rank * ep.r.size() + j], c, j);
        }
      }
      if (k == depth || nphi == 0) {
        break;
      }
      if (count > std::numeric_limits<std::size_t>::max() / nphi) {
        throw CombinatorialExplosion("expand_relators: too many compositions");
      }
      std::vector<Word> next;
      next.reserve(level.size() * nphi);
      for (std::size_t first = 0; first < nphi; ++first) {
        for (auto const& w : level) {
          next.push_back(apply_substitution(ep.phi[first], w));
        }
      }
      level = std::move(next);
      count *= nphi;
    }
    return out;
  }

  Alphabet stable_alphabet(EndomorphicPresentation const& ep) {
    Alphabet A = ep.alphabet;
    for (auto const& s : ep.phi) {
      A.insert(A.size(), s.name, false);
    }
    return A;
  }

  Alphabet quotient_alphabet(EndomorphicPresentation const& ep) {
    std::vector<std::string> names;
    for (auto const& s : ep.phi) {
      names.push_back(s.name);
    }
    return Alphabet(std::move(names));
  }

  Presentation hnn_presentation(EndomorphicPresentation const& ep) {
    validate(ep);
    Presentation p;
    p.name     = ep.name.empty() ? std::string("hnn") : ep.name + "_hnn";
    p.alphabet = stable_alphabet(ep);
    p.relators = ep.q;
    p.relators.insert(p.relators.end(), ep.r.begin(), ep.r.end());
    std::size_t const n = ep.alphabet.size();
    for (std::size_t i = 0; i < ep.phi.size(); ++i) {
      Letter t    = make_letter(p.alphabet, n + i, 1);
      Letter tinv = make_letter(p.alphabet, n + i, -1);
      for (std::size_t g = 0; g < n; ++g) {
        Word rel{t, make_letter(p.alphabet, g, 1), tinv};
        rel += inverse(p.alphabet, ep.phi[i].images[g]);
        p.relators.push_back(std::move(rel));
      }
    }
    return p;
  }

  Word stable_projection(EndomorphicPresentation const& ep, Word const& w) {
    Alphabet const    L = quotient_alphabet(ep);
    std::size_t const n = ep.alphabet.size();
    Word              out;
    for (Letter l : w) {
      if (l.generator >= n + ep.phi.size()) {
        throw InvalidArgument("stable_projection: letter outside the HNN alphabet");
      }
      if (l.generator >= n) {
        out.push_back(Letter{static_cast<std::uint32_t>(l.generator - n), l.exponent});
      }
    }
    return free_reduce(L, out);
  }

  bool is_positive_element(Alphabet const& quotient, Word const& l) {
    Word r = free_reduce(quotient, l);
    return !r.empty() && is_positive(r);
  }

  bool order_less(Alphabet const& quotient, Word const& y, Word const& x) {
    return is_positive_element(quotient, inverse(quotient, y) + x);
  }

  std::optional<Decoding> try_sigma_decode(Substitution const& s, Word const& w) {
    if (!is_positive(w)) {
      throw NegativeExponent("sigma_decode: word has an inverse letter");
    }
    std::size_t const L   = w.size();
    std::size_t const inf = std::numeric_limits<std::size_t>::max();
    // best[i]: shortest preimage length of the suffix starting at i
    std::vector<std::size_t> best(L + 1, inf), count(L + 1, 0);
    std::vector<std::size_t> choice(L + 1, 0);
    best[L]  = 0;
    count[L] = 1;
    for (std::size_t i = L; i-- > 0;) {
      for (std::size_t g = 0; g < s.images.size(); ++g) {
        Word const& img = s.images[g];
        if (!w.matches_at(i, img) || best[i + img.size()] == inf) {
          continue;
        }
        count[i]       = std::min<std::size_t>(2, count[i] + count[i + img.size()]);
        std::size_t len = best[i + img.size()] + 1;
        // letters are visited in alphabet order, so ties keep the smaller one
        if (len < best[i]) {
          best[i]   = len;
          choice[i] = g;
        }
      }
    }
    if (best[0] == inf) {
      return std::nullopt;
    }
    Decoding d;
    d.parse_count = count[0];
    d.ambiguous   = count[0] > 1;
    for (std::size_t i = 0; i < L;) {
      std::size_t g = choice[i];
      d.preimage.push_back(make_letter(s.alphabet, g, 1));
      i += s.images[g].size();
    }
    return d;
  }

  Decoding sigma_decode(Substitution const& s, Word const& w) {
    auto d = try_sigma_decode(s, w);
    if (!d) {
      throw NotInImage("sigma_decode: word is not the image of any positive word under '" + s.name
                       + "'");
    }
    return *d;
  }

  namespace {
    struct Pinch {
      std::size_t first, last;  // positions of the two stable letters
      bool        inverse_first;
    };

    std::vector<Pinch> pinches(Word const& w, std::size_t stable) {
      std::vector<Pinch>         out;
      std::optional<std::size_t> prev;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].generator != stable) {
          continue;
        }
        if (prev && w[*prev].exponent == -w[i].exponent) {
          out.push_back({*prev, i, w[*prev].exponent < 0});
        }
        prev = i;
      }
      return out;
    }

    // Result of removing one pinch, or nullopt if its middle does not decode.
    std::optional<Word> remove_pinch(EndomorphicPresentation const& ep,
                                     Alphabet const&                A,
                                     Word const&                    w,
                                     Pinch const&                   p) {
      Word        middle = w.subword(p.first + 1, p.last - p.first - 1);
      Word        replacement;
      auto const& s = ep.phi[0];
      if (!p.inverse_first) {
        replacement = apply_endomorphism(s, middle);
      } else {
        if (!is_positive(middle)) {
          return std::nullopt;
        }
        auto d = try_sigma_decode(s, middle);
        if (!d) {
          return std::nullopt;
        }
        replacement = d->preimage;
      }
      return free_reduce(A, w.replaced(p.first, p.last - p.first + 1, replacement));
    }
  }  // namespace

  PinchReduction britton_pinch_reduce(EndomorphicPresentation const& ep, Word const& w, std::size_t step_cap) {
    if (ep.phi.size() != 1) {
      throw PreconditionFailed("britton_pinch_reduce: exactly one stable letter is supported");
    }
    validate(ep);
    Alphabet const    A      = stable_alphabet(ep);
    std::size_t const stable = ep.alphabet.size();
    validate(A, w);
    PinchReduction out;
    out.word = free_reduce(A, w);
    while (true) {
      bool removed = false;
      out.stuck    = false;
      for (auto const& p : pinches(out.word, stable)) {
        auto next = remove_pinch(ep, A, out.word, p);
        if (!next) {
          out.stuck = true;
          continue;
        }
        if (out.steps.size() == step_cap) {
          throw LimitExceeded("britton_pinch_reduce: step cap reached");
        }
        out.steps.push_back({out.word, p.first, p.inverse_first, *next});
        out.word = std::move(*next);
        removed  = true;
        break;
      }
      if (!removed) {
        break;
      }
    }
    return out;
  }

  bool PinchReduction::replays(EndomorphicPresentation const& ep, Word const& start) const {
    Alphabet const    A      = stable_alphabet(ep);
    std::size_t const stable = ep.alphabet.size();
    Word              current = free_reduce(A, start);
    for (auto const& s : steps) {
      if (s.before != current) {
        return false;
      }
      auto ps = pinches(current, stable);
      auto it = std::find_if(ps.begin(), ps.end(), [&s](Pinch const& p) { return p.first == s.position; });
      if (it == ps.end() || it->inverse_first != s.decoded) {
        return false;
      }
      auto next = remove_pinch(ep, A, current, *it);
      if (!next || *next != s.after) {
        return false;
      }
      current = *next;
    }
    return current == word;
  }

}  // namespace gpq

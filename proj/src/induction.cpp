#include "gpq/induction.hpp"

#include <algorithm>

#include "gpq/error.hpp"

namespace gpq {

  void validate(SplitExtensionData const& d) {
    FiniteGroupTable const& F = d.quotient;
    Alphabet const&         A = d.group.alphabet;
    if (d.projection.size() != A.size()) {
      throw NotSplit("split data: need one F-element per generator");
    }
    if (d.lifts.size() != F.order()) {
      throw NotSplit("split data: need one lift per F-element");
    }
    for (auto f : d.projection) {
      if (f >= F.order()) {
        throw NotSplit("split data: projection outside F");
      }
    }
    auto project = [&](Word const& w) {
      std::size_t x = F.identity();
      for (Letter l : w) {
        std::size_t g = d.projection.at(l.generator);
        x             = F.mul(x, l.exponent > 0 ? g : F.inv(g));
      }
      return x;
    };
    for (std::size_t i = 0; i < d.group.relators.size(); ++i) {
      validate(A, d.group.relators[i]);
      if (project(d.group.relators[i]) != F.identity()) {
        throw NotSplit("split data: relator " + std::to_string(i) + " does not project to e");
      }
    }
    if (!d.lifts[F.identity()].empty()) {
      throw NotSplit("split data: the identity must lift to the empty word");
    }
    for (std::size_t f = 0; f < F.order(); ++f) {
      validate(A, d.lifts[f]);
      if (project(d.lifts[f]) != f) {
        throw NotSplit("split data: lift of " + F.name(f) + " does not project back to it");
      }
    }
  }

  bool trivial_y(SplitExtensionData const& d, std::size_t generator) {
    Word const& lift = d.lifts.at(d.projection.at(generator));
    return lift.size() == 1 && lift[0].generator == generator && lift[0].exponent == 1;
  }

  std::string y_name(SplitExtensionData const& d, YLetter y) {
    std::string base = d.group.alphabet.name(y.base);
    if (y.conjugator == d.quotient.identity()) {
      return base;
    }
    return base + "^[" + d.quotient.name(y.conjugator) + "]";
  }

  std::string to_string(SplitExtensionData const& d, YWord const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += y_name(d, w[i]);
    }
    return out;
  }

  namespace {
    // The relation with every y-letter, trivial ones included.
    YWord full_basic_relation(Word const& w, SplitExtensionData const& d) {
      FiniteGroupTable const& F      = d.quotient;
      std::size_t             prefix = F.identity();
      YWord                   out;
      for (Letter l : w) {
        if (l.exponent < 0) {
          throw NonPositiveRelator("basic relation: word has an inverse letter");
        }
        out.push_back({prefix, l.generator});
        prefix = F.mul(prefix, d.projection.at(l.generator));
      }
      if (prefix != F.identity()) {
        throw DoesNotCloseUp("basic relation: word projects to " + F.name(prefix) + ", not e");
      }
      return out;
    }
  }  // namespace

  YWord basic_relation(Word const& w, SplitExtensionData const& d) {
    YWord out;
    for (auto y : full_basic_relation(w, d)) {
      if (!trivial_y(d, y.base)) {
        out.push_back(y);
      }
    }
    return out;
  }

  YWord conjugate_relation(YWord const& t, std::size_t x, FiniteGroupTable const& f) {
    YWord out = t;
    for (auto& y : out) {
      y.conjugator = f.mul(x, y.conjugator);
    }
    return out;
  }

  InducedPresentation induce_presentation(SplitExtensionData const& d) {
    for (auto const& r : d.group.relators) {
      if (!is_positive(r)) {
        throw NonPositiveRelator("induce_presentation: relators must be positive");
      }
    }
    validate(d);
    FiniteGroupTable const& F = d.quotient;
    Alphabet const&         A = d.group.alphabet;
    InducedPresentation     out;

    for (std::size_t j = 0; j < A.size(); ++j) {
      for (std::size_t f = 0; f < F.order(); ++f) {
        out.full_letters.push_back({f, j});
      }
    }
    for (auto const& r : d.group.relators) {
      YWord basic = full_basic_relation(r, d);
      for (std::size_t f = 0; f < F.order(); ++f) {
        out.full_relators.push_back(conjugate_relation(basic, f, F));
      }
    }

    std::vector<std::string> names;
    std::vector<bool>        involutive;
    for (auto y : out.full_letters) {
      if (trivial_y(d, y.base)) {
        continue;
      }
      out.letters.push_back(y);
      names.push_back(y_name(d, y));
      involutive.push_back(A.involutive(y.base) && d.projection[y.base] == F.identity());
    }
    for (std::size_t j = 0; j < A.size(); ++j) {
      if (trivial_y(d, j)) {
        out.log.push_back("eliminated the " + std::to_string(F.order()) + " y-letters of generator "
                          + A.name(j) + " (it is its own lift)");
      }
    }
    out.presentation.name     = d.group.name.empty() ? std::string("induced") : d.group.name + "_induced";
    out.presentation.alphabet = Alphabet(std::move(names), std::move(involutive));
    for (std::size_t i = 0; i < out.full_relators.size(); ++i) {
      Word w;
      for (auto y : out.full_relators[i]) {
        auto it = std::find(out.letters.begin(), out.letters.end(), y);
        if (it != out.letters.end()) {
          w.push_back(make_letter(out.presentation.alphabet, static_cast<std::size_t>(it - out.letters.begin()), 1));
        }
      }
      if (w.empty()) {
        out.log.push_back("dropped relator " + std::to_string(i) + " (conjugate "
                          + F.name(i % F.order()) + " of basic relation "
                          + std::to_string(i / F.order()) + "): empty after elimination");
        continue;
      }
      out.presentation.relators.push_back(std::move(w));
    }
    return out;
  }

  namespace {
    Word shift(Word const& w, std::size_t offset) {
      std::vector<Letter> out(w.begin(), w.end());
      for (auto& l : out) {
        l.generator += static_cast<std::uint32_t>(offset);
      }
      return Word(std::move(out));
    }

    Alphabet concatenate(Alphabet const& a, Alphabet const& b, std::string const& sa, std::string const& sb) {
      std::vector<std::string> names;
      std::vector<bool>        flags;
      for (std::size_t i = 0; i < a.size(); ++i) {
        names.push_back(a.name(i) + sa);
        flags.push_back(a.involutive(i));
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        names.push_back(b.name(i) + sb);
        flags.push_back(b.involutive(i));
      }
      return Alphabet(std::move(names), std::move(flags));
    }
  }  // namespace

  Presentation hall_compose(Presentation const&                   kernel,
                            Presentation const&                   quotient,
                            std::vector<Word> const&              lift_relations,
                            std::vector<std::vector<Word>> const& conjugations) {
    if (lift_relations.size() != quotient.relators.size()) {
      throw ArityMismatch("hall_compose: need one lift relation per relator of the quotient");
    }
    if (conjugations.size() != quotient.alphabet.size()) {
      throw ArityMismatch("hall_compose: need conjugation words for every quotient generator");
    }
    for (auto const& row : conjugations) {
      if (row.size() != kernel.alphabet.size()) {
        throw ArityMismatch("hall_compose: need a conjugation word for every kernel generator");
      }
      for (auto const& w : row) {
        validate(kernel.alphabet, w);
      }
    }
    for (auto const& w : lift_relations) {
      validate(kernel.alphabet, w);
    }
    std::size_t const nk = kernel.alphabet.size();
    Presentation      g;
    g.name     = kernel.name + (quotient.name.empty() ? "" : "_" + quotient.name);
    g.alphabet = concatenate(kernel.alphabet, quotient.alphabet, "", "");
    Alphabet const& A = g.alphabet;
    g.relators        = kernel.relators;
    for (std::size_t n = 0; n < quotient.relators.size(); ++n) {
      g.relators.push_back(shift(quotient.relators[n], nk) + inverse(A, lift_relations[n]));
    }
    for (std::size_t j = 0; j < quotient.alphabet.size(); ++j) {
      Letter m = make_letter(A, nk + j, 1);
      for (std::size_t i = 0; i < nk; ++i) {
        Word rel{m, make_letter(A, i, 1)};
        rel.push_back(make_letter(A, nk + j, -1));
        rel += inverse(A, conjugations[j][i]);
        g.relators.push_back(std::move(rel));
      }
    }
    return g;
  }

  Presentation product_presentation(Presentation const& first, Presentation const& second) {
    Presentation p;
    p.name = (first.name.empty() ? std::string("P") : first.name) + "_x_"
             + (second.name.empty() ? std::string("P") : second.name);
    p.alphabet                = concatenate(first.alphabet, second.alphabet, "_1", "_2");
    Alphabet const&   A       = p.alphabet;
    std::size_t const offset  = first.alphabet.size();
    p.relators                = first.relators;
    for (auto const& r : second.relators) {
      p.relators.push_back(shift(r, offset));
    }
    for (std::size_t g = 0; g < offset; ++g) {
      for (std::size_t h = 0; h < second.alphabet.size(); ++h) {
        p.relators.push_back(Word{make_letter(A, g, 1),
                                  make_letter(A, offset + h, 1),
                                  make_letter(A, g, -1),
                                  make_letter(A, offset + h, -1)});
      }
    }
    return p;
  }

}  // namespace gpq

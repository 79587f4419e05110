#include "gpq/rewriting.hpp"

#include <algorithm>
#include <optional>

#include "gpq/error.hpp"

namespace gpq {

  RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<RewriteRule> rules)
      : _alphabet(std::move(alphabet)), _rules(std::move(rules)) {
    for (auto const& r : _rules) {
      if (r.lhs.empty()) {
        throw InvalidArgument("rewriting rule with empty left-hand side");
      }
      validate(_alphabet, r.lhs);
      validate(_alphabet, r.rhs);
    }
  }

  RewritingSystem RewritingSystem::free_reduction(Alphabet const& alphabet) {
    std::vector<RewriteRule> rules;
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      Letter x = make_letter(alphabet, g, 1);
      if (alphabet.involutive(g)) {
        rules.push_back({Word{x, x}, Word{}});
      } else {
        Letter xi = make_letter(alphabet, g, -1);
        rules.push_back({Word{x, xi}, Word{}});
        rules.push_back({Word{xi, x}, Word{}});
      }
    }
    return RewritingSystem(alphabet, std::move(rules));
  }

  std::string to_string(Strategy s) {
    switch (s) {
      case Strategy::leftmost_innermost:
        return "leftmost-innermost";
      case Strategy::leftmost_outermost:
        return "leftmost-outermost";
    }
    return "unknown";
  }

  namespace {
    struct Redex {
      std::size_t position;
      std::size_t rule;
    };

    std::optional<Redex> find_redex(RewritingSystem const& rs, Word const& w, Strategy strategy) {
      auto const&          rules = rs.rules();
      std::optional<Redex> best;
      auto better = [&](Redex const& a, Redex const& b) {
        std::size_t la = rules[a.rule].lhs.size(), lb = rules[b.rule].lhs.size();
        if (strategy == Strategy::leftmost_innermost) {
          std::size_t ea = a.position + la, eb = b.position + lb;
          if (ea != eb) {
            return ea < eb;
          }
          if (la != lb) {
            return la < lb;
          }
        } else {
          if (a.position != b.position) {
            return a.position < b.position;
          }
          if (la != lb) {
            return la > lb;
          }
        }
        return a.rule < b.rule;
      };
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        if (best && strategy == Strategy::leftmost_outermost && pos > best->position) {
          break;
        }
        for (std::size_t i = 0; i < rules.size(); ++i) {
          if (w.matches_at(pos, rules[i].lhs)) {
            Redex r{pos, i};
            if (!best || better(r, *best)) {
              best = r;
            }
          }
        }
      }
      return best;
    }
  }  // namespace

  bool ReductionTrace::replays(RewritingSystem const& rs, Word const& start) const {
    Word current = start;
    for (auto const& s : steps) {
      if (s.before != current || s.rule >= rs.rules().size()) {
        return false;
      }
      auto const& rule = rs.rules()[s.rule];
      if (!s.before.matches_at(s.position, rule.lhs)) {
        return false;
      }
      if (s.before.replaced(s.position, rule.lhs.size(), rule.rhs) != s.after) {
        return false;
      }
      current = s.after;
    }
    return true;
  }

  Reduction reduce(RewritingSystem const& rs, Word const& w, Strategy strategy, std::size_t step_limit) {
    if (step_limit == 0) {
      throw InvalidArgument("reduce: step_limit must be positive");
    }
    constexpr std::size_t trace_letter_budget = std::size_t{1} << 24;
    std::size_t           trace_letters       = 0;
    Reduction             out{w, ReductionTrace{strategy, {}}};
    while (auto redex = find_redex(rs, out.word, strategy)) {
      if (out.trace.steps.size() == step_limit) {
        throw LimitExceeded("reduce: no irreducible word after " + std::to_string(step_limit)
                            + " steps");
      }
      auto const& rule = rs.rules()[redex->rule];
      Word        next = out.word.replaced(redex->position, rule.lhs.size(), rule.rhs);
      trace_letters += out.word.size() + next.size();
      if (trace_letters > trace_letter_budget) {
        throw LimitExceeded("reduce: trace exceeds " + std::to_string(trace_letter_budget) + " letters after "
                            + std::to_string(out.trace.steps.size()) + " steps");
      }
      out.trace.steps.push_back({out.word, redex->rule, redex->position, next});
      out.word = std::move(next);
    }
    return out;
  }

  bool is_irreducible(RewritingSystem const& rs, Word const& w) {
    return !find_redex(rs, w, Strategy::leftmost_innermost).has_value();
  }

  bool is_geodesic(RewritingSystem const& rs) {
    return std::all_of(rs.rules().begin(), rs.rules().end(),
                       [](RewriteRule const& r) { return r.lhs.size() >= r.rhs.size(); });
  }

  std::vector<CriticalPair> critical_pairs(RewritingSystem const& rs) {
    auto const&               rules = rs.rules();
    std::vector<CriticalPair> out;
    auto                      seen = [&out](CriticalPair const& c) {
      return std::any_of(out.begin(), out.end(), [&c](CriticalPair const& d) {
        return d.peak == c.peak
               && ((d.left == c.left && d.right == c.right) || (d.left == c.right && d.right == c.left));
      });
    };
    auto push = [&](CriticalPair c) {
      if (!seen(c)) {
        out.push_back(std::move(c));
      }
    };
    for (std::size_t i = 0; i < rules.size(); ++i) {
      Word const& u = rules[i].lhs;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        Word const& v = rules[j].lhs;
        // proper overlap: a suffix of u of length k equals a prefix of v
        for (std::size_t k = 1; k < u.size() && k < v.size(); ++k) {
          if (!std::equal(u.end() - static_cast<long>(k), u.end(), v.begin())) {
            continue;
          }
          Word tail = v.subword(k, v.size() - k);
          Word head = u.subword(0, u.size() - k);
          push({u + tail, rules[i].rhs + tail, head + rules[j].rhs, i, j});
        }
        // containment: v occurs inside u
        if (i != j && v.size() <= u.size()) {
          for (std::size_t p = 0; p + v.size() <= u.size(); ++p) {
            if (u.matches_at(p, v)) {
              push({u, rules[i].rhs, u.replaced(p, v.size(), rules[j].rhs), i, j});
            }
          }
        }
      }
    }
    return out;
  }

  std::vector<Letter> alphabet_letters(Alphabet const& alphabet) {
    std::vector<Letter> letters;
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      letters.push_back(make_letter(alphabet, g, 1));
      if (!alphabet.involutive(g)) {
        letters.push_back(make_letter(alphabet, g, -1));
      }
    }
    return letters;
  }

  std::vector<Word> all_words(Alphabet const& alphabet, std::size_t length) {
    auto              letters = alphabet_letters(alphabet);
    std::vector<Word> current{Word{}};
    for (std::size_t n = 0; n < length; ++n) {
      std::vector<Word> next;
      next.reserve(current.size() * letters.size());
      for (auto const& w : current) {
        for (Letter l : letters) {
          Word x = w;
          x.push_back(l);
          next.push_back(std::move(x));
        }
      }
      current = std::move(next);
    }
    return current;
  }

  ConfluenceCertificate certify_local_confluence(RewritingSystem const& rs,
                                                 std::size_t            step_limit,
                                                 std::size_t            evidence_length) {
    ConfluenceCertificate cert{ConfluenceCertified{}, 0, {}};
    cert.termination.geodesic = is_geodesic(rs);
    std::optional<std::string> inconclusive;
    for (auto const& cp : critical_pairs(rs)) {
      ++cert.pairs_checked;
      try {
        Word l = reduce(rs, cp.left, Strategy::leftmost_innermost, step_limit).word;
        Word r = reduce(rs, cp.right, Strategy::leftmost_innermost, step_limit).word;
        if (l != r) {
          cert.verdict = ConfluenceCounterexample{cp.peak, l, r};
          return cert;
        }
      } catch (LimitExceeded const&) {
        if (!inconclusive) {
          inconclusive = "a critical pair did not reduce within the step limit";
        }
      }
    }
    cert.termination.all_terminated = true;
    for (std::size_t n = 0; n <= evidence_length && cert.termination.all_terminated; ++n) {
      for (auto const& w : all_words(rs.alphabet(), n)) {
        ++cert.termination.words_checked;
        try {
          reduce(rs, w, Strategy::leftmost_innermost, step_limit);
        } catch (LimitExceeded const&) {
          cert.termination.all_terminated = false;
          if (!inconclusive) {
            inconclusive = "a word of length " + std::to_string(n)
                           + " did not reduce within the step limit";
          }
          break;
        }
      }
      if (cert.termination.all_terminated) {
        cert.termination.checked_length = n;
      }
    }
    if (inconclusive) {
      cert.verdict = ConfluenceInconclusive{*inconclusive};
    }
    return cert;
  }

  namespace {
    bool is_rotation(Word const& u, Word const& v) {
      if (u.size() != v.size()) {
        return false;
      }
      if (u.empty()) {
        return true;
      }
      Word doubled = v + v;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (doubled.matches_at(i, u)) {
          return true;
        }
      }
      return false;
    }

    bool has_relator_for_rule(Presentation const& p, RewriteRule const& rule) {
      Alphabet const& A = p.alphabet;
      Word            c = cyclically_reduce(A, rule.lhs + inverse(A, rule.rhs));
      if (c.empty()) {
        return true;
      }
      return std::any_of(p.relators.begin(), p.relators.end(), [&](Word const& r) {
        Word cr = cyclically_reduce(A, r);
        return is_rotation(c, cr) || is_rotation(c, inverse(A, cr));
      });
    }
  }  // namespace

  BallWitnessReport ball_null_homotopy_witness(RewritingSystem const& rs,
                                               Presentation const&    p,
                                               std::size_t            radius,
                                               std::size_t            word_cap,
                                               std::size_t            step_limit) {
    if (!is_geodesic(rs)) {
      throw PreconditionFailed("ball witness: rewriting system is not geodesic");
    }
    if (rs.alphabet() != p.alphabet) {
      throw PreconditionFailed("ball witness: presentation and rewriting system alphabets differ");
    }
    for (std::size_t i = 0; i < rs.rules().size(); ++i) {
      if (!has_relator_for_rule(p, rs.rules()[i])) {
        throw PreconditionFailed("ball witness: rule " + std::to_string(i)
                                 + " has no associated relator in the presentation");
      }
    }
    BallWitnessReport report;
    report.radius      = radius;
    std::size_t bound  = 2 * radius + 1;
    auto        letters = alphabet_letters(p.alphabet);
    // Count before enumerating so the cap is checked up front.
    std::size_t total = 0, layer = 1;
    for (std::size_t n = 0; n <= bound; ++n) {
      total += layer;
      if (total > word_cap) {
        throw CombinatorialExplosion("ball witness: more than " + std::to_string(word_cap)
                                     + " words of length <= " + std::to_string(bound));
      }
      layer *= letters.size();
    }
    for (std::size_t n = 0; n <= bound; ++n) {
      for (auto const& w : all_words(p.alphabet, n)) {
        ++report.words_enumerated;
        auto red = reduce(rs, w, Strategy::leftmost_innermost, step_limit);
        if (!red.word.empty()) {
          continue;
        }
        bool inside = std::all_of(red.trace.steps.begin(), red.trace.steps.end(),
                                  [bound](ReductionStep const& s) { return s.after.size() <= bound; });
        if (!inside && !report.failure) {
          report.failure = w;
        }
        report.witnesses.push_back({w, std::move(red.trace)});
      }
    }
    return report;
  }

}  // namespace gpq

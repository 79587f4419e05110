#include "gpq/report.hpp"

#include <variant>

namespace gpq::report {

  Json word(Alphabet const& a, Word const& w) {
    return to_string(a, w);
  }

  Json derivation(Alphabet const& a, Derivation const& d) {
    Json out = Json::array();
    for (auto const& f : d) {
      out.push_back({{"conjugator", word(a, f.conjugator)}, {"relator", f.relator}, {"exponent", f.exponent}});
    }
    return out;
  }

  Json ball(Ball const& b) {
    Alphabet const& A = b.presentation.alphabet;
    Json            vertices = Json::array();
    for (std::size_t v = 0; v < b.vertices.size(); ++v) {
      vertices.push_back({{"word", word(A, b.vertices[v])}, {"distance", b.distance[v]}});
    }
    Json edges = Json::array();
    for (auto const& e : b.edges) {
      edges.push_back({{"from", e.from}, {"letter", word(A, Word{e.letter})}, {"to", e.to}});
    }
    Json cells = Json::array();
    for (auto const& c : b.cells) {
      cells.push_back({{"base", c.base}, {"relator", c.relator}});
    }
    return Json{{"kind", b.sphere ? "sphere" : "ball"},
                {"radius", b.radius},
                {"basepoint", word(A, b.basepoint)},
                {"V", b.vertices.size()},
                {"E", b.edges.size()},
                {"C", b.cells.size()},
                {"vertices", vertices},
                {"edges", edges},
                {"cells", cells}};
  }

  Json loops(Ball const& b, LoopClassSet const& l) {
    Json gens = Json::array();
    for (auto const& g : l.generators) {
      gens.push_back(word(b.presentation.alphabet, g));
    }
    return Json{{"root", l.root}, {"count", l.generators.size()}, {"generators", gens}};
  }

  Json null_homotopy(Alphabet const& a, NullHomotopy const& h) {
    Json moves = Json::array();
    for (auto const& m : h.moves) {
      if (m.kind == HomotopyMove::Kind::free_reduce) {
        moves.push_back({{"kind", "free_reduce"}, {"after", word(a, m.after)}});
      } else {
        moves.push_back({{"kind", "relator"},
                         {"relator", m.relator},
                         {"pos", m.position},
                         {"removed", m.removed},
                         {"inserted", word(a, m.inserted)},
                         {"after", word(a, m.after)}});
      }
    }
    return Json{{"loop", word(a, h.loop)}, {"moves", moves}};
  }

  Json kill_radius(Alphabet const& a, KillRadius const& k, std::size_t r, std::size_t R_max, std::size_t cap) {
    Json witnesses = Json::array();
    for (auto const& w : k.witnesses) {
      witnesses.push_back(null_homotopy(a, w));
    }
    return Json{{"r", r},
                {"R_max", R_max},
                {"state_cap", cap},
                {"result", k.radius ? Json(*k.radius) : Json("exhausted")},
                {"generators", k.generators},
                {"states", k.states},
                {"witnesses", witnesses}};
  }

  Json trace(Alphabet const& a, ReductionTrace const& t) {
    Json steps = Json::array();
    for (auto const& s : t.steps) {
      steps.push_back(
          {{"before", word(a, s.before)}, {"rule", s.rule}, {"pos", s.position}, {"after", word(a, s.after)}});
    }
    return Json{{"strategy", to_string(t.strategy)}, {"steps", steps}};
  }

  Json confluence(Alphabet const& a, ConfluenceCertificate const& c) {
    Json out;
    std::visit(
        [&](auto const& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, ConfluenceCertified>) {
            out["verdict"] = "Certified";
          } else if constexpr (std::is_same_v<T, ConfluenceCounterexample>) {
            out["verdict"]        = "Counterexample";
            out["counterexample"] = {{"peak", word(a, v.peak)}, {"left", word(a, v.left)}, {"right", word(a, v.right)}};
          } else {
            out["verdict"] = "Inconclusive";
            out["reason"]  = v.reason;
          }
        },
        c.verdict);
    out["pairs_checked"] = c.pairs_checked;
    out["termination"]   = {{"geodesic", c.termination.geodesic},
                            {"checked_length", c.termination.checked_length},
                            {"words_checked", c.termination.words_checked},
                            {"all_terminated", c.termination.all_terminated}};
    return out;
  }

  Json ball_witness(Alphabet const& a, BallWitnessReport const& w) {
    Json witnesses = Json::array();
    for (auto const& h : w.witnesses) {
      witnesses.push_back({{"word", word(a, h.word)}, {"trace", trace(a, h.trace)}});
    }
    Json out{{"radius", w.radius}, {"words_enumerated", w.words_enumerated}, {"ok", w.ok()}};
    if (w.failure) {
      out["failure"] = word(a, *w.failure);
    }
    out["witnesses"] = witnesses;
    return out;
  }

  Json induced(SplitExtensionData const& d, InducedPresentation const& p) {
    Json letters = Json::array();
    for (auto y : p.letters) {
      letters.push_back(y_name(d, y));
    }
    Json relators = Json::array();
    for (auto const& r : p.presentation.relators) {
      relators.push_back(word(p.presentation.alphabet, r));
    }
    return Json{{"generators_before_simplification", p.full_letters.size()},
                {"relators_before_simplification", p.full_relators.size()},
                {"generators", letters},
                {"relators", relators},
                {"log", p.log}};
  }

  Json verification(grigorchuk::VerificationReport const& r) {
    Alphabet const A = grigorchuk::alphabet(grigorchuk::Variant::acd);
    return Json{{"case", r.case_id()},
                {"n", r.n},
                {"family", grigorchuk::to_string(r.family)},
                {"factor", grigorchuk::to_string(r.factor)},
                {"x", r.x_name},
                {"transported", to_string(A, r.transported, WordStyle::compact)},
                {"expected", to_string(A, r.expected, WordStyle::compact)},
                {"free_equal", r.free_equal},
                {"klein_equal", r.klein_equal},
                {"certified", r.certified},
                {"certificate_relator", to_string(A, grigorchuk::certificate_relator(), WordStyle::compact)},
                {"certificate", derivation(A, r.certificate)},
                {"level", grigorchuk::to_string(r.level)},
                {"equal", r.equal}};
  }

  Json verification(grigorchuk::FullVerification const& v) {
    Json reports = Json::array();
    for (auto const& r : v.reports) {
      reports.push_back(verification(r));
    }
    return Json{{"max_n", v.max_n},
                {"summary",
                 {{"reports", v.reports.size()},
                  {"free", v.free_count},
                  {"klein", v.klein_count},
                  {"certified", v.certified_count},
                  {"failed", v.failed}}},
                {"log", v.log},
                {"reports", reports}};
  }

}  // namespace gpq::report

// gpq: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 oracle mismatch, 4 resource limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gpq/cayley_ball.hpp"
#include "gpq/endomorphic.hpp"
#include "gpq/error.hpp"
#include "gpq/grigorchuk.hpp"
#include "gpq/group_backends.hpp"
#include "gpq/parser.hpp"
#include "gpq/report.hpp"
#include "gpq/rewriting.hpp"

namespace {

  using namespace gpq;
  using report::Json;

  enum Exit { ok = 0, verification_failed = 1, parse_failed = 2, oracle_mismatch = 3, resource_limit = 4 };

  std::size_t step_cap(std::size_t fallback) {
    if (char const* env = std::getenv("GPQ_STEP_CAP")) {
      try {
        return std::stoul(env);
      } catch (std::exception const&) {
        throw InvalidArgument(std::string("GPQ_STEP_CAP is not a number: ") + env);
      }
    }
    return fallback;
  }

  void emit_json(std::string const& path, Json const& j) {
    if (path.empty()) {
      return;
    }
    if (path == "-") {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw InvalidArgument("cannot write '" + path + "'");
    }
    out << j.dump(2) << "\n";
  }

  PresentationFile read_presentation_file(std::string const& path) {
    auto doc = read_document(path);
    if (auto* f = std::get_if<PresentationFile>(&doc)) {
      return *f;
    }
    throw ParseError("'" + path + "' is an endomorphic presentation; expected a plain one", 0, 0);
  }

  // Recognises the presentations the built-in oracles answer for.
  std::string guess_backend(PresentationFile const& f) {
    Presentation const& p = f.presentation;
    Alphabet const&     A = p.alphabet;
    if (!f.rules.empty()) {
      return "rewriting";
    }
    std::vector<Word> rels;
    for (auto const& r : p.relators) {
      Word c = cyclically_reduce(A, normalize(A, r));
      if (!c.empty()) {
        rels.push_back(c);
      }
    }
    if (rels.empty()) {
      return "free";
    }
    bool commutators = true;
    for (auto const& r : rels) {
      commutators = commutators && r.size() == 4 && r[0].generator != r[1].generator
                    && r[2] == Letter{r[0].generator, static_cast<std::int8_t>(-r[0].exponent)}
                    && r[3] == Letter{r[1].generator, static_cast<std::int8_t>(-r[1].exponent)};
    }
    if (commutators && rels.size() == A.size() * (A.size() - 1) / 2) {
      return "abelian";
    }
    if (A.size() == 2 && rels.size() == 1) {
      Word const& r = rels[0];
      if (A.involutive(0) && A.involutive(1) && r.size() % 2 == 0
          && r == power(A, Word{make_letter(A, 0), make_letter(A, 1)}, static_cast<long>(r.size() / 2))) {
        return "dihedral:" + std::to_string(r.size());
      }
      if (!A.involutive(0) && !A.involutive(1) && r.size() >= 4) {
        Word head{make_letter(A, 0, 1), make_letter(A, 1, 1), make_letter(A, 0, -1)};
        Word rest = r.subword(3, r.size() - 3);
        if (r.subword(0, 3) == head && rest == power(A, Word{make_letter(A, 1, 1)}, -static_cast<long>(rest.size()))) {
          return "bs:" + std::to_string(rest.size());
        }
      }
    }
    throw Unsupported("cannot pick a backend for this presentation; pass --backend");
  }

  std::unique_ptr<WordOracle> make_oracle(std::string backend, PresentationFile const& f) {
    Presentation const& p = f.presentation;
    if (backend == "auto") {
      backend = guess_backend(f);
    }
    if (backend == "free") {
      return std::make_unique<FreeOracle>(p.alphabet);
    }
    if (backend == "abelian") {
      return std::make_unique<FreeAbelianOracle>(p.alphabet);
    }
    if (backend == "rewriting") {
      return std::make_unique<RewritingOracle>(RewritingSystem(p.alphabet, f.rules), step_cap(100'000));
    }
    auto number = [&](std::string const& prefix) -> std::optional<long> {
      if (backend.rfind(prefix, 0) != 0) {
        return std::nullopt;
      }
      try {
        return std::stol(backend.substr(prefix.size()));
      } catch (std::exception const&) {
        throw InvalidArgument("bad backend '" + backend + "'");
      }
    };
    if (auto n = number("dihedral:")) {
      if (p.alphabet.size() != 2) {
        throw OracleMismatch("dihedral backend needs a two-letter alphabet");
      }
      auto table = dihedral_group(static_cast<std::size_t>(*n), p.alphabet.name(0), p.alphabet.name(1));
      return std::make_unique<FiniteGroupOracle>(std::move(table), "D" + std::to_string(*n));
    }
    if (auto n = number("bs:")) {
      return std::make_unique<BaumslagSolitarOracle>(1, *n, p.alphabet);
    }
    throw InvalidArgument("unknown backend '" + backend + "'");
  }

  struct BallOptions {
    std::string file;
    std::string backend = "auto";
    std::size_t radius  = 2;
    bool        pi1     = false;
    std::optional<std::size_t> kill;
    bool        sphere  = false;
    std::string json;
  };

  int cmd_ball(BallOptions const& o) {
    PresentationFile const f      = read_presentation_file(o.file);
    auto const             oracle = make_oracle(o.backend, f);
    Presentation const&    p      = f.presentation;
    Ball const b = o.sphere ? build_sphere(*oracle, p, o.radius) : build_ball(*oracle, p, o.radius);
    Json j{{"command", "ball"}, {"file", o.file}, {"backend", oracle->description()}, {"ball", report::ball(b)}};
    std::cout << "V=" << b.vertices.size() << " E=" << b.edges.size() << " C=" << b.cells.size();
    if (!o.sphere) {
      auto const loops = pi1_generators(b);
      std::cout << " pi1=" << loops.generators.size();
      j["pi1"] = report::loops(b, loops);
      if (o.pi1) {
        for (auto const& g : loops.generators) {
          std::cout << "\n  " << to_string(p.alphabet, g);
        }
      }
    }
    std::cout << "\n";
    if (o.kill) {
      std::size_t const cap = step_cap(200'000);
      auto              k   = pi1_kill_radius(*oracle, p, o.radius, *o.kill, cap);
      std::cout << "kill_radius=" << (k.radius ? std::to_string(*k.radius) : std::string("exhausted"))
                << " (R_max=" << *o.kill << ", state_cap=" << cap << ")\n";
      j["kill_radius"] = report::kill_radius(p.alphabet, k, o.radius, *o.kill, cap);
    }
    emit_json(o.json, j);
    return ok;
  }

  struct RewriteOptions {
    std::string                file;
    std::string                word;
    bool                       confluence = false;
    std::optional<std::size_t> ball_witness;
    std::string                strategy = "innermost";
    std::string                json;
  };

  int cmd_rewrite(RewriteOptions const& o) {
    PresentationFile const f = read_presentation_file(o.file);
    Alphabet const&        A = f.presentation.alphabet;
    RewritingSystem const  rs(A, f.rules);
    std::size_t const      cap = step_cap(100'000);
    Json                   j{{"command", "rewrite"}, {"file", o.file}, {"step_limit", cap}};
    int                    status = ok;
    if (!o.word.empty()) {
      Strategy s = o.strategy == "outermost" ? Strategy::leftmost_outermost : Strategy::leftmost_innermost;
      Word     w = parse_word(A, o.word);
      j["word"]  = report::word(A, w);
      auto red   = reduce(rs, w, s, cap);
      std::cout << to_string(A, red.word, WordStyle::compact) << "\n";
      for (auto const& step : red.trace.steps) {
        std::cout << "  " << to_string(A, step.before, WordStyle::compact) << " -> "
                  << to_string(A, step.after, WordStyle::compact) << "  (rule " << step.rule << " at "
                  << step.position << ")\n";
      }
      j["normal_form"] = report::word(A, red.word);
      j["trace"]       = report::trace(A, red.trace);
    }
    if (o.confluence) {
      auto c = certify_local_confluence(rs, step_cap(10'000));
      j["confluence"] = report::confluence(A, c);
      std::cout << j["confluence"]["verdict"].get<std::string>() << " (" << c.pairs_checked
                << " critical pairs, words up to length " << c.termination.checked_length << " terminate: "
                << (c.termination.all_terminated ? "yes" : "no") << ")\n";
    }
    if (o.ball_witness) {
      auto w = ball_null_homotopy_witness(rs, f.presentation, *o.ball_witness);
      j["ball_witness"] = report::ball_witness(A, w);
      std::cout << "ball witness r=" << w.radius << ": " << w.witnesses.size() << " identity words, "
                << (w.ok() ? "all traces within 2r+1" : "FAILED at " + to_string(A, *w.failure)) << "\n";
      if (!w.ok()) {
        status = verification_failed;
      }
    }
    emit_json(o.json, j);
    return status;
  }

  int cmd_verify(std::size_t max_n, std::string const& json) {
    auto v = grigorchuk::run_full_verification(max_n);
    std::cout << "reports=" << v.reports.size() << " free=" << v.free_count << " klein=" << v.klein_count
              << " certified=" << v.certified_count << " failed=" << v.failed << "\n";
    for (auto const& line : v.log) {
      std::cout << "  " << line << "\n";
    }
    for (auto const& r : v.reports) {
      if (!r.equal) {
        std::cout << "  not equal: " << r.case_id() << "\n";
      }
    }
    Json j = report::verification(v);
    j["command"] = "grigorchuk verify";
    emit_json(json, j);
    return v.all_equal() ? ok : verification_failed;
  }

  int cmd_show(std::string const& variant, std::string const& family, std::size_t n) {
    std::cout << grigorchuk::show(grigorchuk::parse_variant(variant), grigorchuk::parse_family(family), n) << "\n";
    return ok;
  }

  int cmd_endo(std::string const& file, std::size_t depth, bool hnn) {
    auto doc = read_document(file);
    auto ep  = std::get_if<EndomorphicPresentation>(&doc);
    if (ep == nullptr) {
      throw ParseError("'" + file + "' is not an endomorphic presentation", 0, 0);
    }
    if (hnn) {
      std::cout << print(hnn_presentation(*ep));
      return ok;
    }
    for (auto const& r : expand_relators(*ep, depth)) {
      std::cout << to_string_folded(ep->alphabet, r.word) << (r.redundant ? "   # freely trivial" : "") << "\n";
    }
    return ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gpq: presentations, Cayley balls, rewriting and the Grigorchuk pipeline"};
  app.require_subcommand(1);

  BallOptions ball;
  auto*       ball_cmd = app.add_subcommand("ball", "metric ball in the Cayley complex");
  ball_cmd->add_option("file", ball.file, "presentation file")->required();
  ball_cmd->add_option("--backend", ball.backend, "auto | free | abelian | dihedral:N | bs:N | rewriting");
  ball_cmd->add_option("--radius", ball.radius, "ball radius");
  ball_cmd->add_flag("--pi1", ball.pi1, "list the pi1 generator loops");
  ball_cmd->add_option("--kill-radius", ball.kill, "search for the kill radius up to this R");
  ball_cmd->add_flag("--sphere", ball.sphere, "sphere instead of ball");
  ball_cmd->add_option("--json", ball.json, "write a JSON report ('-' for stdout)");

  RewriteOptions rw;
  auto*          rw_cmd = app.add_subcommand("rewrite", "string rewriting");
  rw_cmd->add_option("file", rw.file, "file with rule statements")->required();
  rw_cmd->add_option("--word", rw.word, "reduce this word");
  rw_cmd->add_option("--strategy", rw.strategy, "innermost | outermost")
      ->check(CLI::IsMember({"innermost", "outermost"}));
  rw_cmd->add_flag("--confluence", rw.confluence, "certify local confluence");
  rw_cmd->add_option("--ball-witness", rw.ball_witness, "null-homotopy witnesses for words up to length 2r+1");
  rw_cmd->add_option("--json", rw.json, "write a JSON report ('-' for stdout)");

  auto*       gri = app.add_subcommand("grigorchuk", "Grigorchuk group pipeline");
  gri->require_subcommand(1);
  std::size_t max_n = 3;
  std::string verify_json;
  auto*       verify = gri->add_subcommand("verify", "transport every induced relation back to P_G");
  verify->add_option("--max-n", max_n, "largest n");
  verify->add_option("--json", verify_json, "write the reports ('-' for stdout)");
  std::string variant = "abd", family = "w";
  std::size_t show_n  = 0;
  auto*       show    = gri->add_subcommand("show", "print a relator");
  show->add_option("--variant", variant, "abcd | acd | abd");
  show->add_option("--family", family, "w | z");
  show->add_option("--n", show_n, "iterate");

  std::string endo_file;
  std::size_t depth = 1;
  bool        hnn   = false;
  auto*       endo  = app.add_subcommand("endo", "endomorphic presentations");
  endo->add_option("file", endo_file, "endomorphic presentation file")->required();
  endo->add_option("--depth", depth, "composition depth of the expansion");
  endo->add_flag("--hnn", hnn, "print the HNN presentation instead");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ball_cmd) {
      return cmd_ball(ball);
    }
    if (*rw_cmd) {
      return cmd_rewrite(rw);
    }
    if (*verify) {
      return cmd_verify(max_n, verify_json);
    }
    if (*show) {
      return cmd_show(variant, family, show_n);
    }
    if (*endo) {
      return cmd_endo(endo_file, depth, hnn);
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse_failed;
  } catch (OracleMismatch const& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return oracle_mismatch;
  } catch (LimitExceeded const& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource_limit;
  } catch (CombinatorialExplosion const& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource_limit;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return verification_failed;
  }
  return ok;
}

// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "gpq/cayley_ball.hpp"
#include "gpq/endomorphic.hpp"
#include "gpq/error.hpp"
#include "gpq/grigorchuk.hpp"
#include "gpq/induction.hpp"
#include "gpq/parser.hpp"
#include "gpq/rewriting.hpp"
#include "gpq/tietze.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gpq;
using namespace gpq::testing;
namespace gri = gpq::grigorchuk;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  std::string fixed(double x) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << x;
    return s.str();
  }

  Outcome grigorchuk_verification() {
    Outcome o;
    for (std::size_t max_n : {3UL, 4UL}) {
      auto         t0     = std::chrono::steady_clock::now();
      auto         v      = gri::run_full_verification(max_n);
      double const secs   = seconds_since(t0);
      double const budget = max_n == 3 ? 10.0 : 60.0;
      std::size_t  levels = 0;
      for (auto const& r : v.reports) {
        levels += r.equal && r.level != gri::Level::none && gri::replays(r);
      }
      std::size_t const expected = 2 * 2 * 8 * max_n;
      bool const        ok       = v.reports.size() == expected && v.all_equal() && levels == expected && secs < budget;
      o.pass &= ok;
      o.detail += "max_n=" + std::to_string(max_n) + ": " + std::to_string(v.reports.size()) + " reports, equal "
                  + std::to_string(levels) + " (free " + std::to_string(v.free_count) + ", klein "
                  + std::to_string(v.klein_count) + ", certified " + std::to_string(v.certified_count) + "), "
                  + fixed(secs) + " s; ";
    }
    return o;
  }

  Outcome substitution_coherence() {
    std::mt19937_64 rng(2);
    auto const      s        = gri::sigma(gri::Variant::abd);
    std::size_t     mismatch = 0;
    for (int i = 0; i < 1000; ++i) {
      Word u = random_positive(rng, 3, 1 + rng() % 50);
      mismatch += gri::phi0_hat(u) != gri::translate_bd_to_cd(substitute(s.images, u));
    }
    return {mismatch == 0, "1000 words, " + std::to_string(mismatch) + " mismatches"};
  }

  Outcome decoder_round_trip() {
    std::mt19937_64 rng(3);
    std::size_t     failures = 0, rejected = 0, non_images = 0;
    for (auto v : {gri::Variant::acd, gri::Variant::abd}) {
      auto const s = gri::sigma(v);
      for (int i = 0; i < 1000; ++i) {
        Word u = random_positive(rng, 3, rng() % 101);
        auto d = sigma_decode(s, substitute(s.images, u));
        failures += d.preimage != u || d.ambiguous;
      }
      for (int found = 0; found < 50;) {
        Word x = random_positive(rng, 3, 1 + rng() % 12);
        if (brute_force_in_image(s.images, x)) {
          continue;
        }
        ++found;
        ++non_images;
        try {
          sigma_decode(s, x);
        } catch (NotInImage const&) {
          ++rejected;
        }
      }
    }
    return {failures == 0 && rejected == non_images,
            "2000 round trips, " + std::to_string(failures) + " failures; " + std::to_string(rejected) + "/"
                + std::to_string(non_images) + " non-images rejected"};
  }

  // Vertex and edge counts of B(r) straight from the oracle.
  std::pair<std::size_t, std::size_t> count_ball(WordOracle const& o, std::size_t r) {
    Alphabet const&              A = o.alphabet();
    std::map<Word, std::size_t>  dist{{o.normal_form(Word{}), 0}};
    std::vector<Word>            frontier{o.normal_form(Word{})};
    for (std::size_t d = 1; d <= r; ++d) {
      std::vector<Word> next;
      for (auto const& v : frontier) {
        for (std::uint32_t g = 0; g < A.size(); ++g) {
          for (int e : {1, -1}) {
            if (e < 0 && A.involutive(g)) {
              continue;
            }
            Word u = o.normal_form(v + Word{{g, static_cast<std::int8_t>(e)}});
            if (dist.emplace(u, d).second) {
              next.push_back(u);
            }
          }
        }
      }
      frontier = std::move(next);
    }
    std::set<std::tuple<Word, Word, std::uint32_t>> edges;
    for (auto const& [v, _] : dist) {
      for (std::uint32_t g = 0; g < A.size(); ++g) {
        Word u = o.normal_form(v + Word{{g, 1}});
        if (dist.count(u)) {
          edges.emplace(A.involutive(g) ? std::min(u, v) : v, A.involutive(g) ? std::max(u, v) : u, g);
        }
      }
    }
    return {dist.size(), edges.size()};
  }

  Outcome loop_generator_bound() {
    struct Case {
      std::string                 name;
      std::unique_ptr<WordOracle> oracle;
      Presentation                p;
    };
    std::vector<Case> cases;
    cases.push_back({"Z^2", free_abelian_oracle(2), zk(2)});
    cases.push_back({"F2", free_oracle(2), f2()});
    cases.push_back({"D8", std::make_unique<FiniteGroupOracle>(dihedral_group(8, "a", "d")), d8_presentation()});
    cases.push_back({"B(1,2)", bs_oracle(1, 2), bs12()});
    Outcome     o;
    std::size_t loops = 0;
    for (auto const& c : cases) {
      std::string counts;
      for (std::size_t r = 0; r <= 3; ++r) {
        auto b          = build_ball(*c.oracle, c.p, r);
        auto ls         = pi1_generators(b);
        auto [V, E]     = count_ball(*c.oracle, r);
        bool ok         = V == b.vertices.size() && E == b.edges.size() && ls.generators.size() + V == E + 1;
        for (auto const& g : ls.generators) {
          ok &= g.size() <= 2 * r + 1 && c.oracle->is_identity(g) && b.contains_loop(g);
        }
        loops += ls.generators.size();
        o.pass &= ok;
        counts += (r ? "," : "") + std::to_string(ls.generators.size());
      }
      o.detail += c.name + " [" + counts + "] ";
    }
    o.detail += "generators for r=0..3, " + std::to_string(loops) + " loops checked";
    return o;
  }

  Outcome d8_consistency() {
    Outcome         o;
    auto const      rs = d8_rewriting();
    RewritingOracle oracle(rs);
    std::size_t     witnesses = 0;
    for (std::size_t r = 0; r <= 2; ++r) {
      auto rep = ball_null_homotopy_witness(rs, d8_rule_presentation(), r);
      bool ok  = rep.ok();
      for (auto const& h : rep.witnesses) {
        ok &= h.trace.replays(rs, h.word);
        for (auto const& s : h.trace.steps) {
          ok &= s.after.size() <= s.before.size();
        }
      }
      witnesses += rep.witnesses.size();
      auto k = pi1_kill_radius(oracle, d8_presentation(), r, r + 2);
      ok &= k.radius == r;
      o.pass &= ok;
      o.detail += "r=" + std::to_string(r) + ": kill radius "
                  + (k.radius ? std::to_string(*k.radius) : std::string("exhausted")) + "; ";
    }
    o.detail += std::to_string(witnesses) + " witness traces, all length-non-increasing";
    return o;
  }

  Outcome lattice_counts() {
    Outcome o;
    for (std::size_t k = 1; k <= 3; ++k) {
      auto oracle = free_abelian_oracle(k);
      for (std::size_t r = 0; r <= 4; ++r) {
        std::size_t got = build_ball(*oracle, zk(k), r).vertices.size();
        std::size_t ref = lattice_ball(k, static_cast<long>(r));
        o.pass &= got == ref;
        if (r == 4) {
          o.detail += "Z^" + std::to_string(k) + " r=4: " + std::to_string(got) + "/" + std::to_string(ref) + "; ";
        }
      }
    }
    o.detail += "15 balls compared";
    return o;
  }

  Outcome induction() {
    Outcome     o;
    auto        d      = klein_over_z2();
    auto        ind    = induce_presentation(d);
    auto        order  = group_order(ind.presentation);
    bool        counts = ind.full_letters.size() == d.quotient.order() * d.group.alphabet.size();
    auto        g      = gri::split_data(1);
    auto        gind   = induce_presentation(g);
    counts &= gind.full_letters.size() == g.quotient.order() * g.group.alphabet.size();
    Alphabet     K({"k"}), M({"m"});
    Presentation kernel{"k", K, {w(K, "k k")}};
    Presentation quotient{"q", M, {w(M, "m m")}};
    auto         hall = group_order(hall_compose(kernel, quotient, {Word{}}, {{w(K, "k")}}));
    o.pass = order == 2 && hall == 4 && counts;
    o.detail = "induced order " + (order ? std::to_string(*order) : std::string("?")) + ", Hall order "
               + (hall ? std::to_string(*hall) : std::string("?")) + ", pre-simplification generators "
               + std::to_string(ind.full_letters.size()) + " (Klein), " + std::to_string(gind.full_letters.size())
               + " (Grigorchuk over D8)";
    return o;
  }

  Outcome tietze_moves() {
    std::mt19937_64 rng(8);
    std::size_t     inverted = 0, valid = 0, rejected = 0, invalid = 0;
    Presentation    p = bs12();
    for (int i = 0; i < 500; ++i) {
      if (i % 25 == 0) {
        p = i % 50 ? bs12() : zk(3);
      }
      Alphabet const& A = p.alphabet;
      TietzeMove      m;
      if (rng() % 2) {
        std::optional<std::size_t> lp, rp;
        if (rng() % 2) {
          lp = rng() % (A.size() + 1);
          rp = rng() % (p.relators.size() + 1);
        }
        m = tietze::AddGenerator{"y" + std::to_string(i), random_word(rng, A, rng() % 5), false, lp, rp};
      } else {
        Derivation d;
        for (std::size_t f = 0, n = 1 + rng() % 3; f < n; ++f) {
          d.push_back({random_word(rng, A, rng() % 4), rng() % p.relators.size(), rng() % 2 ? 1 : -1});
        }
        std::optional<std::size_t> pos;
        if (rng() % 2) {
          pos = rng() % (p.relators.size() + 1);
        }
        m = tietze::AddRelator{free_reduce(A, evaluate(A, p.relators, d)), d, pos};
      }
      Presentation next = apply_move(p, m);
      ++valid;
      Presentation back = apply_move(next, inverse_move(p, m));
      inverted += back == p && print(back) == print(p);
      p = std::move(next);
    }
    // invalid T2 / T4
    for (int i = 0; i < 100; ++i) {
      Presentation q = zk(3);
      Alphabet const& A = q.alphabet;
      TietzeMove m;
      switch (i % 4) {
        case 0: m = tietze::RemoveGenerator{A.name(rng() % 3)}; break;  // each occurs in two relators
        case 1: m = tietze::RemoveGenerator{"zz"}; break;
        case 2: {
          std::size_t k = rng() % 3;
          m = tietze::RemoveRelator{k, {{random_word(rng, A, 2), k, 1}}};
          break;
        }
        default: {
          std::size_t k = rng() % 3;
          m = tietze::RemoveRelator{k, {{random_word(rng, A, 2), (k + 1) % 3, 1}}};
        }
      }
      ++invalid;
      try {
        apply_move(q, m);
      } catch (InvalidMove const&) {
        ++rejected;
      } catch (DerivationDoesNotReduce const&) {
        ++rejected;
      }
    }
    return {inverted == valid && valid == 500 && rejected == invalid,
            std::to_string(inverted) + "/" + std::to_string(valid) + " T1/T3 moves inverted byte-exactly, "
                + std::to_string(rejected) + "/" + std::to_string(invalid) + " invalid T2/T4 rejected"};
  }

  Outcome hnn_plumbing() {
    auto const        ep = gri::endomorphic_presentation();
    auto const        h  = hnn_presentation(ep);
    std::ifstream     in(std::string(GPQ_GOLDEN_DIR) + "/grigorchuk_hnn.gp");
    std::stringstream golden;
    golden << in.rdbuf();
    bool const byte_exact = in.is_open() && golden.str() == print(h);

    std::mt19937_64 rng(9);
    Alphabet const  S = stable_alphabet(ep);
    std::uint32_t const t = static_cast<std::uint32_t>(S.index_of("t").value());
    std::size_t     zero = 0;
    for (int i = 0; i < 1000; ++i) {
      Word u = random_word(rng, S, rng() % 30);
      long net = 0;
      for (auto l : u) {
        net += l.generator == t ? l.exponent : 0;
      }
      for (; net != 0; net += net > 0 ? -1 : 1) {
        u.push_back(Letter{t, static_cast<std::int8_t>(net > 0 ? -1 : 1)});
      }
      Word c = random_word(rng, S, rng() % 6);
      Word k = c + u + inverse(S, c);
      auto sums = exponent_sums(quotient_alphabet(ep), stable_projection(ep, k));
      zero += std::all_of(sums.begin(), sums.end(), [](long x) { return x == 0; });
    }
    // control: an unbalanced word must project to a nonzero exponent
    std::size_t nonzero = 0;
    for (int i = 0; i < 100; ++i) {
      Word u = random_word(rng, S, rng() % 10);
      u.push_back(Letter{t, 1});
      long net = 0;
      for (auto l : u) {
        net += l.generator == t ? l.exponent : 0;
      }
      auto sums = exponent_sums(quotient_alphabet(ep), stable_projection(ep, u));
      nonzero += net != 0 && sums == std::vector<long>{net};
      nonzero += net == 0 && sums == std::vector<long>{0};
    }
    bool ok = byte_exact && h.alphabet.size() == 4 && h.relators.size() == 8 && zero == 1000 && nonzero == 100;
    return {ok, std::string("golden ") + (byte_exact ? "byte-exact" : "MISMATCH") + ", "
                    + std::to_string(h.alphabet.size()) + " generators (a, c, d, t), "
                    + std::to_string(h.relators.size()) + " relators; " + std::to_string(zero)
                    + "/1000 kernel words with zero stable exponent, " + std::to_string(nonzero)
                    + "/100 control words match their t-count"};
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Grigorchuk verification", grigorchuk_verification},
      {"substitution coherence", substitution_coherence},
      {"decoder round trip", decoder_round_trip},
      {"loop generators within 2r+1, count E-V+1", loop_generator_bound},
      {"D8 ball witnesses and kill radius", d8_consistency},
      {"Z^k ball sizes", lattice_counts},
      {"induction and Hall composition", induction},
      {"Tietze moves", tietze_moves},
      {"HNN plumbing", hnn_plumbing},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

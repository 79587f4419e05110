#include "gpq/grigorchuk.hpp"

#include <algorithm>

#include "gpq/error.hpp"

namespace gpq::grigorchuk {

  std::string to_string(Variant v) {
    switch (v) {
      case Variant::abcd: return "abcd";
      case Variant::acd: return "acd";
      case Variant::abd: return "abd";
    }
    return "?";
  }

  std::string to_string(Family f) {
    return f == Family::w ? "w" : "z";
  }

  std::string to_string(Factor f) {
    return f == Factor::first ? "first" : "second";
  }

  std::string to_string(Level l) {
    switch (l) {
      case Level::free: return "free";
      case Level::klein: return "klein";
      case Level::certified: return "certified";
      case Level::none: return "none";
    }
    return "?";
  }

  Variant parse_variant(std::string const& s) {
    if (s == "abcd") {
      return Variant::abcd;
    }
    if (s == "acd") {
      return Variant::acd;
    }
    if (s == "abd") {
      return Variant::abd;
    }
    throw InvalidArgument("unknown variant '" + s + "' (expected abcd, acd or abd)");
  }

  Family parse_family(std::string const& s) {
    if (s == "w") {
      return Family::w;
    }
    if (s == "z") {
      return Family::z;
    }
    throw InvalidArgument("unknown family '" + s + "' (expected w or z)");
  }

  Alphabet alphabet(Variant v) {
    switch (v) {
      case Variant::abcd: return Alphabet::involutions({"a", "b", "c", "d"});
      case Variant::acd: return Alphabet::involutions({"a", "c", "d"});
      case Variant::abd: return Alphabet::involutions({"a", "b", "d"});
    }
    throw InvalidArgument("unknown variant");
  }

  namespace {
    Alphabet const& acd() {
      static Alphabet const A = alphabet(Variant::acd);
      return A;
    }

    Alphabet const& abd() {
      static Alphabet const A = alphabet(Variant::abd);
      return A;
    }

    Alphabet const& ad() {
      static Alphabet const A = Alphabet::involutions({"a", "d"});
      return A;
    }

    Word w(Alphabet const& A, std::string_view text) {
      return parse_word(A, text);
    }

    // Same letters, read in another alphabet by name.
    Word relabel(Word const& u, Alphabet const& from, Alphabet const& to) {
      Word out;
      for (Letter l : u) {
        out.push_back(make_letter(to, to.at(from.name(l.generator)), l.exponent));
      }
      return out;
    }
  }  // namespace

  Substitution sigma(Variant v) {
    Alphabet A = alphabet(v);
    switch (v) {
      case Variant::abcd:
        return Substitution("sigma", A, {w(A, "aca"), w(A, "d"), w(A, "b"), w(A, "c")});
      case Variant::acd: return Substitution("sigma", A, {w(A, "aca"), w(A, "cd"), w(A, "c")});
      case Variant::abd: return Substitution("sigma", A, {w(A, "abda"), w(A, "d"), w(A, "bd")});
    }
    throw InvalidArgument("unknown variant");
  }

  Word seed(Variant v, Family f) {
    Alphabet A = alphabet(v);
    if (f == Family::w) {
      return w(A, "(ad)^4");
    }
    return w(A, v == Variant::abd ? "(adabdabd)^4" : "(adacac)^4");
  }

  Word relator_family(Variant v, Family f, std::size_t n) {
    return iterate_substitution(sigma(v), seed(v, f), n);
  }

  std::string show(Variant v, Family f, std::size_t n, WordStyle style) {
    Alphabet const A    = alphabet(v);
    Word const     full = relator_family(v, f, n);
    Word const     root = full.subword(0, full.size() / 4);
    if (power(A, root, 4) != full) {
      throw Error("show: relator is not a fourth power");
    }
    return "(" + gpq::to_string(A, root, style) + ")^4";
  }

  Presentation presentation(Variant v, std::size_t depth) {
    Presentation p;
    p.name     = "grigorchuk_" + to_string(v);
    p.alphabet = alphabet(v);
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
      p.relators.push_back(Word{make_letter(p.alphabet, i), make_letter(p.alphabet, i)});
    }
    if (v == Variant::abcd) {
      p.relators.push_back(w(p.alphabet, "bcd"));
    }
    for (std::size_t n = 0; n <= depth; ++n) {
      p.relators.push_back(relator_family(v, Family::w, n));
      p.relators.push_back(relator_family(v, Family::z, n));
    }
    return p;
  }

  EndomorphicPresentation endomorphic_presentation() {
    EndomorphicPresentation ep;
    ep.name     = "grigorchuk";
    ep.alphabet = acd();
    // sigma^n(a^2) is freely trivial for n >= 1, so a^2 may sit in Q
    ep.q        = {w(acd(), "a a"), w(acd(), "c c"), w(acd(), "d d")};
    Substitution s = sigma(Variant::acd);
    s.name         = "t";
    ep.phi         = {s};
    ep.r           = {seed(Variant::acd, Family::w), seed(Variant::acd, Family::z)};
    return ep;
  }

  FiniteGroupTable d8() {
    return dihedral_group(8, "a", "d");
  }

  FiniteGroupTable d16() {
    return dihedral_group(16, "a", "c");
  }

  Homomorphism phi0() {
    return Homomorphism{ad(), acd(), {w(acd(), "aca"), w(acd(), "c")}};
  }

  Word phi1(Word const& x) {
    Word a = w(acd(), "a");
    return free_reduce(acd(), a + phi0()(x) + a);
  }

  std::vector<std::size_t> phi0_on_tables() {
    FiniteGroupTable const D8  = d8();
    FiniteGroupTable const D16 = d16();
    Alphabet const         ac  = D16.alphabet();
    Homomorphism const     f   = phi0();
    std::vector<std::size_t> image(D8.order());
    for (std::size_t x = 0; x < D8.order(); ++x) {
      Word u   = relabel(D8.word(x), D8.alphabet(), ad());
      image[x] = D16.evaluate(relabel(free_reduce(acd(), f(u)), acd(), ac));
    }
    std::vector<std::size_t> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error("phi0 is not injective on D8");
    }
    for (std::size_t x = 0; x < D8.order(); ++x) {
      for (std::size_t y = 0; y < D8.order(); ++y) {
        if (image[D8.mul(x, y)] != D16.mul(image[x], image[y])) {
          throw Error("phi0 is not multiplicative on D8");
        }
      }
    }
    return image;
  }

  namespace {
    Word conjugate_d(Word const& u) {
      Word d = w(acd(), "d");
      return free_reduce(acd(), u + d + inverse(acd(), u));
    }
  }  // namespace

  Word psi0_inverse(Word const& x) {
    return conjugate_d(free_reduce(acd(), phi0()(x)));
  }

  Word psi1_inverse(Word const& x) {
    return conjugate_d(free_reduce(acd(), phi1(x) + w(acd(), "a")));
  }

  Word phi0_hat(Word const& u) {
    if (!is_positive(u)) {
      throw NegativeExponent("phi0_hat: word has an inverse letter");
    }
    Homomorphism h{abd(), acd(), {w(acd(), "aca"), w(acd(), "d"), w(acd(), "c")}};
    return free_reduce(acd(), h(u));
  }

  Word translate_bd_to_cd(Word const& u) {
    if (!is_positive(u)) {
      throw NegativeExponent("translate_bd_to_cd: word has an inverse letter");
    }
    Homomorphism h{abd(), acd(), {w(acd(), "a"), w(acd(), "cd"), w(acd(), "d")}};
    return free_reduce(acd(), h(u));
  }

  Word translate_cd_to_bd(Word const& u) {
    if (!is_positive(u)) {
      throw NegativeExponent("translate_cd_to_bd: word has an inverse letter");
    }
    Homomorphism h{acd(), abd(), {w(abd(), "a"), w(abd(), "bd"), w(abd(), "d")}};
    return free_reduce(abd(), h(u));
  }

  Word klein_normal_form(Word const& u) {
    std::size_t const a = acd().at("a"), c = acd().at("c"), d = acd().at("d");
    // Alternating a and nontrivial Klein blocks; a block is a bit pair (c, d).
    std::vector<int> parts;  // -1 for a, otherwise block bits
    auto push = [&](int p) {
      if (p == 0) {
        return;
      }
      if (!parts.empty() && (parts.back() == -1) == (p == -1)) {
        int q = parts.back();
        parts.pop_back();
        // the part now on top is of the other kind, so no further merge
        if (p != -1 && (q ^ p) != 0) {
          parts.push_back(q ^ p);
        }
        return;
      }
      parts.push_back(p);
    };
    for (Letter l : u) {
      if (l.generator == a) {
        push(-1);
      } else if (l.generator == c) {
        push(1);
      } else if (l.generator == d) {
        push(2);
      } else {
        throw InvalidArgument("klein_normal_form: word is not over {a, c, d}");
      }
    }
    Word out;
    for (int p : parts) {
      if (p == -1) {
        out.push_back(make_letter(acd(), a));
        continue;
      }
      if (p & 1) {
        out.push_back(make_letter(acd(), c));
      }
      if (p & 2) {
        out.push_back(make_letter(acd(), d));
      }
    }
    return out;
  }

  SplitExtensionData split_data(std::size_t depth) {
    SplitExtensionData data{presentation(Variant::abd, depth), d8(), {}, {}};
    FiniteGroupTable const& F = data.quotient;
    Alphabet const&         A = data.group.alphabet;
    data.projection           = {F.generator(F.alphabet().at("a")), F.identity(), F.generator(F.alphabet().at("d"))};
    for (std::size_t f = 0; f < F.order(); ++f) {
      data.lifts.push_back(relabel(F.word(f), F.alphabet(), A));
    }
    return data;
  }

  namespace {
    // phi_0 of the canonical word of a D8 element.
    Word phi0_of(FiniteGroupTable const& F, std::size_t x) {
      return free_reduce(acd(), phi0()(relabel(F.word(x), F.alphabet(), ad())));
    }

    Word prefix(Factor f) {
      return f == Factor::first ? w(acd(), "a") : Word{};
    }

    // Unreduced product of the blocks (pi U) d (pi U)^-1.
    Word transport_unreduced(SplitExtensionData const& d, YWord const& t, Factor factor) {
      std::size_t const b = d.group.alphabet.index_of("b").value_or(d.group.alphabet.size());
      Word              out;
      for (auto y : t) {
        if (y.base != b) {
          throw InvalidArgument("transport_induced_relation: expected y-letters over b");
        }
        Word u = prefix(factor) + phi0_of(d.quotient, y.conjugator);
        out += u + w(acd(), "d") + inverse(acd(), u);
      }
      return out;
    }
  }  // namespace

  Word transport_induced_relation(SplitExtensionData const& d, YWord const& t, Factor factor) {
    return free_reduce(acd(), transport_unreduced(d, t, factor));
  }

  Word certificate_relator() {
    return free_reduce(acd(), phi0()(w(ad(), "(ad)^4")));
  }

  std::string VerificationReport::case_id() const {
    return "n=" + std::to_string(n) + " " + grigorchuk::to_string(family) + " "
           + grigorchuk::to_string(factor) + " x=" + x_name;
  }

  namespace {
    struct Insertion {
      Word conjugator;  // relative to the insertion point
      int  exponent = 0;
    };

    // A D8-trivial reduced word over {a, d} is (ad)^{4m} or (da)^{4m}; the
    // latter is d (ad)^{4m} d, and phi_0(d) = c.
    Insertion as_rho_power(Word const& delta) {
      if (delta.empty()) {
        return {{}, 0};
      }
      if (delta.size() % 8 != 0) {
        throw Error("certificate: prefix discrepancy is not a power of (ad)^4");
      }
      int  m     = static_cast<int>(delta.size() / 8);
      bool ahead = ad().name(delta[0].generator) == "a";
      Word model = power(ad(), w(ad(), ahead ? "ad" : "da"), 4L * m);
      if (model != delta) {
        throw Error("certificate: prefix discrepancy is not a power of (ad)^4");
      }
      return {ahead ? Word{} : w(acd(), "c"), m};
    }

    struct Built {
      Word       transported;
      Word       expected;
      Derivation certificate;
    };

    Built build(std::size_t n, Family family, Factor factor, std::size_t x) {
      SplitExtensionData const data = split_data(0);
      FiniteGroupTable const&  F    = data.quotient;
      Alphabet const&          G    = data.group.alphabet;
      std::size_t const        b    = G.at("b");

      Word const wn  = relator_family(Variant::abd, family, n);
      Word const wn1 = relator_family(Variant::abd, family, n + 1);
      YWord      t   = conjugate_relation(basic_relation(wn, data), x, F);

      Built out;
      out.transported = transport_induced_relation(data, t, factor);
      Word const pi   = prefix(factor);
      Word const C    = free_reduce(acd(), pi + phi0_of(F, x));
      out.expected    = free_reduce(acd(), C + translate_bd_to_cd(wn1) + inverse(acd(), C));

      // Walk the unreduced transported word block by block, inserting
      // phi_0(delta_j) after pi U_j and its inverse before U_j^-1 pi^-1, then
      // the tail pi phi_0(x S x^-1) pi^-1.  An insertion of g rho^m g^-1 at
      // prefix P multiplies the word on the left by (P g) rho^m (P g)^-1.
      Word const  xw = relabel(F.word(x), F.alphabet(), ad());
      Word        verbatim;  // a,d letters of w_n read so far
      Word        current;
      std::size_t k = 0;
      std::vector<ConjugateFactor> applied;
      auto insert = [&](Insertion ins, Word const& position, bool invert) {
        if (ins.exponent == 0) {
          return;
        }
        Word g = free_reduce(acd(), position + ins.conjugator);
        for (int i = 0; i < ins.exponent; ++i) {
          applied.push_back({g, 0, invert ? -1 : 1});
        }
      };
      auto phi = [&](Word const& u) { return free_reduce(acd(), phi0()(u)); };
      for (Letter l : wn) {
        if (l.generator != b) {
          verbatim.push_back(make_letter(ad(), ad().at(G.name(l.generator))));
          continue;
        }
        std::size_t const cj = t.at(k++).conjugator;
        Word const        Uj = pi + phi0_of(F, cj);
        Word const delta = free_reduce(ad(), inverse(ad(), relabel(F.word(cj), F.alphabet(), ad())) + xw + verbatim);
        Insertion ins = as_rho_power(delta);
        Word      D   = ins.exponent == 0 ? Word{} : phi(delta);
        current += Uj;
        insert(ins, current, false);
        current += D + w(acd(), "d");
        insert(ins, current, true);
        current += inverse(acd(), D) + inverse(acd(), Uj);
      }
      Word const tail = free_reduce(ad(), xw + verbatim + inverse(ad(), xw));
      Insertion  ins  = as_rho_power(tail);
      insert(ins, current + pi, false);
      out.certificate.assign(applied.rbegin(), applied.rend());
      return out;
    }
  }  // namespace

  VerificationReport verify_sigma_identity(std::size_t n, Family family, Factor factor, std::size_t x) {
    FiniteGroupTable const F = d8();
    if (x >= F.order()) {
      throw InvalidArgument("verify_sigma_identity: x is not an element of D8");
    }
    VerificationReport r;
    r.n           = n;
    r.family      = family;
    r.factor      = factor;
    r.x           = x;
    r.x_name      = F.name(x);
    Built b       = build(n, family, factor, x);
    r.transported = std::move(b.transported);
    r.expected    = std::move(b.expected);
    r.certificate = std::move(b.certificate);
    r.free_equal  = r.transported == r.expected;
    r.klein_equal = klein_normal_form(r.transported) == klein_normal_form(r.expected);
    std::vector<Word> rho{certificate_relator()};
    r.certified = derives(acd(), rho, r.certificate,
                          free_reduce(acd(), r.expected + inverse(acd(), r.transported)));
    r.level = r.free_equal ? Level::free : r.klein_equal ? Level::klein : r.certified ? Level::certified : Level::none;
    r.equal = r.level != Level::none;
    return r;
  }

  bool replays(VerificationReport const& r) {
    VerificationReport again = verify_sigma_identity(r.n, r.family, r.factor, r.x);
    return again.transported == r.transported && again.expected == r.expected
           && again.certificate == r.certificate && again.level == r.level && again.equal == r.equal;
  }

  FullVerification run_full_verification(std::size_t max_n) {
    FullVerification out;
    out.max_n = max_n;
    out.log.push_back("n=0 skipped: w_0 = (ad)^4 has no b, so its induced relations are empty");
    std::size_t const order = d8().order();
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (Family f : {Family::w, Family::z}) {
        for (Factor side : {Factor::first, Factor::second}) {
          for (std::size_t x = 0; x < order; ++x) {
            auto r = verify_sigma_identity(n, f, side, x);
            switch (r.level) {
              case Level::free: ++out.free_count; break;
              case Level::klein: ++out.klein_count; break;
              case Level::certified: ++out.certified_count; break;
              case Level::none: ++out.failed; break;
            }
            out.reports.push_back(std::move(r));
          }
        }
      }
    }
    return out;
  }

}  // namespace gpq::grigorchuk

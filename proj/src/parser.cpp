#include "gpq/parser.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "gpq/error.hpp"

namespace gpq {

  namespace {
    enum class Tok { ident, integer, symbol, arrow, end };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    std::vector<Token> lex(std::string_view src) {
      std::vector<Token> out;
      std::size_t        line = 1, col = 1, i = 0;
      auto               advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
          if (src[i] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
        }
      };
      while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
          advance(1);
        } else if (c == '#') {
          while (i < src.size() && src[i] != '\n') {
            advance(1);
          }
        } else if (std::isalpha(c) || c == '_') {
          std::size_t j = i;
          while (j < src.size()
                 && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
            ++j;
          }
          out.push_back({Tok::ident, std::string(src.substr(i, j - i)), line, col});
          advance(j - i);
        } else if (std::isdigit(c)) {
          std::size_t j = i;
          while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
            ++j;
          }
          out.push_back({Tok::integer, std::string(src.substr(i, j - i)), line, col});
          advance(j - i);
        } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
          out.push_back({Tok::arrow, "->", line, col});
          advance(2);
        } else if (std::string_view(";,!()^':-").find(static_cast<char>(c)) != std::string_view::npos) {
          out.push_back({Tok::symbol, std::string(1, static_cast<char>(c)), line, col});
          advance(1);
        } else {
          throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
        }
      }
      out.push_back({Tok::end, "", line, col});
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::string_view src) : _toks(lex(src)) {}

      ParsedDocument document() {
        while (peek().kind != Tok::end) {
          statement();
        }
        if (!_alphabet) {
          throw ParseError("missing 'gens' statement", peek().line, peek().column);
        }
        if (_endo) {
          EndomorphicPresentation ep{_name, *_alphabet, std::move(_q), std::move(_phi), std::move(_r)};
          return ep;
        }
        PresentationFile f{Presentation{_name, *_alphabet, std::move(_relators)},
                           std::move(_subs),
                           std::move(_rules)};
        return f;
      }

      Word word_only(Alphabet const& alphabet) {
        _alphabet = alphabet;
        Word w    = word();
        if (peek().kind != Tok::end) {
          fail("unexpected '" + peek().text + "' in word");
        }
        return w;
      }

     private:
      Token const& peek(std::size_t k = 0) const {
        return _toks[std::min(_pos + k, _toks.size() - 1)];
      }
      Token const& next() {
        Token const& t = _toks[_pos];
        if (_pos + 1 < _toks.size()) {
          ++_pos;
        }
        return t;
      }
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, peek().line, peek().column);
      }
      [[noreturn]] void fail_at(Token const& t, std::string const& msg) const {
        throw ParseError(msg, t.line, t.column);
      }
      bool is_symbol(char c, std::size_t k = 0) const {
        return peek(k).kind == Tok::symbol && peek(k).text[0] == c;
      }
      void expect_symbol(char c) {
        if (!is_symbol(c)) {
          fail(std::string("expected '") + c + "'");
        }
        next();
      }
      // ';' is optional at the end of the input.
      void end_statement() {
        if (peek().kind == Tok::end) {
          return;
        }
        expect_symbol(';');
      }
      std::string identifier(std::string const& what) {
        if (peek().kind != Tok::ident) {
          fail("expected " + what);
        }
        return next().text;
      }
      Alphabet const& alphabet() const {
        if (!_alphabet) {
          fail("'gens' must come before any word");
        }
        return *_alphabet;
      }

      void statement() {
        Token const kw = peek();
        if (kw.kind != Tok::ident) {
          fail("expected a statement keyword");
        }
        next();
        std::string const& k = kw.text;
        if (k == "name") {
          _name = identifier("a name");
          end_statement();
        } else if (k == "endo") {
          if (_alphabet) {
            fail_at(kw, "'endo' must introduce the generators");
          }
          _endo = true;
          if (identifier("'gens'") != "gens") {
            fail_at(kw, "expected 'gens' after 'endo'");
          }
          gens();
        } else if (k == "gens") {
          if (_alphabet) {
            fail_at(kw, "duplicate 'gens' statement");
          }
          gens();
        } else if (k == "rel" && !_endo) {
          _relators.push_back(word());
          end_statement();
        } else if (k == "rule" && !_endo) {
          Word lhs = word();
          if (peek().kind != Tok::arrow) {
            fail("expected '->' in rule");
          }
          next();
          Word rhs = word();
          if (lhs.empty()) {
            fail_at(kw, "rule with empty left-hand side");
          }
          _rules.push_back({std::move(lhs), std::move(rhs)});
          end_statement();
        } else if (k == "sub" && !_endo) {
          _subs.push_back(substitution(kw));
        } else if (k == "Q" && _endo) {
          _q.push_back(word());
          end_statement();
        } else if (k == "R" && _endo) {
          _r.push_back(word());
          end_statement();
        } else if (k == "phi" && _endo) {
          _phi.push_back(substitution(kw));
        } else {
          fail_at(kw, "unknown statement '" + k + "'");
        }
      }

      void gens() {
        std::vector<std::string> names;
        std::vector<bool>        flags;
        do {
          if (!names.empty()) {
            next();  // ','
          }
          Token const t = peek();
          std::string n = identifier("a generator name");
          for (auto const& m : names) {
            if (m == n) {
              fail_at(t, "duplicate generator '" + n + "'");
            }
          }
          bool inv = false;
          if (is_symbol('!')) {
            next();
            inv = true;
          }
          names.push_back(n);
          flags.push_back(inv);
        } while (is_symbol(','));
        _alphabet = Alphabet(std::move(names), std::move(flags));
        end_statement();
      }

      Substitution substitution(Token const& kw) {
        std::string name = identifier("a substitution name");
        expect_symbol(':');
        Alphabet const&                  A = alphabet();
        std::vector<std::optional<Word>> images(A.size());
        while (true) {
          Token const t      = peek();
          std::string letter = identifier("a letter");
          auto        g      = A.index_of(letter);
          if (!g) {
            fail_at(t, "unknown letter '" + letter + "'");
          }
          if (images[*g]) {
            fail_at(t, "letter '" + letter + "' mapped twice");
          }
          if (peek().kind != Tok::arrow) {
            fail("expected '->'");
          }
          next();
          images[*g] = word();
          // another "letter -> ..." clause follows a ';'
          if (is_symbol(';') && peek(1).kind == Tok::ident && peek(2).kind == Tok::arrow) {
            next();
            continue;
          }
          break;
        }
        end_statement();
        std::vector<Word> imgs;
        for (std::size_t g = 0; g < A.size(); ++g) {
          if (!images[g]) {
            fail_at(kw, "substitution '" + name + "' has no image for '" + A.name(g) + "'");
          }
          imgs.push_back(*images[g]);
        }
        try {
          return Substitution(name, A, std::move(imgs));
        } catch (Error const& e) {
          fail_at(kw, e.what());
        }
      }

      bool word_ends() const {
        auto const& t = peek();
        return t.kind == Tok::end || t.kind == Tok::arrow || is_symbol(';') || is_symbol(')')
               || is_symbol(',');
      }

      Word word() {
        Word w;
        while (!word_ends()) {
          w += atom();
        }
        return w;
      }

      Word letters(Token const& t) {
        Alphabet const& A = alphabet();
        if (auto g = A.index_of(t.text)) {
          return Word{make_letter(A, *g, 1)};
        }
        if (A.single_character()) {
          Word w;
          for (char c : t.text) {
            auto g = A.index_of(std::string(1, c));
            if (!g) {
              fail_at(t, "unknown letter '" + std::string(1, c) + "' in '" + t.text + "'");
            }
            w.push_back(make_letter(A, *g, 1));
          }
          return w;
        }
        fail_at(t, "unknown letter '" + t.text + "'");
      }

      Word atom() {
        Alphabet const& A = alphabet();
        Word            w;
        if (is_symbol('(')) {
          next();
          w = word();
          expect_symbol(')');
        } else if (peek().kind == Tok::ident) {
          w = letters(next());
        } else {
          fail("unexpected '" + peek().text + "' in word");
        }
        while (true) {
          if (is_symbol('\'')) {
            next();
            w = inverse(A, w);
          } else if (is_symbol('^')) {
            next();
            bool neg = false;
            if (is_symbol('-')) {
              next();
              neg = true;
            }
            if (peek().kind != Tok::integer) {
              fail("expected an exponent");
            }
            Token const t = next();
            long        k = 0;
            try {
              k = std::stol(t.text);
            } catch (std::exception const&) {
              fail_at(t, "exponent out of range");
            }
            if (k > 1'000'000) {
              fail_at(t, "exponent out of range");
            }
            w = power(A, w, neg ? -k : k);
          } else {
            break;
          }
        }
        return w;
      }

      std::vector<Token>        _toks;
      std::size_t               _pos = 0;
      std::string               _name;
      std::optional<Alphabet>   _alphabet;
      bool                      _endo = false;
      std::vector<Word>         _relators;
      std::vector<RewriteRule>  _rules;
      std::vector<Substitution> _subs;
      std::vector<Word>         _q, _r;
      std::vector<Substitution> _phi;
    };

    std::string gens_line(Alphabet const& A) {
      std::string s = "gens ";
      for (std::size_t g = 0; g < A.size(); ++g) {
        if (g > 0) {
          s += ", ";
        }
        s += A.name(g);
        if (A.involutive(g)) {
          s += '!';
        }
      }
      return s + ";\n";
    }

    std::string word_text(Alphabet const& A, Word const& w) {
      return to_string_folded(A, w, WordStyle::spaced);
    }

    std::string substitution_line(std::string const& keyword, Substitution const& s) {
      std::string out = keyword + " " + s.name + ":";
      for (std::size_t g = 0; g < s.alphabet.size(); ++g) {
        out += " " + s.alphabet.name(g) + " -> " + word_text(s.alphabet, s.images[g]) + ";";
      }
      return out + "\n";
    }

    // "rel ;" rather than "rel;" so the empty word stays visible.
    std::string statement(std::string const& keyword, std::string const& body) {
      return keyword + " " + body + ";\n";
    }
  }  // namespace

  ParsedDocument parse_document(std::string_view text) {
    return Parser(text).document();
  }

  PresentationFile parse_presentation(std::string_view text) {
    auto d = parse_document(text);
    if (auto* f = std::get_if<PresentationFile>(&d)) {
      return std::move(*f);
    }
    throw ParseError("expected a presentation, found an endomorphic presentation", 1, 1);
  }

  EndomorphicPresentation parse_endomorphic(std::string_view text) {
    auto d = parse_document(text);
    if (auto* ep = std::get_if<EndomorphicPresentation>(&d)) {
      return std::move(*ep);
    }
    throw ParseError("expected an endomorphic presentation ('endo gens ...')", 1, 1);
  }

  ParsedDocument read_document(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open '" + path + "'", 0, 0);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
  }

  Word parse_word(Alphabet const& alphabet, std::string_view text) {
    return Parser(text).word_only(alphabet);
  }

  std::string print(Presentation const& p) {
    return print(PresentationFile{p, {}, {}});
  }

  std::string print(PresentationFile const& f) {
    Alphabet const& A   = f.presentation.alphabet;
    std::string     out;
    if (!f.presentation.name.empty()) {
      out += "name " + f.presentation.name + ";\n";
    }
    out += gens_line(A);
    for (auto const& r : f.presentation.relators) {
      out += statement("rel", word_text(A, r));
    }
    for (auto const& r : f.rules) {
      out += statement("rule", word_text(A, r.lhs) + " -> " + word_text(A, r.rhs));
    }
    for (auto const& s : f.substitutions) {
      out += substitution_line("sub", s);
    }
    return out;
  }

  std::string print(EndomorphicPresentation const& ep) {
    Alphabet const& A   = ep.alphabet;
    std::string     out;
    if (!ep.name.empty()) {
      out += "name " + ep.name + ";\n";
    }
    out += "endo " + gens_line(A);
    for (auto const& w : ep.q) {
      out += statement("Q", word_text(A, w));
    }
    for (auto const& w : ep.r) {
      out += statement("R", word_text(A, w));
    }
    for (auto const& s : ep.phi) {
      out += substitution_line("phi", s);
    }
    return out;
  }

  std::string print(ParsedDocument const& d) {
    return std::visit([](auto const& x) { return print(x); }, d);
  }

}  // namespace gpq

// Reader and canonical printer for the presentation file format.
//
//   # comment
//   name z2;
//   gens a, b;             # "a!" marks an involutive letter
//   rel a b a' b';         # x' is the inverse, (u)^k repeats
//   rule b a -> a b;       # rewriting rule; an empty side is the empty word
//   sub sigma: a -> a c a; c -> c d; d -> c;
//
// An endomorphic presentation starts with "endo gens ...;" and uses
// "Q word;", "R word;" and "phi t: a -> ...; ...;" statements.

#ifndef GPQ_PARSER_HPP_
#define GPQ_PARSER_HPP_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gpq/endomorphic.hpp"
#include "gpq/rewriting.hpp"
#include "gpq/words.hpp"

namespace gpq {

  struct PresentationFile {
    Presentation              presentation;
    std::vector<Substitution> substitutions;
    std::vector<RewriteRule>  rules;

    bool operator==(PresentationFile const&) const = default;
  };

  using ParsedDocument = std::variant<PresentationFile, EndomorphicPresentation>;

  //! Throws ParseError with the line and column of the offending token.
  ParsedDocument parse_document(std::string_view text);
  //! As parse_document, but rejects endomorphic files.
  PresentationFile parse_presentation(std::string_view text);
  EndomorphicPresentation parse_endomorphic(std::string_view text);
  ParsedDocument read_document(std::string const& path);

  std::string print(PresentationFile const& f);
  std::string print(Presentation const& p);
  std::string print(EndomorphicPresentation const& ep);
  std::string print(ParsedDocument const& d);

}  // namespace gpq

#endif  // GPQ_PARSER_HPP_

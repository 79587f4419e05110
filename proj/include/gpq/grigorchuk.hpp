// The Grigorchuk group pipeline: the three Lysenok presentation variants and
// their substitutions, the dihedral quotients G/B = <a,d> and G/A = <a,c>, the
// maps phi_0, phi_1 and psi^-1, and verification that relations induced on
// B x B transport back to conjugates of relations already in P_G.

#ifndef GPQ_GRIGORCHUK_HPP_
#define GPQ_GRIGORCHUK_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "gpq/endomorphic.hpp"
#include "gpq/group_backends.hpp"
#include "gpq/induction.hpp"
#include "gpq/tietze.hpp"
#include "gpq/words.hpp"

namespace gpq::grigorchuk {

  enum class Variant { abcd, acd, abd };
  enum class Family { w, z };
  //! Coordinate of B x B: `first` is (., 1), transported through phi_1;
  //! `second` is (1, .), transported through phi_0.
  enum class Factor { first, second };

  std::string to_string(Variant v);
  std::string to_string(Family f);
  std::string to_string(Factor f);
  Variant     parse_variant(std::string const& s);
  Family      parse_family(std::string const& s);

  //! Involutive letters in the order a, b, c, d restricted to the variant.
  Alphabet     alphabet(Variant v);
  Substitution sigma(Variant v);
  //! (ad)^4 for w; (adacac)^4, or (adabdabd)^4 over {a,b,d}, for z.
  Word         seed(Variant v, Family f);
  //! sigma^n(seed), unreduced.
  Word         relator_family(Variant v, Family f, std::size_t n);
  //! relator_family printed as (sigma^n(u))^4 where the seed is u^4.
  std::string show(Variant v, Family f, std::size_t n, WordStyle style = WordStyle::compact);
  //! Squares of the generators (and bcd for the four-letter variant), then
  //! both families for n = 0..depth.
  Presentation presentation(Variant v, std::size_t depth);

  //! <a, c, d | a^2, c^2, d^2 | t = sigma_acd | (ad)^4, (adacac)^4>.
  EndomorphicPresentation endomorphic_presentation();

  //! D8 on {a, d} and D16 on {a, c}.
  FiniteGroupTable d8();
  FiniteGroupTable d16();

  //! phi_0: d -> c, a -> aca, from words over {a,d} to words over {a,c,d}.
  Homomorphism phi0();
  //! phi_1(x) = a phi_0(x) a.
  Word phi1(Word const& x);
  //! Images of the D8 elements under phi_0, as elements of D16.  Throws
  //! Error unless phi_0 is an injective homomorphism on the tables.
  std::vector<std::size_t> phi0_on_tables();

  //! psi_0^-1(1, ^x b) = ^{phi_0(x)} d and psi_1^-1(^x b, 1) = ^{phi_1(x) a} d,
  //! expanded as u d u^-1 and reduced.  x is a word over {a,d}.
  Word psi0_inverse(Word const& x);
  Word psi1_inverse(Word const& x);

  //! Letterwise a -> aca, b -> d, d -> c on positive words over {a,b,d}, reduced.
  Word phi0_hat(Word const& w);
  //! b -> cd (and the reverse c -> bd), involutively reduced.
  Word translate_bd_to_cd(Word const& w);
  Word translate_cd_to_bd(Word const& w);

  //! Normal form in the free product of Z/2 = <a> and the Klein group
  //! <c, d>: blocks of {c, d} between a's are reduced to one of e, c, d, cd.
  Word klein_normal_form(Word const& w);

  //! G/B data over P_G(a,b,d) truncated at `depth`: p(a) = a, p(d) = d,
  //! p(b) = e, lifts are the canonical D8 words.
  SplitExtensionData split_data(std::size_t depth);

  //! Each ^x b becomes u d u^-1 with u = phi_0(x) for the second factor and
  //! u = a phi_0(x) for the first; the product is reduced.
  Word transport_induced_relation(SplitExtensionData const& d, YWord const& t, Factor factor);

  //! Equality level at which a transported relation meets its expected form:
  //! letter-exact after free reduction, equal in Z/2 * V4 after Klein
  //! normalisation, or equal after multiplying by the recorded product of
  //! conjugates of rho = phi_0((ad)^4) = (acac)^4, itself sigma_acd((ad)^4).
  enum class Level { free, klein, certified, none };
  std::string to_string(Level l);

  struct VerificationReport {
    std::size_t n = 0;
    Family      family = Family::w;
    Factor      factor = Factor::second;
    std::size_t x = 0;  // D8 element
    std::string x_name;
    Word        transported;
    Word        expected;
    bool        free_equal  = false;
    bool        klein_equal = false;
    //! expected = evaluate(certificate) * transported, over relators {rho}.
    Derivation  certificate;
    bool        certified = false;
    Level       level     = Level::none;
    bool        equal     = false;

    std::string case_id() const;
  };

  //! The relator rho used by certificates, over alphabet(Variant::acd).
  Word certificate_relator();

  VerificationReport verify_sigma_identity(std::size_t n, Family family, Factor factor, std::size_t x);
  //! Recomputes the case from scratch and compares every word and factor.
  bool replays(VerificationReport const& r);

  struct FullVerification {
    std::size_t                     max_n = 0;
    std::vector<VerificationReport> reports;
    std::vector<std::string>        log;
    std::size_t                     free_count      = 0;
    std::size_t                     klein_count     = 0;
    std::size_t                     certified_count = 0;
    std::size_t                     failed          = 0;

    bool all_equal() const noexcept {
      return failed == 0;
    }
  };

  //! n in [1, max_n] x {w, z} x {first, second} x D8, in that nesting order.
  FullVerification run_full_verification(std::size_t max_n);

}  // namespace gpq::grigorchuk

#endif  // GPQ_GRIGORCHUK_HPP_

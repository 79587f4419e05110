// JSON views of results.  Field order is fixed so that identical inputs give
// byte-identical output.

#ifndef GPQ_REPORT_HPP_
#define GPQ_REPORT_HPP_

#include <optional>

#include "json.hpp"

#include "gpq/cayley_ball.hpp"
#include "gpq/grigorchuk.hpp"
#include "gpq/induction.hpp"
#include "gpq/rewriting.hpp"
#include "gpq/tietze.hpp"

namespace gpq::report {

  using Json = nlohmann::ordered_json;

  Json word(Alphabet const& a, Word const& w);
  Json derivation(Alphabet const& a, Derivation const& d);

  Json ball(Ball const& b);
  Json loops(Ball const& b, LoopClassSet const& l);
  Json null_homotopy(Alphabet const& a, NullHomotopy const& h);
  Json kill_radius(Alphabet const& a, KillRadius const& k, std::size_t r, std::size_t R_max, std::size_t cap);

  Json trace(Alphabet const& a, ReductionTrace const& t);
  Json confluence(Alphabet const& a, ConfluenceCertificate const& c);
  Json ball_witness(Alphabet const& a, BallWitnessReport const& w);

  Json induced(SplitExtensionData const& d, InducedPresentation const& p);

  Json verification(grigorchuk::VerificationReport const& r);
  Json verification(grigorchuk::FullVerification const& v);

}  // namespace gpq::report

#endif  // GPQ_REPORT_HPP_

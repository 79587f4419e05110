// Metric balls and spheres in the Cayley 2-complex of a presentation, loops
// generating their fundamental groups, bounded null-homotopy searches built on
// them (kill radius, pi1-bounded balls, isodiametric estimates) and geodesic
// 0-combings.

#ifndef GPQ_CAYLEY_BALL_HPP_
#define GPQ_CAYLEY_BALL_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gpq/group_backends.hpp"
#include "gpq/words.hpp"

namespace gpq {

  inline constexpr std::size_t no_vertex = std::numeric_limits<std::size_t>::max();

  struct BallEdge {
    std::size_t from   = 0;
    Letter      letter;
    std::size_t to     = 0;
  };

  struct BallCell {
    std::size_t base    = 0;
    std::size_t relator = 0;
  };

  //! Vertices are oracle normal forms in shortlex order.  An undirected edge
  //! is stored once: along its positive letter, or for an involutive letter
  //! from the smaller endpoint.  A cell is kept when every vertex on its
  //! boundary lies in the vertex set.
  struct Ball {
    Presentation             presentation;
    Word                     basepoint;
    std::size_t              radius = 0;
    bool                     sphere = false;
    std::vector<Word>        vertices;
    std::vector<std::size_t> distance;
    std::vector<BallEdge>    edges;
    std::vector<BallCell>    cells;
    //! alphabet_letters(presentation.alphabet)
    std::vector<Letter>      letters;
    //! neighbours[v * letters.size() + i]: end of the letter-i edge at v, or
    //! no_vertex when that endpoint is not in the set.
    std::vector<std::size_t> neighbours;
    //! Same layout; index into `edges`.
    std::vector<std::size_t> edge_at;

    std::optional<std::size_t> index_of(Word const& normal_form) const;
    //! Vertex where the path w from `from` ends, or no_vertex once it leaves.
    std::size_t walk(std::size_t from, Word const& w) const;
    //! Closed path from the basepoint through vertices of the set only.
    bool contains_loop(Word const& w) const;
    std::size_t root() const;
  };

  //! Throws OracleMismatch when the oracle alphabet differs from the
  //! presentation's or some relator is not trivial under the oracle.
  Ball build_ball(WordOracle const& oracle, Presentation const& p, std::size_t r, Word const& basepoint = {});
  Ball build_sphere(WordOracle const& oracle, Presentation const& p, std::size_t r, Word const& basepoint = {});

  struct LoopClassSet {
    std::size_t              root = 0;
    //! Tree edge into each vertex (no_vertex at the root).
    std::vector<std::size_t> parent_edge;
    std::vector<Word>        tree_paths;
    //! One loop per non-tree edge: path(u) x path(v)^-1.
    std::vector<std::size_t> non_tree_edges;
    std::vector<Word>        generators;
  };

  //! BFS spanning tree from the basepoint (or the first vertex of a sphere),
  //! letters tried in shortlex order.  Throws Disconnected.
  LoopClassSet pi1_generators(Ball const& b);

  struct HomotopyMove {
    enum class Kind { free_reduce, relator };
    Kind        kind     = Kind::free_reduce;
    std::size_t position = 0;
    std::size_t removed  = 0;  // letters replaced
    Word        inserted;
    std::size_t relator = 0;   // index into the searched relator list
    Word        after;
  };

  struct NullHomotopy {
    Word                      loop;
    std::vector<HomotopyMove> moves;

    //! Each move is what it claims, every loop along the way (including the
    //! unreduced ones) is closed inside `region`, and the end is empty.
    bool replays(Ball const& region, std::vector<Word> const& relators) const;
  };

  struct SearchResult {
    std::optional<NullHomotopy> witness;
    std::size_t                 states  = 0;
    bool                        cap_hit = false;  // false with no witness: space exhausted

    bool found() const noexcept {
      return witness.has_value();
    }
  };

  //! Breadth-first search over freely reduced loops.  A move replaces a
  //! nonempty subword u by v^-1 where u v is a cyclic rotation of a relator
  //! or its inverse, then free-reduces.  Loops never leave `region` and never
  //! exceed |loop| + the longest relator.  At most `state_cap` loops are
  //! visited.  Throws PreconditionFailed if `loop` is not closed in `region`.
  SearchResult null_homotopy_search(Ball const&              region,
                                    std::vector<Word> const& relators,
                                    Word const&              loop,
                                    std::size_t              state_cap = 200'000);

  struct KillRadius {
    std::optional<std::size_t> radius;  // nullopt: exhausted up to R_max
    std::size_t                generators = 0;
    std::vector<NullHomotopy>  witnesses;
    std::size_t                states = 0;
  };

  //! Smallest R in [r, R_max] such that every generator of pi1(B(r)) has a
  //! null-homotopy inside B(R) using the relators of p.
  KillRadius pi1_kill_radius(WordOracle const&   oracle,
                             Presentation const& p,
                             std::size_t         r,
                             std::size_t         R_max,
                             std::size_t         state_cap = 200'000);

  struct BoundedBallCheck {
    bool              certified = false;  // false: not found within the bounds
    //! Cyclically reduced identity loops of length < C, used as relators.
    std::vector<Word> short_loops;
    std::size_t       generators = 0;
    std::size_t       search_radius = 0;
    std::vector<NullHomotopy> witnesses;
  };

  //! Is every generator of pi1(B(r)) a product of conjugates of loops shorter
  //! than C?  Searched inside B(r + C).
  BoundedBallCheck check_pi1_bounded_balls(WordOracle const&   oracle,
                                           Presentation const& p,
                                           std::size_t         r,
                                           std::size_t         C,
                                           std::size_t         state_cap = 200'000);

  struct Isodiametric {
    std::optional<std::size_t> diameter;  // nullopt: exhausted up to D_max
    std::optional<NullHomotopy> witness;
  };

  //! Least D <= D_max with a null-homotopy of w inside B(D).  Throws
  //! NotNullHomotopic when the oracle says w is not trivial.
  Isodiametric isodiametric_estimate(WordOracle const&   oracle,
                                     Presentation const& p,
                                     Word const&         w,
                                     std::size_t         D_max,
                                     std::size_t         state_cap = 200'000);

  struct Combing {
    std::size_t       radius = 0;
    std::vector<Word> vertices;
    //! Shortlex-least geodesic from the basepoint to each vertex.
    std::vector<Word> paths;
    //! Every path meets each B(n) in one segment ending at the basepoint.
    bool              tame   = false;
    std::size_t       checks = 0;
  };

  //! Empty for r_max = 0.
  Combing geodesic_0_combing(WordOracle const& oracle, Presentation const& p, std::size_t r_max);

  //! A map from a compact simply connected complex onto a neighbourhood of
  //! C, kept as a certificate record.  The maps send cells of the source to
  //! cells of the target ball, dimension by dimension.
  struct Pi1Resolution {
    std::string              source_description;
    std::string              resolved_description;
    std::vector<std::size_t> vertex_map;
    std::vector<std::size_t> edge_map;
    std::vector<std::size_t> cell_map;
    //! Cells of C in the target: restriction over these must be a bijection.
    std::vector<std::size_t> c_vertices;
    std::vector<std::size_t> c_edges;
    std::vector<std::size_t> c_cells;

    bool bijective_over_c() const;
  };

  //! The identity of a ball as a resolution of itself.  Only a certificate
  //! when the ball is simply connected, i.e. its kill radius is its radius.
  Pi1Resolution identity_resolution(Ball const& b);

}  // namespace gpq

#endif  // GPQ_CAYLEY_BALL_HPP_

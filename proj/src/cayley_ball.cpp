#include "gpq/cayley_ball.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gpq/error.hpp"
#include "gpq/rewriting.hpp"

namespace gpq {

  std::optional<std::size_t> Ball::index_of(Word const& normal_form) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), normal_form, ShortlexLess{});
    if (it == vertices.end() || *it != normal_form) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - vertices.begin());
  }

  namespace {
    std::size_t letter_slot(std::vector<Letter> const& letters, Letter l) {
      auto it = std::find(letters.begin(), letters.end(), l);
      if (it == letters.end()) {
        throw InvalidArgument("ball: letter outside the alphabet");
      }
      return static_cast<std::size_t>(it - letters.begin());
    }
  }  // namespace

  std::size_t Ball::walk(std::size_t from, Word const& w) const {
    Alphabet const&   A = presentation.alphabet;
    std::size_t const L = letters.size();
    std::size_t       v = from;
    for (Letter l : w) {
      if (v == no_vertex) {
        return no_vertex;
      }
      v = neighbours[v * L + letter_slot(letters, make_letter(A, l.generator, l.exponent))];
    }
    return v;
  }

  std::size_t Ball::root() const {
    auto b = index_of(basepoint);
    if (b) {
      return *b;
    }
    if (vertices.empty()) {
      throw Disconnected("ball: no vertices");
    }
    return 0;
  }

  bool Ball::contains_loop(Word const& w) const {
    auto b = index_of(basepoint);
    return b && walk(*b, w) == *b;
  }

  namespace {
    void check_oracle(WordOracle const& oracle, Presentation const& p) {
      if (oracle.alphabet() != p.alphabet) {
        throw OracleMismatch("ball: oracle '" + oracle.description()
                             + "' uses a different alphabet from the presentation");
      }
      for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (!oracle.is_identity(p.relators[i])) {
          throw OracleMismatch("ball: relator " + std::to_string(i) + " ("
                               + to_string(p.alphabet, p.relators[i]) + ") is not trivial in "
                               + oracle.description());
        }
      }
    }

    // Fills edges, cells, neighbours and edge_at from vertices and the
    // given neighbour function over the full group.
    template <typename Next>
    void wire(Ball& b, Next const& next) {
      std::size_t const L = b.letters.size();
      Alphabet const&   A = b.presentation.alphabet;
      b.neighbours.assign(b.vertices.size() * L, no_vertex);
      b.edge_at.assign(b.vertices.size() * L, no_vertex);
      for (std::size_t v = 0; v < b.vertices.size(); ++v) {
        for (std::size_t i = 0; i < L; ++i) {
          b.neighbours[v * L + i] = next(v, i);
        }
      }
      for (std::size_t v = 0; v < b.vertices.size(); ++v) {
        for (std::size_t i = 0; i < L; ++i) {
          std::size_t u = b.neighbours[v * L + i];
          Letter      l = b.letters[i];
          if (u == no_vertex || l.exponent < 0) {
            continue;
          }
          if (A.involutive(l.generator) && u < v) {
            continue;
          }
          std::size_t e = b.edges.size();
          b.edges.push_back({v, l, u});
          b.edge_at[v * L + i] = e;
          Letter back          = make_letter(A, l.generator, -1);
          b.edge_at[u * L + letter_slot(b.letters, back)] = e;
        }
      }
      for (std::size_t v = 0; v < b.vertices.size(); ++v) {
        for (std::size_t j = 0; j < b.presentation.relators.size(); ++j) {
          Word const& rel = b.presentation.relators[j];
          std::size_t u   = v;
          for (Letter l : rel) {
            u = b.neighbours[u * L + letter_slot(b.letters, make_letter(A, l.generator, l.exponent))];
            if (u == no_vertex) {
              break;
            }
          }
          if (u != no_vertex) {
            b.cells.push_back({v, j});
          }
        }
      }
    }
  }  // namespace

  Ball build_ball(WordOracle const& oracle, Presentation const& p, std::size_t r, Word const& basepoint) {
    check_oracle(oracle, p);
    Ball b;
    b.presentation = p;
    b.basepoint    = oracle.normal_form(basepoint);
    b.radius       = r;
    b.letters      = alphabet_letters(p.alphabet);

    std::map<Word, std::size_t> dist;
    std::vector<Word>           frontier{b.basepoint};
    dist.emplace(b.basepoint, 0);
    for (std::size_t d = 1; d <= r; ++d) {
      std::vector<Word> next;
      for (auto const& w : frontier) {
        for (Letter l : b.letters) {
          Word u = oracle.normal_form(w + Word{l});
          if (dist.emplace(u, d).second) {
            next.push_back(std::move(u));
          }
        }
      }
      frontier = std::move(next);
    }
    for (auto const& [w, d] : dist) {
      b.vertices.push_back(w);
    }
    std::sort(b.vertices.begin(), b.vertices.end(), ShortlexLess{});
    for (auto const& w : b.vertices) {
      b.distance.push_back(dist.at(w));
    }
    wire(b, [&](std::size_t v, std::size_t i) -> std::size_t {
      Word u = oracle.normal_form(b.vertices[v] + Word{b.letters[i]});
      auto k = b.index_of(u);
      return k ? *k : no_vertex;
    });
    return b;
  }

  Ball build_sphere(WordOracle const& oracle, Presentation const& p, std::size_t r, Word const& basepoint) {
    Ball              ball = build_ball(oracle, p, r, basepoint);
    std::size_t const L    = ball.letters.size();
    Ball              s;
    s.presentation = ball.presentation;
    s.basepoint    = ball.basepoint;
    s.radius       = r;
    s.sphere       = true;
    s.letters      = ball.letters;
    std::vector<std::size_t> renumber(ball.vertices.size(), no_vertex);
    for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
      if (ball.distance[v] == r) {
        renumber[v] = s.vertices.size();
        s.vertices.push_back(ball.vertices[v]);
        s.distance.push_back(r);
      }
    }
    std::vector<std::size_t> old;
    for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
      if (renumber[v] != no_vertex) {
        old.push_back(v);
      }
    }
    wire(s, [&](std::size_t v, std::size_t i) -> std::size_t {
      std::size_t u = ball.neighbours[old[v] * L + i];
      return u == no_vertex ? no_vertex : renumber[u];
    });
    return s;
  }

  LoopClassSet pi1_generators(Ball const& b) {
    Alphabet const&   A = b.presentation.alphabet;
    std::size_t const L = b.letters.size();
    LoopClassSet      out;
    if (b.vertices.empty()) {
      return out;
    }
    out.root = b.root();
    out.parent_edge.assign(b.vertices.size(), no_vertex);
    out.tree_paths.assign(b.vertices.size(), Word{});
    std::vector<bool>       seen(b.vertices.size(), false);
    std::vector<bool>       tree(b.edges.size(), false);
    std::deque<std::size_t> queue{out.root};
    seen[out.root] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < L; ++i) {
        std::size_t u = b.neighbours[v * L + i];
        if (u == no_vertex || seen[u]) {
          continue;
        }
        seen[u]            = true;
        out.parent_edge[u] = b.edge_at[v * L + i];
        tree[out.parent_edge[u]] = true;
        out.tree_paths[u]  = out.tree_paths[v] + Word{b.letters[i]};
        queue.push_back(u);
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw Disconnected("pi1_generators: the complex is not connected");
    }
    bool const   based = b.index_of(b.basepoint).has_value();
    std::size_t const bound = 2 * b.radius + 1;
    for (std::size_t e = 0; e < b.edges.size(); ++e) {
      if (tree[e]) {
        continue;
      }
      BallEdge const& edge = b.edges[e];
      Word loop = out.tree_paths[edge.from] + Word{edge.letter} + inverse(A, out.tree_paths[edge.to]);
      if (based && !b.sphere && loop.size() > bound) {
        throw Error("pi1_generators: generator longer than 2r+1");
      }
      out.non_tree_edges.push_back(e);
      out.generators.push_back(std::move(loop));
    }
    return out;
  }

  namespace {
    struct Rotation {
      Word        word;
      std::size_t relator;
    };

    std::vector<Rotation> rotations(Alphabet const& A, std::vector<Word> const& relators) {
      std::vector<Rotation> out;
      std::set<Word>        seen;
      for (std::size_t j = 0; j < relators.size(); ++j) {
        Word c = cyclically_reduce(A, normalize(A, relators[j]));
        if (c.empty()) {
          continue;
        }
        for (Word const& base : {c, inverse(A, c)}) {
          for (std::size_t k = 0; k < base.size(); ++k) {
            Word rot = base.subword(k, base.size() - k) + base.subword(0, k);
            if (seen.insert(rot).second) {
              out.push_back({std::move(rot), j});
            }
          }
        }
      }
      return out;
    }

    std::size_t longest(std::vector<Rotation> const& rots) {
      std::size_t m = 0;
      for (auto const& r : rots) {
        m = std::max(m, r.word.size());
      }
      return m;
    }
  }  // namespace

  bool NullHomotopy::replays(Ball const& region, std::vector<Word> const& relators) const {
    Alphabet const& A    = region.presentation.alphabet;
    auto            rots = rotations(A, relators);
    Word            current = normalize(A, loop);
    if (!region.contains_loop(current)) {
      return false;
    }
    for (auto const& m : moves) {
      if (m.kind == HomotopyMove::Kind::free_reduce) {
        if (m.after != free_reduce(A, current)) {
          return false;
        }
      } else {
        if (m.position + m.removed > current.size()) {
          return false;
        }
        Word cell = current.subword(m.position, m.removed) + inverse(A, m.inserted);
        bool ok   = std::any_of(rots.begin(), rots.end(), [&](Rotation const& r) {
          return r.word == cell && r.relator == m.relator;
        });
        if (m.removed == 0 || !ok || m.after != current.replaced(m.position, m.removed, m.inserted)) {
          return false;
        }
      }
      if (!region.contains_loop(m.after)) {
        return false;
      }
      current = m.after;
    }
    return current.empty();
  }

  SearchResult null_homotopy_search(Ball const&              region,
                                    std::vector<Word> const& relators,
                                    Word const&              loop,
                                    std::size_t              state_cap) {
    Alphabet const& A     = region.presentation.alphabet;
    Word            start = normalize(A, loop);
    if (!region.contains_loop(start)) {
      throw PreconditionFailed("null_homotopy_search: loop is not closed inside the region");
    }
    auto const        rots  = rotations(A, relators);
    std::size_t const bound = start.size() + longest(rots);

    SearchResult out;
    NullHomotopy witness;
    witness.loop  = start;
    Word reduced  = free_reduce(A, start);
    if (reduced != start) {
      witness.moves.push_back({HomotopyMove::Kind::free_reduce, 0, 0, {}, 0, reduced});
    }

    struct Node {
      Word         parent;
      HomotopyMove move;  // relator move from parent; the free reduction follows
      bool         root = false;
    };
    std::map<Word, Node>  nodes;
    std::deque<Word>      queue{reduced};
    nodes.emplace(reduced, Node{{}, {}, true});
    auto finish = [&](Word const& end) {
      std::vector<HomotopyMove> tail;
      Word                      w = end;
      while (!nodes.at(w).root) {
        Node const& n = nodes.at(w);
        if (n.move.after != w) {
          tail.push_back({HomotopyMove::Kind::free_reduce, 0, 0, {}, 0, w});
        }
        tail.push_back(n.move);
        w = n.parent;
      }
      witness.moves.insert(witness.moves.end(), tail.rbegin(), tail.rend());
      out.witness = std::move(witness);
    };
    if (reduced.empty()) {
      out.states  = 1;
      out.witness = std::move(witness);
      return out;
    }
    while (!queue.empty()) {
      if (out.states == state_cap) {
        out.cap_hit = true;
        return out;
      }
      ++out.states;
      Word s = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (auto const& rot : rots) {
          Word const& rho = rot.word;
          for (std::size_t u = 1; u <= rho.size() && i + u <= s.size(); ++u) {
            if (s[i + u - 1] != rho[u - 1]) {
              break;
            }
            Word inserted = inverse(A, rho.subword(u, rho.size() - u));
            Word after    = s.replaced(i, u, inserted);
            if (!region.contains_loop(after)) {
              continue;
            }
            Word next = free_reduce(A, after);
            if (next.size() > bound || nodes.contains(next)) {
              continue;
            }
            nodes.emplace(next, Node{s, {HomotopyMove::Kind::relator, i, u, inserted, rot.relator, after}});
            if (next.empty()) {
              finish(next);
              out.states += 1;
              return out;
            }
            queue.push_back(std::move(next));
          }
        }
      }
    }
    return out;
  }

  KillRadius pi1_kill_radius(WordOracle const&   oracle,
                             Presentation const& p,
                             std::size_t         r,
                             std::size_t         R_max,
                             std::size_t         state_cap) {
    if (r > R_max) {
      throw InvalidArgument("pi1_kill_radius: r exceeds R_max");
    }
    Ball const   small = build_ball(oracle, p, r);
    auto const   gens  = pi1_generators(small).generators;
    KillRadius   out;
    out.generators = gens.size();
    for (std::size_t R = r; R <= R_max; ++R) {
      Ball const                region = R == r ? small : build_ball(oracle, p, R);
      std::vector<NullHomotopy> witnesses;
      bool                      all = true;
      for (auto const& g : gens) {
        auto res = null_homotopy_search(region, p.relators, g, state_cap);
        out.states += res.states;
        if (!res.found()) {
          all = false;
          break;
        }
        witnesses.push_back(std::move(*res.witness));
      }
      if (all) {
        out.radius    = R;
        out.witnesses = std::move(witnesses);
        return out;
      }
    }
    return out;
  }

  namespace {
    // Cyclically reduced identity loops of length < C, one per class under
    // rotation and inversion, shortlex-least representative.
    std::vector<Word> short_identity_loops(WordOracle const& oracle, std::size_t C) {
      Alphabet const&   A = oracle.alphabet();
      std::vector<Word> out;
      std::set<Word>    seen;
      for (std::size_t len = 1; len < C; ++len) {
        for (auto const& w : all_words(A, len)) {
          if (!is_freely_reduced(A, w) || cyclically_reduce(A, w) != w || !oracle.is_identity(w)) {
            continue;
          }
          Word best = w;
          for (Word const& base : {w, inverse(A, w)}) {
            for (std::size_t k = 0; k < base.size(); ++k) {
              Word rot = base.subword(k, base.size() - k) + base.subword(0, k);
              if (shortlex_less(rot, best)) {
                best = rot;
              }
            }
          }
          if (seen.insert(best).second) {
            out.push_back(best);
          }
        }
      }
      return out;
    }
  }  // namespace

  BoundedBallCheck check_pi1_bounded_balls(WordOracle const&   oracle,
                                           Presentation const& p,
                                           std::size_t         r,
                                           std::size_t         C,
                                           std::size_t         state_cap) {
    BoundedBallCheck out;
    auto const       gens = pi1_generators(build_ball(oracle, p, r)).generators;
    out.generators        = gens.size();
    out.short_loops       = short_identity_loops(oracle, C);
    out.search_radius     = r + C;
    Ball const region     = build_ball(oracle, p, out.search_radius);
    for (auto const& g : gens) {
      auto res = null_homotopy_search(region, out.short_loops, g, state_cap);
      if (!res.found()) {
        return out;
      }
      out.witnesses.push_back(std::move(*res.witness));
    }
    out.certified = true;
    return out;
  }

  Isodiametric isodiametric_estimate(WordOracle const&   oracle,
                                     Presentation const& p,
                                     Word const&         w,
                                     std::size_t         D_max,
                                     std::size_t         state_cap) {
    if (!oracle.is_identity(w)) {
      throw NotNullHomotopic("isodiametric_estimate: the word is not trivial in " + oracle.description());
    }
    Isodiametric out;
    for (std::size_t D = 0; D <= D_max; ++D) {
      Ball const region = build_ball(oracle, p, D);
      if (!region.contains_loop(w)) {
        continue;
      }
      auto res = null_homotopy_search(region, p.relators, w, state_cap);
      if (res.found()) {
        out.diameter = D;
        out.witness  = std::move(res.witness);
        return out;
      }
    }
    return out;
  }

  Combing geodesic_0_combing(WordOracle const& oracle, Presentation const& p, std::size_t r_max) {
    Combing out;
    out.radius = r_max;
    if (r_max == 0) {
      out.tame = true;
      return out;
    }
    Ball const b    = build_ball(oracle, p, r_max);
    auto const tree = pi1_generators(b);
    out.vertices    = b.vertices;
    out.paths       = tree.tree_paths;
    out.tame        = true;
    std::size_t const root = tree.root;
    for (std::size_t v = 0; v < b.vertices.size(); ++v) {
      // distances of the vertices along the path, basepoint first
      std::vector<std::size_t> along{b.distance[root]};
      std::size_t              u = root;
      for (Letter l : out.paths[v]) {
        u = b.walk(u, Word{l});
        along.push_back(b.distance.at(u));
      }
      for (std::size_t n = 0; n <= r_max; ++n) {
        ++out.checks;
        // {t : sigma(t) in B(n)} must be an initial segment from the basepoint
        bool left = false;
        for (auto d : along) {
          if (d > n) {
            left = true;
          } else if (left) {
            out.tame = false;
          }
        }
      }
    }
    return out;
  }

  bool Pi1Resolution::bijective_over_c() const {
    auto check = [](std::vector<std::size_t> const& map, std::vector<std::size_t> const& c) {
      for (auto x : c) {
        if (std::count(map.begin(), map.end(), x) != 1) {
          return false;
        }
      }
      return true;
    };
    return check(vertex_map, c_vertices) && check(edge_map, c_edges) && check(cell_map, c_cells);
  }

  Pi1Resolution identity_resolution(Ball const& b) {
    Pi1Resolution res;
    std::string   name = (b.sphere ? "S(" : "B(") + std::to_string(b.radius) + ")";
    res.source_description   = name;
    res.resolved_description = name;
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
      res.vertex_map.push_back(i);
    }
    for (std::size_t i = 0; i < b.edges.size(); ++i) {
      res.edge_map.push_back(i);
    }
    for (std::size_t i = 0; i < b.cells.size(); ++i) {
      res.cell_map.push_back(i);
    }
    res.c_vertices = res.vertex_map;
    res.c_edges    = res.edge_map;
    res.c_cells    = res.cell_map;
    return res;
  }

}  // namespace gpq

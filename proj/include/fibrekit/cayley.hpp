#pragma once

#include <map>
#include <string>
#include <vector>

#include "fibrekit/complex.hpp"
#include "fibrekit/homology.hpp"
#include "fibrekit/labeled_graph.hpp"
#include "fibrekit/numeric.hpp"
#include "fibrekit/presentation.hpp"
#include "fibrekit/sigma.hpp"

namespace fibrekit {

/// Normal forms in the right-angled Artin group A_L. Generator k is the
/// k-th vertex of L; letters are +-(k+1) ordered v1 < v1^-1 < v2 < ...
/// The normal form of an element is its lexicographically least reduced
/// word (all reduced words of an element have the same length).
class RaagNormalForm {
 public:
  explicit RaagNormalForm(const SimplicialComplex& l);

  std::size_t generator_count() const { return generators_.size(); }
  VertexId vertex(std::size_t generator) const { return generators_.at(generator); }
  bool commute(std::size_t a, std::size_t b) const { return commute_[a][b]; }

  /// Normal form of (normal form w) * letter.
  Word multiply(const Word& w, int letter) const;
  /// Normal form of an arbitrary word.
  Word normalize(const Word& w) const;
  /// Lexicographically least word in the commutation class of a reduced word.
  Word lex_least(const Word& reduced) const;

  static int letter_key(int letter);

 private:
  std::vector<VertexId> generators_;
  std::vector<std::vector<bool>> commute_;
};

struct CayleyBall {
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t generator = 0;  // to = from * generator
  };
  /// Corners g, gv, gvw, gw for commuting generators v < w; edges are
  /// g->gv, gv->gvw, gw->gvw, g->gw, with boundary e0 + e1 - e2 - e3.
  struct Square {
    std::size_t corner[4] = {0, 0, 0, 0};
    std::size_t edge[4] = {0, 0, 0, 0};
    std::size_t v = 0;
    std::size_t w = 0;
  };

  SimplicialComplex complex;
  std::size_t radius = 0;
  std::vector<Word> elements;  // normal forms, breadth-first then lexicographic
  std::map<Word, std::size_t> index;
  std::vector<Edge> edges;
  std::vector<Square> squares;

  std::string format(const Word& w) const;
  LabeledGraph graph() const;
};

/// Throws BudgetExceeded above the radius cap, PreconditionError for
/// non-flag L.
CayleyBall cayley_ball(const SimplicialComplex& l, std::size_t radius);

struct HeightAssignment {
  std::vector<Rational> heights;  // indexed like CayleyBall::elements
  std::size_t edges_checked = 0;
  std::size_t squares_checked = 0;
  /// Fundamental cycles of the breadth-first spanning tree.
  std::size_t cycles_checked = 0;
};

/// Heights by propagation from the identity along ball edges; then every
/// edge difference, square boundary sum and fundamental cycle sum is
/// verified (InternalError on any violation).
HeightAssignment height_assignment(const CayleyBall& ball, const Character& phi);

struct LevelSetProbe {
  std::vector<std::size_t> vertices;  // ball element indices
  std::vector<std::size_t> edges;
  std::vector<std::size_t> squares;
  /// Reduced homology in degrees -1, 0, 1 of the induced square complex.
  HomologyGroup h_minus1;
  HomologyGroup h0;
  HomologyGroup h1;
  std::string label = "finite-scale probe; boundary effects uncorrected";
};

/// Full subcomplex of the ball on vertices with height in [lo, hi].
/// Throws PreconditionError when lo > hi.
LevelSetProbe level_set_probe(const CayleyBall& ball, const HeightAssignment& heights,
                              const Rational& lo, const Rational& hi);

}  // namespace fibrekit

#pragma once

// Geodesic words in the free metabelian group M_r. The geodesic length of w
// is sum |pi_w(e)| plus twice the size of a smallest set Q of zero-flow grid
// edges joining the pieces of supp(pi_w) together with the origin and the
// endpoint of w. The word itself is the label of an Euler path through the
// support (each edge |pi_w(e)| times) and Q (each edge once in each direction).

#include <cstdint>
#include <span>
#include <vector>

#include "fsg/grid_flow.hpp"
#include "fsg/steiner.hpp"
#include "fsg/words.hpp"

namespace fsg {

  struct SupportComponent {
    std::vector<AbelianVector> vertices;  // sorted
    std::vector<GridEdge>      edges;     // GridEdgeLess order
  };

  // Components ordered by their smallest vertex; source and sink are always
  // present, possibly as isolated vertices.
  struct SupportGraph {
    int                           rank = 0;
    std::vector<SupportComponent> components;
  };

  SupportGraph support_components(GridFlow const& f);

  enum class ForestMode { automatic, exact, approximate };

  struct Forest {
    std::vector<GridEdge> edges;  // GridEdgeLess order
    bool                  exact = true;
    // Certified lower bound on the size of a minimal forest.
    std::int64_t lower_bound = 0;
  };

  // automatic: exact within the limits, otherwise the MST approximation.
  // exact: throws LimitExceeded past the limits.
  Forest minimal_forest(SupportGraph const& g,
                        ForestMode          mode,
                        ExactLimits const&  limits = {});

  // Throws InvalidFlow when the support plus q is disconnected or unbalanced.
  Word euler_word(GridFlow const& f, Forest const& q);

  struct GeodesicOptions {
    ForestMode  mode = ForestMode::automatic;
    ExactLimits limits{};
  };

  struct GeodesicResult {
    Word         word{1};
    std::int64_t length = 0;
    Forest       forest;
    bool         exact = true;
  };

  GeodesicResult geodesic(Word const& w, GeodesicOptions const& options = {});
  std::int64_t   geodesic_length(Word const& w,
                                 GeodesicOptions const& options = {});

  // Is the geodesic length of w at most k? Throws Undecided when the forest
  // is approximate and neither bound settles the question.
  bool bglp(Word const& w, std::int64_t k, ExactLimits const& limits = {});

  // Product of x1^s x2^t [x2,x1] x2^-t x1^-s over the points (s,t) of
  // 10n(A - b), b the lexicographically smallest point, in lexicographic order.
  Word rstp_encode(std::span<const AbelianVector> points);

  // Is s(A) < k? Decided through bglp on rstp_encode(A).
  bool rstp_decide(std::span<const AbelianVector> points,
                   std::int64_t                   k,
                   ExactLimits const&             limits = {});

}  // namespace fsg

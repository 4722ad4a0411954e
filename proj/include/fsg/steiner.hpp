#pragma once

// Exact minimum connectors on the integer grid: rectilinear Steiner trees for
// point sets and, more generally, for groups of vertices that are already
// connected among themselves (each group acts as one contracted terminal).
//
// Candidates are restricted to a finite grid: for rank <= 2 the Hanan grid
// spanned by the coordinates of all group vertices, otherwise every lattice
// point of the bounding box. The solver is a Dreyfus-Wagner dynamic program
// over terminal subsets and is exponential in the number of terminals, so it
// runs only within ExactLimits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsg/grid_flow.hpp"
#include "fsg/words.hpp"

namespace fsg {

  struct ExactLimits {
    std::size_t max_terminals     = 10;
    std::size_t max_grid_vertices = 10000;
  };

  enum class CandidateGrid { automatic, hanan, full_box };

  struct SteinerResult {
    std::int64_t          size = 0;
    std::vector<GridEdge> tree_edges;  // GridEdgeLess order
  };

  // Fewest unit grid edges whose union with the groups is connected. Groups
  // must be nonempty, pairwise disjoint and share one rank.
  SteinerResult connect_groups(
      std::span<const std::vector<AbelianVector>> groups,
      ExactLimits const&                          limits = {},
      CandidateGrid                               grid = CandidateGrid::automatic);

  // s(A) together with one optimal tree; throws LimitExceeded past the limits.
  SteinerResult steiner_size(std::span<const AbelianVector> points,
                             ExactLimits const&             limits = {});

  // A finite point set in Z^2 with a size bound k.
  struct RstpInstance {
    std::vector<AbelianVector> points;
    std::int64_t               bound = 0;
  };

  // "x,y;x,y;..." (whitespace ignored); rejects duplicates.
  std::vector<AbelianVector> parse_points(std::string_view text);
  std::string format_points(std::span<const AbelianVector> points);

}  // namespace fsg

#pragma once

// JSON forms of the library's value types. Every to_json has a matching
// reader so that printed results parse back into equal values.
//
//   AbelianRingElement     [{"delta": [..], "coeff": c}, ...]
//   AbelianDerivativeMap   [{"gen": k, "delta": [..], "coeff": c}, ...]
//   SolvableRingElement    {"class": c, "terms": [{"coeff", "prefix_index",
//                           "prefix_word"}, ...]}
//   MagnusImage            {"class": d, "word": w, "diagonal": .., "rows": [..]}
//   GridFlow               {"rank", "source", "sink",
//                           "edges": [{"vertex", "axis", "value"}, ...]}
//   GeodesicResult         {"word", "length", "forest_edges": [{"vertex",
//                           "axis"}], "exact"}
//   SteinerResult          {"size", "tree_edges": [{"vertex", "axis"}]}

#include <json.hpp>

#include "fsg/abelian_fox.hpp"
#include "fsg/geodesic.hpp"
#include "fsg/grid_flow.hpp"
#include "fsg/magnus.hpp"
#include "fsg/solvable.hpp"
#include "fsg/steiner.hpp"

namespace fsg {

  using json = nlohmann::json;

  json          vector_to_json(AbelianVector const& v);
  AbelianVector vector_from_json(json const& j, int rank);

  json               to_json(AbelianRingElement const& e);
  AbelianRingElement ring_element_from_json(json const& j, int rank);

  json                 to_json(AbelianDerivativeMap const& m);
  AbelianDerivativeMap derivative_map_from_json(json const& j, int rank);

  // Prefix words are taken from D, the prefixes the element refers to.
  json                to_json(SolvableRingElement const& e, PrefixSet const& D);
  SolvableRingElement solvable_element_from_json(json const& j);

  json        to_json(MagnusImage const& m);
  MagnusImage magnus_from_json(json const& j, int rank);

  json     to_json(GridFlow const& f);
  GridFlow flow_from_json(json const& j);

  json                  edges_to_json(std::span<const GridEdge> edges);
  std::vector<GridEdge> edges_from_json(json const& j, int rank);

  json           to_json(GeodesicResult const& r);
  GeodesicResult geodesic_from_json(json const& j, int rank);

  json          to_json(SteinerResult const& r);
  SteinerResult steiner_from_json(json const& j);

}  // namespace fsg

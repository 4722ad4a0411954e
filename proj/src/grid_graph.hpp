#pragma once

// Graph plumbing shared by flow realisation and geodesics: connected pieces
// of a flow's support and Euler traversals of its replicated multigraph.

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "fsg/grid_flow.hpp"
#include "fsg/words.hpp"

namespace fsg::detail {

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n = 0);
    std::size_t add();
    std::size_t find(std::size_t x);
    bool        unite(std::size_t a, std::size_t b);

   private:
    std::vector<std::size_t> parent_;
  };

  // Vertices of the support of f plus the given extra vertices, numbered in
  // lexicographic order.
  class VertexIndex {
   public:
    std::size_t intern(AbelianVector const& v);
    // npos when absent
    std::size_t find(AbelianVector const& v) const;
    std::size_t size() const noexcept {
      return coords_.size();
    }
    AbelianVector const& coords(std::size_t i) const {
      return coords_[i];
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

   private:
    std::map<AbelianVector, std::size_t> ids_;
    std::vector<AbelianVector>           coords_;
  };

  struct Piece {
    std::vector<AbelianVector> vertices;  // sorted
    std::vector<GridEdge>      edges;     // in GridEdgeLess order
  };

  // Connected pieces of supp(f) together with its source and sink, ordered
  // by their smallest vertex.
  std::vector<Piece> support_pieces(GridFlow const& f);

  using EdgeSet = std::set<GridEdge, GridEdgeLess>;

  // Label of an Euler tour (source == sink) or Euler path (source -> sink) of
  // the multigraph with |f(e)| copies of every support edge e oriented by the
  // sign of f(e), and one copy in each direction of every edge in `extra`.
  // At a vertex the next arc is the lowest axis, positive direction first.
  Word euler_label(GridFlow const& f, EdgeSet const& extra);

}  // namespace fsg::detail

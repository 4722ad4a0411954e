#pragma once

// Integer flows on the Cayley graph of Z^r (the integer grid) and the path
// flows pi_w traced by words starting at the origin.

#include <cstdint>
#include <map>
#include <vector>

#include "fsg/words.hpp"

namespace fsg {

  // Positively oriented edge vertex -> vertex + e_axis. A traversal against
  // the orientation is a negative value on the same edge.
  struct GridEdge {
    AbelianVector vertex;
    int           axis;  // 1-based

    AbelianVector head() const;
  };

  // Axis major, then tail vertex lexicographically (same order as the keys
  // of AbelianDerivativeMap).
  struct GridEdgeLess {
    bool operator()(GridEdge const& a, GridEdge const& b) const {
      if (a.axis != b.axis) {
        return a.axis < b.axis;
      }
      return a.vertex < b.vertex;
    }
  };

  inline bool operator==(GridEdge const& a, GridEdge const& b) {
    return a.axis == b.axis && a.vertex == b.vertex;
  }

  class GridFlow {
   public:
    using map_type = std::map<GridEdge, std::int64_t, GridEdgeLess>;

    explicit GridFlow(int rank);
    GridFlow(AbelianVector source, AbelianVector sink, map_type values);

    int rank() const noexcept {
      return rank_;
    }
    AbelianVector const& source() const noexcept {
      return source_;
    }
    AbelianVector const& sink() const noexcept {
      return sink_;
    }
    map_type const& values() const noexcept {
      return values_;
    }
    std::int64_t value(GridEdge const& e) const;

    // Adds to the value on e, erasing it when it cancels to zero.
    void add(GridEdge const& e, std::int64_t delta);
    void set_endpoints(AbelianVector source, AbelianVector sink);

    // sum over the support of |value|
    std::int64_t total_variation() const;

    friend bool operator==(GridFlow const&, GridFlow const&) = default;

   private:
    int           rank_;
    AbelianVector source_;
    AbelianVector sink_;
    map_type      values_;
  };

  GridFlow path_flow(Word const& w);

  // Outgoing minus incoming values at v.
  std::int64_t net_flow(GridFlow const& f, AbelianVector const& v);

  bool is_circulation(GridFlow const& f);

  // Identical endpoints and values; for path flows this is equality in M_r.
  bool flow_equal(GridFlow const& f, GridFlow const& g);

  // Groupoid sum: requires f.sink == g.source unless one of them is a
  // circulation, whose endpoints are then dropped (g's first).
  GridFlow add_flows(GridFlow const& f, GridFlow const& g);
  GridFlow translate(GridFlow const& f, AbelianVector const& by);
  // Reversed flow with source and sink swapped.
  GridFlow negate(GridFlow const& f);

  // Throws InvalidFlow unless f satisfies the Kirchhoff law off its endpoints
  // and is either a circulation with source == sink or has net flow +1 at
  // the source and -1 at the sink.
  void check_geometric(GridFlow const& f);

  // A word whose path flow is exactly f (f must be geometric and start at
  // the origin).
  Word flow_to_path(GridFlow const& f);

}  // namespace fsg

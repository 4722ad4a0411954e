#include "fsg/grid_flow.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fsg/errors.hpp"
#include "grid_graph.hpp"

namespace fsg {

  AbelianVector GridEdge::head() const {
    AbelianVector h = vertex;
    h[static_cast<std::size_t>(axis - 1)] += 1;
    return h;
  }

  GridFlow::GridFlow(int rank)
      : rank_(rank),
        source_(static_cast<std::size_t>(rank)),
        sink_(static_cast<std::size_t>(rank)) {
    if (rank < 1) {
      throw PreconditionError("rank must be at least 1");
    }
  }

  GridFlow::GridFlow(AbelianVector source, AbelianVector sink, map_type values)
      : rank_(static_cast<int>(source.rank())),
        source_(std::move(source)),
        sink_(std::move(sink)) {
    if (rank_ < 1 || sink_.rank() != source_.rank()) {
      throw RankMismatch("source and sink must share a positive rank");
    }
    for (auto const& [e, v] : values) {
      add(e, v);
    }
  }

  std::int64_t GridFlow::value(GridEdge const& e) const {
    auto it = values_.find(e);
    return it == values_.end() ? 0 : it->second;
  }

  void GridFlow::add(GridEdge const& e, std::int64_t delta) {
    if (e.axis < 1 || e.axis > rank_
        || static_cast<int>(e.vertex.rank()) != rank_) {
      throw RankMismatch("grid edge does not belong to Z^"
                         + std::to_string(rank_));
    }
    if (delta == 0) {
      return;
    }
    auto [it, inserted] = values_.try_emplace(e, delta);
    if (!inserted) {
      it->second += delta;
      if (it->second == 0) {
        values_.erase(it);
      }
    }
  }

  void GridFlow::set_endpoints(AbelianVector source, AbelianVector sink) {
    if (static_cast<int>(source.rank()) != rank_
        || static_cast<int>(sink.rank()) != rank_) {
      throw RankMismatch("endpoint rank differs from flow rank");
    }
    source_ = std::move(source);
    sink_   = std::move(sink);
  }

  std::int64_t GridFlow::total_variation() const {
    std::int64_t total = 0;
    for (auto const& [e, v] : values_) {
      total += v < 0 ? -v : v;
    }
    return total;
  }

  GridFlow path_flow(Word const& w) {
    GridFlow      f(w.rank());
    AbelianVector at(static_cast<std::size_t>(w.rank()));
    for (auto l : w) {
      auto const i = static_cast<std::size_t>(l.gen() - 1);
      if (l.sign() > 0) {
        f.add(GridEdge{at, l.gen()}, 1);
        at[i] += 1;
      } else {
        at[i] -= 1;
        f.add(GridEdge{at, l.gen()}, -1);
      }
    }
    f.set_endpoints(AbelianVector(static_cast<std::size_t>(w.rank())), at);
    return f;
  }

  std::int64_t net_flow(GridFlow const& f, AbelianVector const& v) {
    if (static_cast<int>(v.rank()) != f.rank()) {
      throw RankMismatch("vertex rank differs from flow rank");
    }
    std::int64_t net = 0;
    for (int axis = 1; axis <= f.rank(); ++axis) {
      net += f.value(GridEdge{v, axis});
      AbelianVector back = v;
      back[static_cast<std::size_t>(axis - 1)] -= 1;
      net -= f.value(GridEdge{back, axis});
    }
    return net;
  }

  namespace {
    // Net flow at every vertex touched by the support.
    std::map<AbelianVector, std::int64_t> net_flows(GridFlow const& f) {
      std::map<AbelianVector, std::int64_t> net;
      for (auto const& [e, v] : f.values()) {
        net[e.vertex] += v;
        net[e.head()] -= v;
      }
      return net;
    }
  }  // namespace

  bool is_circulation(GridFlow const& f) {
    for (auto const& [v, n] : net_flows(f)) {
      if (n != 0) {
        return false;
      }
    }
    return true;
  }

  bool flow_equal(GridFlow const& f, GridFlow const& g) {
    if (f.rank() != g.rank()) {
      throw RankMismatch("flows over different ranks");
    }
    return f == g;
  }

  GridFlow add_flows(GridFlow const& f, GridFlow const& g) {
    if (f.rank() != g.rank()) {
      throw RankMismatch("flows over different ranks");
    }
    GridFlow sum = f;
    for (auto const& [e, v] : g.values()) {
      sum.add(e, v);
    }
    if (is_circulation(g)) {
      sum.set_endpoints(f.source(), f.sink());
    } else if (is_circulation(f)) {
      sum.set_endpoints(g.source(), g.sink());
    } else if (f.sink() == g.source()) {
      sum.set_endpoints(f.source(), g.sink());
    } else {
      throw PreconditionError(
          "sum of two non-circulations needs sink(f) == source(g)");
    }
    return sum;
  }

  GridFlow translate(GridFlow const& f, AbelianVector const& by) {
    GridFlow out(f.rank());
    for (auto const& [e, v] : f.values()) {
      out.add(GridEdge{e.vertex + by, e.axis}, v);
    }
    out.set_endpoints(f.source() + by, f.sink() + by);
    return out;
  }

  GridFlow negate(GridFlow const& f) {
    GridFlow out(f.rank());
    for (auto const& [e, v] : f.values()) {
      out.add(e, -v);
    }
    out.set_endpoints(f.sink(), f.source());
    return out;
  }

  void check_geometric(GridFlow const& f) {
    auto net = net_flows(f);
    bool const closed = f.source() == f.sink();
    for (auto const& [v, n] : net) {
      std::int64_t expected = 0;
      if (!closed) {
        expected = v == f.source() ? 1 : (v == f.sink() ? -1 : 0);
      }
      if (n != expected) {
        throw InvalidFlow("net flow " + std::to_string(n) + " at "
                          + to_string(v) + ", expected "
                          + std::to_string(expected));
      }
    }
    if (!closed && (net.find(f.source()) == net.end()
                    || net.find(f.sink()) == net.end())) {
      throw InvalidFlow("flow with distinct source and sink has no support");
    }
  }

  Word flow_to_path(GridFlow const& f) {
    check_geometric(f);
    if (!f.source().is_zero()) {
      throw InvalidFlow("path flows start at the origin, not at "
                        + to_string(f.source()));
    }
    auto pieces = detail::support_pieces(f);

    // L-shaped connectors from every piece not containing the source back to
    // the source, one axis at a time.
    detail::EdgeSet connectors;
    for (auto const& piece : pieces) {
      if (std::binary_search(
              piece.vertices.begin(), piece.vertices.end(), f.source())) {
        continue;
      }
      AbelianVector at = piece.vertices.front();
      for (int axis = 1; axis <= f.rank(); ++axis) {
        auto const i = static_cast<std::size_t>(axis - 1);
        while (at[i] != f.source()[i]) {
          GridEdge e{at, axis};
          if (at[i] > f.source()[i]) {
            e.vertex[i] -= 1;
            at[i] -= 1;
          } else {
            at[i] += 1;
          }
          if (f.value(e) == 0) {
            connectors.insert(e);
          }
        }
      }
    }
    return detail::euler_label(f, connectors);
  }

}  // namespace fsg

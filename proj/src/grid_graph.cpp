#include "grid_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fsg/errors.hpp"

namespace fsg::detail {

  UnionFind::UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t UnionFind::add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  bool UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent_[b] = a;
    return true;
  }

  std::size_t VertexIndex::intern(AbelianVector const& v) {
    auto [it, inserted] = ids_.try_emplace(v, coords_.size());
    if (inserted) {
      coords_.push_back(v);
    }
    return it->second;
  }

  std::size_t VertexIndex::find(AbelianVector const& v) const {
    auto it = ids_.find(v);
    return it == ids_.end() ? npos : it->second;
  }

  std::vector<Piece> support_pieces(GridFlow const& f) {
    VertexIndex index;
    index.intern(f.source());
    index.intern(f.sink());
    for (auto const& [e, value] : f.values()) {
      index.intern(e.vertex);
      index.intern(e.head());
    }
    UnionFind uf(index.size());
    for (auto const& [e, value] : f.values()) {
      uf.unite(index.find(e.vertex), index.find(e.head()));
    }

    std::vector<std::size_t> root_piece(index.size(), VertexIndex::npos);
    // Vertices in lexicographic order so pieces come out ordered by their
    // smallest vertex.
    std::vector<std::size_t> order(index.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return index.coords(a) < index.coords(b);
    });
    std::vector<Piece> pieces;
    for (std::size_t v : order) {
      std::size_t root = uf.find(v);
      if (root_piece[root] == VertexIndex::npos) {
        root_piece[root] = pieces.size();
        pieces.emplace_back();
      }
      pieces[root_piece[root]].vertices.push_back(index.coords(v));
    }
    for (auto const& [e, value] : f.values()) {
      pieces[root_piece[uf.find(index.find(e.vertex))]].edges.push_back(e);
    }
    return pieces;
  }

  namespace {
    struct Arc {
      int          letter;  // signed generator
      std::size_t  head;
      std::int64_t copies;
    };

    bool arc_order(Arc const& a, Arc const& b) {
      int axis_a = a.letter < 0 ? -a.letter : a.letter;
      int axis_b = b.letter < 0 ? -b.letter : b.letter;
      if (axis_a != axis_b) {
        return axis_a < axis_b;
      }
      return a.letter > b.letter;
    }
  }  // namespace

  Word euler_label(GridFlow const& f, EdgeSet const& extra) {
    VertexIndex index;
    std::size_t const source = index.intern(f.source());
    std::size_t const sink   = index.intern(f.sink());
    for (auto const& [e, value] : f.values()) {
      index.intern(e.vertex);
      index.intern(e.head());
    }
    for (auto const& e : extra) {
      if (f.value(e) != 0) {
        throw InvalidFlow("connector edge at " + to_string(e.vertex)
                          + " carries flow");
      }
      index.intern(e.vertex);
      index.intern(e.head());
    }

    std::vector<std::vector<Arc>> out(index.size());
    std::vector<std::int64_t>     balance(index.size(), 0);
    std::int64_t                  total = 0;
    auto add_arc = [&](std::size_t from, std::size_t to, int letter,
                       std::int64_t copies) {
      out[from].push_back({letter, to, copies});
      balance[from] += copies;
      balance[to] -= copies;
      total += copies;
    };
    for (auto const& [e, value] : f.values()) {
      std::size_t tail = index.find(e.vertex);
      std::size_t head = index.find(e.head());
      if (value > 0) {
        add_arc(tail, head, e.axis, value);
      } else {
        add_arc(head, tail, -e.axis, -value);
      }
    }
    for (auto const& e : extra) {
      std::size_t tail = index.find(e.vertex);
      std::size_t head = index.find(e.head());
      add_arc(tail, head, e.axis, 1);
      add_arc(head, tail, -e.axis, 1);
    }
    for (std::size_t v = 0; v < index.size(); ++v) {
      std::int64_t expected = 0;
      if (source != sink) {
        expected = v == source ? 1 : (v == sink ? -1 : 0);
      }
      if (balance[v] != expected) {
        throw InvalidFlow("unbalanced vertex " + to_string(index.coords(v))
                          + " in Euler multigraph");
      }
      std::sort(out[v].begin(), out[v].end(), arc_order);
    }

    std::vector<std::size_t> next(index.size(), 0);
    std::vector<std::pair<std::size_t, int>> stack{{source, 0}};
    std::vector<Letter>                      circuit;
    circuit.reserve(static_cast<std::size_t>(total));
    while (!stack.empty()) {
      std::size_t v    = stack.back().first;
      auto&       arcs = out[v];
      while (next[v] < arcs.size() && arcs[next[v]].copies == 0) {
        ++next[v];
      }
      if (next[v] < arcs.size()) {
        Arc& a = arcs[next[v]];
        --a.copies;
        stack.emplace_back(a.head, a.letter);
      } else {
        if (stack.back().second != 0) {
          circuit.push_back(Letter::from_signed(stack.back().second));
        }
        stack.pop_back();
      }
    }
    if (static_cast<std::int64_t>(circuit.size()) != total) {
      throw InvalidFlow("support and connectors are not connected");
    }
    std::reverse(circuit.begin(), circuit.end());
    return Word(f.rank(), std::move(circuit));
  }

}  // namespace fsg::detail

#include "fsg/geodesic.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "fsg/errors.hpp"
#include "grid_graph.hpp"

namespace fsg {

  SupportGraph support_components(GridFlow const& f) {
    SupportGraph g;
    g.rank = f.rank();
    for (auto& piece : detail::support_pieces(f)) {
      g.components.push_back(
          {std::move(piece.vertices), std::move(piece.edges)});
    }
    return g;
  }

  namespace {

    std::int64_t l1_distance(AbelianVector const& a, AbelianVector const& b) {
      return (a - b).norm();
    }

    // Drops candidate edges that lie on the support or close a cycle, then
    // prunes dangling branches that end outside every component. The result
    // is an inclusion-minimal connector.
    std::vector<GridEdge> normalize(SupportGraph const&    g,
                                    detail::EdgeSet const& candidate) {
      std::set<GridEdge, GridEdgeLess> support;
      std::set<AbelianVector>          terminals;
      for (auto const& c : g.components) {
        support.insert(c.edges.begin(), c.edges.end());
        terminals.insert(c.vertices.begin(), c.vertices.end());
      }

      std::map<AbelianVector, std::size_t> ids;
      std::vector<std::size_t>             parent;
      auto find = [&](std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      };
      auto id_of = [&](AbelianVector const& v) {
        auto [it, inserted] = ids.try_emplace(v, parent.size());
        if (inserted) {
          parent.push_back(parent.size());
        }
        return it->second;
      };
      for (auto const& c : g.components) {
        std::size_t root = find(id_of(c.vertices.front()));
        for (auto const& v : c.vertices) {
          parent[find(id_of(v))] = root;
        }
      }

      std::vector<GridEdge> kept;
      for (auto const& e : candidate) {
        if (support.count(e) != 0) {
          continue;
        }
        std::size_t a = find(id_of(e.vertex));
        std::size_t b = find(id_of(e.head()));
        if (a != b) {
          parent[b] = a;
          kept.push_back(e);
        }
      }

      std::map<AbelianVector, int> degree;
      for (auto const& e : kept) {
        ++degree[e.vertex];
        ++degree[e.head()];
      }
      std::vector<bool> alive(kept.size(), true);
      bool              changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
          if (!alive[i]) {
            continue;
          }
          for (auto const& end : {kept[i].vertex, kept[i].head()}) {
            if (degree[end] == 1 && terminals.count(end) == 0) {
              alive[i] = false;
              --degree[kept[i].vertex];
              --degree[kept[i].head()];
              changed = true;
              break;
            }
          }
        }
      }
      std::vector<GridEdge> out;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (alive[i]) {
          out.push_back(kept[i]);
        }
      }
      return out;
    }

    // Unit edges of the axis-by-axis monotone path from a to b.
    void append_l_path(AbelianVector a,
                       AbelianVector const& b,
                       detail::EdgeSet&     out) {
      for (std::size_t i = 0; i < a.rank(); ++i) {
        int const axis = static_cast<int>(i) + 1;
        while (a[i] != b[i]) {
          GridEdge e{a, axis};
          if (a[i] > b[i]) {
            e.vertex[i] -= 1;
            a[i] -= 1;
          } else {
            a[i] += 1;
          }
          out.insert(e);
        }
      }
    }

    Forest approximate_forest(SupportGraph const& g) {
      auto const& comps = g.components;
      std::size_t m     = comps.size();

      struct Link {
        std::int64_t  dist = std::numeric_limits<std::int64_t>::max();
        AbelianVector from;
        AbelianVector to;
      };
      auto closest = [&](std::size_t i, std::size_t j) {
        Link best;
        for (auto const& a : comps[i].vertices) {
          for (auto const& b : comps[j].vertices) {
            std::int64_t d = l1_distance(a, b);
            if (d < best.dist) {
              best = {d, a, b};
            }
          }
        }
        return best;
      };

      // Prim over the complete graph of components.
      std::vector<bool> in_tree(m, false);
      std::vector<Link> link(m);
      in_tree[0]      = true;
      for (std::size_t j = 1; j < m; ++j) {
        link[j] = closest(0, j);
      }
      std::int64_t    mst = 0;
      detail::EdgeSet candidate;
      for (std::size_t step = 1; step < m; ++step) {
        std::size_t next = m;
        for (std::size_t j = 0; j < m; ++j) {
          if (!in_tree[j] && (next == m || link[j].dist < link[next].dist)) {
            next = j;
          }
        }
        in_tree[next] = true;
        mst += link[next].dist;
        append_l_path(link[next].from, link[next].to, candidate);
        for (std::size_t j = 0; j < m; ++j) {
          if (!in_tree[j]) {
            Link l = closest(next, j);
            if (l.dist < link[j].dist) {
              link[j] = l;
            }
          }
        }
      }

      Forest q;
      q.edges       = normalize(g, candidate);
      q.lower_bound = m == 2 ? mst : (mst + 1) / 2;
      q.exact = static_cast<std::int64_t>(q.edges.size()) <= q.lower_bound;
      return q;
    }

  }  // namespace

  Forest minimal_forest(SupportGraph const& g,
                        ForestMode          mode,
                        ExactLimits const&  limits) {
    if (g.components.empty()) {
      throw PreconditionError("support graph has no components");
    }
    if (g.components.size() == 1) {
      return {};
    }
    if (mode != ForestMode::approximate) {
      std::vector<std::vector<AbelianVector>> groups;
      for (auto const& c : g.components) {
        groups.push_back(c.vertices);
      }
      try {
        SteinerResult   r = connect_groups(groups, limits);
        detail::EdgeSet candidate(r.tree_edges.begin(), r.tree_edges.end());
        Forest          q;
        q.edges       = normalize(g, candidate);
        q.exact       = true;
        q.lower_bound = r.size;
        if (static_cast<std::int64_t>(q.edges.size()) != r.size) {
          throw std::logic_error("exact connector is not inclusion-minimal");
        }
        return q;
      } catch (LimitExceeded const&) {
        if (mode == ForestMode::exact) {
          throw;
        }
      }
    }
    return approximate_forest(g);
  }

  Word euler_word(GridFlow const& f, Forest const& q) {
    detail::EdgeSet extra(q.edges.begin(), q.edges.end());
    return detail::euler_label(f, extra);
  }

  GeodesicResult geodesic(Word const& w, GeodesicOptions const& options) {
    GridFlow const f = path_flow(w);
    GeodesicResult result;
    result.forest = minimal_forest(support_components(f), options.mode,
                                   options.limits);
    result.exact  = result.forest.exact;
    result.word   = euler_word(f, result.forest);
    result.length = static_cast<std::int64_t>(result.word.size());

    if (!is_freely_reduced(result.word)) {
      throw std::logic_error("Euler label " + format_word(result.word)
                             + " is not freely reduced");
    }
    auto const expected =
        f.total_variation()
        + 2 * static_cast<std::int64_t>(result.forest.edges.size());
    if (result.length != expected) {
      throw std::logic_error("geodesic length differs from the flow formula");
    }
    if (!flow_equal(path_flow(result.word), f)) {
      throw std::logic_error("geodesic word has a different path flow");
    }
    return result;
  }

  std::int64_t geodesic_length(Word const& w, GeodesicOptions const& options) {
    return geodesic(w, options).length;
  }

  bool bglp(Word const& w, std::int64_t k, ExactLimits const& limits) {
    if (k < 0) {
      throw PreconditionError("length bound must be nonnegative");
    }
    GeodesicResult r = geodesic(w, {ForestMode::automatic, limits});
    if (r.exact || r.length <= k) {
      return r.length <= k;
    }
    std::int64_t lower = path_flow(w).total_variation()
                         + 2 * r.forest.lower_bound;
    if (lower > k) {
      return false;
    }
    throw Undecided("geodesic length lies in [" + std::to_string(lower) + ", "
                    + std::to_string(r.length) + "], bound "
                    + std::to_string(k) + " is undecided within the limits");
  }

  Word rstp_encode(std::span<const AbelianVector> points) {
    if (points.empty()) {
      throw PreconditionError("point set is empty");
    }
    std::vector<AbelianVector> sorted(points.begin(), points.end());
    for (auto const& p : sorted) {
      if (p.rank() != 2) {
        throw RankMismatch("RSTP points must lie in Z^2");
      }
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PreconditionError("duplicate point in RSTP instance");
    }
    auto const          scale = 10 * static_cast<std::int64_t>(sorted.size());
    AbelianVector const base  = sorted.front();
    for (auto& p : sorted) {
      p    = p - base;
      p[0] *= scale;
      p[1] *= scale;
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) {
        auto d = sorted[j] - sorted[i];
        if (std::max(std::abs(d[0]), std::abs(d[1])) < 2) {
          throw std::logic_error("encoded squares touch");
        }
      }
    }

    Word w(2);
    auto repeat = [&w](int letter, std::int64_t times) {
      for (std::int64_t i = 0; i < times; ++i) {
        w.push_back(Letter::from_signed(letter));
      }
    };
    for (auto const& p : sorted) {
      std::int64_t s = p[0];
      std::int64_t t = p[1];
      repeat(s < 0 ? -1 : 1, std::abs(s));
      repeat(t < 0 ? -2 : 2, std::abs(t));
      for (int l : {2, 1, -2, -1}) {
        w.push_back(Letter::from_signed(l));
      }
      repeat(t < 0 ? 2 : -2, std::abs(t));
      repeat(s < 0 ? 1 : -1, std::abs(s));
    }
    return w;
  }

  bool rstp_decide(std::span<const AbelianVector> points,
                   std::int64_t                   k,
                   ExactLimits const&             limits) {
    Word const w = rstp_encode(points);
    if (k <= 0) {
      return false;
    }
    // The encoding has length within [20n s(A) - 2n, 20n s(A) + 4n], so the
    // yes-instances (s <= k - 1) end at 20nk - 16n and the no-instances
    // (s >= k) start at 20nk - 2n. Cut in the middle of that gap.
    auto const n = static_cast<std::int64_t>(points.size());
    return bglp(w, 20 * n * k - 10 * n, limits);
  }

}  // namespace fsg

#include "fsg/steiner.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "fsg/errors.hpp"

namespace fsg {

  namespace {

    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

    // Rectangular candidate grid with per-axis coordinate lists, plus one
    // virtual node per terminal group joined to its members at zero cost.
    class CandidateGraph {
     public:
      CandidateGraph(std::span<const std::vector<AbelianVector>> groups,
                     bool                                        hanan,
                     std::size_t                                 max_vertices)
          : rank_(groups.front().front().rank()), axes_(rank_) {
        for (auto const& g : groups) {
          for (auto const& v : g) {
            for (std::size_t a = 0; a < rank_; ++a) {
              axes_[a].push_back(v[a]);
            }
          }
        }
        for (auto& coords : axes_) {
          std::sort(coords.begin(), coords.end());
          coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
          if (!hanan) {
            std::vector<std::int64_t> full;
            for (auto c = coords.front(); c <= coords.back(); ++c) {
              full.push_back(c);
              if (full.size() > max_vertices) {
                throw LimitExceeded("candidate box exceeds "
                                    + std::to_string(max_vertices)
                                    + " vertices");
              }
            }
            coords = std::move(full);
          }
        }
        n_grid_ = 1;
        stride_.resize(rank_);
        for (std::size_t a = rank_; a-- > 0;) {
          stride_[a] = n_grid_;
          if (n_grid_ > max_vertices / axes_[a].size()) {
            throw LimitExceeded("candidate grid exceeds "
                                + std::to_string(max_vertices) + " vertices");
          }
          n_grid_ *= axes_[a].size();
        }
        if (n_grid_ > max_vertices) {
          throw LimitExceeded("candidate grid exceeds "
                              + std::to_string(max_vertices) + " vertices");
        }
        group_of_.assign(n_grid_, -1);
        members_.resize(groups.size());
        for (std::size_t g = 0; g < groups.size(); ++g) {
          for (auto const& v : groups[g]) {
            std::size_t id = index_of(v);
            if (group_of_[id] != -1) {
              throw PreconditionError("terminal groups overlap at "
                                      + to_string(v));
            }
            group_of_[id] = static_cast<int>(g);
            members_[g].push_back(id);
          }
        }
      }

      std::size_t size() const noexcept {
        return n_grid_ + members_.size();
      }
      std::size_t grid_size() const noexcept {
        return n_grid_;
      }
      std::size_t terminal(std::size_t g) const noexcept {
        return n_grid_ + g;
      }

      template <typename F>
      void for_each_neighbor(std::size_t v, F&& visit) const {
        if (v >= n_grid_) {
          for (auto m : members_[v - n_grid_]) {
            visit(m, std::int64_t{0});
          }
          return;
        }
        for (std::size_t a = 0; a < rank_; ++a) {
          std::size_t i = (v / stride_[a]) % axes_[a].size();
          if (i > 0) {
            visit(v - stride_[a], axes_[a][i] - axes_[a][i - 1]);
          }
          if (i + 1 < axes_[a].size()) {
            visit(v + stride_[a], axes_[a][i + 1] - axes_[a][i]);
          }
        }
        if (group_of_[v] >= 0) {
          visit(n_grid_ + static_cast<std::size_t>(group_of_[v]),
                std::int64_t{0});
        }
      }

      AbelianVector coords(std::size_t v) const {
        AbelianVector p(rank_);
        for (std::size_t a = 0; a < rank_; ++a) {
          p[a] = axes_[a][(v / stride_[a]) % axes_[a].size()];
        }
        return p;
      }

      // Unit edges of the straight segment between two adjacent grid nodes.
      void append_unit_edges(std::size_t                             u,
                             std::size_t                             v,
                             std::set<GridEdge, GridEdgeLess>& out) const {
        AbelianVector pu = coords(u);
        AbelianVector pv = coords(v);
        std::size_t   axis = 0;
        while (pu[axis] == pv[axis]) {
          ++axis;
        }
        if (pv[axis] < pu[axis]) {
          std::swap(pu, pv);
        }
        for (auto c = pu[axis]; c < pv[axis]; ++c) {
          AbelianVector tail = pu;
          tail[axis]         = c;
          out.insert(GridEdge{tail, static_cast<int>(axis) + 1});
        }
      }

     private:
      std::size_t index_of(AbelianVector const& v) const {
        std::size_t id = 0;
        for (std::size_t a = 0; a < rank_; ++a) {
          auto it = std::lower_bound(axes_[a].begin(), axes_[a].end(), v[a]);
          id += static_cast<std::size_t>(it - axes_[a].begin()) * stride_[a];
        }
        return id;
      }

      std::size_t                            rank_;
      std::vector<std::vector<std::int64_t>> axes_;
      std::vector<std::size_t>               stride_;
      std::size_t                            n_grid_ = 0;
      std::vector<int>                       group_of_;
      std::vector<std::vector<std::size_t>>  members_;
    };

    // back-pointer encoding: >= 0 predecessor node, kBase for a terminal's
    // own singleton, <= kMergeBase - sub for a merge of submask `sub`.
    constexpr std::int64_t kBase = -1;
    constexpr std::int64_t kUnset = -2;
    constexpr std::int64_t kMergeBase = -3;

    SteinerResult dreyfus_wagner(CandidateGraph const& graph, std::size_t k) {
      std::size_t const N     = graph.size();
      std::size_t const masks = std::size_t{1} << (k - 1);
      std::vector<std::int64_t> dp(masks * N, kInf);
      std::vector<std::int64_t> back(masks * N, kUnset);
      auto at = [N](std::size_t mask, std::size_t v) { return mask * N + v; };

      using Item = std::pair<std::int64_t, std::size_t>;
      auto relax_all = [&](std::size_t mask) {
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        for (std::size_t v = 0; v < N; ++v) {
          if (dp[at(mask, v)] < kInf) {
            queue.emplace(dp[at(mask, v)], v);
          }
        }
        while (!queue.empty()) {
          auto [d, u] = queue.top();
          queue.pop();
          if (d != dp[at(mask, u)]) {
            continue;
          }
          graph.for_each_neighbor(u, [&](std::size_t v, std::int64_t w) {
            if (d + w < dp[at(mask, v)]) {
              dp[at(mask, v)]   = d + w;
              back[at(mask, v)] = static_cast<std::int64_t>(u);
              queue.emplace(d + w, v);
            }
          });
        }
      };

      for (std::size_t i = 0; i + 1 < k; ++i) {
        std::size_t mask = std::size_t{1} << i;
        dp[at(mask, graph.terminal(i))]   = 0;
        back[at(mask, graph.terminal(i))] = kBase;
        relax_all(mask);
      }
      for (std::size_t mask = 1; mask < masks; ++mask) {
        if ((mask & (mask - 1)) == 0) {
          continue;
        }
        std::size_t low = mask & (~mask + 1);
        for (std::size_t v = 0; v < N; ++v) {
          std::int64_t best     = dp[at(mask, v)];
          std::int64_t best_sub = 0;
          for (std::size_t sub = (mask - 1) & mask; sub > 0;
               sub             = (sub - 1) & mask) {
            if ((sub & low) == 0) {
              continue;
            }
            std::int64_t c = dp[at(sub, v)] + dp[at(mask ^ sub, v)];
            if (c < best) {
              best     = c;
              best_sub = static_cast<std::int64_t>(sub);
            }
          }
          if (best_sub != 0) {
            dp[at(mask, v)]   = best;
            back[at(mask, v)] = kMergeBase - best_sub;
          }
        }
        relax_all(mask);
      }

      std::size_t const root  = graph.terminal(k - 1);
      std::size_t const full  = masks - 1;
      SteinerResult     result;
      result.size = dp[at(full, root)];

      std::set<GridEdge, GridEdgeLess>                   edges;
      std::vector<std::pair<std::size_t, std::size_t>> todo{{full, root}};
      while (!todo.empty()) {
        auto [mask, v] = todo.back();
        todo.pop_back();
        std::int64_t code = back[at(mask, v)];
        if (code >= 0) {
          auto u = static_cast<std::size_t>(code);
          if (u < graph.grid_size() && v < graph.grid_size()) {
            graph.append_unit_edges(u, v, edges);
          }
          todo.emplace_back(mask, u);
        } else if (code <= kMergeBase) {
          auto sub = static_cast<std::size_t>(kMergeBase - code);
          todo.emplace_back(sub, v);
          todo.emplace_back(mask ^ sub, v);
        } else if (code == kUnset) {
          throw std::logic_error("Steiner reconstruction reached an unset state");
        }
      }
      result.tree_edges.assign(edges.begin(), edges.end());
      if (static_cast<std::int64_t>(result.tree_edges.size()) != result.size) {
        throw std::logic_error("Steiner tree edge count disagrees with its cost");
      }
      return result;
    }

  }  // namespace

  SteinerResult connect_groups(
      std::span<const std::vector<AbelianVector>> groups,
      ExactLimits const&                          limits,
      CandidateGrid                               grid) {
    if (groups.empty()) {
      throw PreconditionError("need at least one terminal group");
    }
    std::size_t const rank = groups.front().empty()
                                 ? 0
                                 : groups.front().front().rank();
    for (auto const& g : groups) {
      if (g.empty()) {
        throw PreconditionError("terminal groups must be nonempty");
      }
      for (auto const& v : g) {
        if (v.rank() != rank || rank == 0) {
          throw RankMismatch("terminal vertices of different rank");
        }
      }
    }
    if (groups.size() == 1) {
      return {};
    }
    if (groups.size() > limits.max_terminals) {
      throw LimitExceeded(std::to_string(groups.size())
                          + " terminals exceed the exact limit of "
                          + std::to_string(limits.max_terminals));
    }
    bool hanan = grid == CandidateGrid::hanan
                 || (grid == CandidateGrid::automatic && rank <= 2);
    CandidateGraph graph(groups, hanan, limits.max_grid_vertices);
    return dreyfus_wagner(graph, groups.size());
  }

  SteinerResult steiner_size(std::span<const AbelianVector> points,
                             ExactLimits const&             limits) {
    if (points.empty()) {
      throw PreconditionError("Steiner instance needs at least one point");
    }
    std::set<AbelianVector> seen;
    std::vector<std::vector<AbelianVector>> groups;
    for (auto const& p : points) {
      if (!seen.insert(p).second) {
        throw PreconditionError("duplicate point " + to_string(p));
      }
      groups.push_back({p});
    }
    return connect_groups(groups, limits);
  }

  std::vector<AbelianVector> parse_points(std::string_view text) {
    std::string compact;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) {
        compact.push_back(ch);
      }
    }
    std::vector<AbelianVector> points;
    std::set<AbelianVector>    seen;
    if (compact.empty()) {
      return points;
    }
    std::string_view rest = compact;
    while (true) {
      auto             semi = rest.find(';');
      std::string_view item = rest.substr(0, semi);
      auto             comma = item.find(',');
      if (comma == std::string_view::npos
          || item.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError("point '" + std::string(item) + "' is not of the form x,y");
      }
      std::int64_t xy[2];
      std::string_view parts[2] = {item.substr(0, comma), item.substr(comma + 1)};
      for (int i = 0; i < 2; ++i) {
        auto [ptr, ec] = std::from_chars(
            parts[i].data(), parts[i].data() + parts[i].size(), xy[i]);
        if (ec != std::errc() || ptr != parts[i].data() + parts[i].size()
            || parts[i].empty()) {
          throw ParseError("bad coordinate '" + std::string(parts[i]) + "'");
        }
      }
      AbelianVector p{xy[0], xy[1]};
      if (!seen.insert(p).second) {
        throw ParseError("duplicate point " + to_string(p));
      }
      points.push_back(p);
      if (semi == std::string_view::npos) {
        break;
      }
      rest = rest.substr(semi + 1);
    }
    return points;
  }

  std::string format_points(std::span<const AbelianVector> points) {
    std::string out;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i != 0) {
        out += ';';
      }
      for (std::size_t a = 0; a < points[i].rank(); ++a) {
        if (a != 0) {
          out += ',';
        }
        out += std::to_string(points[i][a]);
      }
    }
    return out;
  }

}  // namespace fsg

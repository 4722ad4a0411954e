#include <doctest.h>

#include <random>

#include "fsg/errors.hpp"
#include "fsg/steiner.hpp"
#include "oracles.hpp"

using namespace fsg;

namespace {
  std::vector<AbelianVector> pts(std::string_view text) {
    return parse_points(text);
  }

  // Tree edges connect all points.
  bool connects(SteinerResult const& r, std::vector<AbelianVector> const& a) {
    std::map<AbelianVector, AbelianVector> parent;
    auto find = [&](AbelianVector v) {
      parent.try_emplace(v, v);
      while (parent[v] != v) {
        v = parent[v];
      }
      return v;
    };
    for (auto const& e : r.tree_edges) {
      parent[find(e.vertex)] = find(e.head());
    }
    for (auto const& p : a) {
      if (find(p) != find(a.front())) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("point parsing") {
  auto a = pts(" 0,0; 2,0 ;1,-2");
  REQUIRE(a.size() == 3);
  CHECK(a[2] == AbelianVector{1, -2});
  CHECK(format_points(a) == "0,0;2,0;1,-2");
  CHECK(pts("").empty());
  CHECK_THROWS_AS(pts("0,0;0,0"), ParseError);
  CHECK_THROWS_AS(pts("0,0,1"), ParseError);
  CHECK_THROWS_AS(pts("0;1"), ParseError);
  CHECK_THROWS_AS(pts("a,1"), ParseError);
}

TEST_CASE("small Steiner trees") {
  CHECK(steiner_size(pts("0,0")).size == 0);
  CHECK(steiner_size(pts("0,0;3,0")).size == 3);
  auto r = steiner_size(pts("0,0;2,0;1,2"));
  CHECK(r.size == 4);
  CHECK(r.tree_edges.size() == 4);
  CHECK(connects(r, pts("0,0;2,0;1,2")));
  CHECK(steiner_size(pts("0,0;2,2;0,2;2,0")).size == 6);
  std::vector<AbelianVector> dup{{0, 0}, {1, 0}, {0, 0}};
  CHECK_THROWS_AS(steiner_size(dup), PreconditionError);
}

TEST_CASE("exact solver matches subset enumeration") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 150; ++i) {
    std::size_t                n = 1 + rng() % 5;
    std::set<AbelianVector>    s;
    while (s.size() < n) {
      s.insert(AbelianVector{static_cast<std::int64_t>(rng() % 6),
                             static_cast<std::int64_t>(rng() % 6)});
    }
    std::vector<AbelianVector> a(s.begin(), s.end());
    auto r = steiner_size(a);
    CHECK(r.size == oracle::steiner_hanan(a));
    CHECK(connects(r, a));
    std::vector<std::vector<AbelianVector>> groups;
    for (auto const& p : a) {
      groups.push_back({p});
    }
    CHECK(connect_groups(groups, {}, CandidateGrid::full_box).size == r.size);
  }
}

TEST_CASE("grouped terminals") {
  // Two unit squares with a gap of one column.
  std::vector<std::vector<AbelianVector>> groups{
      {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{3, 1}, {4, 1}, {3, 2}, {4, 2}}};
  auto r = connect_groups(groups);
  CHECK(r.size == 2);
  CHECK(connect_groups(groups, {}, CandidateGrid::full_box).size == 2);

  // Rank 3 uses the full box.
  std::vector<std::vector<AbelianVector>> cube{{{0, 0, 0}}, {{2, 1, 0}}, {{0, 1, 2}}};
  CHECK(connect_groups(cube).size == 5);
}

TEST_CASE("limits") {
  ExactLimits tight;
  tight.max_terminals = 2;
  CHECK_THROWS_AS(steiner_size(pts("0,0;1,1;2,2"), tight), LimitExceeded);
  ExactLimits small_grid;
  small_grid.max_grid_vertices = 4;
  CHECK_THROWS_AS(steiner_size(pts("0,0;1,1;2,2"), small_grid), LimitExceeded);
  std::vector<std::vector<AbelianVector>> overlap{{{0, 0}}, {{0, 0}, {1, 0}}};
  CHECK_THROWS_AS(connect_groups(overlap), PreconditionError);
  CHECK_THROWS_AS(steiner_size(std::vector<AbelianVector>{}), PreconditionError);
}

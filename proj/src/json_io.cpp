#include "fsg/json_io.hpp"

#include <string>

#include "fsg/errors.hpp"

namespace fsg {

  namespace {

    // Runs a reader, turning schema violations into ParseError.
    template <typename F>
    auto reading(char const* what, F&& read) {
      try {
        return read();
      } catch (json::exception const& e) {
        throw ParseError(std::string("malformed ") + what + " JSON: "
                         + e.what());
      }
    }

    Word word_from_json(json const& j, int rank) {
      return parse_word(j.get<std::string>(), rank);
    }

  }  // namespace

  json vector_to_json(AbelianVector const& v) {
    return json(std::vector<std::int64_t>(v.coords().begin(), v.coords().end()));
  }

  AbelianVector vector_from_json(json const& j, int rank) {
    AbelianVector v(j.get<std::vector<std::int64_t>>());
    if (static_cast<int>(v.rank()) != rank) {
      throw RankMismatch("vector " + j.dump() + " is not of rank "
                         + std::to_string(rank));
    }
    return v;
  }

  json to_json(AbelianRingElement const& e) {
    json out = json::array();
    for (auto const& [g, c] : e.terms()) {
      out.push_back({{"delta", vector_to_json(g)}, {"coeff", c}});
    }
    return out;
  }

  AbelianRingElement ring_element_from_json(json const& j, int rank) {
    return reading("ring element", [&] {
      AbelianRingElement e(rank);
      for (auto const& t : j) {
        e.add_term(vector_from_json(t.at("delta"), rank),
                   t.at("coeff").get<std::int64_t>());
      }
      return e;
    });
  }

  json to_json(AbelianDerivativeMap const& m) {
    json out = json::array();
    for (auto const& [key, c] : m.entries()) {
      out.push_back({{"delta", vector_to_json(key.delta)},
                     {"gen", key.gen},
                     {"coeff", c}});
    }
    return out;
  }

  AbelianDerivativeMap derivative_map_from_json(json const& j, int rank) {
    return reading("derivative map", [&] {
      AbelianDerivativeMap m(rank);
      for (auto const& t : j) {
        int gen = t.at("gen").get<int>();
        if (gen < 1 || gen > rank) {
          throw RankMismatch("generator " + std::to_string(gen)
                             + " outside rank " + std::to_string(rank));
        }
        m.add(gen, vector_from_json(t.at("delta"), rank).coords(),
              t.at("coeff").get<std::int64_t>());
      }
      return m;
    });
  }

  json to_json(SolvableRingElement const& e, PrefixSet const& D) {
    json terms = json::array();
    for (auto const& t : e.terms) {
      terms.push_back({{"coeff", t.coeff},
                       {"prefix_index", t.prefix_index},
                       {"prefix_word", format_word(D.prefix(t.prefix_index))}});
    }
    return {{"class", e.klass}, {"terms", terms}};
  }

  SolvableRingElement solvable_element_from_json(json const& j) {
    return reading("solvable ring element", [&] {
      SolvableRingElement e;
      e.klass = j.at("class").get<int>();
      for (auto const& t : j.at("terms")) {
        e.terms.push_back({t.at("coeff").get<std::int64_t>(),
                           t.at("prefix_index").get<std::size_t>()});
      }
      return e;
    });
  }

  json to_json(MagnusImage const& m) {
    json out{{"class", m.klass()}, {"word", format_word(m.word())}};
    if (m.has_abelian_base()) {
      json rows = json::array();
      for (auto const& r : m.abelian().rows) {
        rows.push_back(to_json(r));
      }
      out["diagonal"] = vector_to_json(m.abelian().diagonal);
      out["rows"]     = rows;
    } else {
      PrefixSet const D(m.word());
      json            rows = json::array();
      for (auto const& r : m.solvable().rows) {
        rows.push_back(to_json(r, D));
      }
      std::size_t rep = m.solvable().diagonal_rep;
      out["diagonal"] = {{"prefix_index", rep},
                         {"prefix_word", format_word(D.prefix(rep))}};
      out["rows"]     = rows;
    }
    return out;
  }

  MagnusImage magnus_from_json(json const& j, int rank) {
    return reading("Magnus image", [&] {
      int  d = j.at("class").get<int>();
      Word w = word_from_json(j.at("word"), rank);
      if (d == 2) {
        AbelianMagnusData data;
        data.diagonal = vector_from_json(j.at("diagonal"), rank);
        for (auto const& r : j.at("rows")) {
          data.rows.push_back(ring_element_from_json(r, rank));
        }
        return MagnusImage(d, std::move(w), std::move(data));
      }
      SolvableMagnusData data;
      data.diagonal_rep =
          j.at("diagonal").at("prefix_index").get<std::size_t>();
      for (auto const& r : j.at("rows")) {
        data.rows.push_back(solvable_element_from_json(r));
      }
      return MagnusImage(d, std::move(w), std::move(data));
    });
  }

  json to_json(GridFlow const& f) {
    json edges = json::array();
    for (auto const& [e, v] : f.values()) {
      edges.push_back(
          {{"vertex", vector_to_json(e.vertex)}, {"axis", e.axis}, {"value", v}});
    }
    return {{"rank", f.rank()},
            {"source", vector_to_json(f.source())},
            {"sink", vector_to_json(f.sink())},
            {"edges", edges}};
  }

  GridFlow flow_from_json(json const& j) {
    return reading("flow", [&] {
      int      rank = j.at("rank").get<int>();
      GridFlow f(rank);
      f.set_endpoints(vector_from_json(j.at("source"), rank),
                      vector_from_json(j.at("sink"), rank));
      for (auto const& e : j.at("edges")) {
        f.add(GridEdge{vector_from_json(e.at("vertex"), rank),
                       e.at("axis").get<int>()},
              e.at("value").get<std::int64_t>());
      }
      return f;
    });
  }

  json edges_to_json(std::span<const GridEdge> edges) {
    json out = json::array();
    for (auto const& e : edges) {
      out.push_back({{"vertex", vector_to_json(e.vertex)}, {"axis", e.axis}});
    }
    return out;
  }

  std::vector<GridEdge> edges_from_json(json const& j, int rank) {
    return reading("edge list", [&] {
      std::vector<GridEdge> edges;
      for (auto const& e : j) {
        int axis = e.at("axis").get<int>();
        if (axis < 1 || axis > rank) {
          throw RankMismatch("axis " + std::to_string(axis) + " outside rank "
                             + std::to_string(rank));
        }
        edges.push_back({vector_from_json(e.at("vertex"), rank), axis});
      }
      return edges;
    });
  }

  json to_json(GeodesicResult const& r) {
    return {{"word", format_word(r.word)},
            {"length", r.length},
            {"forest_edges", edges_to_json(r.forest.edges)},
            {"exact", r.exact}};
  }

  GeodesicResult geodesic_from_json(json const& j, int rank) {
    return reading("geodesic", [&] {
      GeodesicResult r;
      r.word         = word_from_json(j.at("word"), rank);
      r.length       = j.at("length").get<std::int64_t>();
      r.forest.edges = edges_from_json(j.at("forest_edges"), rank);
      r.exact        = j.at("exact").get<bool>();
      r.forest.exact = r.exact;
      return r;
    });
  }

  json to_json(SteinerResult const& r) {
    return {{"size", r.size}, {"tree_edges", edges_to_json(r.tree_edges)}};
  }

  SteinerResult steiner_from_json(json const& j) {
    return reading("Steiner result", [&] {
      SteinerResult r;
      r.size       = j.at("size").get<std::int64_t>();
      r.tree_edges = edges_from_json(j.at("tree_edges"), 2);
      return r;
    });
  }

}  // namespace fsg

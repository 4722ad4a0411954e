// fsg: command-line front end for the free solvable group library.
//
// Exit codes: 0 yes/trivial or success, 1 no/nontrivial, 2 usage or input
// error, 3 undecided within the exact-solver limits.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fsg/abelian_fox.hpp"
#include "fsg/bench.hpp"
#include "fsg/errors.hpp"
#include "fsg/geodesic.hpp"
#include "fsg/grid_flow.hpp"
#include "fsg/json_io.hpp"
#include "fsg/magnus.hpp"
#include "fsg/solvable.hpp"
#include "fsg/steiner.hpp"

namespace {

  enum Exit { kYes = 0, kNo = 1, kUsage = 2, kUndecided = 3 };

  struct Options {
    int                      rank  = 0;
    int                      wp_class     = 2;
    int                      fox_class    = 1;
    int                      magnus_class = 2;
    int                      bench_class  = 3;
    int                      gen   = 0;
    std::optional<std::string> word;
    std::optional<std::string> word_file;
    std::string              points;
    std::string              points_file;
    std::string              realize;
    std::optional<long long> bound;
    bool                     json        = false;
    bool                     explicit_   = false;
    bool                     approximate = false;
    bool                     encode      = false;
    std::size_t              exact_limit = 10;
    std::string              suite       = "metabelian";
    std::vector<std::size_t> sizes;
    int                      seeds       = 5;
    std::uint64_t            seed        = 1;
    double                   min_time    = 0.02;
  };

  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot read " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  std::string trim(std::string s) {
    auto const first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
      return "";
    }
    auto const last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
  }

  fsg::Word input_word(Options const& o) {
    if (o.rank < 1) {
      throw UsageError("--rank must be given and at least 1");
    }
    if (o.word.has_value() == o.word_file.has_value()) {
      throw UsageError("give exactly one of --word and --word-file");
    }
    std::string text = o.word ? *o.word : read_file(*o.word_file);
    return fsg::parse_word(trim(text), o.rank);
  }

  std::vector<fsg::AbelianVector> input_points(Options const& o) {
    if (o.points.empty() == o.points_file.empty()) {
      throw UsageError("give exactly one of --points and --points-file");
    }
    std::string text = o.points_file.empty() ? o.points : read_file(o.points_file);
    auto        pts  = fsg::parse_points(text);
    if (pts.empty()) {
      throw UsageError("point set is empty");
    }
    return pts;
  }

  fsg::ExactLimits limits(Options const& o) {
    fsg::ExactLimits l;
    l.max_terminals = o.exact_limit;
    return l;
  }

  std::string show(fsg::Word const& w, Options const& o) {
    return o.explicit_ ? fsg::format_word(w, fsg::WordSyntax::explicit_tokens)
                       : fsg::format_word(w);
  }

  std::string show_edges(std::vector<fsg::GridEdge> const& edges) {
    std::string out;
    for (auto const& e : edges) {
      out += fsg::to_string(e.vertex) + " x" + std::to_string(e.axis) + "\n";
    }
    return out;
  }

  // "2*ab - 1 + aB" style listing of a solvable ring element.
  std::string show(fsg::SolvableRingElement const& e,
                   fsg::PrefixSet const&           D,
                   Options const&                  o) {
    if (e.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& t : e.terms) {
      std::int64_t mag = t.coeff < 0 ? -t.coeff : t.coeff;
      if (out.empty()) {
        out += t.coeff < 0 ? "-" : "";
      } else {
        out += t.coeff < 0 ? " - " : " + ";
      }
      fsg::Word p   = D.prefix(t.prefix_index);
      std::string g = p.empty() ? "1" : show(p, o);
      if (mag == 1) {
        out += g;
      } else {
        out += std::to_string(mag) + (p.empty() ? "" : "*" + g);
      }
    }
    return out;
  }

  int cmd_wp(Options const& o) {
    fsg::Word w = input_word(o);
    if (o.wp_class < 1) {
      throw UsageError("--class must be at least 1");
    }
    bool trivial = o.wp_class == 2 ? fsg::wp_metabelian(w)
                                : fsg::wp_solvable(w, o.wp_class);
    if (o.json) {
      std::cout << fsg::json{{"class", o.wp_class}, {"trivial", trivial}}.dump()
                << "\n";
    } else {
      std::cout << (trivial ? "trivial" : "nontrivial") << "\n";
    }
    return trivial ? kYes : kNo;
  }

  std::vector<int> generators(Options const& o) {
    if (o.gen < 0 || o.gen > o.rank) {
      throw UsageError("--gen must lie in 1.." + std::to_string(o.rank));
    }
    std::vector<int> gens;
    for (int k = 1; k <= o.rank; ++k) {
      if (o.gen == 0 || o.gen == k) {
        gens.push_back(k);
      }
    }
    return gens;
  }

  int cmd_fox(Options const& o) {
    fsg::Word w = input_word(o);
    if (o.fox_class < 1) {
      throw UsageError("--class must be at least 1");
    }
    auto const gens = generators(o);
    if (o.fox_class == 1) {
      auto const m = fsg::fox_abelian(w);
      if (o.json) {
        fsg::AbelianDerivativeMap picked(o.rank);
        for (auto const& [key, c] : m.entries()) {
          if (o.gen == 0 || key.gen == o.gen) {
            picked.add(key.gen, key.delta.coords(), c);
          }
        }
        std::cout << fsg::to_json(picked).dump() << "\n";
      } else {
        for (int k : gens) {
          std::cout << "d/dx" << k << " = "
                    << fsg::to_string(fsg::derivative_as_ring_element(m, k))
                    << "\n";
        }
      }
      return kYes;
    }
    fsg::PrefixSet const D(w);
    auto const           P   = fsg::partition(w, o.fox_class);
    fsg::json            out = fsg::json::array();
    for (int k : gens) {
      auto e = fsg::fox_solvable(D, P, k);
      if (o.json) {
        out.push_back({{"gen", k}, {"derivative", fsg::to_json(e, D)}});
      } else {
        std::cout << "d/dx" << k << " = " << show(e, D, o) << "\n";
      }
    }
    if (o.json) {
      std::cout << out.dump() << "\n";
    }
    return kYes;
  }

  int cmd_magnus(Options const& o) {
    fsg::Word w = input_word(o);
    if (o.magnus_class < 2) {
      throw UsageError("--class must be at least 2");
    }
    auto const m = fsg::magnus_image(w, o.magnus_class);
    if (o.json) {
      std::cout << fsg::to_json(m).dump() << "\n";
      return kYes;
    }
    if (m.has_abelian_base()) {
      std::cout << "diagonal " << fsg::to_string(m.abelian().diagonal) << "\n";
      for (std::size_t k = 0; k < m.abelian().rows.size(); ++k) {
        std::cout << "row " << k + 1 << " "
                  << fsg::to_string(m.abelian().rows[k]) << "\n";
      }
    } else {
      fsg::PrefixSet const D(w);
      fsg::Word const      diag = D.prefix(m.solvable().diagonal_rep);
      std::cout << "diagonal " << (diag.empty() ? "1" : show(diag, o)) << "\n";
      for (std::size_t k = 0; k < m.solvable().rows.size(); ++k) {
        std::cout << "row " << k + 1 << " " << show(m.solvable().rows[k], D, o)
                  << "\n";
      }
    }
    return kYes;
  }

  int cmd_flow(Options const& o) {
    if (!o.realize.empty()) {
      if (o.word || o.word_file) {
        throw UsageError("--realize takes no word input");
      }
      fsg::json j;
      try {
        j = fsg::json::parse(read_file(o.realize));
      } catch (fsg::json::parse_error const& e) {
        throw fsg::ParseError(std::string("flow file: ") + e.what());
      }
      fsg::Word w = fsg::flow_to_path(fsg::flow_from_json(j));
      if (o.json) {
        std::cout << fsg::json{{"word", fsg::format_word(w)}}.dump() << "\n";
      } else {
        std::cout << show(w, o) << "\n";
      }
      return kYes;
    }
    auto const f = fsg::path_flow(input_word(o));
    if (o.json) {
      std::cout << fsg::to_json(f).dump() << "\n";
      return kYes;
    }
    std::cout << "source " << fsg::to_string(f.source()) << "\n"
              << "sink " << fsg::to_string(f.sink()) << "\n";
    for (auto const& [e, v] : f.values()) {
      std::cout << fsg::to_string(e.vertex) << " x" << e.axis << " " << v
                << "\n";
    }
    return kYes;
  }

  int cmd_geodesic(Options const& o) {
    fsg::Word            w = input_word(o);
    fsg::GeodesicOptions go;
    go.limits = limits(o);
    go.mode   = o.approximate ? fsg::ForestMode::approximate
                              : fsg::ForestMode::automatic;
    auto const r = fsg::geodesic(w, go);
    if (o.json) {
      std::cout << fsg::to_json(r).dump() << "\n";
    } else {
      std::cout << "word " << show(r.word, o) << "\n"
                << "length " << r.length << "\n"
                << "exact " << (r.exact ? "true" : "false") << "\n"
                << "forest " << r.forest.edges.size() << "\n"
                << show_edges(r.forest.edges);
    }
    return kYes;
  }

  int decision(bool yes, Options const& o) {
    if (o.json) {
      std::cout << fsg::json{{"answer", yes}}.dump() << "\n";
    } else {
      std::cout << (yes ? "yes" : "no") << "\n";
    }
    return yes ? kYes : kNo;
  }

  int cmd_bglp(Options const& o) {
    fsg::Word w = input_word(o);
    if (!o.bound) {
      throw UsageError("--bound is required");
    }
    return decision(fsg::bglp(w, *o.bound, limits(o)), o);
  }

  int cmd_rstp(Options const& o) {
    auto const pts = input_points(o);
    if (o.encode) {
      fsg::Word w = fsg::rstp_encode(pts);
      if (o.json) {
        std::cout << fsg::json{{"word", fsg::format_word(w)},
                               {"length", w.size()}}
                         .dump()
                  << "\n";
      } else {
        std::cout << show(w, o) << "\n";
      }
      return kYes;
    }
    if (o.bound) {
      return decision(fsg::rstp_decide(pts, *o.bound, limits(o)), o);
    }
    auto const s = fsg::steiner_size(pts, limits(o));
    if (o.json) {
      std::cout << fsg::to_json(s).dump() << "\n";
    } else {
      std::cout << "size " << s.size << "\n" << show_edges(s.tree_edges);
    }
    return kYes;
  }

  int cmd_bench(Options const& o) {
    fsg::BenchOptions b;
    if (o.suite == "metabelian") {
      b.suite = fsg::BenchSuite::metabelian;
    } else if (o.suite == "solvable") {
      b.suite = fsg::BenchSuite::solvable;
    } else {
      throw UsageError("--suite must be metabelian or solvable");
    }
    b.sizes       = o.sizes;
    b.seeds       = o.seeds;
    b.seed        = o.seed;
    b.rank        = o.rank == 0 ? 2 : o.rank;
    b.klass       = o.bench_class;
    b.min_seconds = o.min_time;
    auto const rows = fsg::run_bench(b);
    if (o.json) {
      fsg::json out = fsg::json::array();
      for (auto const& r : rows) {
        out.push_back({{"size", r.size},
                       {"mean_seconds", r.mean_seconds},
                       {"ratio", r.ratio},
                       {"trivial", r.trivial}});
      }
      std::cout << out.dump() << "\n";
    } else {
      std::cout << fsg::format_bench(b, rows);
    }
    return kYes;
  }

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (char const* env = std::getenv("FSG_EXACT_LIMIT")) {
    try {
      o.exact_limit = static_cast<std::size_t>(std::stoul(env));
    } catch (std::exception const&) {
      std::cerr << "fsg: error: FSG_EXACT_LIMIT is not a number\n";
      return kUsage;
    }
  }

  CLI::App app{"Word problems and geodesics in free metabelian and free "
               "solvable groups"};
  app.require_subcommand(1);

  auto word_input = [&](CLI::App* sub) {
    sub->add_option("--rank,-r", o.rank, "number of generators")
        ->check(CLI::PositiveNumber);
    auto* w = sub->add_option("--word,-w", o.word, "word, e.g. abAB or 'x1 x2^-1'");
    auto* f = sub->add_option("--word-file", o.word_file, "file holding the word");
    w->excludes(f);
    sub->add_flag("--explicit", o.explicit_, "print words as x1 x2^-1 tokens");
    sub->add_flag("--json", o.json, "JSON output");
  };

  auto* wp = app.add_subcommand("wp", "decide w = 1 in the free solvable group of class d");
  word_input(wp);
  wp->add_option("--class,-d", o.wp_class, "solvability class")->capture_default_str();

  auto* fox = app.add_subcommand("fox", "Fox derivatives in Z S_{r,c}");
  word_input(fox);
  fox->add_option("--class,-d", o.fox_class, "class c of the group ring")->capture_default_str();
  fox->add_option("--gen", o.gen, "only this generator");

  auto* magnus = app.add_subcommand("magnus", "Magnus image in S_{r,d}");
  word_input(magnus);
  magnus->add_option("--class,-d", o.magnus_class, "class d")->capture_default_str();

  auto* flow = app.add_subcommand("flow", "path flow of a word, or a word realizing a flow");
  word_input(flow);
  flow->add_option("--realize", o.realize, "flow JSON file to turn into a word");

  auto exact_limit = [&](CLI::App* sub) {
    sub->add_option("--exact-limit", o.exact_limit,
                    "terminal limit of the exact Steiner solver");
  };

  auto* geo = app.add_subcommand("geodesic", "geodesic word in the free metabelian group");
  word_input(geo);
  exact_limit(geo);
  geo->add_flag("--approximate", o.approximate, "use the spanning-tree forest");

  auto* bglp = app.add_subcommand("bglp", "decide geodesic length <= bound");
  word_input(bglp);
  exact_limit(bglp);
  bglp->add_option("--bound,-k", o.bound, "length bound")->required();

  auto* rstp = app.add_subcommand("rstp", "rectilinear Steiner trees and their word encoding");
  auto* pts  = rstp->add_option("--points,-p", o.points, "points x,y;x,y;...");
  auto* ptsf = rstp->add_option("--points-file", o.points_file, "file holding the points");
  pts->excludes(ptsf);
  rstp->add_option("--bound,-k", o.bound, "decide s(A) < bound");
  rstp->add_flag("--encode", o.encode, "print the encoding word");
  rstp->add_flag("--explicit", o.explicit_, "print words as x1 x2^-1 tokens");
  rstp->add_flag("--json", o.json, "JSON output");
  exact_limit(rstp);

  auto* bench = app.add_subcommand("bench", "time the word-problem solvers");
  bench->add_option("--suite", o.suite, "metabelian or solvable")->capture_default_str();
  auto* sizes = bench->add_option("--sizes", o.sizes, "word lengths")->expected(0, -1);
  bench->add_option("--seeds", o.seeds, "words per size")->capture_default_str();
  bench->add_option("--seed", o.seed, "random seed")->capture_default_str();
  bench->add_option("--rank,-r", o.rank, "number of generators");
  bench->add_option("--class,-d", o.bench_class, "class for the solvable suite")->capture_default_str();
  bench->add_option("--min-time", o.min_time, "seconds per timing")->capture_default_str();
  bench->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kYes : kUsage;
  }

  // A bare --sizes is an empty size list.
  bool no_sizes = true;
  for (auto const& r : sizes->results()) {
    no_sizes = no_sizes && trim(r).empty();
  }
  if (no_sizes) {
    o.sizes.clear();
  }

  try {
    if (wp->parsed()) return cmd_wp(o);
    if (fox->parsed()) return cmd_fox(o);
    if (magnus->parsed()) return cmd_magnus(o);
    if (flow->parsed()) return cmd_flow(o);
    if (geo->parsed()) return cmd_geodesic(o);
    if (bglp->parsed()) return cmd_bglp(o);
    if (rstp->parsed()) return cmd_rstp(o);
    if (bench->parsed()) return cmd_bench(o);
  } catch (fsg::Undecided const& e) {
    std::cout << "undecided\n";
    std::cerr << "fsg: " << e.what() << "\n";
    return kUndecided;
  } catch (fsg::LimitExceeded const& e) {
    std::cerr << "fsg: " << e.what() << "\n";
    return kUndecided;
  } catch (UsageError const& e) {
    std::cerr << "fsg: error: " << e.what() << "\n";
    return kUsage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "fsg: error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

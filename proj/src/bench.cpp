#include "fsg/bench.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#include "fsg/abelian_fox.hpp"
#include "fsg/errors.hpp"
#include "fsg/solvable.hpp"

namespace fsg {

  Word bench_word(std::uint64_t seed, int rank, std::size_t size, int i) {
    std::seed_seq   seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(size),
                      static_cast<std::uint32_t>(size >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    return random_word(rng, rank, size);
  }

  std::vector<BenchRow> run_bench(BenchOptions const& options) {
    if (options.seeds < 1) {
      throw PreconditionError("need at least one seed per size");
    }
    for (std::size_t i = 1; i < options.sizes.size(); ++i) {
      if (options.sizes[i] < options.sizes[i - 1]) {
        throw PreconditionError("benchmark sizes must be nondecreasing");
      }
    }
    using clock = std::chrono::steady_clock;
    auto solve  = [&](Word const& w) {
      return options.suite == BenchSuite::metabelian
                 ? wp_metabelian(w)
                 : wp_solvable(w, options.klass);
    };

    std::vector<BenchRow> rows;
    for (std::size_t size : options.sizes) {
      BenchRow row;
      row.size = size;
      for (int i = 0; i < options.seeds; ++i) {
        Word const  w     = bench_word(options.seed, options.rank, size, i);
        bool        last  = false;
        long        reps  = 0;
        auto const  start = clock::now();
        double      elapsed = 0;
        do {
          last = solve(w);
          ++reps;
          elapsed = std::chrono::duration<double>(clock::now() - start).count();
        } while (elapsed < options.min_seconds);
        row.mean_seconds += elapsed / static_cast<double>(reps);
        row.trivial += last ? 1 : 0;
      }
      row.mean_seconds /= options.seeds;
      if (!rows.empty() && rows.back().mean_seconds > 0) {
        row.ratio = row.mean_seconds / rows.back().mean_seconds;
      }
      rows.push_back(row);
    }
    return rows;
  }

  std::string format_bench(BenchOptions const&          options,
                           std::vector<BenchRow> const& rows) {
    std::string out = options.suite == BenchSuite::metabelian
                          ? "suite metabelian"
                          : "suite solvable class " + std::to_string(options.klass);
    out += " rank " + std::to_string(options.rank) + " seeds "
           + std::to_string(options.seeds) + " seed "
           + std::to_string(options.seed) + "\n";
    out += "size        mean_ms     ratio   trivial\n";
    char line[96];
    for (auto const& r : rows) {
      if (r.ratio > 0) {
        std::snprintf(line, sizeof line, "%-11zu %-11.3f %-7.3f %zu\n", r.size,
                      r.mean_seconds * 1e3, r.ratio, r.trivial);
      } else {
        std::snprintf(line, sizeof line, "%-11zu %-11.3f %-7s %zu\n", r.size,
                      r.mean_seconds * 1e3, "-", r.trivial);
      }
      out += line;
    }
    return out;
  }

}  // namespace fsg

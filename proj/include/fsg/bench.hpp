#pragma once

// Timing harness for the two word-problem solvers on seeded random words.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fsg/words.hpp"

namespace fsg {

  enum class BenchSuite { metabelian, solvable };

  struct BenchOptions {
    BenchSuite               suite = BenchSuite::metabelian;
    std::vector<std::size_t> sizes;  // nondecreasing
    int                      seeds = 5;
    std::uint64_t            seed  = 1;
    int                      rank  = 2;
    int                      klass = 3;  // solvable suite only
    // Each timing repeats the solver until at least this much time passed.
    double min_seconds = 0.02;
  };

  struct BenchRow {
    std::size_t size = 0;
    double      mean_seconds = 0;
    // mean_seconds over that of the previous row; 0 for the first row.
    double      ratio   = 0;
    std::size_t trivial = 0;  // words found trivial, out of `seeds`
  };

  // The i-th benchmark word of the given size; depends only on the arguments.
  Word bench_word(std::uint64_t seed, int rank, std::size_t size, int i);

  std::vector<BenchRow> run_bench(BenchOptions const& options);

  std::string format_bench(BenchOptions const&          options,
                           std::vector<BenchRow> const& rows);

}  // namespace fsg

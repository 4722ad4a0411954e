#pragma once

// Word problem and Fox derivatives in the free solvable groups
// S_{r,d} = F_r / F_r^{(d)}, computed by refining the partition of the
// prefixes of a word class by class.
//
// For a word w = y_1 ... y_n the prefixes w_0 = 1, w_1, ..., w_n are indexed
// 0..n. The class-c partition function maps every prefix index to the
// smallest index of a prefix equal to it in S_{r,c}. Class c + 1 only splits
// class-c blocks: two prefixes w_s, w_t (s < t) equal in S_{r,c} stay
// together iff for every generator x_k
//
//   - sum_{s<j<=t, y_j = x_k}      w_{j-1}  +  sum_{s<j<=t, y_j = x_k^-1} w_j
//
// collects to zero in Z S_{r,c}, which only needs the class-c partition.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fsg/words.hpp"

namespace fsg {

  // The prefixes w_0 .. w_n of a word, addressed by length.
  class PrefixSet {
   public:
    explicit PrefixSet(Word w) : word_(std::move(w)) {}

    Word const& word() const noexcept {
      return word_;
    }
    // Number of prefixes, n + 1.
    std::size_t size() const noexcept {
      return word_.size() + 1;
    }
    // The letter y_j that extends w_{j-1} to w_j (1 <= j <= n).
    Letter step(std::size_t j) const {
      return word_[j - 1];
    }
    Word prefix(std::size_t j) const;

   private:
    Word word_;
  };

  PrefixSet prefix_set(Word const& w);

  struct PartitionFunction {
    int                      klass = 0;
    std::vector<std::size_t> reps;

    std::size_t operator()(std::size_t i) const {
      return reps[i];
    }
    std::size_t size() const noexcept {
      return reps.size();
    }
    friend bool operator==(PartitionFunction const&, PartitionFunction const&)
        = default;
  };

  struct SignedIndex {
    int         sign;  // +1 or -1
    std::size_t index;
  };

  // Linear-time collection of signed prefix terms modulo a partition. The
  // scratch array is sized once per prefix set and reset through the list of
  // touched slots, so each call costs O(terms) regardless of n.
  class TermCollector {
   public:
    explicit TermCollector(std::size_t n_prefixes);

    // Accumulates one term; `rep` must already be a representative.
    void add(std::size_t rep, std::int64_t coeff);
    // True iff every accumulated coefficient is zero; resets the collector.
    bool drain_is_zero();
    // Nonzero totals sorted by representative; resets the collector.
    std::vector<std::pair<std::size_t, std::int64_t>> drain();

   private:
    std::vector<std::int64_t> scratch_;
    std::vector<std::size_t>  touched_;
  };

  PartitionFunction trivial_partition(PrefixSet const& D);

  // Class 1: prefixes grouped by their exponent-sum vectors.
  PartitionFunction abelian_partition(PrefixSet const& D);

  std::map<std::size_t, std::int64_t> collect_similar_terms(
      std::span<const SignedIndex> terms,
      PartitionFunction const&     P);

  // Whether d w_s/d x_k - d w_t/d x_k vanishes in Z S_{r,c}, where P_prev is
  // the class-c partition; requires s <= t and P_prev(s) == P_prev(t).
  bool derivative_difference_is_zero(PrefixSet const&         D,
                                     PartitionFunction const& P_prev,
                                     std::size_t              s,
                                     std::size_t              t,
                                     int                      k);

  // P_1, ..., P_d for the prefixes of w (index c - 1 holds class c).
  std::vector<PartitionFunction> partition_chain(Word const& w, int d);

  // The S_{r,d}-partition of the prefixes of w, d >= 1.
  PartitionFunction partition(Word const& w, int d);

  // w = 1 in S_{r,d}.
  bool wp_solvable(Word const& w, int d);

  // Element of Z S_{r,c} whose group elements are named by prefix indices
  // of one fixed word (each a representative of the class-c partition).
  struct SolvableRingElement {
    struct Term {
      std::int64_t coeff;
      std::size_t  prefix_index;
      friend bool  operator==(Term const&, Term const&) = default;
    };

    int               klass = 0;
    std::vector<Term> terms;  // sorted by prefix_index

    bool is_zero() const noexcept {
      return terms.empty();
    }
    friend bool operator==(SolvableRingElement const&,
                           SolvableRingElement const&)
        = default;
  };

  // d w / d x_k in Z S_{r,d}, in standard group ring form.
  SolvableRingElement fox_solvable(Word const& w, int d, int k);

  // Same, reusing an already computed class-d partition of w's prefixes.
  SolvableRingElement fox_solvable(PrefixSet const&         D,
                                   PartitionFunction const& P,
                                   int                      k);

}  // namespace fsg

#include "fsg/solvable.hpp"

#include <algorithm>
#include <string>

#include "fsg/errors.hpp"

namespace fsg {

  Word PrefixSet::prefix(std::size_t j) const {
    if (j > word_.size()) {
      throw PreconditionError("prefix index " + std::to_string(j)
                              + " out of range");
    }
    return Word(word_.rank(),
                std::vector<Letter>(word_.begin(), word_.begin() + j));
  }

  PrefixSet prefix_set(Word const& w) {
    return PrefixSet(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // TermCollector
  ////////////////////////////////////////////////////////////////////////

  TermCollector::TermCollector(std::size_t n_prefixes)
      : scratch_(n_prefixes, 0) {
    touched_.reserve(n_prefixes);
  }

  void TermCollector::add(std::size_t rep, std::int64_t coeff) {
    if (scratch_[rep] == 0) {
      touched_.push_back(rep);
    }
    scratch_[rep] += coeff;
    // A slot that returns to zero stays in touched_; duplicates are harmless
    // because draining zeroes the slot on first visit.
  }

  bool TermCollector::drain_is_zero() {
    bool zero = true;
    for (auto rep : touched_) {
      if (scratch_[rep] != 0) {
        zero = false;
      }
      scratch_[rep] = 0;
    }
    touched_.clear();
    return zero;
  }

  std::vector<std::pair<std::size_t, std::int64_t>> TermCollector::drain() {
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (auto rep : touched_) {
      if (scratch_[rep] != 0) {
        out.emplace_back(rep, scratch_[rep]);
      }
      scratch_[rep] = 0;
    }
    touched_.clear();
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions
  ////////////////////////////////////////////////////////////////////////

  PartitionFunction trivial_partition(PrefixSet const& D) {
    PartitionFunction P{0, std::vector<std::size_t>(D.size())};
    for (std::size_t i = 0; i < P.reps.size(); ++i) {
      P.reps[i] = i;
    }
    return P;
  }

  PartitionFunction abelian_partition(PrefixSet const& D) {
    PartitionFunction P{1, std::vector<std::size_t>(D.size())};
    std::map<AbelianVector, std::size_t> first_seen;
    AbelianVector delta(static_cast<std::size_t>(D.word().rank()));
    first_seen.emplace(delta, 0);
    P.reps[0] = 0;
    for (std::size_t j = 1; j < D.size(); ++j) {
      Letter l = D.step(j);
      delta[static_cast<std::size_t>(l.gen() - 1)] += l.sign();
      P.reps[j] = first_seen.try_emplace(delta, j).first->second;
    }
    return P;
  }

  std::map<std::size_t, std::int64_t> collect_similar_terms(
      std::span<const SignedIndex> terms,
      PartitionFunction const&     P) {
    TermCollector collector(P.size());
    for (auto const& t : terms) {
      if (t.index >= P.size()) {
        throw PreconditionError("prefix index " + std::to_string(t.index)
                                + " out of range");
      }
      collector.add(P(t.index), t.sign);
    }
    auto                                collected = collector.drain();
    std::map<std::size_t, std::int64_t> out(collected.begin(), collected.end());
    return out;
  }

  namespace {
    // The telescoped difference for one generator, collected into `c`.
    bool difference_vanishes(PrefixSet const&         D,
                             PartitionFunction const& P_prev,
                             std::size_t              s,
                             std::size_t              t,
                             int                      k,
                             TermCollector&           c) {
      for (std::size_t j = s + 1; j <= t; ++j) {
        Letter l = D.step(j);
        if (l.gen() != k) {
          continue;
        }
        if (l.sign() > 0) {
          c.add(P_prev(j - 1), -1);
        } else {
          c.add(P_prev(j), 1);
        }
      }
      return c.drain_is_zero();
    }

    PartitionFunction refine(PrefixSet const&         D,
                             PartitionFunction const& P_prev) {
      std::size_t const n_prefixes = D.size();
      int const         rank       = D.word().rank();
      PartitionFunction P{P_prev.klass + 1, std::vector<std::size_t>(n_prefixes)};

      // Members of every P_prev block, in index order.
      std::vector<std::vector<std::size_t>> blocks(n_prefixes);
      for (std::size_t i = 0; i < n_prefixes; ++i) {
        blocks[P_prev(i)].push_back(i);
      }

      TermCollector collector(n_prefixes);
      std::vector<std::size_t> sub_reps;
      for (auto const& block : blocks) {
        if (block.empty()) {
          continue;
        }
        sub_reps.clear();
        for (std::size_t t : block) {
          std::size_t assigned = t;
          for (std::size_t s : sub_reps) {
            bool equal = true;
            for (int k = 1; k <= rank && equal; ++k) {
              equal = difference_vanishes(D, P_prev, s, t, k, collector);
            }
            if (equal) {
              assigned = s;
              break;
            }
          }
          if (assigned == t) {
            sub_reps.push_back(t);
          }
          P.reps[t] = assigned;
        }
      }
      return P;
    }

    void check_class(int d) {
      if (d < 1) {
        throw PreconditionError("solvability class must be at least 1, got "
                                + std::to_string(d));
      }
    }
  }  // namespace

  bool derivative_difference_is_zero(PrefixSet const&         D,
                                     PartitionFunction const& P_prev,
                                     std::size_t              s,
                                     std::size_t              t,
                                     int                      k) {
    if (P_prev.size() != D.size()) {
      throw PreconditionError("partition does not match the prefix set");
    }
    if (s > t || t >= D.size()) {
      throw PreconditionError("need s <= t <= n");
    }
    if (P_prev(s) != P_prev(t)) {
      throw PreconditionError("prefixes " + std::to_string(s) + " and "
                              + std::to_string(t)
                              + " differ in the coarser quotient");
    }
    if (k < 1 || k > D.word().rank()) {
      throw PreconditionError("generator index out of range");
    }
    TermCollector collector(D.size());
    return difference_vanishes(D, P_prev, s, t, k, collector);
  }

  std::vector<PartitionFunction> partition_chain(Word const& w, int d) {
    check_class(d);
    PrefixSet                      D(w);
    std::vector<PartitionFunction> chain;
    chain.reserve(static_cast<std::size_t>(d));
    chain.push_back(abelian_partition(D));
    for (int c = 2; c <= d; ++c) {
      chain.push_back(refine(D, chain.back()));
    }
    return chain;
  }

  PartitionFunction partition(Word const& w, int d) {
    check_class(d);
    PrefixSet         D(w);
    PartitionFunction P = abelian_partition(D);
    for (int c = 2; c <= d; ++c) {
      P = refine(D, P);
    }
    return P;
  }

  bool wp_solvable(Word const& w, int d) {
    PartitionFunction P = partition(w, d);
    return P(0) == P(P.size() - 1);
  }

  SolvableRingElement fox_solvable(PrefixSet const&         D,
                                   PartitionFunction const& P,
                                   int                      k) {
    if (k < 1 || k > D.word().rank()) {
      throw PreconditionError("generator index " + std::to_string(k)
                              + " out of range");
    }
    if (P.size() != D.size()) {
      throw PreconditionError("partition does not match the prefix set");
    }
    TermCollector collector(D.size());
    for (std::size_t j = 1; j < D.size(); ++j) {
      Letter l = D.step(j);
      if (l.gen() != k) {
        continue;
      }
      if (l.sign() > 0) {
        collector.add(P(j - 1), 1);
      } else {
        collector.add(P(j), -1);
      }
    }
    SolvableRingElement result{P.klass, {}};
    for (auto [rep, coeff] : collector.drain()) {
      result.terms.push_back({coeff, rep});
    }
    return result;
  }

  SolvableRingElement fox_solvable(Word const& w, int d, int k) {
    return fox_solvable(PrefixSet(w), partition(w, d), k);
  }

}  // namespace fsg

#include "fsg/abelian_fox.hpp"

#include <limits>
#include <vector>

#include "fsg/errors.hpp"

namespace fsg {

  ////////////////////////////////////////////////////////////////////////
  // AbelianRingElement
  ////////////////////////////////////////////////////////////////////////

  AbelianRingElement::AbelianRingElement(int rank) : rank_(rank) {}

  AbelianRingElement::AbelianRingElement(int rank, map_type terms)
      : rank_(rank) {
    for (auto& [g, c] : terms) {
      add_term(g, c);
    }
  }

  AbelianRingElement AbelianRingElement::monomial(AbelianVector const& g,
                                                  std::int64_t         coeff) {
    AbelianRingElement e(static_cast<int>(g.rank()));
    e.add_term(g, coeff);
    return e;
  }

  AbelianRingElement AbelianRingElement::one(int rank) {
    return monomial(AbelianVector(static_cast<std::size_t>(rank)));
  }

  std::int64_t AbelianRingElement::coefficient(AbelianVector const& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? 0 : it->second;
  }

  void AbelianRingElement::add_term(AbelianVector const& g, std::int64_t coeff) {
    if (static_cast<int>(g.rank()) != rank_) {
      throw RankMismatch("group element rank differs from ring rank");
    }
    if (coeff == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(g, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  AbelianRingElement AbelianRingElement::translated(
      AbelianVector const& g) const {
    AbelianRingElement result(rank_);
    for (auto const& [h, c] : terms_) {
      result.terms_.emplace_hint(result.terms_.end(), h + g, c);
    }
    return result;
  }

  AbelianRingElement& AbelianRingElement::operator+=(
      AbelianRingElement const& other) {
    if (other.rank_ != rank_) {
      throw RankMismatch("ring elements of different rank");
    }
    for (auto const& [g, c] : other.terms_) {
      add_term(g, c);
    }
    return *this;
  }

  AbelianRingElement& AbelianRingElement::operator-=(
      AbelianRingElement const& other) {
    if (other.rank_ != rank_) {
      throw RankMismatch("ring elements of different rank");
    }
    for (auto const& [g, c] : other.terms_) {
      add_term(g, -c);
    }
    return *this;
  }

  AbelianRingElement operator*(AbelianRingElement const& a,
                               AbelianRingElement const& b) {
    if (a.rank_ != b.rank_) {
      throw RankMismatch("ring elements of different rank");
    }
    AbelianRingElement result(a.rank_);
    for (auto const& [g, c] : a.terms_) {
      for (auto const& [h, d] : b.terms_) {
        result.add_term(g + h, c * d);
      }
    }
    return result;
  }

  namespace {
    std::string monomial_text(AbelianVector const& g) {
      std::string out;
      for (std::size_t i = 0; i < g.rank(); ++i) {
        if (g[i] == 0) {
          continue;
        }
        if (!out.empty()) {
          out += '*';
        }
        out += 'x' + std::to_string(i + 1);
        if (g[i] != 1) {
          out += '^' + std::to_string(g[i]);
        }
      }
      return out;
    }
  }  // namespace

  std::string to_string(AbelianRingElement const& e) {
    if (e.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [g, c] : e.terms()) {
      std::string mono = monomial_text(g);
      std::int64_t mag = c < 0 ? -c : c;
      if (first) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mono.empty()) {
        out += std::to_string(mag);
      } else if (mag != 1) {
        out += std::to_string(mag) + '*' + mono;
      } else {
        out += mono;
      }
      first = false;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // AbelianDerivativeMap
  ////////////////////////////////////////////////////////////////////////

  std::int64_t AbelianDerivativeMap::coefficient(
      int gen, AbelianVector const& delta) const {
    auto it = entries_.find(DerivativeKeyView{gen, delta.coords()});
    return it == entries_.end() ? 0 : it->second;
  }

  void AbelianDerivativeMap::add(int                            gen,
                                 std::span<const std::int64_t> delta,
                                 std::int64_t                   coeff) {
    if (coeff == 0) {
      return;
    }
    DerivativeKeyView view{gen, delta};
    auto              it = entries_.lower_bound(view);
    if (it != entries_.end() && !entries_.key_comp()(view, it->first)) {
      it->second += coeff;
      if (it->second == 0) {
        entries_.erase(it);
      }
      return;
    }
    entries_.emplace_hint(
        it,
        DerivativeKey{gen,
                      AbelianVector(std::vector<std::int64_t>(delta.begin(),
                                                              delta.end()))},
        coeff);
  }

  AbelianDerivativeMap AbelianDerivativeMap::translated(
      AbelianVector const& g) const {
    AbelianDerivativeMap result(rank_);
    for (auto const& [key, c] : entries_) {
      result.entries_.emplace_hint(
          result.entries_.end(), DerivativeKey{key.gen, key.delta + g}, c);
    }
    return result;
  }

  AbelianDerivativeMap& AbelianDerivativeMap::operator+=(
      AbelianDerivativeMap const& other) {
    if (other.rank_ != rank_) {
      throw RankMismatch("derivative maps of different rank");
    }
    for (auto const& [key, c] : other.entries_) {
      add(key.gen, key.delta.coords(), c);
    }
    return *this;
  }

  bool operator==(AbelianDerivativeMap const& a,
                  AbelianDerivativeMap const& b) {
    if (a.rank_ != b.rank_ || a.entries_.size() != b.entries_.size()) {
      return false;
    }
    auto it = b.entries_.begin();
    for (auto const& [key, c] : a.entries_) {
      if (key.gen != it->first.gen || key.delta != it->first.delta
          || c != it->second) {
        return false;
      }
      ++it;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Algorithms
  ////////////////////////////////////////////////////////////////////////

  AbelianDerivativeMap fox_abelian(Word const& w) {
    AbelianDerivativeMap      result(w.rank());
    std::vector<std::int64_t> delta(static_cast<std::size_t>(w.rank()), 0);
    for (auto l : w) {
      auto const i = static_cast<std::size_t>(l.gen() - 1);
      if (l.sign() > 0) {
        result.add(l.gen(), delta, 1);
        ++delta[i];
      } else {
        --delta[i];
        result.add(l.gen(), delta, -1);
      }
    }
    return result;
  }

  bool wp_metabelian(Word const& w) {
    return fox_abelian(w).empty();
  }

  AbelianRingElement derivative_as_ring_element(AbelianDerivativeMap const& m,
                                                int gen) {
    if (gen < 1 || gen > m.rank()) {
      throw PreconditionError("generator index " + std::to_string(gen)
                              + " out of range 1.." + std::to_string(m.rank()));
    }
    AbelianRingElement result(m.rank());
    // Keys are generator-major, so one generator is a contiguous range.
    std::vector<std::int64_t> lowest(static_cast<std::size_t>(m.rank()),
                                     std::numeric_limits<std::int64_t>::min());
    auto it = m.entries().lower_bound(DerivativeKeyView{gen, lowest});
    for (; it != m.entries().end() && it->first.gen == gen; ++it) {
      result.add_term(it->first.delta, it->second);
    }
    return result;
  }

}  // namespace fsg

#pragma once

// Fox derivatives with coefficients in the integral group ring of the free
// abelian group A_r = Z^r, and the word problem in the free metabelian group
// M_r that they decide.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "fsg/words.hpp"

namespace fsg {

  // Key (delta, gen) of a single coefficient m_{a,i}; ordered generator
  // major, then delta lexicographically.
  struct DerivativeKey {
    int           gen;
    AbelianVector delta;
  };

  // Non-owning key used for lookups without materialising an AbelianVector.
  struct DerivativeKeyView {
    int                            gen;
    std::span<const std::int64_t> delta;
  };

  struct DerivativeKeyLess {
    using is_transparent = void;

    template <typename A, typename B>
    bool operator()(A const& a, B const& b) const {
      if (a.gen != b.gen) {
        return a.gen < b.gen;
      }
      auto const& da = coords_of(a);
      auto const& db = coords_of(b);
      return std::lexicographical_compare(
          da.begin(), da.end(), db.begin(), db.end());
    }

   private:
    static std::span<const std::int64_t> coords_of(DerivativeKey const& k) {
      return k.delta.coords();
    }
    static std::span<const std::int64_t> coords_of(DerivativeKeyView const& k) {
      return k.delta;
    }
  };

  // Element of Z A_r in standard form: delta -> nonzero coefficient.
  class AbelianRingElement {
   public:
    using map_type = std::map<AbelianVector, std::int64_t>;

    explicit AbelianRingElement(int rank);
    AbelianRingElement(int rank, map_type terms);

    static AbelianRingElement zero(int rank) {
      return AbelianRingElement(rank);
    }
    static AbelianRingElement monomial(AbelianVector const& g,
                                       std::int64_t         coeff = 1);
    static AbelianRingElement one(int rank);

    int rank() const noexcept {
      return rank_;
    }
    bool is_zero() const noexcept {
      return terms_.empty();
    }
    map_type const& terms() const noexcept {
      return terms_;
    }
    std::int64_t coefficient(AbelianVector const& g) const;

    // Adds `coeff` to the coefficient of g, dropping it if it cancels.
    void add_term(AbelianVector const& g, std::int64_t coeff);

    // g * this (a shift of every exponent vector by g).
    AbelianRingElement translated(AbelianVector const& g) const;

    AbelianRingElement& operator+=(AbelianRingElement const& other);
    AbelianRingElement& operator-=(AbelianRingElement const& other);
    friend AbelianRingElement operator+(AbelianRingElement a,
                                        AbelianRingElement const& b) {
      return a += b;
    }
    friend AbelianRingElement operator-(AbelianRingElement a,
                                        AbelianRingElement const& b) {
      return a -= b;
    }
    friend AbelianRingElement operator*(AbelianRingElement const& a,
                                        AbelianRingElement const& b);

    friend bool operator==(AbelianRingElement const&,
                           AbelianRingElement const&)
        = default;

   private:
    int      rank_;
    map_type terms_;
  };

  // e.g. "-1 + x2 + x1*x2^2 - x1*x2^3"; "0" for the zero element.
  std::string to_string(AbelianRingElement const& e);

  // All r abelianised Fox derivatives of one word: (delta, i) -> m_{a,i},
  // restricted to the support (no zero is ever stored).
  class AbelianDerivativeMap {
   public:
    using map_type = std::map<DerivativeKey, std::int64_t, DerivativeKeyLess>;

    explicit AbelianDerivativeMap(int rank) : rank_(rank) {}

    int rank() const noexcept {
      return rank_;
    }
    bool empty() const noexcept {
      return entries_.empty();
    }
    std::size_t size() const noexcept {
      return entries_.size();
    }
    map_type const& entries() const noexcept {
      return entries_;
    }
    std::int64_t coefficient(int gen, AbelianVector const& delta) const;

    void add(int gen, std::span<const std::int64_t> delta, std::int64_t coeff);

    // u-translate: every delta shifted by g.
    AbelianDerivativeMap translated(AbelianVector const& g) const;
    AbelianDerivativeMap& operator+=(AbelianDerivativeMap const& other);

    friend bool operator==(AbelianDerivativeMap const& a,
                           AbelianDerivativeMap const& b);

   private:
    int      rank_;
    map_type entries_;
  };

  // Single left-to-right pass: a positive letter records +1 at the current
  // delta and then advances it; a negative letter steps delta back first and
  // records -1 there.
  AbelianDerivativeMap fox_abelian(Word const& w);

  // w = 1 in M_r iff every abelianised Fox derivative of w vanishes.
  bool wp_metabelian(Word const& w);

  // d w / d x_gen as an element of Z A_r; gen is 1-based.
  AbelianRingElement derivative_as_ring_element(AbelianDerivativeMap const& m,
                                                int gen);

}  // namespace fsg

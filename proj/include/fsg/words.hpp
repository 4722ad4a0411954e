#pragma once

// Words over a finite alphabet x_1..x_r and their images in Z^r.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fsg {

  // A signed generator x_k^{+1} or x_k^{-1}, stored as +k or -k.
  class Letter {
   public:
    constexpr Letter() = default;
    constexpr Letter(int gen, int sign) : value_(sign < 0 ? -gen : gen) {}

    static constexpr Letter from_signed(int value) {
      Letter l;
      l.value_ = value;
      return l;
    }

    constexpr int gen() const noexcept {
      return value_ < 0 ? -value_ : value_;
    }
    constexpr int sign() const noexcept {
      return value_ < 0 ? -1 : 1;
    }
    constexpr int value() const noexcept {
      return value_;
    }
    constexpr Letter inverse() const noexcept {
      return from_signed(-value_);
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter, Letter) = default;

   private:
    int value_ = 1;
  };

  // Exponent-sum vector (delta_1, ..., delta_r); also a vertex of the Z^r grid.
  class AbelianVector {
   public:
    AbelianVector() = default;
    explicit AbelianVector(std::size_t rank) : coords_(rank, 0) {}
    AbelianVector(std::initializer_list<std::int64_t> coords)
        : coords_(coords) {}
    explicit AbelianVector(std::vector<std::int64_t> coords)
        : coords_(std::move(coords)) {}

    std::size_t rank() const noexcept {
      return coords_.size();
    }
    // 0-based coordinate access; generator x_k lives at index k - 1.
    std::int64_t& operator[](std::size_t i) {
      return coords_[i];
    }
    std::int64_t operator[](std::size_t i) const {
      return coords_[i];
    }
    std::span<const std::int64_t> coords() const noexcept {
      return coords_;
    }
    bool is_zero() const noexcept;
    // L1 norm.
    std::int64_t norm() const noexcept;

    AbelianVector& operator+=(AbelianVector const& other);
    AbelianVector& operator-=(AbelianVector const& other);
    friend AbelianVector operator+(AbelianVector a, AbelianVector const& b) {
      return a += b;
    }
    friend AbelianVector operator-(AbelianVector a, AbelianVector const& b) {
      return a -= b;
    }
    AbelianVector operator-() const;

    friend bool operator==(AbelianVector const&, AbelianVector const&)
        = default;
    friend auto operator<=>(AbelianVector const&, AbelianVector const&)
        = default;

   private:
    std::vector<std::int64_t> coords_;
  };

  std::string to_string(AbelianVector const& v);

  // A finite, not necessarily freely reduced, word over x_1..x_r.
  class Word {
   public:
    explicit Word(int rank);
    Word(int rank, std::vector<Letter> letters);
    // Letters given as signed generator indices, e.g. {1, 2, -1, -2}.
    Word(int rank, std::initializer_list<int> signed_letters);

    int rank() const noexcept {
      return rank_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Letter operator[](std::size_t i) const {
      return letters_[i];
    }
    std::span<const Letter> letters() const noexcept {
      return letters_;
    }
    auto begin() const noexcept {
      return letters_.begin();
    }
    auto end() const noexcept {
      return letters_.end();
    }

    void push_back(Letter l);
    // Same letters over a larger alphabet.
    Word with_rank(int rank) const;

    friend bool operator==(Word const&, Word const&) = default;

   private:
    int                 rank_;
    std::vector<Letter> letters_;
  };

  enum class WordSyntax { compact, explicit_tokens };

  // Compact syntax: a..z for x_1..x_26 and A..Z for their inverses.
  // Explicit syntax: whitespace-separated tokens "xK" or "xK^-1".
  Word parse_word(std::string_view text, int rank);

  // Compact whenever every generator index is at most 26, unless forced.
  std::string format_word(Word const& w);
  std::string format_word(Word const& w, WordSyntax syntax);

  Word free_reduce(Word const& w);
  bool is_freely_reduced(Word const& w);
  Word invert(Word const& w);
  Word concat(Word const& u, Word const& v);
  AbelianVector abelianize(Word const& w);

  // [u,v] = u v u^-1 v^-1
  Word commutator(Word const& u, Word const& v);
  // u w u^-1
  Word conjugate(Word const& w, Word const& u);
  // x_1^a x_2^b ... following the coordinates of `v`.
  Word monotone_path(AbelianVector const& v, int rank);

  // Uniformly random letters, no cancellation constraint. Deterministic given
  // the engine state on every platform (no std distributions involved).
  Word random_word(std::mt19937_64& rng, int rank, std::size_t length);

}  // namespace fsg

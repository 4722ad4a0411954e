#pragma once

// Images under the Magnus embedding of F/N' into the matrix group
//
//     ( g   sum_i a_i t_i )
//     ( 0        1        ),   g in F/N,  a_i in Z(F/N),
//
// for N = F^{(d-1)}, so that F/N' = S_{r,d}. The row entries of the image of
// w are its Fox derivatives in Z S_{r,d-1}.
//
// With an abelian base (d = 2) images are kept in full and multiply by the
// wreath-product law (g, a)(h, b) = (gh, a + g b). For d >= 3 an image is
// kept relative to the prefixes of its source word; equality of two such
// images is decided on u v^-1 instead of by canonicalising ring products.

#include <cstddef>
#include <variant>
#include <vector>

#include "fsg/abelian_fox.hpp"
#include "fsg/solvable.hpp"
#include "fsg/words.hpp"

namespace fsg {

  struct AbelianMagnusData {
    AbelianVector                   diagonal;
    std::vector<AbelianRingElement> rows;

    friend bool operator==(AbelianMagnusData const&, AbelianMagnusData const&)
        = default;
  };

  struct SolvableMagnusData {
    // Representative index of w_n in the class-(d-1) partition; 0 iff the
    // diagonal is the identity.
    std::size_t                      diagonal_rep;
    std::vector<SolvableRingElement> rows;
  };

  class MagnusImage {
   public:
    MagnusImage(int d, Word word, AbelianMagnusData data);
    MagnusImage(int d, Word word, SolvableMagnusData data);

    // Solvability class d of the target group S_{r,d}; the base is S_{r,d-1}.
    int klass() const noexcept {
      return d_;
    }
    int base_class() const noexcept {
      return d_ - 1;
    }
    int rank() const noexcept {
      return word_.rank();
    }
    Word const& word() const noexcept {
      return word_;
    }
    bool has_abelian_base() const noexcept {
      return std::holds_alternative<AbelianMagnusData>(data_);
    }
    AbelianMagnusData const&  abelian() const;
    SolvableMagnusData const& solvable() const;

   private:
    int                                                d_;
    Word                                               word_;
    std::variant<AbelianMagnusData, SolvableMagnusData> data_;
  };

  MagnusImage magnus_image(Word const& w, int d);

  // Only for an abelian base (d = 2); throws Unsupported otherwise.
  MagnusImage magnus_multiply(MagnusImage const& a, MagnusImage const& b);

  bool magnus_is_identity(MagnusImage const& a);

  // Componentwise at d = 2; via the word problem on u v^-1 for d >= 3.
  bool magnus_equal(MagnusImage const& a, MagnusImage const& b);

}  // namespace fsg

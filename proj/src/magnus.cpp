#include "fsg/magnus.hpp"

#include <string>

#include "fsg/errors.hpp"

namespace fsg {

  MagnusImage::MagnusImage(int d, Word word, AbelianMagnusData data)
      : d_(d), word_(std::move(word)), data_(std::move(data)) {}

  MagnusImage::MagnusImage(int d, Word word, SolvableMagnusData data)
      : d_(d), word_(std::move(word)), data_(std::move(data)) {}

  AbelianMagnusData const& MagnusImage::abelian() const {
    if (auto const* p = std::get_if<AbelianMagnusData>(&data_)) {
      return *p;
    }
    throw Unsupported("Magnus image has a non-abelian base");
  }

  SolvableMagnusData const& MagnusImage::solvable() const {
    if (auto const* p = std::get_if<SolvableMagnusData>(&data_)) {
      return *p;
    }
    throw Unsupported("Magnus image has an abelian base");
  }

  MagnusImage magnus_image(Word const& w, int d) {
    if (d < 2) {
      throw PreconditionError("Magnus images need class d >= 2, got "
                              + std::to_string(d));
    }
    if (d == 2) {
      auto              m = fox_abelian(w);
      AbelianMagnusData data{abelianize(w), {}};
      for (int k = 1; k <= w.rank(); ++k) {
        data.rows.push_back(derivative_as_ring_element(m, k));
      }
      return MagnusImage(d, w, std::move(data));
    }
    PrefixSet          D(w);
    PartitionFunction  P = partition(w, d - 1);
    SolvableMagnusData data{P(w.size()), {}};
    for (int k = 1; k <= w.rank(); ++k) {
      data.rows.push_back(fox_solvable(D, P, k));
    }
    return MagnusImage(d, w, std::move(data));
  }

  MagnusImage magnus_multiply(MagnusImage const& a, MagnusImage const& b) {
    if (a.rank() != b.rank()) {
      throw RankMismatch("Magnus images over different ranks");
    }
    if (a.klass() != b.klass()) {
      throw PreconditionError("Magnus images of different classes");
    }
    if (!a.has_abelian_base() || !b.has_abelian_base()) {
      throw Unsupported(
          "matrix arithmetic is only provided for an abelian base (d = 2)");
    }
    auto const&       x = a.abelian();
    auto const&       y = b.abelian();
    AbelianMagnusData data{x.diagonal + y.diagonal, {}};
    for (std::size_t i = 0; i < x.rows.size(); ++i) {
      data.rows.push_back(x.rows[i] + y.rows[i].translated(x.diagonal));
    }
    return MagnusImage(a.klass(), concat(a.word(), b.word()), std::move(data));
  }

  bool magnus_is_identity(MagnusImage const& a) {
    if (a.has_abelian_base()) {
      auto const& x = a.abelian();
      if (!x.diagonal.is_zero()) {
        return false;
      }
      for (auto const& row : x.rows) {
        if (!row.is_zero()) {
          return false;
        }
      }
      return true;
    }
    auto const& x = a.solvable();
    if (x.diagonal_rep != 0) {
      return false;
    }
    for (auto const& row : x.rows) {
      if (!row.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool magnus_equal(MagnusImage const& a, MagnusImage const& b) {
    if (a.rank() != b.rank()) {
      throw RankMismatch("Magnus images over different ranks");
    }
    if (a.klass() != b.klass()) {
      throw PreconditionError("Magnus images of different classes");
    }
    if (a.has_abelian_base()) {
      return a.abelian() == b.abelian();
    }
    return wp_solvable(concat(a.word(), invert(b.word())), a.klass());
  }

}  // namespace fsg

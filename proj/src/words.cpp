#include "fsg/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "fsg/errors.hpp"

namespace fsg {

  bool AbelianVector::is_zero() const noexcept {
    return std::all_of(
        coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
  }

  std::int64_t AbelianVector::norm() const noexcept {
    std::int64_t total = 0;
    for (auto c : coords_) {
      total += c < 0 ? -c : c;
    }
    return total;
  }

  AbelianVector& AbelianVector::operator+=(AbelianVector const& other) {
    if (other.rank() != rank()) {
      throw RankMismatch("abelian vectors of different rank");
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      coords_[i] += other.coords_[i];
    }
    return *this;
  }

  AbelianVector& AbelianVector::operator-=(AbelianVector const& other) {
    if (other.rank() != rank()) {
      throw RankMismatch("abelian vectors of different rank");
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      coords_[i] -= other.coords_[i];
    }
    return *this;
  }

  AbelianVector AbelianVector::operator-() const {
    AbelianVector result(*this);
    for (auto& c : result.coords_) {
      c = -c;
    }
    return result;
  }

  std::string to_string(AbelianVector const& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.rank(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += std::to_string(v[i]);
    }
    return out + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_rank(int rank) {
      if (rank < 1) {
        throw PreconditionError("rank must be at least 1, got "
                                + std::to_string(rank));
      }
    }

    void check_letter(Letter l, int rank) {
      if (l.value() == 0) {
        throw PreconditionError("generator index 0 is not a letter");
      }
      if (l.gen() > rank) {
        throw PreconditionError("generator " + std::to_string(l.gen())
                                + " exceeds rank " + std::to_string(rank));
      }
    }
  }  // namespace

  Word::Word(int rank) : rank_(rank) {
    check_rank(rank);
  }

  Word::Word(int rank, std::vector<Letter> letters)
      : rank_(rank), letters_(std::move(letters)) {
    check_rank(rank);
    for (auto l : letters_) {
      check_letter(l, rank);
    }
  }

  Word::Word(int rank, std::initializer_list<int> signed_letters)
      : rank_(rank) {
    check_rank(rank);
    letters_.reserve(signed_letters.size());
    for (int v : signed_letters) {
      push_back(Letter::from_signed(v));
    }
  }

  void Word::push_back(Letter l) {
    check_letter(l, rank_);
    letters_.push_back(l);
  }

  Word Word::with_rank(int rank) const {
    return Word(rank, letters_);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_explicit_token(std::string_view tok) {
      return tok.size() >= 2 && tok[0] == 'x'
             && std::isdigit(static_cast<unsigned char>(tok[1]));
    }

    std::vector<std::string_view> split_ws(std::string_view text) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < text.size()) {
        while (i < text.size()
               && std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size()
               && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(text.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    Letter parse_explicit_token(std::string_view tok, int rank) {
      std::string_view body = tok.substr(1);
      int              sign = 1;
      if (auto caret = body.find('^'); caret != std::string_view::npos) {
        if (body.substr(caret) != "^-1") {
          throw ParseError("bad exponent in token '" + std::string(tok)
                           + "', only ^-1 is allowed");
        }
        sign = -1;
        body = body.substr(0, caret);
      }
      long long gen = 0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), gen);
      if (ec == std::errc::result_out_of_range) {
        throw ParseError("generator index overflow in token '"
                         + std::string(tok) + "'");
      }
      if (ec != std::errc() || ptr != body.data() + body.size()) {
        throw ParseError("malformed token '" + std::string(tok) + "'");
      }
      if (gen == 0) {
        throw ParseError("generator index 0 in token '" + std::string(tok)
                         + "'");
      }
      if (gen > rank) {
        throw ParseError("generator " + std::to_string(gen) + " exceeds rank "
                         + std::to_string(rank));
      }
      return Letter(static_cast<int>(gen), sign);
    }
  }  // namespace

  Word parse_word(std::string_view text, int rank) {
    check_rank(rank);
    auto tokens = split_ws(text);
    Word w(rank);
    if (tokens.empty()) {
      return w;
    }
    std::size_t n_explicit = std::count_if(
        tokens.begin(), tokens.end(), is_explicit_token);
    if (n_explicit == tokens.size()) {
      for (auto tok : tokens) {
        w.push_back(parse_explicit_token(tok, rank));
      }
      return w;
    }
    if (n_explicit != 0) {
      throw ParseError("mixed compact and explicit syntax in '"
                       + std::string(text) + "'");
    }
    for (auto tok : tokens) {
      for (char ch : tok) {
        int gen;
        int sign;
        if (ch >= 'a' && ch <= 'z') {
          gen  = ch - 'a' + 1;
          sign = 1;
        } else if (ch >= 'A' && ch <= 'Z') {
          gen  = ch - 'A' + 1;
          sign = -1;
        } else {
          throw ParseError(std::string("unknown character '") + ch
                           + "' in word");
        }
        if (gen > rank) {
          throw ParseError("generator " + std::to_string(gen)
                           + " exceeds rank " + std::to_string(rank));
        }
        w.push_back(Letter(gen, sign));
      }
    }
    return w;
  }

  std::string format_word(Word const& w) {
    bool fits = std::all_of(
        w.begin(), w.end(), [](Letter l) { return l.gen() <= 26; });
    return format_word(w, fits ? WordSyntax::compact : WordSyntax::explicit_tokens);
  }

  std::string format_word(Word const& w, WordSyntax syntax) {
    std::string out;
    if (syntax == WordSyntax::compact) {
      out.reserve(w.size());
      for (auto l : w) {
        if (l.gen() > 26) {
          throw PreconditionError("compact syntax covers x1..x26 only");
        }
        char base = l.sign() > 0 ? 'a' : 'A';
        out.push_back(static_cast<char>(base + l.gen() - 1));
      }
      return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += 'x';
      out += std::to_string(w[i].gen());
      if (w[i].sign() < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free group operations
  ////////////////////////////////////////////////////////////////////////

  Word free_reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto l : w) {
      if (!stack.empty() && stack.back() == l.inverse()) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(w.rank(), std::move(stack));
  }

  bool is_freely_reduced(Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1].inverse()) {
        return false;
      }
    }
    return true;
  }

  Word invert(Word const& w) {
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      letters.push_back(it->inverse());
    }
    return Word(w.rank(), std::move(letters));
  }

  Word concat(Word const& u, Word const& v) {
    if (u.rank() != v.rank()) {
      throw RankMismatch("cannot concatenate words of rank "
                         + std::to_string(u.rank()) + " and "
                         + std::to_string(v.rank()));
    }
    std::vector<Letter> letters(u.begin(), u.end());
    letters.insert(letters.end(), v.begin(), v.end());
    return Word(u.rank(), std::move(letters));
  }

  AbelianVector abelianize(Word const& w) {
    AbelianVector v(static_cast<std::size_t>(w.rank()));
    for (auto l : w) {
      v[l.gen() - 1] += l.sign();
    }
    return v;
  }

  Word commutator(Word const& u, Word const& v) {
    return concat(concat(u, v), concat(invert(u), invert(v)));
  }

  Word conjugate(Word const& w, Word const& u) {
    return concat(concat(u, w), invert(u));
  }

  Word monotone_path(AbelianVector const& v, int rank) {
    Word w(rank);
    for (std::size_t i = 0; i < v.rank(); ++i) {
      int gen  = static_cast<int>(i) + 1;
      int sign = v[i] < 0 ? -1 : 1;
      for (std::int64_t k = 0; k < (v[i] < 0 ? -v[i] : v[i]); ++k) {
        w.push_back(Letter(gen, sign));
      }
    }
    return w;
  }

  Word random_word(std::mt19937_64& rng, int rank, std::size_t length) {
    check_rank(rank);
    std::vector<Letter> letters;
    letters.reserve(length);
    auto const choices = static_cast<std::uint64_t>(2 * rank);
    for (std::size_t i = 0; i < length; ++i) {
      auto pick = static_cast<int>(rng() % choices);
      letters.emplace_back(pick / 2 + 1, pick % 2 == 0 ? 1 : -1);
    }
    return Word(rank, std::move(letters));
  }

}  // namespace fsg

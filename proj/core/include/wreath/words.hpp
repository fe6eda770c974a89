#ifndef WREATH_WORDS_HPP_
#define WREATH_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

using Exponent = std::int64_t;

// A run of one generator raised to a nonzero power.
struct Syllable {
  std::size_t gen;
  Exponent    exp;

  friend bool operator==(Syllable const&, Syllable const&) = default;
  friend auto operator<=>(Syllable const&, Syllable const&) = default;
};

// Free-group word stored as run-length syllables.
//
// Words produced by any function in this header are freely reduced: adjacent
// syllables have distinct generators and no exponent is zero. The raw
// constructor accepts arbitrary syllables; call reduce() to canonicalize.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables)
      : syllables_(std::move(syllables)) {}

  static Word generator(std::size_t gen, Exponent exp = 1);

  std::vector<Syllable> const& syllables() const noexcept {
    return syllables_;
  }
  bool        empty() const noexcept { return syllables_.empty(); }
  std::size_t syllable_count() const noexcept { return syllables_.size(); }
  // Number of letters, i.e. the sum of |exponent| over syllables.
  std::size_t length() const noexcept;
  // Largest generator index used plus one (0 for the empty word).
  std::size_t generator_bound() const noexcept;
  bool        is_reduced() const noexcept;

  // Letter expansion: gen g as 2g, its inverse as 2g+1.
  std::vector<std::size_t> letters() const;

  // Concatenation followed by free reduction.
  Word& operator*=(Word const& rhs);
  friend Word operator*(Word lhs, Word const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const&, Word const&) = default;

 private:
  std::vector<Syllable> syllables_;
};

Word reduce(Word const& w);
Word invert(Word const& w);
// [a, b] = a^-1 b^-1 a b
Word commutator(Word const& a, Word const& b);
// b^-1 a b
Word conjugate(Word const& a, Word const& b);
Word power(Word const& w, Exponent n);
Exponent exponent_sum(Word const& w, std::size_t gen);

// Grammar:
//   word   := factor ('*' factor)*
//   factor := atom ('^' int)?
//   atom   := gen | '[' word ',' word ']' | '(' word ')'
// Whitespace is insignificant. The text "1" (or the empty string) denotes the
// identity. Throws InputError.
Word parse_word(std::string_view text, std::vector<std::string> const& gens);

// Renders a reduced word in the grammar above, e.g. "x^-1*y*x^2"; the empty
// word renders as "1".
std::string format_word(Word const& w, std::vector<std::string> const& gens);

}  // namespace wreath

#endif  // WREATH_WORDS_HPP_

#ifndef WREATH_PRESENTATION_HPP_
#define WREATH_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wreath/words.hpp"

namespace wreath {

// <generators | relators>. Generator i is referred to by index i inside
// relator words; names are only used for parsing and printing.
struct Presentation {
  std::vector<std::string>   generators;
  std::vector<Word>          relators;
  std::optional<std::string> label;

  std::size_t generator_count() const noexcept { return generators.size(); }
  std::size_t relator_count() const noexcept { return relators.size(); }

  // Parses each relator with parse_word over `gens`.
  static Presentation from_strings(std::vector<std::string>        gens,
                                   std::vector<std::string> const& relators,
                                   std::optional<std::string> label = {});

  std::vector<std::string> relator_strings() const;

  friend bool operator==(Presentation const&, Presentation const&) = default;
};

struct Diagnostic {
  enum class Kind {
    empty_generator_name,
    invalid_generator_name,
    duplicate_generator_name,
    index_out_of_range,
    unreduced_relator,
    empty_relator,
  };
  Kind        kind;
  std::size_t position;  // generator or relator index
  std::string message;
};

// Empty iff the presentation satisfies its invariants.
std::vector<Diagnostic> validate(Presentation const& p);

// Throws InputError carrying the first diagnostic, if any.
void require_valid(Presentation const& p);

// Makes generator names globally distinct. A name occurring in more than one
// part is suffixed "_k" (k = 1-based part index) in every part it occurs in;
// unique names are kept.
std::vector<Presentation> rename_disjoint(std::vector<Presentation> parts);

// Row i, column j: exponent_sum(relator i, generator j).
using ExponentMatrix = std::vector<std::vector<Exponent>>;

ExponentMatrix exponent_matrix(Presentation const& p);

// The generators [first_gen, first_gen + gen_count) of `p` together with the
// listed relators, re-indexed from 0. Throws InputError if a listed relator
// uses a generator outside the range.
Presentation sub_presentation(Presentation const&             p,
                              std::size_t                     first_gen,
                              std::size_t                     gen_count,
                              std::vector<std::size_t> const& relator_indices);

// Shifts every generator index by `offset`.
Word shift_generators(Word const& w, std::size_t offset);

}  // namespace wreath

#endif  // WREATH_PRESENTATION_HPP_

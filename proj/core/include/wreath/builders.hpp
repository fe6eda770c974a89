#ifndef WREATH_BUILDERS_HPP_
#define WREATH_BUILDERS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wreath/enumeration.hpp"
#include "wreath/grouptable.hpp"
#include "wreath/presentation.hpp"
#include "wreath/transversal.hpp"

namespace wreath {

// Half-open index range [first, first + count).
struct IndexRange {
  std::size_t first = 0;
  std::size_t count = 0;

  std::size_t end() const noexcept { return first + count; }
  bool        contains(std::size_t i) const noexcept {
    return i >= first && i < end();
  }
  friend bool operator==(IndexRange const&, IndexRange const&) = default;
};

// Layout of a wreath presentation H wr G: which generators and factor
// relators belong to H (left) and to G (right), and the transversal words
// t used in the commutator relators [y, t^-1 z t].
struct WreathMeta {
  struct TransversalEntry {
    Element element;     // index in G's canonical element order
    Word    word;        // over the output presentation's generators
    bool    involution;

    friend bool operator==(TransversalEntry const&,
                           TransversalEntry const&) = default;
  };

  IndexRange                    left_gens;
  IndexRange                    right_gens;
  IndexRange                    left_relators;
  IndexRange                    right_relators;
  std::vector<TransversalEntry> transversal;  // emission order

  friend bool operator==(WreathMeta const&, WreathMeta const&) = default;
};

struct WreathResult {
  Presentation              presentation;
  std::optional<WreathMeta> meta;  // absent for a single factor
};

// A factor group: a presentation together with a concrete realization and
// the images of the presentation's generators in it.
struct Factor {
  Presentation         presentation;
  FiniteGroup          group;
  std::vector<Element> images;
};

// Enumerates `p` and returns the factor realized by its regular
// representation. Throws CapExceededError if the enumeration does not close.
Factor factor_from_presentation(Presentation const& p,
                                std::size_t         cap = kDefaultCosetCap);

// Checks that `images` are a faithful realization of `p`: the relators hold,
// the images generate, and the enumerated order equals |group|. Throws
// InputError on inconsistency.
void check_factor(Factor const& f, std::size_t cap = kDefaultCosetCap);

// (x-generator index in pG, y-generator index in pN) -> y^x as a word over
// pN's generators.
using ActionTable = std::map<std::pair<std::size_t, std::size_t>, Word>;

// N x| G = <x, y | R(x), S(y), x^-1 y x = w_xy(y)>. Generators: G's then N's.
// Relators: R, S, then x^-1 y x w_xy^-1 for x in G order, y in N order.
Presentation semidirect_presentation(Presentation const& pN,
                                     Presentation const& pG,
                                     ActionTable const&  act);

// H wr G. Generators: H's (Y) then G's (x). Relators: R(x), S(Y), then for
// every t of the transversal of G (pair representatives first, then
// involutions) the commutators [y, t^-1 z t] over all ordered pairs (y, z),
// or over pairs y <= z when t is an involution.
WreathResult wreath_presentation(Presentation const&      pH,
                                 Presentation const&      pG,
                                 FiniteGroup const&       g_real,
                                 std::vector<Element> const& gen_images,
                                 std::size_t cap = kDefaultCosetCap);

// (..((G_1 wr G_2) wr G_3) ..) wr G_m. Generators x_1, .., x_m in order;
// relators R_m, .., R_1 followed by the commutator levels j = 2..m over the
// generators of G_1..G_{j-1}. This is exactly the left fold of
// wreath_presentation over the (renamed) factors.
WreathResult multi_wreath_presentation(std::vector<Factor> const& parts,
                                       std::size_t cap = kDefaultCosetCap);

// C_n wr C_m = <y, x | x^m, y^n, [y, x^-k y x^k] for 1 <= k <= m/2>.
Presentation cyclic_wreath_presentation(std::uint64_t n, std::uint64_t m);

// C_{n_1} wr .. wr C_{n_s} on generators x1..xs.
Presentation iterated_cyclic_presentation(
    std::vector<std::uint64_t> const& orders);

// Sylow p-subgroup of Sym(p^n) as the n-fold iterated wreath product of C_p.
Presentation sylow_presentation(std::uint64_t p, std::uint64_t n);

// Cyclic factor <name | name^n> realized as C_n with name -> 1.
Factor cyclic_factor(std::string const& name, std::uint64_t n);

}  // namespace wreath

#endif  // WREATH_BUILDERS_HPP_

#ifndef WREATH_ANALYSIS_HPP_
#define WREATH_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreath/enumeration.hpp"
#include "wreath/presentation.hpp"
#include "wreath/words.hpp"

namespace wreath {

// Per generator y: the order d_y of the cyclic group H / N_y, where N_y is the
// normal closure of the other generators (0 = infinite). y is conormal iff
// d_y != 1.
struct ConormalityReport {
  std::vector<std::uint64_t> quotient_orders;

  bool conormal(std::size_t gen) const { return quotient_orders.at(gen) != 1; }
  bool all_conormal() const noexcept;
};

// d_y = gcd over relators of |exponent_sum(relator, y)|.
ConormalityReport conormality_gcd(Presentation const& p);

// Order of <p | z = 1 for all z != gen>, by coset enumeration; nullopt when
// the cap is exceeded (consistent with d = 0).
std::optional<std::uint64_t> conormality_enum(Presentation const& p,
                                              std::size_t         gen,
                                              std::size_t cap = kDefaultCosetCap);

// True iff every exponent-matrix row vanishes mod q, i.e. the generators map
// to a basis of G / G^q [G, G]. Throws InputError unless q is prime.
bool frattini_check(Presentation const& p, std::uint64_t q);

// Word in the free product C_d * C_e of two cyclic groups (order 0 means
// infinite cyclic).
struct FreeProductWord {
  enum class Side { left, right };
  struct Syllable {
    Side     side;
    Exponent exp;
    friend bool operator==(Syllable const&, Syllable const&) = default;
  };
  std::vector<Syllable> syllables;

  friend bool operator==(FreeProductWord const&,
                         FreeProductWord const&) = default;
};

// Reduces exponents into [0, d) (resp. [0, e)) for finite factors, deletes
// trivial syllables and merges neighbours; empty iff the word is 1.
FreeProductWord free_product_normal_form(FreeProductWord const& w,
                                         std::uint64_t d, std::uint64_t e);

struct WitnessResult {
  bool            hypothesis_holds = false;  // d_u != 1 and d_v != 1
  bool            nontrivial       = false;  // [u, v'] != 1 in C_du * C_dv
  std::uint64_t   d_u              = 0;
  std::uint64_t   d_v              = 0;
  FreeProductWord normal_form;
};

// Maps u to the generator of H/N_u, v' to the generator of H'/N_v' and every
// other generator to 1, then reduces [u, v'] in the free product.
WitnessResult lemma2_witness(Presentation const& p, std::size_t u,
                             std::size_t v);

struct RelatorVerdict {
  enum class Kind { needed, needed_cap, redundant };
  std::size_t                  relator;
  Kind                         kind;
  std::optional<std::uint64_t> order;  // order after dropping, if closed
};

std::string to_string(RelatorVerdict::Kind k);

// For every relator, enumerates p without it (one job per relator, run
// concurrently). needed: order grew; needed (cap): enumeration hit the cap;
// redundant: order unchanged. Throws InputError if p itself does not have
// order `expected_order`, CapExceededError if it does not close.
std::vector<RelatorVerdict> minimality_drop_test(Presentation const& p,
                                                 std::uint64_t expected_order,
                                                 std::size_t   cap);

}  // namespace wreath

#endif  // WREATH_ANALYSIS_HPP_

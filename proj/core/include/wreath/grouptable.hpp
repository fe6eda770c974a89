#ifndef WREATH_GROUPTABLE_HPP_
#define WREATH_GROUPTABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wreath/enumeration.hpp"
#include "wreath/words.hpp"

namespace wreath {

using Element = std::uint32_t;

// A finite group given by its full multiplication table. Element 0 is the
// identity; the canonical element order is the construction order.
class FiniteGroup {
 public:
  using value_type = Element;

  FiniteGroup() : FiniteGroup(1, {0}, {0}) {}
  FiniteGroup(std::size_t order, std::vector<Element> mul,
              std::vector<Element> inv, std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  Element     identity() const noexcept { return 0; }
  Element     multiply(Element a, Element b) const {
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const { return inv_[a]; }
  // Smallest k >= 1 with a^k = 1.
  std::size_t element_order(Element a) const;

  std::vector<std::string> const& names() const noexcept { return names_; }

  // Group axioms: closure of the table, identity, inverses, inv(inv(g)) = g,
  // and associativity (every triple up to `full_scan_limit`, otherwise
  // `samples` pseudo-random triples). Returns the violations found.
  std::vector<std::string> check_axioms(std::size_t full_scan_limit = 256,
                                        std::size_t samples = 200'000) const;

 private:
  std::size_t              order_;
  std::vector<Element>     mul_;
  std::vector<Element>     inv_;
  std::vector<std::string> names_;
};

// C_n with element i = g^i.
FiniteGroup cyclic_group(std::size_t n);

struct RegularRepresentation {
  FiniteGroup          group;
  std::vector<Element> generator_images;
};

// Regular representation of a group from a closed coset table over the
// trivial subgroup; element i is coset i.
RegularRepresentation from_coset_table(CosetTable const& table);

// Breadth-first spanning-tree words, one per coset, along generator columns
// in generator order: word i leads from coset 0 to coset i.
std::vector<Word> element_words(CosetTable const& table);

// The same construction over a concrete group and generator images: the
// breadth-first order of discovery need not match the group's element order,
// so the result is indexed by element. Throws InputError if the images do not
// generate the group.
std::vector<Word> element_words(FiniteGroup const&          group,
                                std::span<Element const>    images);

// Image of `w` under the generator assignment (homomorphic evaluation).
Element evaluate(FiniteGroup const& group, std::span<Element const> images,
                 Word const& w);

// Permutation of {0, .., d-1}; acts on the right, so (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);
  // Builds from disjoint or overlapping cycles, composed left to right.
  static Permutation from_cycles(
      std::size_t degree, std::vector<std::vector<std::uint32_t>> const& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  std::vector<std::uint32_t> const& images() const noexcept { return images_; }
  bool        is_identity() const noexcept;
  Permutation inverse() const;

  friend Permutation operator*(Permutation const& a, Permutation const& b);
  friend bool operator==(Permutation const&, Permutation const&) = default;

  // Cycle notation, fixed points omitted: "(0 2)(1 3)"; identity is "()".
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

// Order of <gens> by breadth-first closure; nullopt if more than `cap`
// elements are found. Throws InputError on a degree mismatch.
std::optional<std::uint64_t> perm_closure(std::span<Permutation const> gens,
                                          std::size_t                  cap);

bool is_prime(std::uint64_t n) noexcept;

inline constexpr std::size_t kDefaultPointLimit = 1U << 20;

// Generators of a Sylow p-subgroup of Sym(p^n): generator i (1-based) moves
// j to j + p^(i-1) mod p^i for j < p^i and fixes the remaining points.
std::vector<Permutation> sylow_perm_generators(
    std::uint64_t p, std::uint64_t n,
    std::size_t   point_limit = kDefaultPointLimit);

}  // namespace wreath

#endif  // WREATH_GROUPTABLE_HPP_

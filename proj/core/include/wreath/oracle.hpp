#ifndef WREATH_ORACLE_HPP_
#define WREATH_ORACLE_HPP_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wreath/builders.hpp"
#include "wreath/error.hpp"
#include "wreath/grouptable.hpp"
#include "wreath/presentation.hpp"
#include "wreath/words.hpp"

namespace wreath {

template <typename G>
concept GroupLike = requires(G const& g, typename G::value_type a) {
  { g.identity() } -> std::convertible_to<typename G::value_type>;
  { g.multiply(a, a) } -> std::convertible_to<typename G::value_type>;
  { g.inverse(a) } -> std::convertible_to<typename G::value_type>;
  { g.order() } -> std::convertible_to<std::uint64_t>;
};

// An element (f, g) of H^G x| G: f[a] is the H-coordinate at the element of
// G with canonical index a.
struct WreathElement {
  std::vector<Element> f;
  Element              g = 0;

  friend bool operator==(WreathElement const&, WreathElement const&) = default;
};

inline constexpr std::size_t   kDefaultOracleTableLimit = 4096;
inline constexpr std::uint64_t kDefaultOracleSizeLimit  = std::uint64_t{1} << 24;

// The regular wreath product H wr G with on-the-fly multiplication
//
//   (f1, g1)(f2, g2) = (a -> f1(a) f2(a g1), g1 g2),
//
// which makes t^-1 h(a) t = h(a t) for the base copy h(a) of h at a.
// Elements are mixed-radix codes: g + |G| * sum_a f[a] |H|^a; code 0 is the
// identity.
class ConcreteWreath {
 public:
  using value_type = std::uint64_t;

  // Throws LimitError if |H|^|G| |G| exceeds `size_limit`.
  ConcreteWreath(FiniteGroup base, FiniteGroup top,
                 std::uint64_t size_limit = kDefaultOracleSizeLimit);

  FiniteGroup const& base() const noexcept { return base_; }
  FiniteGroup const& top() const noexcept { return top_; }
  std::uint64_t      order() const noexcept { return order_; }
  value_type         identity() const noexcept { return 0; }

  value_type    encode(WreathElement const& e) const;
  WreathElement decode(value_type code) const;

  value_type multiply(value_type a, value_type b) const;
  value_type inverse(value_type a) const;

  // h placed at coordinate a of the base group; the top group element g.
  value_type base_element(Element h, Element a) const;
  value_type top_element(Element g) const;

  // Full multiplication table; throws LimitError above `table_limit`.
  FiniteGroup table(std::size_t table_limit = kDefaultOracleTableLimit) const;

 private:
  FiniteGroup   base_;
  FiniteGroup   top_;
  std::uint64_t order_ = 1;
};

// H wr G as an explicit FiniteGroup (element i = code i).
FiniteGroup build_concrete_wreath(
    FiniteGroup const& base, FiniteGroup const& top,
    std::size_t table_limit = kDefaultOracleTableLimit);

// Images of the generators of a wreath presentation in H wr G: each H
// generator y goes to y(1), each G generator to its image in the top group.
// `base_images` / `top_images` are the images of the left / right generators
// in H and G. Throws InputError if they disagree with the metadata.
std::vector<ConcreteWreath::value_type> canonical_images(
    WreathMeta const& meta, ConcreteWreath const& w,
    std::span<Element const> base_images, std::span<Element const> top_images);

template <GroupLike G>
typename G::value_type evaluate_word(
    G const& group, std::span<typename G::value_type const> images,
    Word const& w) {
  auto acc = group.identity();
  for (auto const& s : w.syllables()) {
    if (s.gen >= images.size()) {
      throw InputError("no image assigned to generator "
                       + std::to_string(s.gen));
    }
    auto const     g     = s.exp < 0 ? group.inverse(images[s.gen])
                                     : images[s.gen];
    Exponent const count = s.exp < 0 ? -s.exp : s.exp;
    for (Exponent i = 0; i < count; ++i) {
      acc = group.multiply(acc, g);
    }
  }
  return acc;
}

struct RelatorReport {
  std::vector<bool> holds;  // per relator: evaluates to the identity

  bool        all_pass() const noexcept;
  std::size_t failures() const noexcept;
};

template <GroupLike G>
RelatorReport check_relators(Presentation const& p, G const& group,
                             std::span<typename G::value_type const> images) {
  RelatorReport report;
  for (auto const& r : p.relators) {
    report.holds.push_back(evaluate_word(group, images, r)
                           == group.identity());
  }
  return report;
}

// Size of the subgroup generated by `images`, by breadth-first closure.
template <GroupLike G>
std::uint64_t closure_size(G const&                                group,
                           std::span<typename G::value_type const> images) {
  std::vector<bool>                   seen(group.order(), false);
  std::vector<typename G::value_type> queue{group.identity()};
  seen[group.identity()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto img : images) {
      auto next = group.multiply(queue[i], img);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return queue.size();
}

template <GroupLike G>
bool check_generates(G const&                                group,
                     std::span<typename G::value_type const> images) {
  return closure_size(group, images) == group.order();
}

// (f, g) -> prod_a f(a) in H; a homomorphism onto H when H is abelian.
Element coordinate_product(ConcreteWreath const& w,
                           ConcreteWreath::value_type code);

}  // namespace wreath

#endif  // WREATH_ORACLE_HPP_

#ifndef WREATH_TRANSVERSAL_HPP_
#define WREATH_TRANSVERSAL_HPP_

#include <vector>

#include "wreath/grouptable.hpp"

namespace wreath {

// One element from every inverse pair {t, t^-1} of non-identity elements.
// Involutions are self-paired and kept in their own list; every other pair
// is represented by its element of smaller index.
struct Transversal {
  std::vector<Element> pair_reps;
  std::vector<Element> involutions;

  std::size_t size() const noexcept {
    return pair_reps.size() + involutions.size();
  }
  // pair_reps followed by involutions: the order relators are emitted in.
  std::vector<Element> all() const;
};

Transversal build_transversal(FiniteGroup const& group);

}  // namespace wreath

#endif  // WREATH_TRANSVERSAL_HPP_

#include "wreath/transversal.hpp"

namespace wreath {

std::vector<Element> Transversal::all() const {
  std::vector<Element> out(pair_reps);
  out.insert(out.end(), involutions.begin(), involutions.end());
  return out;
}

Transversal build_transversal(FiniteGroup const& group) {
  Transversal t;
  for (Element g = 1; g < group.order(); ++g) {
    Element const inv = group.inverse(g);
    if (inv == g) {
      t.involutions.push_back(g);
    } else if (g < inv) {
      t.pair_reps.push_back(g);
    }
  }
  return t;
}

}  // namespace wreath

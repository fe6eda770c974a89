#include "wreath/grouptable.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

#include "wreath/error.hpp"

namespace wreath {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> mul,
                         std::vector<Element> inv,
                         std::vector<std::string> names)
    : order_(order),
      mul_(std::move(mul)),
      inv_(std::move(inv)),
      names_(std::move(names)) {
  if (order_ == 0) {
    throw InputError("a group has at least one element");
  }
  if (mul_.size() != order_ * order_ || inv_.size() != order_) {
    throw InputError("group table dimensions do not match the order");
  }
  if (!names_.empty() && names_.size() != order_) {
    throw InputError("element name count does not match the order");
  }
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity(); x = multiply(x, a)) {
    ++k;
  }
  return k;
}

std::vector<std::string> FiniteGroup::check_axioms(std::size_t full_scan_limit,
                                                   std::size_t samples) const {
  std::vector<std::string> problems;
  auto const               n = order_;
  for (auto e : mul_) {
    if (e >= n) {
      problems.emplace_back("multiplication table leaves the group");
      return problems;
    }
  }
  for (Element g = 0; g < n; ++g) {
    if (multiply(0, g) != g || multiply(g, 0) != g) {
      problems.push_back("0 is not an identity for " + std::to_string(g));
    }
    if (inv_[g] >= n || multiply(g, inv_[g]) != 0 || multiply(inv_[g], g) != 0) {
      problems.push_back("bad inverse for " + std::to_string(g));
    } else if (inv_[inv_[g]] != g) {
      problems.push_back("inv(inv(" + std::to_string(g) + ")) differs");
    }
  }
  auto check = [&](Element a, Element b, Element c) {
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
      problems.push_back("associativity fails at (" + std::to_string(a) + ","
                         + std::to_string(b) + "," + std::to_string(c) + ")");
      return false;
    }
    return true;
  };
  if (n <= full_scan_limit) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (!check(a, b, c)) {
            return problems;
          }
        }
      }
    }
  } else {
    std::mt19937_64                         rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t i = 0; i < samples; ++i) {
      if (!check(pick(rng), pick(rng), pick(rng))) {
        return problems;
      }
    }
  }
  return problems;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) {
    throw InputError("cyclic group order must be positive");
  }
  std::vector<Element> mul(n * n);
  std::vector<Element> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = static_cast<Element>((i + j) % n);
    }
    inv[i] = static_cast<Element>((n - i) % n);
  }
  return FiniteGroup(n, std::move(mul), std::move(inv));
}

namespace {

struct SpanningTree {
  std::vector<Element>     parent;
  std::vector<std::size_t> via;    // generator used to reach the node
  std::vector<Element>     order;  // discovery order, parents first
};

// Breadth-first tree over coset-table generator columns. For standardized
// tables the discovery order is 0, 1, .., n-1.
SpanningTree table_tree(CosetTable const& table) {
  if (!table.closed()) {
    throw InputError("coset table is not closed");
  }
  std::size_t const n = table.rows();
  SpanningTree      tree;
  tree.parent.assign(n, 0);
  tree.via.assign(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::vector<Element> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t g = 0; g < table.generator_count(); ++g) {
      Element next = table.entry(order[i], column_of(g, false));
      if (!seen[next]) {
        seen[next]        = true;
        tree.parent[next] = order[i];
        tree.via[next]    = g;
        order.push_back(next);
      }
    }
  }
  if (order.size() != n) {
    throw InputError("coset table is not connected");
  }
  tree.order = std::move(order);
  return tree;
}

}  // namespace

RegularRepresentation from_coset_table(CosetTable const& table) {
  SpanningTree const tree = table_tree(table);
  std::size_t const  n    = table.rows();

  // Column j of mul: i -> i * g_j, obtained from column parent(j).
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    mul[i * n] = static_cast<Element>(i);
  }
  for (std::size_t k = 1; k < n; ++k) {
    std::size_t const j   = tree.order[k];
    std::size_t const par = tree.parent[j];
    std::size_t const col = column_of(tree.via[j], false);
    for (std::size_t i = 0; i < n; ++i) {
      mul[i * n + j] = table.entry(mul[i * n + par], col);
    }
  }
  std::vector<Element> inv(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mul[i * n + j] == 0) {
        inv[i] = static_cast<Element>(j);
        break;
      }
    }
  }
  std::vector<Element> images;
  for (std::size_t g = 0; g < table.generator_count(); ++g) {
    images.push_back(table.entry(0, column_of(g, false)));
  }
  return {FiniteGroup(n, std::move(mul), std::move(inv)), std::move(images)};
}

std::vector<Word> element_words(CosetTable const& table) {
  SpanningTree const tree = table_tree(table);
  std::size_t const  n    = table.rows();
  std::vector<Word>  words(n);
  for (std::size_t k = 1; k < n; ++k) {
    std::size_t const j = tree.order[k];
    words[j] = words[tree.parent[j]] * Word::generator(tree.via[j]);
  }
  return words;
}

std::vector<Word> element_words(FiniteGroup const&       group,
                                std::span<Element const> images) {
  std::size_t const     n = group.order();
  std::vector<Word>     words(n);
  std::vector<bool>     seen(n, false);
  std::vector<Element>  order{group.identity()};
  seen[group.identity()] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t g = 0; g < images.size(); ++g) {
      Element next = group.multiply(order[i], images[g]);
      if (!seen[next]) {
        seen[next]  = true;
        words[next] = words[order[i]] * Word::generator(g);
        order.push_back(next);
      }
    }
  }
  if (order.size() != n) {
    throw InputError("generator images do not generate the group");
  }
  return words;
}

Element evaluate(FiniteGroup const& group, std::span<Element const> images,
                 Word const& w) {
  Element acc = group.identity();
  for (auto const& s : w.syllables()) {
    if (s.gen >= images.size()) {
      throw InputError("no image for generator " + std::to_string(s.gen));
    }
    Element const g = s.exp < 0 ? group.inverse(images[s.gen])
                                : images[s.gen];
    Exponent const count = s.exp < 0 ? -s.exp : s.exp;
    for (Exponent i = 0; i < count; ++i) {
      acc = group.multiply(acc, g);
    }
  }
  return acc;
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || hit[i]) {
      throw InputError("not a permutation");
    }
    hit[i] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    images[i] = static_cast<std::uint32_t>(i);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::vector<std::vector<std::uint32_t>> const& cycles) {
  Permutation out = identity(degree);
  for (auto const& cycle : cycles) {
    std::vector<std::uint32_t> images = identity(degree).images_;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (cycle[k] >= degree) {
        throw InputError("cycle point out of range");
      }
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    out = out * Permutation(std::move(images));
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return Permutation(std::move(inv));
}

Permutation operator*(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) {
    throw InputError("permutation degree mismatch");
  }
  std::vector<std::uint32_t> images(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) {
    images[i] = b.images_[a.images_[i]];
  }
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

std::string Permutation::to_string() const {
  std::string       out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      continue;
    }
    out += '(';
    std::size_t j = i;
    do {
      if (j != i) {
        out += ' ';
      }
      out += std::to_string(j);
      seen[j] = true;
      j       = images_[j];
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto i : p.images()) {
    h ^= i;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::optional<std::uint64_t> perm_closure(std::span<Permutation const> gens,
                                          std::size_t                  cap) {
  std::size_t const degree = gens.empty() ? 0 : gens.front().degree();
  for (auto const& g : gens) {
    if (g.degree() != degree) {
      throw InputError("permutation degree mismatch");
    }
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation>                          queue;
  Permutation const                                id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  if (seen.size() > cap) {
    return std::nullopt;
  }
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (auto const& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          return std::nullopt;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::vector<Permutation> sylow_perm_generators(std::uint64_t p,
                                               std::uint64_t n,
                                               std::size_t   point_limit) {
  if (!is_prime(p)) {
    throw InputError(std::to_string(p) + " is not prime");
  }
  if (n == 0) {
    throw InputError("n must be positive");
  }
  std::uint64_t degree = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (degree > point_limit / p) {
      throw LimitError("p^n exceeds the point limit "
                       + std::to_string(point_limit));
    }
    degree *= p;
  }
  std::vector<Permutation> gens;
  std::uint64_t            block = 1;  // p^(i-1)
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::uint64_t const        span = block * p;
    std::vector<std::uint32_t> images(degree);
    for (std::uint64_t j = 0; j < degree; ++j) {
      images[j] = static_cast<std::uint32_t>(j < span ? (j + block) % span : j);
    }
    gens.emplace_back(std::move(images));
    block = span;
  }
  return gens;
}

}  // namespace wreath

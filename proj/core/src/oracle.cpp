#include "wreath/oracle.hpp"

#include <algorithm>

namespace wreath {

ConcreteWreath::ConcreteWreath(FiniteGroup base, FiniteGroup top,
                               std::uint64_t size_limit)
    : base_(std::move(base)), top_(std::move(top)) {
  std::uint64_t const h = base_.order();
  std::uint64_t const g = top_.order();
  order_                = g;
  for (std::uint64_t i = 0; i < g; ++i) {
    if (order_ > size_limit / h) {
      throw LimitError("|H|^|G| |G| = " + std::to_string(h) + "^"
                       + std::to_string(g) + " * " + std::to_string(g)
                       + " exceeds the oracle size limit "
                       + std::to_string(size_limit));
    }
    order_ *= h;
  }
}

ConcreteWreath::value_type ConcreteWreath::encode(
    WreathElement const& e) const {
  if (e.f.size() != top_.order() || e.g >= top_.order()) {
    throw InputError("wreath element does not match the factor sizes");
  }
  value_type code = 0;
  for (std::size_t a = top_.order(); a-- > 0;) {
    if (e.f[a] >= base_.order()) {
      throw InputError("wreath coordinate outside the base group");
    }
    code = code * base_.order() + e.f[a];
  }
  return code * top_.order() + e.g;
}

WreathElement ConcreteWreath::decode(value_type code) const {
  WreathElement e;
  e.g = static_cast<Element>(code % top_.order());
  code /= top_.order();
  e.f.resize(top_.order());
  for (std::size_t a = 0; a < top_.order(); ++a) {
    e.f[a] = static_cast<Element>(code % base_.order());
    code /= base_.order();
  }
  return e;
}

ConcreteWreath::value_type ConcreteWreath::multiply(value_type a,
                                                    value_type b) const {
  WreathElement const x = decode(a);
  WreathElement const y = decode(b);
  WreathElement       z;
  z.g = top_.multiply(x.g, y.g);
  z.f.resize(top_.order());
  for (Element p = 0; p < top_.order(); ++p) {
    z.f[p] = base_.multiply(x.f[p], y.f[top_.multiply(p, x.g)]);
  }
  return encode(z);
}

ConcreteWreath::value_type ConcreteWreath::inverse(value_type a) const {
  // (f, g)^-1 = (b -> f(b g^-1)^-1, g^-1)
  WreathElement const x = decode(a);
  WreathElement       z;
  z.g = top_.inverse(x.g);
  z.f.resize(top_.order());
  for (Element p = 0; p < top_.order(); ++p) {
    z.f[p] = base_.inverse(x.f[top_.multiply(p, z.g)]);
  }
  return encode(z);
}

ConcreteWreath::value_type ConcreteWreath::base_element(Element h,
                                                        Element a) const {
  WreathElement e;
  e.f.assign(top_.order(), base_.identity());
  e.f.at(a) = h;
  return encode(e);
}

ConcreteWreath::value_type ConcreteWreath::top_element(Element g) const {
  WreathElement e;
  e.f.assign(top_.order(), base_.identity());
  e.g = g;
  return encode(e);
}

FiniteGroup ConcreteWreath::table(std::size_t table_limit) const {
  if (order_ > table_limit) {
    throw LimitError("wreath product of order " + std::to_string(order_)
                     + " exceeds the table limit "
                     + std::to_string(table_limit));
  }
  auto const           n = static_cast<std::size_t>(order_);
  std::vector<Element> mul(n * n);
  std::vector<Element> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = static_cast<Element>(multiply(i, j));
    }
    inv[i] = static_cast<Element>(inverse(i));
  }
  return FiniteGroup(n, std::move(mul), std::move(inv));
}

FiniteGroup build_concrete_wreath(FiniteGroup const& base,
                                  FiniteGroup const& top,
                                  std::size_t        table_limit) {
  return ConcreteWreath(base, top, table_limit).table(table_limit);
}

std::vector<ConcreteWreath::value_type> canonical_images(
    WreathMeta const& meta, ConcreteWreath const& w,
    std::span<Element const> base_images, std::span<Element const> top_images) {
  if (base_images.size() != meta.left_gens.count
      || top_images.size() != meta.right_gens.count) {
    throw InputError("generator images do not match the wreath metadata");
  }
  std::size_t const total = std::max(meta.left_gens.end(), meta.right_gens.end());
  std::vector<ConcreteWreath::value_type> out(total, w.identity());
  for (std::size_t i = 0; i < base_images.size(); ++i) {
    if (base_images[i] >= w.base().order()) {
      throw InputError("base image outside H");
    }
    out[meta.left_gens.first + i]
        = w.base_element(base_images[i], w.top().identity());
  }
  for (std::size_t i = 0; i < top_images.size(); ++i) {
    if (top_images[i] >= w.top().order()) {
      throw InputError("top image outside G");
    }
    out[meta.right_gens.first + i] = w.top_element(top_images[i]);
  }
  for (auto const& t : meta.transversal) {
    if (t.element >= w.top().order()) {
      throw InputError("transversal element outside G");
    }
    std::vector<Syllable> local = t.word.syllables();
    for (auto& s : local) {
      if (!meta.right_gens.contains(s.gen)) {
        throw InputError("transversal word leaves the top generators");
      }
      s.gen -= meta.right_gens.first;
    }
    if (evaluate(w.top(), top_images, Word(local)) != t.element) {
      throw InputError("transversal word does not evaluate to element "
                       + std::to_string(t.element));
    }
  }
  return out;
}

bool RelatorReport::all_pass() const noexcept {
  return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

std::size_t RelatorReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count(holds.begin(), holds.end(), false));
}

Element coordinate_product(ConcreteWreath const&      w,
                           ConcreteWreath::value_type code) {
  WreathElement const e   = w.decode(code);
  Element             acc = w.base().identity();
  for (auto h : e.f) {
    acc = w.base().multiply(acc, h);
  }
  return acc;
}

}  // namespace wreath

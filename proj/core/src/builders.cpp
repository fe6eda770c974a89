#include "wreath/builders.hpp"

#include <set>
#include <string>

#include "wreath/error.hpp"

namespace wreath {

Factor factor_from_presentation(Presentation const& p, std::size_t cap) {
  CosetTable table = todd_coxeter(p, {}, cap);
  if (!table.closed()) {
    throw CapExceededError("enumeration of factor "
                               + p.label.value_or("presentation")
                               + " exceeded the coset cap",
                           cap);
  }
  RegularRepresentation reg = from_coset_table(table);
  return Factor{p, std::move(reg.group), std::move(reg.generator_images)};
}

void check_factor(Factor const& f, std::size_t cap) {
  require_valid(f.presentation);
  std::string const name = f.presentation.label.value_or("factor");
  if (f.images.size() != f.presentation.generator_count()) {
    throw InputError(name + ": expected one image per generator");
  }
  for (auto img : f.images) {
    if (img >= f.group.order()) {
      throw InputError(name + ": generator image outside the group");
    }
  }
  for (std::size_t i = 0; i < f.presentation.relator_count(); ++i) {
    if (evaluate(f.group, f.images, f.presentation.relators[i])
        != f.group.identity()) {
      throw InputError(name + ": relator "
                       + format_word(f.presentation.relators[i],
                                     f.presentation.generators)
                       + " does not hold in the supplied group");
    }
  }
  (void) element_words(f.group, f.images);  // throws unless generating
  OrderResult order = group_order(f.presentation, cap);
  if (!order.known()) {
    throw InputError(name + ": presentation does not enumerate within the cap");
  }
  if (*order.order != f.group.order()) {
    throw InputError(name + ": presentation defines a group of order "
                     + std::to_string(*order.order) + ", supplied group has "
                     + std::to_string(f.group.order()));
  }
}

Presentation semidirect_presentation(Presentation const& pN,
                                     Presentation const& pG,
                                     ActionTable const&  act) {
  require_valid(pN);
  require_valid(pG);
  std::size_t const nx = pG.generator_count();
  std::size_t const ny = pN.generator_count();

  Presentation out;
  out.generators = pG.generators;
  out.generators.insert(out.generators.end(), pN.generators.begin(),
                        pN.generators.end());
  if (std::set<std::string>(out.generators.begin(), out.generators.end()).size()
      != out.generators.size()) {
    throw InputError("generator names of N and G are not disjoint");
  }
  out.relators = pG.relators;
  for (auto const& s : pN.relators) {
    out.relators.push_back(shift_generators(s, nx));
  }
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      auto it = act.find({x, y});
      if (it == act.end()) {
        throw InputError("missing action of " + pG.generators[x] + " on "
                         + pN.generators[y]);
      }
      if (it->second.generator_bound() > ny) {
        throw InputError("action image of " + pN.generators[y] + " under "
                         + pG.generators[x]
                         + " uses a generator outside N");
      }
      Word const xw = Word::generator(x);
      Word const yw = Word::generator(nx + y);
      Word rel = conjugate(yw, xw) * invert(shift_generators(it->second, nx));
      if (!rel.empty()) {
        out.relators.push_back(std::move(rel));
      }
    }
  }
  return out;
}

namespace {

// Appends the commutators [y, t^-1 z t] for y, z in `lower` to `out`.
void emit_commutators(std::vector<Word>& out, IndexRange lower,
                      Word const& t_word, bool involution) {
  for (std::size_t y = lower.first; y < lower.end(); ++y) {
    for (std::size_t z = involution ? y : lower.first; z < lower.end(); ++z) {
      out.push_back(commutator(Word::generator(y),
                               conjugate(Word::generator(z), t_word)));
    }
  }
}

std::vector<WreathMeta::TransversalEntry> transversal_entries(
    Factor const& g, std::size_t offset) {
  Transversal const       t     = build_transversal(g.group);
  std::vector<Word> const words = element_words(g.group, g.images);
  std::vector<WreathMeta::TransversalEntry> out;
  for (auto e : t.pair_reps) {
    out.push_back({e, shift_generators(words[e], offset), false});
  }
  for (auto e : t.involutions) {
    out.push_back({e, shift_generators(words[e], offset), true});
  }
  return out;
}

void require_nontrivial(Factor const& f, std::string const& role) {
  if (f.group.order() < 2) {
    throw InputError(role + " factor is trivial");
  }
}

}  // namespace

WreathResult wreath_presentation(Presentation const&         pH,
                                 Presentation const&         pG,
                                 FiniteGroup const&          g_real,
                                 std::vector<Element> const& gen_images,
                                 std::size_t                 cap) {
  require_valid(pH);
  Factor g{pG, g_real, gen_images};
  check_factor(g, cap);
  require_nontrivial(g, "right (top)");
  OrderResult h_order = group_order(pH, cap);
  if (h_order.known() && *h_order.order < 2) {
    throw InputError("left (base) factor is trivial");
  }

  auto renamed = rename_disjoint({pH, pG});
  std::size_t const ny = pH.generator_count();
  std::size_t const nx = pG.generator_count();

  WreathResult result;
  Presentation& out = result.presentation;
  out.generators    = renamed[0].generators;
  out.generators.insert(out.generators.end(), renamed[1].generators.begin(),
                        renamed[1].generators.end());
  for (auto const& r : pG.relators) {
    out.relators.push_back(shift_generators(r, ny));
  }
  out.relators.insert(out.relators.end(), pH.relators.begin(),
                      pH.relators.end());

  WreathMeta meta;
  meta.left_gens      = {0, ny};
  meta.right_gens     = {ny, nx};
  meta.right_relators = {0, pG.relator_count()};
  meta.left_relators  = {pG.relator_count(), pH.relator_count()};
  meta.transversal    = transversal_entries(g, ny);
  for (auto const& t : meta.transversal) {
    emit_commutators(out.relators, meta.left_gens, t.word, t.involution);
  }
  result.meta = std::move(meta);
  return result;
}

WreathResult multi_wreath_presentation(std::vector<Factor> const& parts,
                                       std::size_t                cap) {
  if (parts.empty()) {
    throw InputError("multiple wreath product needs at least one factor");
  }
  std::vector<Presentation> pres;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    check_factor(parts[i], cap);
    require_nontrivial(parts[i], "factor " + std::to_string(i + 1));
    pres.push_back(parts[i].presentation);
  }
  pres = rename_disjoint(std::move(pres));

  std::vector<std::size_t> offset{0};
  WreathResult             result;
  Presentation&            out = result.presentation;
  for (auto const& p : pres) {
    out.generators.insert(out.generators.end(), p.generators.begin(),
                          p.generators.end());
    offset.push_back(offset.back() + p.generator_count());
  }
  for (std::size_t i = parts.size(); i-- > 0;) {
    for (auto const& r : pres[i].relators) {
      out.relators.push_back(shift_generators(r, offset[i]));
    }
  }
  std::vector<WreathMeta::TransversalEntry> top;
  std::size_t                               top_start = out.relator_count();
  for (std::size_t j = 1; j < parts.size(); ++j) {
    top_start = out.relator_count();
    top       = transversal_entries(parts[j], offset[j]);
    for (auto const& t : top) {
      emit_commutators(out.relators, {0, offset[j]}, t.word, t.involution);
    }
  }
  if (parts.size() > 1) {
    std::size_t const m     = parts.size() - 1;
    std::size_t const r_top = pres[m].relator_count();
    WreathMeta        meta;
    meta.left_gens      = {0, offset[m]};
    meta.right_gens     = {offset[m], offset[m + 1] - offset[m]};
    meta.right_relators = {0, r_top};
    meta.left_relators  = {r_top, top_start - r_top};
    meta.transversal    = std::move(top);
    result.meta         = std::move(meta);
  }
  return result;
}

namespace {

void require_factor_order(std::uint64_t n, char const* what) {
  if (n < 2) {
    throw InputError(std::string(what) + " must be at least 2 (got "
                     + std::to_string(n) + ")");
  }
}

}  // namespace

Presentation cyclic_wreath_presentation(std::uint64_t n, std::uint64_t m) {
  require_factor_order(n, "base order n");
  require_factor_order(m, "top order m");
  Presentation p;
  p.generators = {"y", "x"};
  Word const y = Word::generator(0);
  Word const x = Word::generator(1);
  p.relators.push_back(power(x, static_cast<Exponent>(m)));
  p.relators.push_back(power(y, static_cast<Exponent>(n)));
  for (std::uint64_t k = 1; 2 * k <= m; ++k) {
    p.relators.push_back(
        commutator(y, conjugate(y, power(x, static_cast<Exponent>(k)))));
  }
  return p;
}

Presentation iterated_cyclic_presentation(
    std::vector<std::uint64_t> const& orders) {
  if (orders.empty()) {
    throw InputError("at least one cyclic factor is required");
  }
  for (auto n : orders) {
    require_factor_order(n, "cyclic factor order");
  }
  std::size_t const s = orders.size();
  Presentation      p;
  for (std::size_t i = 0; i < s; ++i) {
    p.generators.push_back("x" + std::to_string(i + 1));
  }
  for (std::size_t i = s; i-- > 0;) {
    p.relators.push_back(
        Word::generator(i, static_cast<Exponent>(orders[i])));
  }
  for (std::size_t l = 1; l < s; ++l) {
    for (std::uint64_t k = 1; 2 * k <= orders[l]; ++k) {
      bool const involution = 2 * k == orders[l];
      Word const t = Word::generator(l, static_cast<Exponent>(k));
      for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = involution ? i : 0; j < l; ++j) {
          p.relators.push_back(commutator(Word::generator(i),
                                          conjugate(Word::generator(j), t)));
        }
      }
    }
  }
  return p;
}

Presentation sylow_presentation(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) {
    throw InputError(std::to_string(p) + " is not prime");
  }
  if (n == 0) {
    throw InputError("n must be positive");
  }
  return iterated_cyclic_presentation(
      std::vector<std::uint64_t>(static_cast<std::size_t>(n), p));
}

Factor cyclic_factor(std::string const& name, std::uint64_t n) {
  Presentation p;
  p.generators = {name};
  p.relators   = {Word::generator(0, static_cast<Exponent>(n))};
  return Factor{std::move(p), cyclic_group(static_cast<std::size_t>(n)),
                {n == 1 ? Element{0} : Element{1}}};
}

}  // namespace wreath

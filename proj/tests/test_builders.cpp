#include "doctest.h"
#include "wreath/builders.hpp"
#include "wreath/enumeration.hpp"
#include "wreath/error.hpp"
#include "wreath/serialize.hpp"

using namespace wreath;

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) {
    r *= b;
  }
  return r;
}

// <y | y^n> wr <x | x^m> through the general builder.
WreathResult cyclic_via_wreath(std::uint64_t n, std::uint64_t m) {
  Factor const h = cyclic_factor("y", n);
  Factor const g = cyclic_factor("x", m);
  return wreath_presentation(h.presentation, g.presentation, g.group, g.images);
}

WreathResult left_fold(std::vector<Factor> parts) {
  std::vector<Presentation> pres;
  for (auto const& f : parts) {
    pres.push_back(f.presentation);
  }
  pres = rename_disjoint(std::move(pres));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i].presentation = pres[i];
  }
  WreathResult acc{parts[0].presentation, std::nullopt};
  for (std::size_t j = 1; j < parts.size(); ++j) {
    acc = wreath_presentation(acc.presentation, parts[j].presentation,
                              parts[j].group, parts[j].images);
  }
  return acc;
}

std::size_t expected_relator_count(std::size_t r, std::size_t s, std::size_t y,
                                   Transversal const& t) {
  return r + s + y * y * t.pair_reps.size()
         + y * (y + 1) / 2 * t.involutions.size();
}

}  // namespace

TEST_CASE("semidirect_presentation") {
  auto const n = Presentation::from_strings({"y"}, {"y^3"});
  auto const g = Presentation::from_strings({"x"}, {"x^2"});

  ActionTable act{{{0, 0}, Word::generator(0, 2)}};
  auto const  s3 = semidirect_presentation(n, g, act);
  CHECK(s3.generators == std::vector<std::string>{"x", "y"});
  CHECK(s3.relator_strings()
        == std::vector<std::string>{"x^2", "y^3", "x^-1*y*x*y^-2"});
  auto const t = todd_coxeter(s3);
  REQUIRE(t.closed());
  CHECK(t.rows() == 6);
  auto const reg = from_coset_table(t);
  CHECK(reg.group.multiply(reg.generator_images[0], reg.generator_images[1])
        != reg.group.multiply(reg.generator_images[1], reg.generator_images[0]));

  ActionTable trivial{{{0, 0}, Word::generator(0)}};
  auto const  c6 = semidirect_presentation(n, g, trivial);
  CHECK(c6.relator_strings().back() == "x^-1*y*x*y^-1");
  auto const reg6 = from_coset_table(todd_coxeter(c6));
  CHECK(reg6.group.order() == 6);
  CHECK(reg6.group.multiply(reg6.generator_images[0], reg6.generator_images[1])
        == reg6.group.multiply(reg6.generator_images[1], reg6.generator_images[0]));

  Presentation const empty_n;
  auto const         only_g = semidirect_presentation(empty_n, g, {});
  CHECK(only_g == g);

  CHECK_THROWS_AS(semidirect_presentation(n, g, {}), InputError);
  ActionTable leaks{{{0, 0}, Word::generator(1)}};
  CHECK_THROWS_AS(semidirect_presentation(n, g, leaks), InputError);
  CHECK_THROWS_AS(
      semidirect_presentation(Presentation::from_strings({"x"}, {"x^3"}), g, act),
      InputError);
}

TEST_CASE("wreath_presentation: cyclic factors") {
  auto const w22 = cyclic_via_wreath(2, 2);
  CHECK(w22.presentation.generators == std::vector<std::string>{"y", "x"});
  CHECK(w22.presentation.relator_strings()
        == std::vector<std::string>{"x^2", "y^2", "y^-1*x^-1*y^-1*x*y*x^-1*y*x"});
  CHECK(group_order(w22.presentation).order == 2 * 2 * 2);

  auto const w23 = cyclic_via_wreath(2, 3);
  CHECK(w23.presentation.relator_strings()
        == std::vector<std::string>{"x^3", "y^2", "y^-1*x^-1*y^-1*x*y*x^-1*y*x"});
  CHECK(group_order(w23.presentation).order == ipow(2, 3) * 3);

  auto const w34 = cyclic_via_wreath(3, 4);
  auto const rels = w34.presentation.relator_strings();
  REQUIRE(rels.size() == 4);
  CHECK(rels[0] == "x^4");
  CHECK(rels[1] == "y^3");
  CHECK(w34.presentation.relators[2]
        == parse_word("[y, x^-1*y*x]", w34.presentation.generators));
  CHECK(w34.presentation.relators[3]
        == parse_word("[y, x^-2*y*x^2]", w34.presentation.generators));
}

TEST_CASE("wreath_presentation: metadata") {
  auto const w = cyclic_via_wreath(3, 4);
  REQUIRE(w.meta);
  CHECK(w.meta->left_gens == IndexRange{0, 1});
  CHECK(w.meta->right_gens == IndexRange{1, 1});
  CHECK(w.meta->right_relators == IndexRange{0, 1});
  CHECK(w.meta->left_relators == IndexRange{1, 1});
  REQUIRE(w.meta->transversal.size() == 2);
  CHECK(w.meta->transversal[0].element == 1);
  CHECK_FALSE(w.meta->transversal[0].involution);
  CHECK(w.meta->transversal[1].element == 2);
  CHECK(w.meta->transversal[1].involution);

  // Every t_word evaluates to its element of G.
  Factor const g = cyclic_factor("x", 4);
  for (auto const& t : w.meta->transversal) {
    std::vector<Syllable> syl = t.word.syllables();
    for (auto& s : syl) {
      REQUIRE(w.meta->right_gens.contains(s.gen));
      s.gen -= w.meta->right_gens.first;
    }
    CHECK(evaluate(g.group, g.images, Word(syl)) == t.element);
  }
}

TEST_CASE("wreath_presentation: relator count law") {
  // Non-cyclic pieces: H = S3 (2 generators), G = C2 x C2 and S3.
  auto const s3 = Presentation::from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^3"});
  auto const v4 = Presentation::from_strings({"c", "d"}, {"c^2", "d^2", "[c,d]"});
  std::vector<std::pair<Presentation, Presentation>> const cases{
      {s3, v4}, {v4, s3}, {s3, s3}};
  for (auto const& [h, g] : cases) {
    Factor const top = factor_from_presentation(g);
    auto const   w   = wreath_presentation(h, g, top.group, top.images);
    auto const   t   = build_transversal(top.group);
    CHECK(w.presentation.relator_count()
          == expected_relator_count(g.relator_count(), h.relator_count(),
                                    h.generator_count(), t));
  }
  // Renaming kicks in for the S3 wr S3 case.
  Factor const top = factor_from_presentation(s3);
  auto const   w   = wreath_presentation(s3, s3, top.group, top.images);
  CHECK(w.presentation.generators
        == std::vector<std::string>{"a_1", "b_1", "a_2", "b_2"});
}

TEST_CASE("wreath_presentation: C2 wr S3 has order 2^6 * 6") {
  auto const s3  = Presentation::from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^3"});
  Factor const top = factor_from_presentation(s3);
  Factor const h   = cyclic_factor("y", 2);
  auto const   w = wreath_presentation(h.presentation, s3, top.group, top.images);
  CHECK(group_order(w.presentation).order == ipow(2, 6) * 6);
}

TEST_CASE("wreath_presentation: consistency errors") {
  Factor const g = cyclic_factor("x", 2);
  auto const   h = Presentation::from_strings({"y"}, {"y^2"});
  // Claimed C2 given by <x | x^3>.
  auto const wrong = Presentation::from_strings({"x"}, {"x^3"});
  CHECK_THROWS_AS(wreath_presentation(h, wrong, g.group, g.images), InputError);
  // Relators hold but the presentation defines a larger group.
  auto const bigger = Presentation::from_strings({"x"}, {"x^4"});
  CHECK_THROWS_AS(wreath_presentation(h, bigger, g.group, g.images), InputError);
  // Trivial factors are rejected.
  Factor const one = cyclic_factor("x", 1);
  CHECK_THROWS_AS(wreath_presentation(h, one.presentation, one.group, one.images),
                  InputError);
  auto const trivial_h = Presentation::from_strings({"y"}, {"y"});
  CHECK_THROWS_AS(wreath_presentation(trivial_h, g.presentation, g.group, g.images),
                  InputError);
}

TEST_CASE("multi_wreath_presentation") {
  auto single = multi_wreath_presentation({cyclic_factor("x1", 2)});
  CHECK(single.presentation.relator_strings() == std::vector<std::string>{"x1^2"});
  CHECK_FALSE(single.meta);

  auto c222 = multi_wreath_presentation(
      {cyclic_factor("x1", 2), cyclic_factor("x2", 2), cyclic_factor("x3", 2)});
  CHECK(c222.presentation.generator_count() == 3);
  CHECK(c222.presentation.relator_count() == 3 + 1 + 3);
  CHECK(group_order(c222.presentation).order == ipow(2 * 2 * 2, 2) * 2);
  REQUIRE(c222.meta);
  CHECK(c222.meta->left_gens == IndexRange{0, 2});
  CHECK(c222.meta->right_gens == IndexRange{2, 1});
  CHECK(c222.meta->right_relators == IndexRange{0, 1});
  CHECK(c222.meta->left_relators == IndexRange{1, 3});

  auto c33 = multi_wreath_presentation({cyclic_factor("x1", 3), cyclic_factor("x2", 3)});
  auto const& gens = c33.presentation.generators;
  CHECK(gens == std::vector<std::string>{"x1", "x2"});
  CHECK(c33.presentation.relators
        == std::vector<Word>{parse_word("x2^3", gens), parse_word("x1^3", gens),
                             parse_word("[x1, x2^-1*x1*x2]", gens)});
  CHECK(group_order(c33.presentation).order == 81);

  CHECK_THROWS_AS(multi_wreath_presentation({}), InputError);
}

TEST_CASE("multi_wreath_presentation equals the left fold of wreath_presentation") {
  std::vector<std::vector<Factor>> const cases{
      {cyclic_factor("x1", 2), cyclic_factor("x2", 2), cyclic_factor("x3", 2)},
      {cyclic_factor("x1", 3), cyclic_factor("x2", 3)},
      {cyclic_factor("x1", 2), cyclic_factor("x2", 3)},
      {cyclic_factor("x", 2), cyclic_factor("x", 4), cyclic_factor("x", 3)},
  };
  for (auto const& parts : cases) {
    auto const direct = multi_wreath_presentation(parts);
    auto const fold   = left_fold(parts);
    CHECK(direct.presentation == fold.presentation);
    CHECK(direct.meta == fold.meta);
    CHECK(to_json(direct.presentation, direct.meta)
          == to_json(fold.presentation, fold.meta));
  }
}

TEST_CASE("cyclic_wreath_presentation") {
  CHECK(cyclic_wreath_presentation(2, 2).relator_count() == 3);
  CHECK(cyclic_wreath_presentation(2, 3).relator_strings()
        == std::vector<std::string>{"x^3", "y^2", "y^-1*x^-1*y^-1*x*y*x^-1*y*x"});
  CHECK(cyclic_wreath_presentation(3, 4).relator_count() == 4);
  for (std::uint64_t n = 2; n <= 5; ++n) {
    for (std::uint64_t m = 2; m <= 7; ++m) {
      auto const p = cyclic_wreath_presentation(n, m);
      CHECK(p.relator_count() == 2 + m / 2);
      CHECK(p == cyclic_via_wreath(n, m).presentation);
    }
  }
  CHECK_THROWS_AS(cyclic_wreath_presentation(1, 2), InputError);
  CHECK_THROWS_AS(cyclic_wreath_presentation(2, 1), InputError);
}

TEST_CASE("iterated_cyclic_presentation") {
  auto const p22 = iterated_cyclic_presentation({2, 2});
  auto const c22 = cyclic_wreath_presentation(2, 2);
  // Same presentation up to the renaming x1 -> y, x2 -> x.
  Presentation renamed = p22;
  renamed.generators   = {"y", "x"};
  CHECK(renamed == c22);

  CHECK(iterated_cyclic_presentation({2, 2, 2}).relator_count() == 7);
  CHECK(iterated_cyclic_presentation({3, 3}).relator_count() == 3);

  for (auto const& orders : std::vector<std::vector<std::uint64_t>>{
           {2, 2}, {2, 2, 2}, {3, 3}, {2, 3}, {3, 2}, {2, 4}, {4, 2, 3}}) {
    std::vector<Factor> parts;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      parts.push_back(cyclic_factor("x" + std::to_string(i + 1), orders[i]));
    }
    CHECK(iterated_cyclic_presentation(orders)
          == multi_wreath_presentation(parts).presentation);
  }
  CHECK_THROWS_AS(iterated_cyclic_presentation({}), InputError);
  CHECK_THROWS_AS(iterated_cyclic_presentation({2, 1}), InputError);
}

TEST_CASE("sylow_presentation") {
  auto const s22 = sylow_presentation(2, 2);
  CHECK(s22.generators == std::vector<std::string>{"x1", "x2"});
  CHECK(s22.relator_count() == 3);
  CHECK(s22.relators[2] == parse_word("[x1, x2^-1*x1*x2]", s22.generators));
  CHECK(group_order(s22).order == 8);
  CHECK(sylow_presentation(2, 3).relator_count() == 7);
  CHECK(group_order(sylow_presentation(2, 3)).order == 128);
  CHECK(sylow_presentation(3, 2).relator_count() == 3);
  CHECK(group_order(sylow_presentation(3, 2)).order == 81);
  // p = 5: k runs over 1..2, so two commutator blocks per level.
  CHECK(sylow_presentation(5, 2).relator_count() == 2 + 2);
  CHECK_THROWS_AS(sylow_presentation(4, 2), InputError);
  CHECK_THROWS_AS(sylow_presentation(2, 0), InputError);
}

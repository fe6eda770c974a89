#include <random>

#include "doctest.h"
#include "wreath/builders.hpp"
#include "wreath/error.hpp"
#include "wreath/serialize.hpp"

using namespace wreath;

TEST_CASE("to_json layout") {
  auto p  = cyclic_wreath_presentation(2, 2);
  p.label = "C2 wr C2";
  CHECK(to_json(p) ==
        "{\n"
        "  \"label\": \"C2 wr C2\",\n"
        "  \"generators\": [\n"
        "    \"y\",\n"
        "    \"x\"\n"
        "  ],\n"
        "  \"relators\": [\n"
        "    \"x^2\",\n"
        "    \"y^2\",\n"
        "    \"y^-1*x^-1*y^-1*x*y*x^-1*y*x\"\n"
        "  ]\n"
        "}\n");
}

TEST_CASE("json round trip is bit exact") {
  std::vector<WreathResult> cases;
  Factor const h = cyclic_factor("y", 3);
  Factor const g = cyclic_factor("x", 4);
  cases.push_back(wreath_presentation(h.presentation, g.presentation, g.group, g.images));
  cases.push_back(multi_wreath_presentation(
      {cyclic_factor("x1", 2), cyclic_factor("x2", 2), cyclic_factor("x3", 2)}));
  cases.push_back({sylow_presentation(3, 2), std::nullopt});
  cases.push_back({Presentation::from_strings({"a", "b"}, {}), std::nullopt});

  for (auto& c : cases) {
    std::string const text = to_json(c.presentation, c.meta);
    auto const        back = parse_presentation_json(text);
    CHECK(back.presentation == c.presentation);
    CHECK(back.meta == c.meta);
    CHECK(to_json(back.presentation, back.meta) == text);
  }
}

TEST_CASE("random presentations round trip") {
  std::mt19937                         rng(11);
  std::uniform_int_distribution<int>   ngen(1, 4), nrel(0, 5), len(1, 6), ex(-4, 4);
  for (int iter = 0; iter < 100; ++iter) {
    Presentation p;
    int const    gens = ngen(rng);
    for (int i = 0; i < gens; ++i) {
      p.generators.push_back("g" + std::to_string(i));
    }
    std::uniform_int_distribution<std::size_t> pick(0, gens - 1);
    for (int r = nrel(rng); r > 0; --r) {
      std::vector<Syllable> syl;
      for (int k = len(rng); k > 0; --k) {
        int const e = ex(rng);
        syl.push_back({pick(rng), e == 0 ? 1 : e});
      }
      Word w = reduce(Word(std::move(syl)));
      if (!w.empty()) {
        p.relators.push_back(std::move(w));
      }
    }
    auto const text = to_json(p);
    CHECK(parse_presentation_json(text).presentation == p);
  }
}

TEST_CASE("metadata json") {
  Factor const h = cyclic_factor("y", 2);
  Factor const g = cyclic_factor("x", 4);
  auto const   r = wreath_presentation(h.presentation, g.presentation, g.group, g.images);
  auto const text = to_json(r.presentation, r.meta);
  CHECK(text.find("\"left_gens\": [\n      0,\n      1\n    ]") != std::string::npos);
  CHECK(text.find("\"t_words\": {\n      \"1\": \"x\",\n      \"2\": \"x^2\"\n    }")
        != std::string::npos);
  CHECK(text.find("\"involutions\": [\n      2\n    ]") != std::string::npos);
}

TEST_CASE("gap and text formats") {
  auto p = cyclic_wreath_presentation(2, 2);
  CHECK(to_gap(p) ==
        "F := FreeGroup(\"y\", \"x\");;\n"
        "rels := [ F.2^2, F.1^2, F.1^-1*F.2^-1*F.1^-1*F.2*F.1*F.2^-1*F.1*F.2 ];;\n"
        "G := F / rels;;\n");
  CHECK(to_text(p) == "< y, x | x^2, y^2, y^-1*x^-1*y^-1*x*y*x^-1*y*x >\n");
  p.label = "W";
  CHECK(to_text(p).rfind("W := < y, x |", 0) == 0);
  CHECK(to_gap(Presentation::from_strings({"a"}, {})) ==
        "F := FreeGroup(\"a\");;\nrels := [  ];;\nG := F / rels;;\n");
}

TEST_CASE("schema errors") {
  std::vector<std::string> const bad{
      "",
      "[1, 2]",
      "{\"relators\": []}",
      "{\"generators\": \"x\", \"relators\": []}",
      "{\"generators\": [1], \"relators\": []}",
      "{\"generators\": [\"x\"]}",
      "{\"generators\": [\"x\"], \"relators\": [3]}",
      "{\"generators\": [\"x\"], \"relators\": [\"z^2\"]}",
      "{\"generators\": [\"x\", \"x\"], \"relators\": []}",
      "{\"label\": 4, \"generators\": [\"x\"], \"relators\": []}",
      "{\"generators\": [\"x\"], \"relators\": [], \"wreath_meta\": 1}",
      "{\"generators\": [\"x\"], \"relators\": [], \"wreath_meta\": "
      "{\"left_gens\": [0, 1], \"right_gens\": [0, 5], \"left_relators\": [0, 0],"
      " \"right_relators\": [0, 0], \"t_words\": {}}}",
      "{\"generators\": [\"x\"], \"relators\": [], \"wreath_meta\": "
      "{\"left_gens\": [0, 1], \"right_gens\": [0, 1], \"left_relators\": [0, 0],"
      " \"right_relators\": [0, 0], \"t_words\": {\"one\": \"x\"}}}",
  };
  for (auto const& text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_presentation_json(text), InputError);
  }
  CHECK_THROWS_AS(read_presentation_file("/nonexistent/presentation.json"), InputError);
}

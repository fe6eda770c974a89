// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wreath/analysis.hpp"
#include "wreath/builders.hpp"
#include "wreath/enumeration.hpp"
#include "wreath/grouptable.hpp"
#include "wreath/oracle.hpp"
#include "wreath/serialize.hpp"

using namespace wreath;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Every closed table produced along the way, re-checked by criterion 9.
struct Ledger {
  std::size_t              tables = 0;
  std::vector<std::string> problems;

  CosetTable enumerate(Presentation const& p, std::size_t cap = kDefaultCosetCap) {
    CosetTable t = todd_coxeter(p, {}, cap);
    if (t.closed()) {
      ++tables;
      for (auto const& msg : verify_coset_table(t, p)) {
        problems.push_back(to_text(p) + ": " + msg);
      }
    }
    return t;
  }
};

Ledger ledger;

struct Outcome {
  bool        pass = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (!cond && pass) {
      pass   = false;
      detail = what;
    }
  }
};

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) {
    r *= b;
  }
  return r;
}

struct Pair {
  std::uint64_t h, g;
};
std::vector<Pair> const kCyclicCases{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 4}};

WreathResult cyclic_wreath(Pair c) {
  Factor const h = cyclic_factor("y", c.h);
  Factor const g = cyclic_factor("x", c.g);
  return wreath_presentation(h.presentation, g.presentation, g.group, g.images);
}

std::vector<Presentation> corpus() {
  return {
      cyclic_wreath_presentation(2, 2),
      cyclic_wreath_presentation(3, 4),
      Presentation::from_strings({"a", "b"}, {"a^2", "b^2", "(a*b)^3"}),
      Presentation::from_strings({"i", "j"}, {"i^4", "i^2*j^-2", "i^-1*j*i*j"}),
      Presentation::from_strings({"x", "y"}, {"x^2", "y^2"}),
      Presentation::from_strings({"a", "b"}, {"[a,b]"}),
      Presentation::from_strings({"a", "b"}, {"a^3", "b^5", "(a*b)^2"}),
      Presentation::from_strings({"a"}, {"a^6"}),
      Presentation::from_strings({"a", "b"}, {"a^4", "b^6", "a^2*b^3"}),
      Presentation::from_strings({"a", "b"}, {"a*b^-1"}),
      Presentation::from_strings({"a", "b"}, {"a^2", "b^3", "[a,b]"}),
      sylow_presentation(2, 3),
  };
}

Outcome order_law() {
  Outcome o;
  for (auto c : kCyclicCases) {
    auto const       t0    = Clock::now();
    CosetTable const table = ledger.enumerate(cyclic_wreath(c).presentation);
    double const     secs  = seconds_since(t0);
    std::uint64_t const want = ipow(c.h, c.g) * c.g;
    o.require(table.closed() && table.rows() == want,
              "C" + std::to_string(c.h) + " wr C" + std::to_string(c.g)
                  + " has the wrong order");
    o.require(secs < 5.0, "enumeration slower than 5 s");
  }
  o.detail = o.pass ? "orders 8, 24, 18, 32, 324" : o.detail;
  return o;
}

Outcome homomorphism() {
  Outcome o;
  for (auto c : kCyclicCases) {
    Factor const h = cyclic_factor("y", c.h);
    Factor const g = cyclic_factor("x", c.g);
    WreathResult const r = cyclic_wreath(c);
    ConcreteWreath const w(h.group, g.group);
    auto const imgs = canonical_images(*r.meta, w, h.images, g.images);
    std::string const name = "C" + std::to_string(c.h) + " wr C" + std::to_string(c.g);
    o.require(w.order() <= kDefaultOracleTableLimit, name + " above oracle limit");
    o.require(check_relators<ConcreteWreath>(r.presentation, w, imgs).all_pass(),
              name + ": a relator fails in the concrete group");
    o.require(check_generates<ConcreteWreath>(w, imgs), name + ": images do not generate");
    CosetTable const table = ledger.enumerate(r.presentation);
    o.require(table.closed() && table.rows() == w.order(), name + ": orders differ");
  }
  o.detail = o.pass ? "relators hold, images generate, orders agree" : o.detail;
  return o;
}

Outcome flattening() {
  Outcome o;
  std::vector<std::vector<std::uint64_t>> const cases{{2, 2, 2}, {2, 3}, {3, 3}};
  for (auto const& orders : cases) {
    std::vector<Factor> parts;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      parts.push_back(cyclic_factor("x" + std::to_string(i + 1), orders[i]));
    }
    WreathResult const direct = multi_wreath_presentation(parts);
    WreathResult       fold{parts[0].presentation, std::nullopt};
    for (std::size_t j = 1; j < parts.size(); ++j) {
      fold = wreath_presentation(fold.presentation, parts[j].presentation,
                                 parts[j].group, parts[j].images);
    }
    o.require(direct.presentation.relators == fold.presentation.relators,
              "relators differ from the fold");
    o.require(to_json(direct.presentation, direct.meta)
                  == to_json(fold.presentation, fold.meta),
              "canonical JSON differs from the fold");
  }
  o.detail = o.pass ? "(C2,C2,C2), (C2,C3), (C3,C3) byte-identical" : o.detail;
  return o;
}

Outcome sylow() {
  Outcome    o;
  auto const t0 = Clock::now();
  struct Case {
    std::uint64_t p, n, order;
  };
  for (auto c : {Case{2, 2, 8}, Case{2, 3, 128}, Case{3, 2, 81}}) {
    Presentation const p      = sylow_presentation(c.p, c.n);
    CosetTable const   table  = ledger.enumerate(p);
    auto const         gens   = sylow_perm_generators(c.p, c.n);
    auto const         closed = perm_closure(gens, 1u << 20);
    std::uint64_t const formula = ipow(c.p, (ipow(c.p, c.n) - 1) / (c.p - 1));
    o.require(formula == c.order, "closed formula mismatch");
    o.require(table.closed() && table.rows() == c.order, "presentation order mismatch");
    o.require(closed && *closed == c.order, "permutation closure mismatch");
  }
  double const secs = seconds_since(t0);
  o.require(secs < 30.0, "slower than 30 s");
  o.detail = o.pass ? "8, 128, 81 agree with permutation closure" : o.detail;
  return o;
}

Outcome example_shape() {
  Outcome o;
  for (auto [n, m] : {Pair{2, 2}, Pair{2, 3}, Pair{3, 4}}) {
    Presentation const p = cyclic_wreath_presentation(n, m);
    o.require(p.relator_count() == 2 + m / 2, "relator count differs from 2 + m/2");
    o.require(p == cyclic_wreath({n, m}).presentation, "differs from the general builder");
  }
  o.detail = o.pass ? "2 + floor(m/2) relators, builders agree" : o.detail;
  return o;
}

Outcome minimality() {
  Outcome o;
  auto    record = [](Presentation const& p, std::vector<RelatorVerdict> const& vs) {
    for (auto const& v : vs) {
      if (v.order) {
        Presentation q = p;
        q.relators.erase(q.relators.begin() + static_cast<std::ptrdiff_t>(v.relator));
        ledger.enumerate(q, 10000);
      }
    }
  };
  for (auto [n, m] : {Pair{2, 2}, Pair{2, 3}, Pair{3, 2}, Pair{2, 4}}) {
    Presentation const p  = cyclic_wreath_presentation(n, m);
    auto const         vs = minimality_drop_test(p, ipow(n, m) * m, 10000);
    record(p, vs);
    for (auto const& v : vs) {
      o.require(v.kind != RelatorVerdict::Kind::redundant,
                "a relator of C" + std::to_string(n) + " wr C" + std::to_string(m)
                    + " is redundant");
    }
  }
  Presentation const control = Presentation::from_strings({"x"}, {"x^2", "x^4"});
  auto const         cv      = minimality_drop_test(control, 2, 10000);
  record(control, cv);
  o.require(cv.size() == 2 && cv[0].kind == RelatorVerdict::Kind::needed
                && cv[1].kind == RelatorVerdict::Kind::redundant,
            "control <x | x^2, x^4> misclassified");
  o.detail = o.pass ? "all relators needed; x^4 redundant in the control" : o.detail;
  return o;
}

Outcome conormality() {
  Outcome o;
  for (auto const& p : corpus()) {
    auto const report = conormality_gcd(p);
    for (std::size_t y = 0; y < p.generator_count(); ++y) {
      Presentation q = p;
      for (std::size_t z = 0; z < p.generator_count(); ++z) {
        if (z != y) {
          q.relators.push_back(Word::generator(z));
        }
      }
      ledger.enumerate(q, 2000);
      auto const d   = report.quotient_orders[y];
      auto const enm = conormality_enum(p, y, 2000);
      o.require(d == 0 ? !enm.has_value() : enm == d,
                "gcd and enumeration disagree on " + to_text(p));
    }
  }
  for (auto c : kCyclicCases) {
    o.require(conormality_gcd(cyclic_wreath(c).presentation).all_conormal(),
              "conormality lost in a wreath presentation");
  }
  for (auto [p, n] : {Pair{2, 2}, Pair{2, 3}, Pair{3, 2}}) {
    o.require(frattini_check(sylow_presentation(p, n), p), "Frattini check failed");
  }
  o.detail = o.pass ? "12-presentation corpus, wreath outputs, Sylow Frattini" : o.detail;
  return o;
}

Outcome witness() {
  Outcome     o;
  std::size_t pairs = 0, rejected = 0;
  for (auto const& p : corpus()) {
    auto const report = conormality_gcd(p);
    for (std::size_t u = 0; u < p.generator_count(); ++u) {
      for (std::size_t v = 0; v < p.generator_count(); ++v) {
        auto const r = lemma2_witness(p, u, v);
        if (report.conormal(u) && report.conormal(v)) {
          ++pairs;
          o.require(r.hypothesis_holds && r.nontrivial
                        && r.normal_form.syllables.size() == 4,
                    "missing witness on " + to_text(p));
        } else {
          ++rejected;
          o.require(!r.hypothesis_holds && !r.nontrivial,
                    "non-conormal hypothesis accepted on " + to_text(p));
        }
      }
    }
  }
  o.require(pairs > 0 && rejected > 0, "corpus does not exercise both branches");
  o.detail = o.pass ? std::to_string(pairs) + " witnesses, " + std::to_string(rejected)
                          + " rejections"
                    : o.detail;
  return o;
}

Outcome soundness() {
  Outcome o;
  o.require(ledger.tables > 0, "no tables recorded");
  o.require(ledger.problems.empty(),
            ledger.problems.empty() ? "" : ledger.problems.front());
  o.detail = o.pass ? std::to_string(ledger.tables) + " closed tables verified" : o.detail;
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"order law", order_law},
      {"homomorphism certificate", homomorphism},
      {"multi-wreath flattening", flattening},
      {"Sylow orders", sylow},
      {"cyclic presentation shape", example_shape},
      {"relator minimality", minimality},
      {"conormality coherence", conormality},
      {"free product witness", witness},
      {"enumerator soundness", soundness},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.pass   = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
  }
  std::fflush(stdout);
  return failures;
}

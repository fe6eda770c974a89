#include "wreath/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <numeric>

#include "wreath/error.hpp"
#include "wreath/grouptable.hpp"

namespace wreath {

bool ConormalityReport::all_conormal() const noexcept {
  return std::none_of(quotient_orders.begin(), quotient_orders.end(),
                      [](std::uint64_t d) { return d == 1; });
}

ConormalityReport conormality_gcd(Presentation const& p) {
  ExponentMatrix const m = exponent_matrix(p);
  ConormalityReport    report;
  report.quotient_orders.assign(p.generator_count(), 0);
  for (auto const& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      auto const e = static_cast<std::uint64_t>(row[j] < 0 ? -row[j] : row[j]);
      report.quotient_orders[j] = std::gcd(report.quotient_orders[j], e);
    }
  }
  return report;
}

std::optional<std::uint64_t> conormality_enum(Presentation const& p,
                                              std::size_t gen,
                                              std::size_t cap) {
  if (gen >= p.generator_count()) {
    throw InputError("generator index out of range");
  }
  Presentation q = p;
  for (std::size_t z = 0; z < p.generator_count(); ++z) {
    if (z != gen) {
      q.relators.push_back(Word::generator(z));
    }
  }
  return group_order(q, cap).order;
}

bool frattini_check(Presentation const& p, std::uint64_t q) {
  if (!is_prime(q)) {
    throw InputError(std::to_string(q) + " is not prime");
  }
  auto const qq = static_cast<Exponent>(q);
  for (auto const& row : exponent_matrix(p)) {
    for (auto e : row) {
      if (e % qq != 0) {
        return false;
      }
    }
  }
  return true;
}

FreeProductWord free_product_normal_form(FreeProductWord const& w,
                                         std::uint64_t d, std::uint64_t e) {
  auto normalize = [&](FreeProductWord::Syllable s) {
    std::uint64_t const mod = s.side == FreeProductWord::Side::left ? d : e;
    if (mod != 0) {
      auto const m = static_cast<Exponent>(mod);
      s.exp        = ((s.exp % m) + m) % m;
    }
    return s;
  };
  std::vector<FreeProductWord::Syllable> out;
  for (auto s : w.syllables) {
    s = normalize(s);
    if (s.exp == 0) {
      continue;
    }
    if (!out.empty() && out.back().side == s.side) {
      out.back().exp += s.exp;
      out.back() = normalize(out.back());
      if (out.back().exp == 0) {
        out.pop_back();
      }
      continue;
    }
    out.push_back(s);
  }
  return FreeProductWord{std::move(out)};
}

WitnessResult lemma2_witness(Presentation const& p, std::size_t u,
                             std::size_t v) {
  if (u >= p.generator_count() || v >= p.generator_count()) {
    throw InputError("generator index out of range");
  }
  ConormalityReport const c = conormality_gcd(p);
  WitnessResult           r;
  r.d_u              = c.quotient_orders[u];
  r.d_v              = c.quotient_orders[v];
  r.hypothesis_holds = r.d_u != 1 && r.d_v != 1;
  if (!r.hypothesis_holds) {
    return r;
  }
  using Side = FreeProductWord::Side;
  FreeProductWord comm{{{Side::left, -1},
                        {Side::right, -1},
                        {Side::left, 1},
                        {Side::right, 1}}};
  r.normal_form = free_product_normal_form(comm, r.d_u, r.d_v);
  r.nontrivial  = !r.normal_form.syllables.empty();
  return r;
}

std::string to_string(RelatorVerdict::Kind k) {
  switch (k) {
    case RelatorVerdict::Kind::needed:
      return "needed";
    case RelatorVerdict::Kind::needed_cap:
      return "needed (cap)";
    case RelatorVerdict::Kind::redundant:
      return "redundant";
  }
  return "?";
}

std::vector<RelatorVerdict> minimality_drop_test(Presentation const& p,
                                                 std::uint64_t expected_order,
                                                 std::size_t   cap) {
  OrderResult const base = group_order(p, cap);
  if (!base.known()) {
    throw CapExceededError("baseline enumeration exceeded the coset cap", cap);
  }
  if (*base.order != expected_order) {
    throw InputError("baseline order " + std::to_string(*base.order)
                     + " differs from the expected "
                     + std::to_string(expected_order));
  }
  auto drop_one = [&p, cap, expected_order](std::size_t i) {
    Presentation q = p;
    q.relators.erase(q.relators.begin() + static_cast<std::ptrdiff_t>(i));
    OrderResult const r = group_order(q, cap);
    if (!r.known()) {
      return RelatorVerdict{i, RelatorVerdict::Kind::needed_cap, std::nullopt};
    }
    if (*r.order < expected_order) {
      throw std::logic_error("dropping a relator shrank the group");
    }
    return RelatorVerdict{i,
                          *r.order == expected_order
                              ? RelatorVerdict::Kind::redundant
                              : RelatorVerdict::Kind::needed,
                          r.order};
  };

  std::size_t const n       = p.relator_count();
  std::size_t const workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n, 1));
  std::vector<std::optional<RelatorVerdict>> verdicts(n);
  std::atomic<std::size_t>                   next{0};
  std::vector<std::future<void>>             pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < n; i = next++) {
        verdicts[i] = drop_one(i);
      }
    }));
  }
  for (auto& f : pool) {
    f.get();
  }
  std::vector<RelatorVerdict> out;
  out.reserve(n);
  for (auto& v : verdicts) {
    out.push_back(*v);
  }
  return out;
}

}  // namespace wreath

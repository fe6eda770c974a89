#include "wreath/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "wreath/error.hpp"

namespace wreath {

Presentation Presentation::from_strings(
    std::vector<std::string>        gens,
    std::vector<std::string> const& relators,
    std::optional<std::string>      label) {
  Presentation p;
  p.generators = std::move(gens);
  p.label      = std::move(label);
  p.relators.reserve(relators.size());
  for (auto const& r : relators) {
    p.relators.push_back(parse_word(r, p.generators));
  }
  return p;
}

std::vector<std::string> Presentation::relator_strings() const {
  std::vector<std::string> out;
  out.reserve(relators.size());
  for (auto const& r : relators) {
    out.push_back(format_word(r, generators));
  }
  return out;
}

namespace {

bool valid_name(std::string const& name) {
  if (name == "1") {
    return false;
  }
  return std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c))
           || std::string_view("*^[](),").find(c) != std::string_view::npos;
  });
}

}  // namespace

std::vector<Diagnostic> validate(Presentation const& p) {
  using Kind = Diagnostic::Kind;
  std::vector<Diagnostic>            out;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    auto const& name = p.generators[i];
    if (name.empty()) {
      out.push_back({Kind::empty_generator_name, i,
                     "generator " + std::to_string(i) + " has an empty name"});
      continue;
    }
    if (!valid_name(name)) {
      out.push_back({Kind::invalid_generator_name, i,
                     "invalid generator name \"" + name + "\""});
    }
    auto [it, inserted] = seen.emplace(name, i);
    if (!inserted) {
      out.push_back({Kind::duplicate_generator_name, i,
                     "duplicate generator name \"" + name + "\""});
    }
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    auto const& r = p.relators[i];
    if (r.empty()) {
      out.push_back({Kind::empty_relator, i,
                     "relator " + std::to_string(i) + " is empty"});
      continue;
    }
    if (r.generator_bound() > p.generators.size()) {
      out.push_back({Kind::index_out_of_range, i,
                     "relator " + std::to_string(i)
                         + ": generator index out of range"});
    }
    if (!r.is_reduced()) {
      out.push_back({Kind::unreduced_relator, i,
                     "relator " + std::to_string(i) + " is not freely reduced"});
    }
  }
  return out;
}

void require_valid(Presentation const& p) {
  auto diags = validate(p);
  if (!diags.empty()) {
    std::string where = p.label ? " (" + *p.label + ")" : "";
    throw InputError("invalid presentation" + where + ": "
                     + diags.front().message);
  }
}

std::vector<Presentation> rename_disjoint(std::vector<Presentation> parts) {
  std::map<std::string, std::size_t> occurrences;
  for (auto const& part : parts) {
    std::set<std::string> names(part.generators.begin(),
                                part.generators.end());
    for (auto const& name : names) {
      ++occurrences[name];
    }
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (auto& name : parts[k].generators) {
      if (occurrences[name] > 1) {
        name += "_" + std::to_string(k + 1);
      }
    }
  }
  std::set<std::string> all;
  for (auto const& part : parts) {
    for (auto const& name : part.generators) {
      if (!all.insert(name).second) {
        throw InputError("cannot make generator names disjoint: \"" + name
                         + "\" still collides after renaming");
      }
    }
  }
  return parts;
}

ExponentMatrix exponent_matrix(Presentation const& p) {
  ExponentMatrix m(p.relators.size(),
                   std::vector<Exponent>(p.generators.size(), 0));
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (auto const& s : p.relators[i].syllables()) {
      if (s.gen < p.generators.size()) {
        m[i][s.gen] += s.exp;
      }
    }
  }
  return m;
}

Word shift_generators(Word const& w, std::size_t offset) {
  std::vector<Syllable> out = w.syllables();
  for (auto& s : out) {
    s.gen += offset;
  }
  return Word(std::move(out));
}

Presentation sub_presentation(Presentation const&             p,
                              std::size_t                     first_gen,
                              std::size_t                     gen_count,
                              std::vector<std::size_t> const& relator_indices) {
  if (first_gen + gen_count > p.generators.size()) {
    throw InputError("generator range out of bounds");
  }
  Presentation out;
  out.generators.assign(p.generators.begin() + first_gen,
                        p.generators.begin() + first_gen + gen_count);
  for (auto i : relator_indices) {
    if (i >= p.relators.size()) {
      throw InputError("relator index out of bounds");
    }
    std::vector<Syllable> syl = p.relators[i].syllables();
    for (auto& s : syl) {
      if (s.gen < first_gen || s.gen >= first_gen + gen_count) {
        throw InputError("relator " + std::to_string(i)
                         + " uses a generator outside the requested range");
      }
      s.gen -= first_gen;
    }
    out.relators.emplace_back(std::move(syl));
  }
  return out;
}

}  // namespace wreath

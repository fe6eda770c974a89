#include "wreath/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wreath/error.hpp"

namespace wreath {

using ojson = nlohmann::ordered_json;

namespace {

ojson range_json(IndexRange r) { return ojson::array({r.first, r.count}); }

IndexRange range_from(ojson const& j, char const* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2
      || !j[key][0].is_number_unsigned() || !j[key][1].is_number_unsigned()) {
    throw InputError(std::string("wreath_meta.") + key
                     + " must be [first, count]");
  }
  return {j[key][0].get<std::size_t>(), j[key][1].get<std::size_t>()};
}

ojson meta_json(WreathMeta const& m, Presentation const& p) {
  ojson out;
  out["left_gens"]      = range_json(m.left_gens);
  out["right_gens"]     = range_json(m.right_gens);
  out["left_relators"]  = range_json(m.left_relators);
  out["right_relators"] = range_json(m.right_relators);
  ojson words           = ojson::object();
  ojson involutions     = ojson::array();
  for (auto const& t : m.transversal) {
    words[std::to_string(t.element)] = format_word(t.word, p.generators);
    if (t.involution) {
      involutions.push_back(t.element);
    }
  }
  out["t_words"]     = std::move(words);
  out["involutions"] = std::move(involutions);
  return out;
}

WreathMeta meta_from(ojson const& j, Presentation const& p) {
  if (!j.is_object()) {
    throw InputError("wreath_meta must be an object");
  }
  WreathMeta m;
  m.left_gens      = range_from(j, "left_gens");
  m.right_gens     = range_from(j, "right_gens");
  m.left_relators  = range_from(j, "left_relators");
  m.right_relators = range_from(j, "right_relators");
  if (m.left_gens.end() > p.generator_count()
      || m.right_gens.end() > p.generator_count()
      || m.left_relators.end() > p.relator_count()
      || m.right_relators.end() > p.relator_count()) {
    throw InputError("wreath_meta ranges exceed the presentation");
  }
  std::set<Element> involutions;
  if (j.contains("involutions")) {
    for (auto const& e : j["involutions"]) {
      if (!e.is_number_unsigned()) {
        throw InputError("wreath_meta.involutions must hold element indices");
      }
      involutions.insert(e.get<Element>());
    }
  }
  if (!j.contains("t_words") || !j["t_words"].is_object()) {
    throw InputError("wreath_meta.t_words must be an object");
  }
  for (auto const& [key, value] : j["t_words"].items()) {
    if (!value.is_string()) {
      throw InputError("wreath_meta.t_words values must be words");
    }
    Element element = 0;
    try {
      std::size_t used = 0;
      element          = static_cast<Element>(std::stoul(key, &used));
      if (used != key.size()) {
        throw std::invalid_argument(key);
      }
    } catch (std::exception const&) {
      throw InputError("wreath_meta.t_words key \"" + key
                       + "\" is not an element index");
    }
    m.transversal.push_back({element,
                             parse_word(value.get<std::string>(), p.generators),
                             involutions.count(element) > 0});
  }
  return m;
}

}  // namespace

std::string to_json(Presentation const& p, std::optional<WreathMeta> const& meta) {
  ojson j;
  if (p.label) {
    j["label"] = *p.label;
  }
  j["generators"] = p.generators;
  j["relators"]   = p.relator_strings();
  if (meta) {
    j["wreath_meta"] = meta_json(*meta, p);
  }
  return j.dump(2) + "\n";
}

PresentationFile parse_presentation_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw InputError("presentation JSON must be an object");
  }
  PresentationFile out;
  if (j.contains("label")) {
    if (!j["label"].is_string()) {
      throw InputError("\"label\" must be a string");
    }
    out.presentation.label = j["label"].get<std::string>();
  }
  if (!j.contains("generators") || !j["generators"].is_array()) {
    throw InputError("\"generators\" must be an array of strings");
  }
  for (auto const& g : j["generators"]) {
    if (!g.is_string()) {
      throw InputError("\"generators\" must be an array of strings");
    }
    out.presentation.generators.push_back(g.get<std::string>());
  }
  if (!j.contains("relators") || !j["relators"].is_array()) {
    throw InputError("\"relators\" must be an array of strings");
  }
  for (auto const& r : j["relators"]) {
    if (!r.is_string()) {
      throw InputError("\"relators\" must be an array of strings");
    }
    out.presentation.relators.push_back(
        parse_word(r.get<std::string>(), out.presentation.generators));
  }
  require_valid(out.presentation);
  if (j.contains("wreath_meta")) {
    out.meta = meta_from(j["wreath_meta"], out.presentation);
  }
  return out;
}

PresentationFile read_presentation_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_presentation_json(buf.str());
  } catch (InputError const& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string to_gap(Presentation const& p) {
  std::string out = "F := FreeGroup(";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    out += (i > 0 ? ", \"" : "\"") + p.generators[i] + "\"";
  }
  out += ");;\nrels := [ ";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    std::string word;
    for (auto const& s : p.relators[i].syllables()) {
      if (!word.empty()) {
        word += '*';
      }
      word += "F." + std::to_string(s.gen + 1);
      if (s.exp != 1) {
        word += '^' + std::to_string(s.exp);
      }
    }
    out += word.empty() ? "One(F)" : word;
  }
  out += " ];;\nG := F / rels;;\n";
  return out;
}

std::string to_text(Presentation const& p) {
  std::string out;
  if (p.label) {
    out += *p.label + " := ";
  }
  out += "< ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    out += (i > 0 ? ", " : "") + p.generators[i];
  }
  out += " | ";
  auto const rels = p.relator_strings();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    out += (i > 0 ? ", " : "") + rels[i];
  }
  out += " >\n";
  return out;
}

}  // namespace wreath

#ifndef WREATH_SERIALIZE_HPP_
#define WREATH_SERIALIZE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "wreath/builders.hpp"
#include "wreath/presentation.hpp"

namespace wreath {

struct PresentationFile {
  Presentation              presentation;
  std::optional<WreathMeta> meta;
};

// Canonical JSON:
//   {"label": str?, "generators": [str...], "relators": [str...],
//    "wreath_meta": {...}?}
// two-space indented, keys in that order, newline-terminated.
std::string to_json(Presentation const&              p,
                    std::optional<WreathMeta> const& meta = std::nullopt);

// Throws InputError on malformed JSON, schema violations, bad words or an
// invalid presentation.
PresentationFile parse_presentation_json(std::string_view text);

PresentationFile read_presentation_file(std::string const& path);

// F := FreeGroup("g1",..);; rels := [ .. ];; G := F / rels;;
std::string to_gap(Presentation const& p);

// < g1, g2 | r1, r2 >
std::string to_text(Presentation const& p);

}  // namespace wreath

#endif  // WREATH_SERIALIZE_HPP_

#include "wreath/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "wreath/error.hpp"

namespace wreath {

namespace {

// Appends one syllable to an already reduced sequence, cascading merges.
void push_reduced(std::vector<Syllable>& out, Syllable s) {
  if (s.exp == 0) {
    return;
  }
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exp += s.exp;
    if (out.back().exp == 0) {
      out.pop_back();
    }
    return;
  }
  out.push_back(s);
}

}  // namespace

Word Word::generator(std::size_t gen, Exponent exp) {
  if (exp == 0) {
    return Word();
  }
  return Word({Syllable{gen, exp}});
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (auto const& s : syllables_) {
    n += static_cast<std::size_t>(s.exp < 0 ? -s.exp : s.exp);
  }
  return n;
}

std::size_t Word::generator_bound() const noexcept {
  std::size_t bound = 0;
  for (auto const& s : syllables_) {
    bound = std::max(bound, s.gen + 1);
  }
  return bound;
}

bool Word::is_reduced() const noexcept {
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (syllables_[i].exp == 0) {
      return false;
    }
    if (i > 0 && syllables_[i - 1].gen == syllables_[i].gen) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> Word::letters() const {
  std::vector<std::size_t> out;
  out.reserve(length());
  for (auto const& s : syllables_) {
    std::size_t const letter = 2 * s.gen + (s.exp < 0 ? 1 : 0);
    Exponent const    count  = s.exp < 0 ? -s.exp : s.exp;
    out.insert(out.end(), static_cast<std::size_t>(count), letter);
  }
  return out;
}

Word& Word::operator*=(Word const& rhs) {
  std::vector<Syllable> out;
  out.reserve(syllables_.size() + rhs.syllables_.size());
  for (auto const& s : syllables_) {
    push_reduced(out, s);
  }
  for (auto const& s : rhs.syllables_) {
    push_reduced(out, s);
  }
  syllables_ = std::move(out);
  return *this;
}

Word reduce(Word const& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllable_count());
  for (auto const& s : w.syllables()) {
    push_reduced(out, s);
  }
  return Word(std::move(out));
}

Word invert(Word const& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllable_count());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
    push_reduced(out, Syllable{it->gen, -it->exp});
  }
  return Word(std::move(out));
}

Word commutator(Word const& a, Word const& b) {
  return invert(a) * invert(b) * a * b;
}

Word conjugate(Word const& a, Word const& b) {
  return invert(b) * a * b;
}

Word power(Word const& w, Exponent n) {
  Word const r = reduce(w);
  if (r.syllable_count() == 1) {
    auto const& s = r.syllables().front();
    return Word::generator(s.gen, s.exp * n);
  }
  Word const base = n < 0 ? invert(w) : reduce(w);
  Word       out;
  for (Exponent i = 0; i < (n < 0 ? -n : n); ++i) {
    out *= base;
  }
  return out;
}

Exponent exponent_sum(Word const& w, std::size_t gen) {
  Exponent total = 0;
  for (auto const& s : w.syllables()) {
    if (s.gen == gen) {
      total += s.exp;
    }
  }
  return total;
}

namespace {

bool is_name_char(char c) {
  switch (c) {
    case '*':
    case '^':
    case '[':
    case ']':
    case '(':
    case ')':
    case ',':
      return false;
    default:
      return !std::isspace(static_cast<unsigned char>(c));
  }
}

class WordParser {
 public:
  WordParser(std::string_view text, std::vector<std::string> const& gens)
      : text_(text), gens_(gens) {}

  Word parse() {
    skip_ws();
    if (pos_ == text_.size()) {
      return Word();
    }
    Word w = parse_word();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return w;
  }

 private:
  [[noreturn]] void fail(std::string const& msg) const {
    throw InputError("malformed word \"" + std::string(text_) + "\" at offset "
                     + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size()
           && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  Word parse_word() {
    Word w = parse_factor();
    while (accept('*')) {
      w *= parse_factor();
    }
    return w;
  }

  Word parse_factor() {
    Word atom = parse_atom();
    if (accept('^')) {
      return power(atom, parse_int());
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    if (accept('[')) {
      Word a = parse_word();
      expect(',');
      Word b = parse_word();
      expect(']');
      return commutator(a, b);
    }
    if (accept('(')) {
      Word w = parse_word();
      expect(')');
      return w;
    }
    std::size_t const start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a generator");
    }
    std::string_view const name = text_.substr(start, pos_ - start);
    auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end()) {
      if (name == "1") {
        return Word();
      }
      pos_ = start;
      if (gens_.empty()) {
        fail("empty generator list");
      }
      fail("unknown generator \"" + std::string(name) + "\"");
    }
    return Word::generator(static_cast<std::size_t>(it - gens_.begin()));
  }

  Exponent parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    while (pos_ < text_.size()
           && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') {
      digits.remove_prefix(1);
    }
    Exponent value = 0;
    auto [ptr, ec]
        = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()
        || digits.empty()) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    return value;
  }

  std::string_view                text_;
  std::vector<std::string> const& gens_;
  std::size_t                     pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::vector<std::string> const& gens) {
  return WordParser(text, gens).parse();
}

std::string format_word(Word const& w, std::vector<std::string> const& gens) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (auto const& s : w.syllables()) {
    if (!out.empty()) {
      out += '*';
    }
    if (s.gen < gens.size()) {
      out += gens[s.gen];
    } else {
      out += "?" + std::to_string(s.gen);
    }
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

}  // namespace wreath

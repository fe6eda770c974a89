#include "wreath/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "wreath/error.hpp"

namespace wreath {

CosetTable::CosetTable(std::size_t generator_count, std::vector<Coset> entries,
                       Status status, std::size_t defined,
                       std::size_t deleted, std::size_t cap)
    : generators_(generator_count),
      entries_(std::move(entries)),
      status_(status),
      defined_(defined),
      deleted_(deleted),
      cap_(cap) {}

std::optional<Coset> CosetTable::act(Coset row, Word const& w) const {
  if (!closed() && entries_.empty()) {
    return std::nullopt;
  }
  Coset c = row;
  for (auto const& s : w.syllables()) {
    std::size_t const col   = column_of(s.gen, s.exp < 0);
    Exponent const    count = s.exp < 0 ? -s.exp : s.exp;
    for (Exponent i = 0; i < count; ++i) {
      c = entry(c, col);
      if (c == kUndefinedCoset) {
        return std::nullopt;
      }
    }
  }
  return c;
}

std::string CosetTable::dump() const {
  std::string out;
  for (std::size_t r = 0; r < (entries_.empty() ? 0 : rows()); ++r) {
    for (std::size_t c = 0; c < column_count(); ++c) {
      if (c > 0) {
        out += ' ';
      }
      Coset e = entry(r, c);
      out += e == kUndefinedCoset ? std::string("-") : std::to_string(e);
    }
    out += '\n';
  }
  return out;
}

namespace {

using Letters = std::vector<std::size_t>;

Letters inverse_letters(Letters const& w) {
  Letters out(w.rbegin(), w.rend());
  for (auto& l : out) {
    l = inverse_column(l);
  }
  return out;
}

// Felsch enumerator state. Dead cosets keep their rows; rep_ is a union-find
// forest whose roots are the live cosets.
class Enumerator {
 public:
  Enumerator(Presentation const& p, std::size_t cap)
      : cols_(2 * p.generator_count()), cap_(cap), by_first_(cols_) {
    std::set<Letters> conjugates;
    for (auto const& r : p.relators) {
      Letters const letters = r.letters();
      if (letters.empty()) {
        continue;
      }
      for (Letters const& base : {letters, inverse_letters(letters)}) {
        for (std::size_t k = 0; k < base.size(); ++k) {
          Letters rot(base.begin() + static_cast<std::ptrdiff_t>(k),
                      base.end());
          rot.insert(rot.end(), base.begin(),
                     base.begin() + static_cast<std::ptrdiff_t>(k));
          conjugates.insert(std::move(rot));
        }
      }
    }
    for (auto const& w : conjugates) {
      by_first_[w.front()].push_back(w);
    }
    new_row();
  }

  bool run(std::vector<Letters> const& subgroup) {
    for (auto const& w : subgroup) {
      if (!scan_and_fill(0, w) || !process_deductions()) {
        return false;
      }
    }
    for (std::size_t alpha = 0; alpha < allocated(); ++alpha) {
      for (std::size_t col = 0; col < cols_; ++col) {
        if (!live(alpha)) {
          break;
        }
        if (at(alpha, col) == kUndefinedCoset) {
          if (!define(static_cast<Coset>(alpha), col)
              || !process_deductions()) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::size_t defined() const noexcept { return allocated(); }
  std::size_t deleted() const noexcept { return deleted_; }

  // Live cosets renumbered breadth-first from 0 along generator columns.
  std::vector<Coset> standardized() const {
    std::vector<Coset> renum(allocated(), kUndefinedCoset);
    std::vector<Coset> order;
    order.push_back(0);
    renum[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t col = 0; col < cols_; col += 2) {
        Coset next = at(order[i], col);
        if (renum[next] == kUndefinedCoset) {
          renum[next] = static_cast<Coset>(order.size());
          order.push_back(next);
        }
      }
    }
    std::vector<Coset> out(order.size() * cols_);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t col = 0; col < cols_; ++col) {
        out[i * cols_ + col] = renum[at(order[i], col)];
      }
    }
    return out;
  }

 private:
  std::size_t allocated() const noexcept { return rep_.size(); }
  bool        live(std::size_t c) const noexcept { return rep_[c] == c; }

  Coset& at(std::size_t row, std::size_t col) {
    return table_[row * cols_ + col];
  }
  Coset at(std::size_t row, std::size_t col) const {
    return table_[row * cols_ + col];
  }

  void new_row() {
    rep_.push_back(static_cast<Coset>(rep_.size()));
    table_.insert(table_.end(), cols_, kUndefinedCoset);
  }

  bool define(Coset alpha, std::size_t col) {
    if (allocated() >= cap_) {
      return false;
    }
    auto beta = static_cast<Coset>(allocated());
    new_row();
    at(alpha, col)                 = beta;
    at(beta, inverse_column(col)) = alpha;
    deductions_.emplace_back(alpha, col);
    return true;
  }

  void deduce(Coset f, std::size_t col, Coset b) {
    at(f, col)                 = b;
    at(b, inverse_column(col)) = f;
    deductions_.emplace_back(f, col);
  }

  // Scans w at alpha without defining new cosets.
  void scan(Coset alpha, Letters const& w) {
    Coset       f = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    while (i < j && at(f, w[i]) != kUndefinedCoset) {
      f = at(f, w[i]);
      ++i;
    }
    if (i == j) {
      if (f != alpha) {
        coincidence(f, alpha);
      }
      return;
    }
    Coset b = alpha;
    while (j > i && at(b, inverse_column(w[j - 1])) != kUndefinedCoset) {
      b = at(b, inverse_column(w[j - 1]));
      --j;
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      deduce(f, w[i], b);
    }
  }

  bool scan_and_fill(Coset alpha, Letters const& w) {
    if (w.empty()) {
      return true;
    }
    Coset       f = alpha;
    Coset       b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();
    for (;;) {
      while (i < j && at(f, w[i]) != kUndefinedCoset) {
        f = at(f, w[i]);
        ++i;
      }
      if (i == j) {
        if (f != b) {
          coincidence(f, b);
        }
        return true;
      }
      while (j > i && at(b, inverse_column(w[j - 1])) != kUndefinedCoset) {
        b = at(b, inverse_column(w[j - 1]));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        deduce(f, w[i], b);
        return true;
      }
      if (!define(f, w[i])) {
        return false;
      }
    }
  }

  bool process_deductions() {
    while (!deductions_.empty()) {
      auto [alpha, col] = deductions_.back();
      deductions_.pop_back();
      if (!live(alpha)) {
        continue;
      }
      for (auto const& w : by_first_[col]) {
        scan(alpha, w);
        if (!live(alpha)) {
          break;
        }
      }
      Coset beta = at(alpha, col);
      if (beta == kUndefinedCoset || !live(beta)) {
        continue;
      }
      for (auto const& w : by_first_[inverse_column(col)]) {
        scan(beta, w);
        if (!live(beta)) {
          break;
        }
      }
    }
    return true;
  }

  Coset find(Coset c) {
    Coset root = c;
    while (rep_[root] != root) {
      root = rep_[root];
    }
    while (rep_[c] != root) {
      Coset next = rep_[c];
      rep_[c]    = root;
      c          = next;
    }
    return root;
  }

  void merge(Coset k, Coset l, std::vector<Coset>& queue) {
    Coset phi = find(k);
    Coset psi = find(l);
    if (phi == psi) {
      return;
    }
    Coset mu   = std::min(phi, psi);
    Coset nu   = std::max(phi, psi);
    rep_[nu]   = mu;
    ++deleted_;
    queue.push_back(nu);
  }

  void coincidence(Coset alpha, Coset beta) {
    std::vector<Coset> queue;
    merge(alpha, beta, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Coset gamma = queue[q];
      for (std::size_t col = 0; col < cols_; ++col) {
        Coset delta = at(gamma, col);
        if (delta == kUndefinedCoset) {
          continue;
        }
        std::size_t const inv = inverse_column(col);
        at(delta, inv)        = kUndefinedCoset;
        Coset mu              = find(gamma);
        Coset nu              = find(delta);
        if (at(mu, col) != kUndefinedCoset) {
          merge(nu, at(mu, col), queue);
        } else if (at(nu, inv) != kUndefinedCoset) {
          merge(mu, at(nu, inv), queue);
        } else {
          at(mu, col) = nu;
          at(nu, inv) = mu;
          deductions_.emplace_back(mu, col);
        }
      }
    }
  }

  std::size_t                                    cols_;
  std::size_t                                    cap_;
  std::vector<std::vector<Letters>>              by_first_;
  std::vector<Coset>                             table_;
  std::vector<Coset>                             rep_;
  std::vector<std::pair<Coset, std::size_t>>     deductions_;
  std::size_t                                    deleted_ = 0;
};

}  // namespace

CosetTable todd_coxeter(Presentation const&      p,
                        std::vector<Word> const& subgroup,
                        std::size_t              cap) {
  require_valid(p);
  if (cap == 0) {
    throw InputError("coset cap must be positive");
  }
  std::vector<Letters> sub;
  for (auto const& w : subgroup) {
    if (w.generator_bound() > p.generator_count()) {
      throw InputError("subgroup word uses a generator outside the presentation");
    }
    Word r = reduce(w);
    if (!r.empty()) {
      sub.push_back(r.letters());
    }
  }

  Enumerator e(p, cap);
  if (!e.run(sub)) {
    return CosetTable(p.generator_count(), {}, CosetTable::Status::capped,
                      e.defined(), e.deleted(), cap);
  }
  return CosetTable(p.generator_count(), e.standardized(),
                    CosetTable::Status::closed, e.defined(), e.deleted(), cap);
}

OrderResult group_order(Presentation const& p, std::size_t cap) {
  CosetTable  t = todd_coxeter(p, {}, cap);
  OrderResult r;
  r.cap     = cap;
  r.defined = t.defined_count();
  r.deleted = t.deleted_count();
  if (t.closed()) {
    r.order = t.rows();
  }
  return r;
}

std::vector<std::string> verify_coset_table(CosetTable const&        table,
                                            Presentation const&      p,
                                            std::vector<Word> const& subgroup) {
  std::vector<std::string> problems;
  if (!table.closed()) {
    problems.emplace_back("table is not closed");
    return problems;
  }
  if (table.generator_count() != p.generator_count()) {
    problems.emplace_back("generator count mismatch");
    return problems;
  }
  std::size_t const n = table.rows();
  for (std::size_t col = 0; col < table.column_count(); ++col) {
    std::vector<bool> hit(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      Coset e = table.entry(r, col);
      if (e == kUndefinedCoset || e >= n) {
        problems.push_back("row " + std::to_string(r) + " column "
                           + std::to_string(col) + " is undefined");
        continue;
      }
      if (hit[e]) {
        problems.push_back("column " + std::to_string(col)
                           + " is not a permutation");
      }
      hit[e] = true;
      if (table.entry(e, inverse_column(col)) != r) {
        problems.push_back("row " + std::to_string(r) + " column "
                           + std::to_string(col)
                           + " disagrees with its inverse column");
      }
    }
  }
  if (!problems.empty()) {
    return problems;
  }
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      auto end = table.act(static_cast<Coset>(r), p.relators[i]);
      if (!end || *end != r) {
        problems.push_back("relator " + std::to_string(i)
                           + " does not close at row " + std::to_string(r));
        break;
      }
    }
  }
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    auto end = table.act(0, subgroup[i]);
    if (!end || *end != 0) {
      problems.push_back("subgroup word " + std::to_string(i)
                         + " does not fix coset 0");
    }
  }
  return problems;
}

}  // namespace wreath

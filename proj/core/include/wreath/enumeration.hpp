#ifndef WREATH_ENUMERATION_HPP_
#define WREATH_ENUMERATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreath/presentation.hpp"
#include "wreath/words.hpp"

namespace wreath {

using Coset = std::uint32_t;

inline constexpr Coset       kUndefinedCoset   = static_cast<Coset>(-1);
inline constexpr std::size_t kDefaultCosetCap  = 1'000'000;

// Column of generator `gen` (inverse = true for gen^-1).
constexpr std::size_t column_of(std::size_t gen, bool inverse) noexcept {
  return 2 * gen + (inverse ? 1 : 0);
}
constexpr std::size_t inverse_column(std::size_t col) noexcept {
  return col ^ 1U;
}

// Result of a coset enumeration.
//
// A closed table is total: row r, column c holds r^c. Rows are numbered in
// breadth-first order from the subgroup coset 0, following generator columns
// (not inverse columns) in generator order. A capped table carries only its
// statistics; rows() is 0.
class CosetTable {
 public:
  enum class Status { closed, capped };

  CosetTable() = default;
  CosetTable(std::size_t generator_count, std::vector<Coset> entries,
             Status status, std::size_t defined, std::size_t deleted,
             std::size_t cap);

  Status      status() const noexcept { return status_; }
  bool        closed() const noexcept { return status_ == Status::closed; }
  std::size_t generator_count() const noexcept { return generators_; }
  std::size_t column_count() const noexcept { return 2 * generators_; }
  std::size_t rows() const noexcept {
    return column_count() == 0 ? (closed() ? 1 : 0)
                               : entries_.size() / column_count();
  }
  std::size_t defined_count() const noexcept { return defined_; }
  std::size_t deleted_count() const noexcept { return deleted_; }
  std::size_t cap() const noexcept { return cap_; }

  Coset entry(std::size_t row, std::size_t col) const {
    return entries_[row * column_count() + col];
  }
  // Follows `w` from `row`; nullopt if an undefined entry is met.
  std::optional<Coset> act(Coset row, Word const& w) const;

  // Debug dump: one row per coset, entries space-separated, "-" if undefined.
  std::string dump() const;

 private:
  std::size_t        generators_ = 0;
  std::vector<Coset> entries_;
  Status             status_  = Status::capped;
  std::size_t        defined_ = 0;
  std::size_t        deleted_ = 0;
  std::size_t        cap_     = 0;
};

// Felsch-style Todd-Coxeter enumeration of the cosets of the subgroup
// generated by `subgroup` in the group presented by `p`. At most `cap` cosets
// are ever defined; beyond that the result is a capped table (not an error).
// Throws InputError for invalid presentations or subgroup words.
CosetTable todd_coxeter(Presentation const&      p,
                        std::vector<Word> const& subgroup = {},
                        std::size_t              cap = kDefaultCosetCap);

struct OrderResult {
  std::optional<std::uint64_t> order;  // nullopt: cap exceeded
  std::size_t                  cap     = 0;
  std::size_t                  defined = 0;
  std::size_t                  deleted = 0;

  bool known() const noexcept { return order.has_value(); }
};

OrderResult group_order(Presentation const& p,
                        std::size_t         cap = kDefaultCosetCap);

// Re-verifies a closed table from scratch: every column is a permutation,
// inverse columns are mutually inverse, every relator fixes every coset and
// every subgroup word fixes coset 0. Returns the list of violations.
std::vector<std::string> verify_coset_table(CosetTable const&        table,
                                            Presentation const&      p,
                                            std::vector<Word> const& subgroup
                                            = {});

}  // namespace wreath

#endif  // WREATH_ENUMERATION_HPP_

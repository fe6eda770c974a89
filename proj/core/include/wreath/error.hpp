#ifndef WREATH_ERROR_HPP_
#define WREATH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace wreath {

// Malformed or inconsistent user input: bad word syntax, unknown generators,
// schema errors, presentations that do not present the claimed group.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size limit (oracle table limit, permutation point limit) was exceeded.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coset enumeration that was required to close hit its cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::string const& what, std::size_t cap)
      : std::runtime_error(what), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace wreath

#endif  // WREATH_ERROR_HPP_

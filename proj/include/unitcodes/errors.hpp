#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unitcodes {

/// Raised when an exhaustive oracle would exceed its enumeration cap.
/// The caller may retry with a larger cap.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : std::runtime_error(what + " (requires " + std::to_string(required) + ", cap " +
                           std::to_string(cap) + ")"),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// A matrix that was required to be invertible is not.
class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Enumeration limits shared by every exhaustive oracle.
struct Budget {
  std::uint64_t cap = std::uint64_t{1} << 26;
  unsigned threads = 1;
};

namespace detail {

/// a*b saturating at UINT64_MAX.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace detail
}  // namespace unitcodes

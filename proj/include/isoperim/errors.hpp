#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isoperim {

/// An argument lies outside the domain of the requested function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A bracketing root finder could not establish or keep a sign change.
class RootNotBracketed : public std::runtime_error {
 public:
  RootNotBracketed(const std::string& what, double lo, double hi, double f_lo, double f_hi)
      : std::runtime_error(what + " [lo=" + std::to_string(lo) + ", hi=" + std::to_string(hi) +
                           ", f(lo)=" + std::to_string(f_lo) + ", f(hi)=" + std::to_string(f_hi) + "]"),
        lo_(lo), hi_(hi), f_lo_(f_lo), f_hi_(f_hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double f_lo() const noexcept { return f_lo_; }
  double f_hi() const noexcept { return f_hi_; }

 private:
  double lo_, hi_, f_lo_, f_hi_;
};

/// An exhaustive computation would exceed its configured size cap.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : std::length_error(what + ": requires " + std::to_string(required) + ", cap is " +
                          std::to_string(cap)),
        required_(required), cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_, cap_;
};

}  // namespace isoperim

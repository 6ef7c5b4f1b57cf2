#ifndef MAJORIZATION_ERRORS_HPP_INCLUDED
#define MAJORIZATION_ERRORS_HPP_INCLUDED

#include <cstddef>
#include <stdexcept>
#include <string>

namespace majorization {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
   using std::runtime_error::runtime_error;
};

class dimension_mismatch : public error {
public:
   using error::error;
};

/// Thrown when a factorial-cost enumeration would exceed the configured
/// size limit.
class guard_exceeded : public error {
public:
   guard_exceeded(std::size_t n, std::size_t guard)
      : error("dimension " + std::to_string(n) +
              " exceeds enumeration guard " + std::to_string(guard))
      , n_(n)
      , guard_(guard)
      {
      }

   std::size_t n() const noexcept { return n_; }
   std::size_t guard() const noexcept { return guard_; }

private:
   std::size_t n_;
   std::size_t guard_;
};

/// x is not majorized by y; carries the violated 1-based prefix length
/// (n when only the totals differ).
class not_majorized : public error {
public:
   explicit not_majorized(std::size_t prefix_index)
      : error("not majorized: prefix " + std::to_string(prefix_index) +
              " violated")
      , prefix_index_(prefix_index)
      {
      }

   std::size_t prefix_index() const noexcept { return prefix_index_; }

private:
   std::size_t prefix_index_;
};

class precondition_violated : public error {
public:
   using error::error;
};

class parse_error : public error {
public:
   using error::error;
};

} // namespace majorization

#endif

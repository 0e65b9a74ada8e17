#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace invsemi {

  /// Failure raised by a validating operation.
  ///
  /// `kind()` is a stable machine-readable name (for example
  /// "NotAssociative" or "JoinFails") and `witness()` carries the element or
  /// point indices that exhibit the failure, in the order documented by the
  /// raising operation.
  class Error : public std::runtime_error {
   public:
    Error(std::string kind, std::string const& detail,
          std::vector<std::size_t> witness = {})
        : std::runtime_error(kind + ": " + detail),
          kind_(std::move(kind)),
          witness_(std::move(witness)) {}

    std::string const& kind() const noexcept {
      return kind_;
    }

    std::vector<std::size_t> const& witness() const noexcept {
      return witness_;
    }

   private:
    std::string              kind_;
    std::vector<std::size_t> witness_;
  };

  namespace detail {
    template <typename... Args>
    std::string concat(Args const&... args) {
      std::ostringstream os;
      (os << ... << args);
      return os.str();
    }

    // Raised for conditions that a theorem guarantees cannot happen; reaching
    // one means an implementation bug, not bad input.
    [[noreturn]] inline void internal_error(std::string const& what) {
      throw std::logic_error("invsemi internal error: " + what);
    }
  }  // namespace detail

}  // namespace invsemi

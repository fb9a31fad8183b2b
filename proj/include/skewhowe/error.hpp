#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewhowe {

enum class ErrorKind {
  InvalidInput,
  NonDivisible,
  NotSemistandard,
  ShapeMismatch,
  IllFormed,
  Annihilated,
  NonIntegral,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Internal failures (a broken invariant or an impossible division) are bugs,
  // everything else is bad input.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::InvariantViolation || kind_ == ErrorKind::NonDivisible;
  }

 private:
  ErrorKind kind_;
};

/// Error raised by web validation, carrying the index of the first bad slice.
class IllFormedWeb : public Error {
 public:
  IllFormedWeb(std::size_t slice_index, const std::string& what)
      : Error(ErrorKind::IllFormed, "slice " + std::to_string(slice_index) + ": " + what),
        slice_index_(slice_index) {}

  std::size_t slice_index() const noexcept { return slice_index_; }

 private:
  std::size_t slice_index_;
};

}  // namespace skewhowe

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace confset {

/// Malformed group specification; `position()` is the 0-based offset of the
/// offending character in the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A group order (or a search that would walk one) exceeds the configured cap.
/// For closure runs `reached()` is the number of elements found before aborting.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t reached = 0)
      : std::runtime_error(what), reached_(reached) {}

  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t reached_;
};

/// A multiplication table (or a supplied map) fails the group axioms.
class NotAGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace confset

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace confset {

/// Dense element identifier; 0 is always the identity.
using ElemId = std::uint64_t;

/// An element of a direct power G^k, stored entrywise.
class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::vector<ElemId> entries) : entries_(std::move(entries)) {}
  Tuple(std::initializer_list<ElemId> entries) : entries_(entries) {}

  std::size_t arity() const noexcept { return entries_.size(); }
  ElemId operator[](std::size_t i) const { return entries_[i]; }
  ElemId& operator[](std::size_t i) { return entries_[i]; }

  std::span<const ElemId> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;

  /// "(0,1,2)"
  std::string to_string() const;

 private:
  std::vector<ElemId> entries_;
};

/// Parses "(0,1,2)"; whitespace around ids is ignored. Throws ParseError.
Tuple parse_tuple(std::string_view text);

/// Mixed-radix packing of k-tuples over a base group of the given order, with
/// entry 0 the most significant digit. Lexicographic order on tuples equals
/// numeric order on codes.
class TupleCodec {
 public:
  TupleCodec(std::uint64_t base_order, std::size_t arity);

  std::uint64_t base_order() const noexcept { return base_; }
  std::size_t arity() const noexcept { return arity_; }
  /// base_order^arity
  std::uint64_t code_count() const noexcept { return count_; }

  ElemId pack(const Tuple& t) const;
  ElemId pack(std::span<const ElemId> entries) const;
  Tuple unpack(ElemId code) const;
  /// Writes the digits of `code` into `out` (size arity), most significant first.
  void unpack_into(ElemId code, std::span<ElemId> out) const;

 private:
  std::uint64_t base_;
  std::size_t arity_;
  std::uint64_t count_;
};

}  // namespace confset

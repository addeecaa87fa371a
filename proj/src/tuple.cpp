#include "confset/tuple.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "confset/errors.hpp"

namespace confset {

std::string Tuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  out += ')';
  return out;
}

Tuple parse_tuple(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  std::vector<ElemId> entries;
  for (;;) {
    skip_ws();
    ElemId value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("expected element id", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    entries.push_back(value);
    skip_ws();
    if (pos >= text.size()) throw ParseError("unterminated tuple", pos);
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    if (text[pos] != ',') throw ParseError("expected ',' or ')'", pos);
    ++pos;
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return Tuple(std::move(entries));
}

TupleCodec::TupleCodec(std::uint64_t base_order, std::size_t arity)
    : base_(base_order), arity_(arity), count_(1) {
  if (base_order == 0) throw std::invalid_argument("base order must be positive");
  for (std::size_t i = 0; i < arity; ++i) {
    if (count_ > UINT64_MAX / base_order)
      throw CapExceeded("tuple code space overflows 64 bits");
    count_ *= base_order;
  }
}

ElemId TupleCodec::pack(const Tuple& t) const { return pack(t.entries()); }

ElemId TupleCodec::pack(std::span<const ElemId> entries) const {
  if (entries.size() != arity_) throw std::invalid_argument("tuple arity mismatch");
  ElemId code = 0;
  for (ElemId e : entries) {
    if (e >= base_) throw std::out_of_range("tuple entry out of range");
    code = code * base_ + e;
  }
  return code;
}

Tuple TupleCodec::unpack(ElemId code) const {
  std::vector<ElemId> out(arity_);
  unpack_into(code, out);
  return Tuple(std::move(out));
}

void TupleCodec::unpack_into(ElemId code, std::span<ElemId> out) const {
  for (std::size_t i = arity_; i-- > 0;) {
    out[i] = code % base_;
    code /= base_;
  }
}

}  // namespace confset

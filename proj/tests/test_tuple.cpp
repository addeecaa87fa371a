#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "confset/errors.hpp"
#include "confset/tuple.hpp"

using namespace confset;

TEST_CASE("tuple text round trip") {
  const Tuple t{0, 1, 2};
  CHECK(t.to_string() == "(0,1,2)");
  CHECK(parse_tuple("(0,1,2)") == t);
  CHECK(parse_tuple(" ( 3 , 4 ) ") == Tuple{3, 4});
  CHECK_THROWS_AS(parse_tuple("()"), ParseError);
}

TEST_CASE("malformed tuples are rejected") {
  CHECK_THROWS_AS(parse_tuple("0,1"), ParseError);
  CHECK_THROWS_AS(parse_tuple("(0,,1)"), ParseError);
  CHECK_THROWS_AS(parse_tuple("(0,1"), ParseError);
  CHECK_THROWS_AS(parse_tuple("(a)"), ParseError);
}

TEST_CASE("ordering is lexicographic") {
  CHECK(Tuple{0, 2} < Tuple{1, 0});
  CHECK(Tuple{1, 0} < Tuple{1, 2});
}

TEST_CASE("codec is mixed radix with the first entry most significant") {
  const TupleCodec c(3, 3);
  CHECK(c.code_count() == 27);
  CHECK(c.pack(Tuple{0, 0, 1}) == 1);
  CHECK(c.pack(Tuple{1, 0, 0}) == 9);
  CHECK(c.unpack(14) == Tuple{1, 1, 2});
}

TEST_CASE("codec round trip on random codes") {
  const TupleCodec c(7, 5);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<ElemId> pick(0, c.code_count() - 1);
  for (int i = 0; i < 1000; ++i) {
    const ElemId code = pick(rng);
    CHECK(c.pack(c.unpack(code)) == code);
  }
}

TEST_CASE("codec overflow throws") {
  CHECK_THROWS_AS(TupleCodec(1u << 20, 4), CapExceeded);
}

TEST_CASE("codec rejects bad input") {
  const TupleCodec c(3, 2);
  CHECK_THROWS(c.pack(Tuple{0, 3}));
  CHECK_THROWS(c.pack(Tuple{0}));
}

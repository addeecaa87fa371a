#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "confset/errors.hpp"
#include "confset/group.hpp"

using namespace confset;

namespace {

std::vector<std::uint64_t> order_multiset(const Group& g) {
  std::vector<std::uint64_t> v;
  for (ElemId x = 0; x < g.order(); ++x) v.push_back(g.element_order(x));
  std::sort(v.begin(), v.end());
  return v;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

// S3 -> D3 sending a chosen order-3 element to r and an involution to a.
std::vector<ElemId> s3_to_d3(const Group& s3, const Group& d3) {
  ElemId r = 0, a = 0;
  for (ElemId x = 1; x < s3.order(); ++x) {
    if (s3.element_order(x) == 3 && !r) r = x;
    if (s3.element_order(x) == 2 && !a) a = x;
  }
  REQUIRE(s3.mul(s3.mul(a, r), a) == s3.inv(r));
  std::vector<ElemId> f(6);
  for (std::uint32_t i = 0; i < 3; ++i) {
    f[s3.pow(r, i)] = dihedral_rotation(3, i);
    f[s3.mul(s3.pow(r, i), a)] = d3.mul(dihedral_rotation(3, i), dihedral_reflection(3, 0));
  }
  return f;
}

}  // namespace

TEST_CASE("spec parsing") {
  auto s = parse_group_spec("Z2xZ3");
  REQUIRE(s.atoms.size() == 2);
  CHECK(s.structural_order() == 6);
  CHECK(parse_group_spec("D4").structural_order() == 8);
  CHECK(parse_group_spec("S4").structural_order() == 24);
  CHECK(parse_group_spec("Z1").structural_order() == 1);
  CHECK(parse_group_spec("S3xD3xZ2").atoms.size() == 3);
}

TEST_CASE("spec errors") {
  CHECK_THROWS_AS(parse_group_spec(""), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Z0"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("D2"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Q8"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Z2x"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Z2Z3"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("S30"), CapExceeded);
  CHECK_THROWS_AS(parse_group_spec("Z100xZ100", 5000), CapExceeded);
}

TEST_CASE("axioms hold on built-in families") {
  for (const char* spec : {"Z1", "Z2", "Z5", "Z12", "D3", "D4", "D7", "S1", "S2", "S3", "S4", "Z2xZ2",
                           "Z2xS3", "D3xZ3"}) {
    CAPTURE(spec);
    const Group g = make_group(spec);
    CHECK(verify_group_axioms(g));
    CHECK(g.is_abelian() == commutes_exhaustively(g));
  }
}

TEST_CASE("abelian flags") {
  CHECK(make_group("Z6").is_abelian());
  CHECK(make_group("Z2xZ3").is_abelian());
  CHECK(make_group("S2").is_abelian());
  CHECK_FALSE(make_group("S3").is_abelian());
  CHECK_FALSE(make_group("D3").is_abelian());
  CHECK_FALSE(make_group("Z2xD4").is_abelian());
}

TEST_CASE("dihedral numbering and relation") {
  const Group d = make_group("D5");
  const ElemId r = dihedral_rotation(5, 1), a = dihedral_reflection(5, 0);
  CHECK(r == 1);
  CHECK(a == 5);
  CHECK(d.mul(d.mul(a, r), a) == d.inv(r));
  for (std::uint32_t i = 0; i < 5; ++i) {
    CHECK(d.mul(d.pow(r, i), a) == dihedral_reflection(5, i));
    CHECK(d.element_order(dihedral_reflection(5, i)) == 2);
  }
  CHECK(d.element_order(r) == 5);
}

TEST_CASE("element order multisets") {
  const std::vector<std::uint64_t> expected{1, 2, 2, 2, 3, 3};
  CHECK(order_multiset(make_group("D3")) == expected);
  CHECK(order_multiset(make_group("S3")) == expected);
  CHECK(order_multiset(make_group("Z6")) == std::vector<std::uint64_t>{1, 2, 3, 3, 6, 6});
}

TEST_CASE("direct product ids are mixed radix") {
  const Group g = make_group("Z2xZ3");
  // (1,2) has id 1*3+2 = 5; (1,2)+(1,2) = (0,1) = 1.
  CHECK(g.mul(5, 5) == 1);
  CHECK(g.element_order(5) == 6);
}

TEST_CASE("permutation ranking") {
  for (std::uint64_t r = 0; r < 24; ++r) {
    const auto p = unrank_permutation(r, 4);
    CHECK(rank_permutation(p) == r);
  }
  const std::vector<std::uint32_t> id{0, 1, 2};
  CHECK(rank_permutation(id) == 0);
}

TEST_CASE("symmetric composition applies the right factor first") {
  const Group s3 = make_group("S3");
  for (ElemId x = 0; x < 6; ++x)
    for (ElemId y = 0; y < 6; ++y) {
      const auto px = unrank_permutation(x, 3), py = unrank_permutation(y, 3);
      std::vector<std::uint32_t> c(3);
      for (int i = 0; i < 3; ++i) c[i] = px[py[i]];
      CHECK(s3.mul(x, y) == rank_permutation(c));
    }
}

TEST_CASE("direct power matches entrywise arithmetic") {
  const Group d3 = make_group("D3");
  const Group p = direct_power(d3, 3);
  CHECK(p.order() == 216);
  CHECK(p.has_cached_table());
  CHECK_FALSE(p.is_abelian());
  const TupleCodec c(6, 3);
  for (ElemId x = 0; x < 216; x += 7)
    for (ElemId y = 0; y < 216; y += 11) {
      CHECK(c.unpack(p.mul(x, y)) == tuple_mul(d3, c.unpack(x), c.unpack(y)));
      CHECK(c.unpack(p.inv(x)) == tuple_inv(d3, c.unpack(x)));
    }
}

TEST_CASE("uncached power still works") {
  const Group z3 = make_group("Z3");
  const Group p = direct_power(z3, 9);
  CHECK(p.order() == 19683);
  CHECK_FALSE(p.has_cached_table());
  CHECK(p.element_order(1) == 3);
  CHECK(verify_group_axioms(p, 0, 2000));
}

TEST_CASE("direct power respects the cap") {
  CHECK_THROWS_AS(direct_power(make_group("Z10"), 10, GroupOptions{1000, 1024}), CapExceeded);
}

TEST_CASE("table groups from file") {
  // Klein four-group.
  const auto path = write_temp("confset_v4.txt", "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
  const Group v4 = make_group("table:" + path);
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  CHECK(order_multiset(v4) == std::vector<std::uint64_t>{1, 2, 2, 2});
  const Group prod = make_group("table:" + path + "xZ3");
  CHECK(prod.order() == 12);
}

TEST_CASE("bad tables are rejected") {
  CHECK_THROWS_AS(make_group("table:" + write_temp("confset_bad1.txt", "2\n1 0\n0 1\n")), NotAGroup);
  CHECK_THROWS_AS(make_group("table:" + write_temp("confset_bad2.txt", "2\n0 1\n1 1\n")), NotAGroup);
  CHECK_THROWS_AS(make_group("table:" + write_temp("confset_bad3.txt", "3\n0 1 2\n1 0\n")), NotAGroup);
  // Quasigroup with identity that is not associative.
  const std::string loop5 =
      "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
  CHECK_THROWS_AS(make_group("table:" + write_temp("confset_bad4.txt", loop5)), NotAGroup);
}

TEST_CASE("S3 and D3 are isomorphic and configurations transport") {
  const Group s3 = make_group("S3"), d3 = make_group("D3");
  const auto f = s3_to_d3(s3, d3);
  CHECK(is_homomorphism(s3, d3, f, MapKind::Isomorphism));
  const std::vector<Tuple> xs{{1, 2}, {3, 4}};
  const auto moved = hom_power_transport(s3, d3, f, xs);
  CHECK(moved[0] == Tuple{f[1], f[2]});
}

TEST_CASE("non-homomorphisms are rejected") {
  const Group z4 = make_group("Z4");
  const std::vector<ElemId> bad{0, 2, 1, 3};
  CHECK_FALSE(is_homomorphism(z4, z4, bad, MapKind::Isomorphism));
  const std::vector<Tuple> xs{{0, 1}};
  CHECK_THROWS_AS(hom_power_transport(z4, z4, bad, xs), std::invalid_argument);
  // Z2 -> Z4, 1 -> 2 is a monomorphism but not an isomorphism.
  const Group z2 = make_group("Z2");
  const std::vector<ElemId> mono{0, 2};
  CHECK(is_homomorphism(z2, z4, mono, MapKind::Monomorphism));
  CHECK_FALSE(is_homomorphism(z2, z4, mono, MapKind::Isomorphism));
}

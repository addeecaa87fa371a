#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "confset/config_set.hpp"

using namespace confset;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string listing(const Group& g, std::size_t k) {
  std::ostringstream out;
  const auto xs = config_set(g, k);
  write_tuples(out, xs);
  return out.str();
}

}  // namespace

TEST_CASE("golden small sets") {
  CHECK(listing(make_group("Z2"), 2) == slurp(CONFSET_SOURCE_DIR "/tests/golden/f_z2_2.txt"));
  CHECK(listing(make_group("Z3"), 3) == slurp(CONFSET_SOURCE_DIR "/tests/golden/f_z3_3.txt"));
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(6, 6) == 720);
  CHECK(falling_factorial(3, 4) == 0);
}

TEST_CASE("cardinality, distinctness and order") {
  for (const char* spec : {"Z2", "Z4", "S3", "D4", "Z2xZ3"}) {
    const Group g = make_group(spec);
    for (std::size_t k = 1; k <= std::min<std::uint64_t>(g.order() + 1, 5); ++k) {
      CAPTURE(spec);
      CAPTURE(k);
      const auto xs = config_set(g, k);
      CHECK(xs.size() == falling_factorial(g.order(), k));
      CHECK(std::is_sorted(xs.begin(), xs.end()));
      CHECK(std::adjacent_find(xs.begin(), xs.end()) == xs.end());
      for (const auto& t : xs) CHECK(config_contains(g, t));
    }
  }
}

TEST_CASE("membership") {
  const Group z4 = make_group("Z4");
  CHECK(config_contains(z4, Tuple{0, 1, 2}));
  CHECK_FALSE(config_contains(z4, Tuple{0, 1, 0}));
  CHECK_THROWS(config_contains(z4, Tuple{0, 4}));
}

TEST_CASE("zero arity is rejected") {
  CHECK_THROWS(config_set(make_group("Z3"), 0));
}

TEST_CASE("symmetry under entrywise inversion") {
  for (const char* spec : {"Z5", "S3", "D4"}) {
    const Group g = make_group(spec);
    for (const auto& t : config_set(g, 3)) CHECK(config_contains(g, tuple_inv(g, t)));
  }
}

TEST_CASE("punctured sets avoid the identity") {
  const Group g = make_group("Z4");
  const auto xs = punctured_config_set(g, 2);
  CHECK(xs.size() == 6);
  CHECK(xs.front() == Tuple{1, 2});
  for (const auto& t : xs) CHECK(std::find(t.begin(), t.end(), 0) == t.end());
}

TEST_CASE("norm is the ordered product") {
  const Group d3 = make_group("D3");
  // r * a = ra (id 4); a * r = r^2 a (id 5).
  CHECK(norm(d3, Tuple{1, 3}) == 4);
  CHECK(norm(d3, Tuple{3, 1}) == 5);
  CHECK(norm(make_group("Z3"), Tuple{0, 1, 2}) == 0);
}

TEST_CASE("norm is a homomorphism iff abelian") {
  CHECK(norm_is_homomorphism(make_group("Z4"), 3).holds);
  CHECK(norm_is_homomorphism(make_group("Z2xZ3"), 2).holds);
  const auto d = norm_is_homomorphism(make_group("D3"), 2);
  CHECK_FALSE(d.holds);
  REQUIRE(d.witness);
  CHECK_FALSE(norm_is_homomorphism(make_group("S3"), 3).holds);
}

TEST_CASE("projection drops the last entry") {
  CHECK(project(Tuple{3, 1, 2}) == Tuple{3, 1});
}

TEST_CASE("configuration property") {
  const Group z3 = make_group("Z3");
  const std::vector<Tuple> empty;
  CHECK_FALSE(has_configuration_property(z3, empty));
  const std::vector<Tuple> inside{{0, 1}, {2, 1}};
  CHECK(has_configuration_property(z3, inside));
  const std::vector<Tuple> outside{{0, 1}, {1, 1}};
  CHECK_FALSE(has_configuration_property(z3, outside));
}

TEST_CASE("augmented configuration property") {
  const Group z4 = make_group("Z4");
  CHECK(augmented_config_property(z4, 3, Tuple{1, 1, 2}));
  CHECK_FALSE(augmented_config_property(z4, 3, Tuple{1, 2, 2}));
  CHECK_FALSE(augmented_config_property(z4, 2, Tuple{1, 1}));
  CHECK_THROWS_AS(augmented_config_property(z4, 2, Tuple{3, 1}), std::invalid_argument);
}

TEST_CASE("standard generators") {
  const auto s = standard_generators(make_group("Z3"), 2);
  CHECK(s.size() == 5);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(std::find(s.begin(), s.end(), Tuple{0, 2}) != s.end());
}

TEST_CASE("stream matches the materialized set") {
  const Group g = make_group("S3");
  auto stream = config_iter(g, 4);
  std::vector<Tuple> streamed;
  while (auto t = stream.next()) streamed.push_back(*t);
  CHECK(streamed == config_set(g, 4));
}

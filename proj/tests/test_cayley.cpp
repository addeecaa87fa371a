#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "confset/cayley.hpp"
#include "confset/closure.hpp"
#include "confset/config_set.hpp"
#include "confset/errors.hpp"

using namespace confset;

namespace {

std::vector<ElemId> config_connection(const Group& g, std::size_t k) {
  std::vector<ElemId> out;
  const TupleCodec codec(g.order(), k);
  for (const auto& t : config_set(g, k)) {
    const ElemId c = codec.pack(t);
    if (c != 0) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("Z3^3 splits into three components of nine") {
  const Group z3 = make_group("Z3");
  const CayleyGraph graph(direct_power(z3, 3), config_connection(z3, 3));
  const auto comps = connected_components(graph);
  CHECK(comps.count() == 3);
  for (auto s : comps.sizes) CHECK(s == 9);
  CHECK(graph.degree() == 6);
}

TEST_CASE("component counts equal closure index") {
  for (const auto& [spec, k] : std::vector<std::pair<const char*, std::size_t>>{
           {"Z2", 2}, {"Z4", 3}, {"Z4", 4}, {"Z2xZ2", 4}, {"S3", 3}, {"Z5", 5}}) {
    CAPTURE(spec);
    const Group g = make_group(spec);
    const Group p = direct_power(g, k);
    const auto conn = config_connection(g, k);
    const CayleyGraph graph(p, conn);
    CHECK(connected_components(graph).count() == closure(p, conn).index());
  }
}

TEST_CASE("connection set validation") {
  const Group z4 = make_group("Z4");
  const std::vector<ElemId> with_identity{0, 1, 3};
  CHECK_THROWS_AS(CayleyGraph(z4, with_identity), std::invalid_argument);
  const std::vector<ElemId> asymmetric{1};
  CHECK_THROWS_AS(CayleyGraph(z4, asymmetric), std::invalid_argument);
  const std::vector<ElemId> out_of_range{5};
  CHECK_THROWS(CayleyGraph(z4, out_of_range));
  const std::vector<ElemId> ok{1, 3};
  CHECK_THROWS_AS(CayleyGraph(z4, ok, 2), CapExceeded);
}

TEST_CASE("distances on a cycle") {
  const Group z6 = make_group("Z6");
  const std::vector<ElemId> s{1, 5};
  const CayleyGraph graph(z6, s);
  const auto d = bfs_distances(graph, 0);
  CHECK(d == std::vector<std::int64_t>{0, 1, 2, 3, 2, 1});
  CHECK(distance_from_identity(graph, 3) == 3u);
  const auto path = shortest_path(graph, 4);
  REQUIRE(path);
  CHECK(path->size() == 3);
  CHECK(path->front() == 0);
  CHECK(path->back() == 4);

  const std::vector<ElemId> even{2, 4};
  const CayleyGraph split(z6, even);
  CHECK_FALSE(distance_from_identity(split, 1));
  CHECK_FALSE(shortest_path(split, 3));
  CHECK(bfs_distances(split, 0)[1] == -1);
}

TEST_CASE("factorization and path round trips on random words") {
  const Group s3 = make_group("S3");
  const Group p = direct_power(s3, 3);
  const auto conn = config_connection(s3, 3);
  const CayleyGraph graph(p, conn);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> letter(0, graph.degree() - 1), len(0, 12);
  for (int i = 0; i < 1000; ++i) {
    std::vector<ElemId> word(len(rng));
    for (auto& w : word) w = graph.connection()[letter(rng)];
    const auto path = factorization_to_path(graph, word);
    REQUIRE(path.size() == word.size() + 1);
    CHECK(path_to_factorization(graph, path) == word);
    for (std::size_t j = 1; j < path.size(); ++j) CHECK(graph.adjacent(path[j - 1], path[j]));
  }
}

TEST_CASE("bad words and paths") {
  const Group z4 = make_group("Z4");
  const std::vector<ElemId> s{1, 3};
  const CayleyGraph graph(z4, s);
  const std::vector<ElemId> bad_word{2};
  CHECK_THROWS_AS(factorization_to_path(graph, bad_word), std::invalid_argument);
  const std::vector<ElemId> bad_start{1, 2};
  CHECK_THROWS_AS(path_to_factorization(graph, bad_start), std::invalid_argument);
  const std::vector<ElemId> jump{0, 2};
  CHECK_THROWS_AS(path_to_factorization(graph, jump), std::invalid_argument);
}

TEST_CASE("Z2^2 DOT export is a 4-cycle") {
  const Group z2 = make_group("Z2");
  const CayleyGraph graph(direct_power(z2, 2), config_connection(z2, 2));
  std::ostringstream out;
  export_dot(graph, out, TupleCodec(2, 2));
  CHECK(out.str() ==
        "graph cayley {\n"
        "  \"(0,0)\";\n"
        "  \"(0,1)\";\n"
        "  \"(1,0)\";\n"
        "  \"(1,1)\";\n"
        "  \"(0,0)\" -- \"(0,1)\";\n"
        "  \"(0,0)\" -- \"(1,0)\";\n"
        "  \"(0,1)\" -- \"(1,1)\";\n"
        "  \"(1,0)\" -- \"(1,1)\";\n"
        "}\n");
  std::ostringstream capped;
  CHECK_THROWS_AS(export_dot(graph, capped, TupleCodec(2, 2), 3), CapExceeded);
}

TEST_CASE("component summary") {
  const Group z3 = make_group("Z3");
  const CayleyGraph graph(direct_power(z3, 3), config_connection(z3, 3));
  const auto j = component_summary(graph, connected_components(graph));
  CHECK(j["components"] == 3);
  CHECK(j["sizes"] == nlohmann::json::array({9, 9, 9}));
  REQUIRE(j["diameters"].is_array());
  CHECK(j["diameters"][0] == j["diameters"][1]);
}

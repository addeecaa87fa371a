#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "confset/group.hpp"
#include "confset/tuple.hpp"

namespace confset {

inline constexpr std::uint64_t kDefaultDotCap = 5000;

/// Cay(G,S): vertices are the ids of G, x -- y iff x^{-1} y in S. Adjacency
/// is generated from S on demand; no edge list is stored.
class CayleyGraph {
 public:
  /// Rejects S containing the identity or not closed under inverses, and
  /// groups above `cap`. Duplicates in S are dropped.
  CayleyGraph(Group ambient, std::span<const ElemId> connection,
              std::uint64_t cap = kDefaultOrderCap);

  const Group& ambient() const noexcept { return ambient_; }
  std::uint64_t vertex_count() const noexcept { return ambient_.order(); }
  /// Sorted ascending.
  std::span<const ElemId> connection() const noexcept { return connection_; }
  std::size_t degree() const noexcept { return connection_.size(); }
  bool in_connection(ElemId s) const;
  bool adjacent(ElemId x, ElemId y) const { return in_connection(ambient_.mul(ambient_.inv(x), y)); }

  template <typename F>
  void for_each_neighbor(ElemId x, F&& f) const {
    for (ElemId s : connection_) f(ambient_.mul(x, s));
  }

 private:
  Group ambient_;
  std::vector<ElemId> connection_;
};

struct Components {
  /// Component id per vertex; components are numbered by their smallest vertex.
  std::vector<std::uint32_t> label;
  std::vector<std::uint64_t> sizes;
  /// Smallest vertex of each component.
  std::vector<ElemId> representatives;

  std::size_t count() const noexcept { return sizes.size(); }
};

Components connected_components(const CayleyGraph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<std::int64_t> bfs_distances(const CayleyGraph& g, ElemId source);

/// Minimal word length of x over S, or nullopt when x is not in <S>.
std::optional<std::uint64_t> distance_from_identity(const CayleyGraph& g, ElemId x);

/// A shortest path [1, ..., x] found by BFS, or nullopt when unreachable.
std::optional<std::vector<ElemId>> shortest_path(const CayleyGraph& g, ElemId x);

/// [1, s_1, s_1 s_2, ...]. Throws std::invalid_argument for letters outside S.
std::vector<ElemId> factorization_to_path(const CayleyGraph& g, std::span<const ElemId> word);

/// Inverse of factorization_to_path: letters x_{i-1}^{-1} x_i. Throws
/// std::invalid_argument when the path does not start at the identity or
/// consecutive vertices are not adjacent.
std::vector<ElemId> path_to_factorization(const CayleyGraph& g, std::span<const ElemId> path);

/// Undirected DOT, one edge per unordered pair {x, xs}, vertices and edges in
/// ascending order, labels rendered through `labels`. Throws CapExceeded above
/// `dot_cap` vertices and std::runtime_error if the stream fails.
void export_dot(const CayleyGraph& g, std::ostream& out, const TupleCodec& labels,
                std::uint64_t dot_cap = kDefaultDotCap);

/// {"components", "sizes", "diameters"} with diameters present only for graphs
/// of at most 10^4 vertices (null otherwise).
nlohmann::json component_summary(const CayleyGraph& g, const Components& comps);

}  // namespace confset

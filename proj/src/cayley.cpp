#include "confset/cayley.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "confset/errors.hpp"

namespace confset {

CayleyGraph::CayleyGraph(Group ambient, std::span<const ElemId> connection, std::uint64_t cap)
    : ambient_(std::move(ambient)), connection_(connection.begin(), connection.end()) {
  if (ambient_.order() > cap)
    throw CapExceeded("Cayley graph vertex count exceeds cap " + std::to_string(cap));
  std::sort(connection_.begin(), connection_.end());
  connection_.erase(std::unique(connection_.begin(), connection_.end()), connection_.end());
  for (ElemId s : connection_) {
    if (s >= ambient_.order()) throw std::out_of_range("connection element out of range");
    if (s == ambient_.identity()) throw std::invalid_argument("connection set contains the identity");
  }
  for (ElemId s : connection_)
    if (!in_connection(ambient_.inv(s)))
      throw std::invalid_argument("connection set is not closed under inverses");
}

bool CayleyGraph::in_connection(ElemId s) const {
  return std::binary_search(connection_.begin(), connection_.end(), s);
}

Components connected_components(const CayleyGraph& g) {
  constexpr std::uint32_t kUnseen = UINT32_MAX;
  const std::uint64_t n = g.vertex_count();
  Components out;
  out.label.assign(n, kUnseen);
  std::vector<ElemId> queue;
  for (ElemId start = 0; start < n; ++start) {
    if (out.label[start] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(out.sizes.size());
    queue.clear();
    queue.push_back(start);
    out.label[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      g.for_each_neighbor(queue[head], [&](ElemId y) {
        if (out.label[y] == kUnseen) {
          out.label[y] = id;
          queue.push_back(y);
        }
      });
    }
    out.sizes.push_back(queue.size());
    out.representatives.push_back(start);
  }
  return out;
}

std::vector<std::int64_t> bfs_distances(const CayleyGraph& g, ElemId source) {
  std::vector<std::int64_t> dist(g.vertex_count(), -1);
  std::vector<ElemId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElemId x = queue[head];
    g.for_each_neighbor(x, [&](ElemId y) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    });
  }
  return dist;
}

std::optional<std::uint64_t> distance_from_identity(const CayleyGraph& g, ElemId x) {
  if (x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  const auto d = bfs_distances(g, g.ambient().identity())[x];
  if (d < 0) return std::nullopt;
  return static_cast<std::uint64_t>(d);
}

std::optional<std::vector<ElemId>> shortest_path(const CayleyGraph& g, ElemId x) {
  if (x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  constexpr ElemId kNone = UINT64_MAX;
  const ElemId root = g.ambient().identity();
  std::vector<ElemId> parent(g.vertex_count(), kNone);
  parent[root] = root;
  std::vector<ElemId> queue{root};
  for (std::size_t head = 0; head < queue.size() && parent[x] == kNone; ++head) {
    const ElemId v = queue[head];
    g.for_each_neighbor(v, [&](ElemId y) {
      if (parent[y] == kNone) {
        parent[y] = v;
        queue.push_back(y);
      }
    });
  }
  if (parent[x] == kNone) return std::nullopt;
  std::vector<ElemId> path{x};
  while (path.back() != root) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<ElemId> factorization_to_path(const CayleyGraph& g, std::span<const ElemId> word) {
  std::vector<ElemId> path{g.ambient().identity()};
  for (ElemId s : word) {
    if (!g.in_connection(s)) throw std::invalid_argument("letter outside the connection set");
    path.push_back(g.ambient().mul(path.back(), s));
  }
  return path;
}

std::vector<ElemId> path_to_factorization(const CayleyGraph& g, std::span<const ElemId> path) {
  if (path.empty() || path.front() != g.ambient().identity())
    throw std::invalid_argument("path must start at the identity");
  std::vector<ElemId> word;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const ElemId letter = g.ambient().mul(g.ambient().inv(path[i - 1]), path[i]);
    if (!g.in_connection(letter))
      throw std::invalid_argument("path vertices " + std::to_string(i - 1) + " and " +
                                  std::to_string(i) + " are not adjacent");
    word.push_back(letter);
  }
  return word;
}

void export_dot(const CayleyGraph& g, std::ostream& out, const TupleCodec& labels,
                std::uint64_t dot_cap) {
  const std::uint64_t n = g.vertex_count();
  if (n > dot_cap)
    throw CapExceeded("graph has " + std::to_string(n) + " vertices, DOT cap is " +
                      std::to_string(dot_cap));
  if (labels.code_count() != n) throw std::invalid_argument("label codec does not match vertex count");
  auto label = [&](ElemId x) { return '"' + labels.unpack(x).to_string() + '"'; };
  out << "graph cayley {\n";
  for (ElemId x = 0; x < n; ++x) out << "  " << label(x) << ";\n";
  for (ElemId x = 0; x < n; ++x) {
    std::vector<ElemId> ys;
    g.for_each_neighbor(x, [&](ElemId y) {
      if (x < y) ys.push_back(y);
    });
    std::sort(ys.begin(), ys.end());
    for (ElemId y : ys) out << "  " << label(x) << " -- " << label(y) << ";\n";
  }
  out << "}\n";
  if (!out) throw std::runtime_error("failed writing DOT output");
}

nlohmann::json component_summary(const CayleyGraph& g, const Components& comps) {
  nlohmann::json j;
  j["components"] = comps.count();
  j["sizes"] = comps.sizes;
  if (g.vertex_count() <= 10000) {
    std::vector<std::int64_t> diameters;
    for (ElemId rep : comps.representatives) {
      // Left translation is a graph automorphism, so every vertex of a
      // component has the same eccentricity as its representative.
      const auto dist = bfs_distances(g, rep);
      diameters.push_back(*std::max_element(dist.begin(), dist.end()));
    }
    j["diameters"] = diameters;
  } else {
    j["diameters"] = nullptr;
  }
  return j;
}

}  // namespace confset

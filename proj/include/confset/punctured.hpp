#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "confset/group.hpp"
#include "confset/tuple.hpp"

namespace confset {

/// (x_0, ..., x_k) -> (x_1 x_0^{-1}, ..., x_k x_0^{-1}). Requires arity >= 2.
Tuple phi(const Group& g, const Tuple& t);

/// Both inclusions phi(F(G,k+1)) = F(G-{1},k), by enumeration.
struct ImageCheck {
  bool holds = false;
  std::uint64_t domain_size = 0;
  std::uint64_t image_size = 0;
  std::uint64_t target_size = 0;
};
ImageCheck phi_image_check(const Group& g, std::size_t k);

/// F(G,k+1) <-> G x F(G-{1},k) via (g_0, g_i g_0^{-1}) and (g_0, g_i g_0).
struct BijectionCheck {
  bool holds = false;
  bool forward_round_trip = false;   // inverse(forward(t)) = t on F(G,k+1)
  bool backward_round_trip = false;  // forward(inverse(u)) = u on G x F(G-{1},k)
  bool counting = false;             // |F(G,k+1)| = |G| |F(G-{1},k)|
  std::uint64_t domain_size = 0;
  std::uint64_t product_size = 0;
};
BijectionCheck product_bijection_check(const Group& g, std::size_t k);

struct FiberSet {
  Tuple base;
  std::vector<Tuple> members;  // (g, p_1 g, ..., p_k g) for g = 0..|G|-1
};

/// Throws std::invalid_argument when `base` is not in F(G-{1},k), and
/// std::logic_error if a member leaves F(G,k+1) or phi(member) != base.
FiberSet fiber(const Group& g, const Tuple& base);

/// Quotient of F(G,k+1) that collapses only the fiber over `base` and keeps
/// every other tuple as a singleton class, mapped to F(G-{1},k) by phi.
struct QuotientAudit {
  std::string group;
  std::size_t k = 0;
  Tuple base;
  std::uint64_t quotient_size = 0;
  std::uint64_t image_size = 0;
  bool injective = false;
  bool surjective = false;
  bool bijection() const noexcept { return injective && surjective; }
  nlohmann::json to_json() const;
};

/// Uses the lexicographically least member of F(G-{1},k) when `base` is empty.
/// Throws std::invalid_argument when F(G-{1},k) is empty.
QuotientAudit literal_quotient_audit(const Group& g, std::size_t k,
                                     std::optional<Tuple> base = std::nullopt);

/// Partition of F(G,k+1) into orbits of the right-diagonal action
/// x -> (x_0 h, ..., x_k h), compared against the phi-fibers.
struct OrbitCheck {
  bool holds = false;
  std::uint64_t blocks = 0;
  std::uint64_t expected_blocks = 0;  // |F(G-{1},k)|
  bool uniform_block_size = false;    // every block has |G| members
  bool phi_constant_on_blocks = false;
  bool phi_separates_blocks = false;
};
OrbitCheck orbit_quotient_check(const Group& g, std::size_t k);

/// Whether phi: G^{k+1} -> G^k is a homomorphism; exhaustive over pairs when
/// |G|^{k+1} <= 10^4, else 10^5 pairs sampled with `seed`.
struct PhiHomomorphismCheck {
  bool is_homomorphism = true;
  bool abelian = true;
  bool matches_abelian() const noexcept { return is_homomorphism == abelian; }
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
  /// A violating pair; the (x,1,...,1), (1,y,1,...,1) shape is tried first.
  std::optional<std::pair<Tuple, Tuple>> witness;
};
PhiHomomorphismCheck phi_homomorphism_iff_abelian(const Group& g, std::size_t k,
                                                  std::uint64_t seed = 0);

}  // namespace confset

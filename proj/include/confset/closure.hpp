#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "confset/group.hpp"
#include "confset/tuple.hpp"

namespace confset {

/// Element set of a subgroup of some ambient group, as a bitmap over ids.
class SubgroupCarrier {
 public:
  /// Builds a carrier from an explicit member list (no closure performed).
  static SubgroupCarrier from_members(std::uint64_t ambient_order,
                                      std::span<const ElemId> members,
                                      std::vector<ElemId> generators = {});

  std::uint64_t ambient_order() const noexcept { return ambient_order_; }
  std::uint64_t size() const noexcept { return size_; }
  bool contains(ElemId x) const { return x < ambient_order_ && bits_[x]; }
  /// ambient order / size. Throws std::logic_error if the division is inexact.
  std::uint64_t index() const;
  /// Sorted ascending.
  std::vector<ElemId> members() const;
  const std::vector<ElemId>& generators() const noexcept { return generators_; }
  /// One packed code per line, ascending.
  void write_members(std::ostream& out) const;

  friend bool operator==(const SubgroupCarrier& a, const SubgroupCarrier& b) {
    return a.ambient_order_ == b.ambient_order_ && a.bits_ == b.bits_;
  }

 private:
  std::uint64_t ambient_order_ = 1;
  std::uint64_t size_ = 0;
  std::vector<bool> bits_;
  std::vector<ElemId> generators_;

  friend SubgroupCarrier closure(const Group&, std::span<const ElemId>, std::uint64_t);
};

/// <X>: breadth-first right multiplication by X u X^{-1}, seeded with the
/// identity. Throws CapExceeded when the ambient order exceeds `cap`; the
/// exception's reached() is 0 since no search was started.
SubgroupCarrier closure(const Group& ambient, std::span<const ElemId> generators,
                        std::uint64_t cap = kDefaultOrderCap);

bool is_generating(const Group& ambient, std::span<const ElemId> generators,
                   std::uint64_t cap = kDefaultOrderCap);

inline std::uint64_t index(const SubgroupCarrier& sub) { return sub.index(); }

/// Packs tuples with `codec`.
std::vector<ElemId> pack_all(const TupleCodec& codec, std::span<const Tuple> xs);

/// Identity, closure under products and inverses: exhaustive when the
/// subgroup has at most 1000 members, otherwise `samples` random pairs.
bool verify_subgroup(const Group& ambient, const SubgroupCarrier& sub,
                     std::size_t samples = 10000, std::uint64_t seed = 0);

/// ((1,g),(g,1)), whose product is (g,g). Throws for g = identity.
std::pair<Tuple, Tuple> factor_diagonal_k2(const Group& g, ElemId x);

/// Two members of F(G,k) whose entrywise product is the tuple with `x` at
/// `position` and the identity elsewhere. The filler entries are the k-1
/// smallest ids outside {1, x}. Requires k >= 3, |G| >= k+1, x != 1.
std::pair<Tuple, Tuple> factor_standard_generator(const Group& g, std::size_t k,
                                                  std::size_t position, ElemId x);

/// Certificate that F(G,k) does not generate G^k for abelian G, |G| = k >= 3.
struct NormObstruction {
  /// Sum of all elements of G: the norm shared by every member of F(G,k).
  ElemId norm_value = 0;
  /// <norm_value> as a subgroup of G; every norm of <F(G,k)> lies here.
  SubgroupCarrier norm_subgroup;
  /// Smallest element of G outside norm_subgroup.
  ElemId escaping_element = 0;
  /// (1,...,1,escaping_element): its norm escapes, so it is not in <F(G,k)>.
  Tuple escaping_tuple;
  /// Every member of F(G,k) was enumerated and found to have norm_value
  /// (done when k <= 9, i.e. k! <= 10^6).
  bool norms_verified = false;
};

/// Throws std::invalid_argument when G is not abelian or |G| < 3.
NormObstruction abelian_norm_obstruction(const Group& g);

/// D(G) = {(x,...,x)} inside G^k, as codes of `direct_power(g, k)`.
SubgroupCarrier diagonal_subgroup(const Group& g, std::size_t k,
                                  std::uint64_t cap = kDefaultOrderCap);

}  // namespace confset

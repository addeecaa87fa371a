#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confset/tuple.hpp"

namespace confset {

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 26;
/// Hard upper bound on the order of a group whose full table may be cached.
inline constexpr std::uint64_t kMaxCachedTableOrder = 4096;

// ---------------------------------------------------------------------------
// Group specifications
// ---------------------------------------------------------------------------

enum class AtomKind { Cyclic, Dihedral, Symmetric, Table };

struct AtomSpec {
  AtomKind kind = AtomKind::Cyclic;
  std::uint32_t param = 1;  // n for Z/D/S; table size once loaded
  std::string path;         // table atoms only
  std::uint64_t order = 1;  // 0 for a table atom until the file is read
};

/// Parsed form of `atom { "x" atom }`.
struct GroupSpec {
  std::string text;
  std::vector<AtomSpec> atoms;

  /// Product of the atom orders (table atoms count as 1 until loaded).
  std::uint64_t structural_order() const;
};

/// Grammar: `group := atom { "x" atom }`,
///          `atom  := "Z" INT | "D" INT | "S" INT | "table:" PATH`.
/// A table path runs until an "x" that starts another atom, or to the end.
/// Throws ParseError on syntax or parameter-range problems and CapExceeded
/// when the structural order is above `order_cap`.
GroupSpec parse_group_spec(std::string_view text,
                           std::uint64_t order_cap = kDefaultOrderCap);

struct GroupOptions {
  std::uint64_t order_cap = kDefaultOrderCap;
  /// Groups with order at most this (clamped to kMaxCachedTableOrder) get a
  /// full multiplication table at construction; 0 disables caching.
  std::uint64_t table_cache_limit = 1024;
};

// ---------------------------------------------------------------------------
// Group
// ---------------------------------------------------------------------------

/// Multiplication table of a small group; ids are 0..n-1 with 0 the identity.
struct MulTable {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> mul;  // row-major, row = left factor
  std::vector<std::uint32_t> inv;
};

/// A finite group with dense element ids 0..order-1 (0 = identity).
///
/// Elements of a direct product are mixed-radix compositions of the factor
/// ids with the first factor most significant. Cyclic, dihedral and symmetric
/// factors multiply arithmetically; table factors look up a shared table.
///
/// Dihedral D_n numbering: r^i -> i, r^i a -> n + i.
/// Symmetric S_n numbering: Lehmer-code rank of the permutation, with
/// (x * y)(i) = x(y(i)).
///
/// Immutable after construction; copies share cached tables.
class Group {
 public:
  std::uint64_t order() const noexcept { return order_; }
  ElemId identity() const noexcept { return 0; }
  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const;
  ElemId pow(ElemId a, std::uint64_t e) const;
  /// Smallest m >= 1 with a^m = 1.
  std::uint64_t element_order(ElemId a) const;
  /// Structural answer: every factor is abelian.
  bool is_abelian() const noexcept { return abelian_; }
  const std::string& name() const noexcept { return name_; }
  bool has_cached_table() const noexcept { return table_ != nullptr; }

  /// Builds a group from an explicit table, checking the axioms. Associativity
  /// is checked exhaustively for n <= 128 and on 10^5 sampled triples above.
  static Group from_table(MulTable table, std::string name,
                          const GroupOptions& options = {});

 private:
  struct Factor {
    AtomKind kind;
    std::uint32_t n;
    std::uint64_t order;
    std::shared_ptr<const MulTable> table;
    ElemId mul(ElemId a, ElemId b) const;
    ElemId inv(ElemId a) const;
  };

  Group(std::vector<Factor> factors, std::string name, bool abelian,
        const GroupOptions& options);

  ElemId mul_structural(ElemId a, ElemId b) const;
  ElemId inv_structural(ElemId a) const;

  std::vector<Factor> factors_;
  std::uint64_t order_ = 1;
  bool abelian_ = true;
  std::string name_;
  std::shared_ptr<const MulTable> table_;
  std::shared_ptr<const std::vector<std::uint32_t>> orders_;

  friend Group build_group(const GroupSpec&, const GroupOptions&);
  friend Group direct_power(const Group&, std::size_t, const GroupOptions&);
};

/// Realizes a parsed spec. Table files are read and axiom-checked here
/// (throws NotAGroup / std::runtime_error on I/O problems).
Group build_group(const GroupSpec& spec, const GroupOptions& options = {});

/// parse_group_spec + build_group.
Group make_group(std::string_view text, const GroupOptions& options = {});

/// G^k with entrywise operations; its element ids are the TupleCodec codes
/// of k-tuples over G. Throws CapExceeded if |G|^k > options.order_cap.
Group direct_power(const Group& base, std::size_t k,
                   const GroupOptions& options = {});

/// Reads the table-file format: first line n, then n rows of n ids.
MulTable read_table_file(const std::string& path);

/// Lehmer-code ranking of permutations of 0..n-1.
std::uint64_t rank_permutation(std::span<const std::uint32_t> perm);
std::vector<std::uint32_t> unrank_permutation(std::uint64_t rank,
                                              std::uint32_t n);

// Dihedral element ids (see Group numbering).
inline ElemId dihedral_rotation(std::uint32_t n, std::uint32_t i) {
  return i % n;
}
inline ElemId dihedral_reflection(std::uint32_t n, std::uint32_t i) {
  return n + i % n;
}

/// Checks identity, inverse and associativity laws. Associativity is checked
/// on all triples when order <= full_assoc_limit, otherwise on `samples`
/// random triples drawn with `seed`.
bool verify_group_axioms(const Group& g, std::uint64_t full_assoc_limit = 24,
                         std::size_t samples = 20000, std::uint64_t seed = 0);

/// Exhaustive commutation check (the structural flag is Group::is_abelian).
bool commutes_exhaustively(const Group& g);

// Entrywise arithmetic on tuples over a base group.
Tuple tuple_mul(const Group& base, const Tuple& a, const Tuple& b);
Tuple tuple_inv(const Group& base, const Tuple& a);

enum class MapKind { Isomorphism, Monomorphism };

/// True iff `f` (indexed by ids of `from`) is a homomorphism into `to` that is
/// injective, and bijective when kind is Isomorphism. All pairs are checked
/// when |from| <= 256, otherwise 10^4 sampled pairs.
bool is_homomorphism(const Group& from, const Group& to,
                     std::span<const ElemId> f, MapKind kind);

/// Applies `f` entrywise to every tuple. Throws std::invalid_argument when
/// is_homomorphism(from, to, f, kind) fails.
std::vector<Tuple> hom_power_transport(const Group& from, const Group& to,
                                       std::span<const ElemId> f,
                                       std::span<const Tuple> xs,
                                       MapKind kind = MapKind::Isomorphism);

}  // namespace confset

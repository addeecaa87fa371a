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

/// n (n-1) ... (n-k+1); 0 when n < k. Throws CapExceeded on 64-bit overflow.
std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k);

/// Single-consumer stream of k-tuples of pairwise-distinct ids drawn from
/// [first, n), in lexicographic (= packed-code) order.
class ConfigStream {
 public:
  ConfigStream(std::uint64_t n, std::size_t k, ElemId first = 0);

  std::optional<Tuple> next();

 private:
  bool fill_from(std::size_t pos);

  std::uint64_t n_;
  std::size_t k_;
  ElemId first_;
  std::vector<ElemId> cur_;
  std::vector<bool> used_;
  bool started_ = false;
  bool done_ = false;
};

/// F(G,k). Empty when |G| < k. Throws std::invalid_argument for k == 0.
ConfigStream config_iter(const Group& g, std::size_t k);
/// F(G - {1}, k).
ConfigStream punctured_config_iter(const Group& g, std::size_t k);

std::vector<Tuple> config_set(const Group& g, std::size_t k);
std::vector<Tuple> punctured_config_set(const Group& g, std::size_t k);

/// Entries pairwise distinct.
bool config_contains(const Group& g, const Tuple& t);

/// Ordered product t_0 t_1 ... t_{k-1}.
ElemId norm(const Group& g, const Tuple& t);

struct PairCheck {
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
  /// First violating pair found, as packed codes of G^k.
  std::optional<std::pair<Tuple, Tuple>> witness;
};

/// Whether |gh| = |g||h| over G^k: exhaustive when |G|^k <= 10^4, otherwise
/// 10^5 pairs sampled with `seed`.
PairCheck norm_is_homomorphism(const Group& g, std::size_t k, std::uint64_t seed = 0);

/// Drops the last entry. Requires arity >= 2.
Tuple project(const Tuple& t);

/// (P-1) some x in X has project(x) in F(G,k), and (P-2) project(x) in F(G,k)
/// implies x in F(G,k+1), where every x has arity k+1 >= 2. Empty X is false.
bool has_configuration_property(const Group& g, std::span<const Tuple> xs);

/// Configuration property of F(G,k) u {alpha}. Requires alpha not in F(G,k),
/// |G| >= k+1 and k >= 2. Throws std::logic_error if the result disagrees with
/// the criterion project(alpha) not in F(G,k-1).
bool augmented_config_property(const Group& g, std::size_t k, const Tuple& alpha);

/// E_k: tuples supported on a single coordinate, deduplicated, sorted.
std::vector<Tuple> standard_generators(const Group& g, std::size_t k);

/// One tuple per line, in the order given.
void write_tuples(std::ostream& out, std::span<const Tuple> xs);

}  // namespace confset

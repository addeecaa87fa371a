#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "confset/cayley.hpp"
#include "confset/group.hpp"
#include "confset/modp.hpp"
#include "confset/report.hpp"

namespace confset {

struct RunOptions {
  std::uint64_t seed = 0;
  /// Largest ambient group on which closure or BFS is run.
  std::uint64_t max_order = kDefaultOrderCap;
  std::uint64_t dot_cap = kDefaultDotCap;
  /// Adds wall_ms to every entry (reports are then no longer byte-stable).
  bool timings = false;
};

/// Expected generation verdict for F(G,k): true when k = 2 or
/// |G| >= k+1 >= 4, false when G is abelian with |G| = k >= 3, nullopt otherwise.
std::optional<bool> predicted_generation(const Group& g, std::size_t k);

nlohmann::json basis_report_json(const modp::BasisReport& report);

/// Cardinality, symmetry, closure-based generation with the norm obstruction
/// cross-check, constructive factorizations, Cayley components and element
/// orders for F(G,k).
AnalysisReport cmd_analyze(std::string_view spec, std::size_t k, const RunOptions& options = {});

/// Dimension of the configuration group of Z_p, claimed-basis audit and one
/// homogeneous-system solution. Requires a prime 3 <= p <= 8.
AnalysisReport cmd_zp(std::uint32_t p, const RunOptions& options = {});

/// Component statistics for Cay(G^k, F(G,k)); writes DOT to `out_path` when the
/// graph has at most dot_cap vertices and a JSON component summary otherwise.
AnalysisReport cmd_cayley(std::string_view spec, std::size_t k, const std::string& out_path,
                          const RunOptions& options = {});

/// Image, product-bijection, literal-quotient, orbit-quotient and
/// homomorphism checks for phi on F(G,k+1).
AnalysisReport cmd_punctured(std::string_view spec, std::size_t k, const RunOptions& options = {});

/// The full verification matrix.
AnalysisReport cmd_verify_all(const RunOptions& options = {});

}  // namespace confset

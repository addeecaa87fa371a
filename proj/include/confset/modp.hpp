#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace confset::modp {

using Residue = std::uint32_t;

bool is_prime(std::uint32_t n);

/// Vector over Z_p with entries reduced into [0, p).
struct ModPVector {
  std::uint32_t p = 2;
  std::vector<Residue> entries;

  ModPVector() = default;
  /// Reduces the given integers mod p. Throws std::invalid_argument if p is not prime.
  ModPVector(std::uint32_t prime, std::span<const std::int64_t> values);
  ModPVector(std::uint32_t prime, std::vector<Residue> residues);

  std::size_t size() const noexcept { return entries.size(); }
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const ModPVector&, const ModPVector&) = default;
};

ModPVector operator+(const ModPVector& a, const ModPVector& b);
ModPVector scale(const ModPVector& v, Residue lambda);

/// Dense row-major matrix over Z_p.
class ModPMatrix {
 public:
  ModPMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  static ModPMatrix from_rows(std::uint32_t p, std::span<const ModPVector> rows);
  /// Matrix whose i-th column is columns[i].
  static ModPMatrix from_columns(std::uint32_t p, std::span<const ModPVector> columns);

  std::uint32_t prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores value mod p.
  void set(std::size_t r, std::size_t c, std::int64_t value);
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  ModPVector multiply(const ModPVector& x) const;

 private:
  std::uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<Residue> data_;
};

/// Incrementally maintained reduced row-echelon basis of a row space.
class RowSpace {
 public:
  RowSpace(std::uint32_t p, std::size_t cols);

  /// Adds v; returns true if it was independent of the current span.
  bool insert(std::span<const Residue> v);
  bool contains(std::span<const Residue> v) const;
  std::size_t dimension() const noexcept { return basis_.size(); }

 private:
  std::vector<Residue> reduce(std::span<const Residue> v) const;

  std::uint32_t p_;
  std::size_t cols_;
  std::vector<std::vector<Residue>> basis_;  // each row monic at pivots_[i]
  std::vector<std::size_t> pivots_;
};

/// Gaussian elimination with exact inverse pivots.
std::size_t rank(const ModPMatrix& m);

/// Basis of {x : Mx = 0}.
std::vector<ModPVector> kernel_basis(const ModPMatrix& m);

/// A nonzero x with Mx = 0, or nullopt when only the trivial solution exists.
std::optional<ModPVector> solve_homogeneous(const ModPMatrix& m);

/// Largest p accepted by the full-enumeration routines (8! rows).
inline constexpr std::uint32_t kMaxEnumeratedPrime = 8;

/// Rank of the p! x p matrix whose rows are the members of F(Z_p,p).
/// Requires 3 <= p <= kMaxEnumeratedPrime, p prime.
std::size_t config_group_dim(std::uint32_t p);

/// Row space spanned by F(Z_p,p), same preconditions as config_group_dim.
RowSpace config_row_space(std::uint32_t p);

/// Entries sum to 0 mod p.
bool norm_kernel_membership(const ModPVector& v);

/// (g_1..g_{p-1}) -> (-(g_1+...+g_{p-1}), g_1, ..., g_{p-1}).
ModPVector norm_kernel_embedding(const ModPVector& v);

struct BasisCandidate {
  std::size_t index = 0;  // i in 1..p-1
  std::string branch;     // which case of the formula produced it
  ModPVector vector;
  bool length_ok = true;
  bool in_span = false;
  // Two-summand decomposition, middle branch only.
  bool has_decomposition = false;
  ModPVector first_summand, second_summand;
  bool decomposition_holds = false;
  bool first_in_config = false;
  bool second_in_config = false;
};

struct BasisReport {
  std::uint32_t p = 0;
  std::vector<BasisCandidate> candidates;
  std::size_t family_rank = 0;
  bool independent = false;
  std::size_t span_dimension = 0;  // dimension of span F(Z_p,p)
  bool is_basis = false;           // independent, all in span, count = dimension
};

/// Builds e_1..e_{p-1} from the closed-form case analysis and audits them
/// against the span of F(Z_p,p). Requires 3 <= p <= kMaxEnumeratedPrime, p prime.
BasisReport claimed_basis(std::uint32_t p);

/// "p rows cols" header, then row-major residues.
void write_matrix(std::ostream& out, const ModPMatrix& m);
ModPMatrix read_matrix(std::istream& in);

}  // namespace confset::modp

#include "confset/modp.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace confset::modp {

namespace {

Residue mod(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

Residue mul_mod(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>(std::uint64_t{a} * b % p);
}

Residue inv_mod(Residue a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void require_enumerable(std::uint32_t p) {
  require_prime(p);
  if (p < 3 || p > kMaxEnumeratedPrime)
    throw std::invalid_argument("p must be a prime in [3, " + std::to_string(kMaxEnumeratedPrime) + "]");
}

bool is_permutation_of_residues(const ModPVector& v) {
  std::vector<bool> seen(v.p, false);
  if (v.size() != v.p) return false;
  for (Residue r : v.entries) {
    if (seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModPVector::ModPVector(std::uint32_t prime, std::span<const std::int64_t> values) : p(prime) {
  require_prime(prime);
  entries.reserve(values.size());
  for (auto v : values) entries.push_back(mod(v, prime));
}

ModPVector::ModPVector(std::uint32_t prime, std::vector<Residue> residues)
    : p(prime), entries(std::move(residues)) {
  require_prime(prime);
  for (auto& r : entries) r %= prime;
}

bool ModPVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](Residue r) { return r == 0; });
}

std::string ModPVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

ModPVector operator+(const ModPVector& a, const ModPVector& b) {
  if (a.p != b.p || a.size() != b.size()) throw std::invalid_argument("vector shape mismatch");
  ModPVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.entries[i] = (a.entries[i] + b.entries[i]) % a.p;
  return out;
}

ModPVector scale(const ModPVector& v, Residue lambda) {
  ModPVector out = v;
  for (auto& r : out.entries) r = mul_mod(r, lambda % v.p, v.p);
  return out;
}

// ---------------------------------------------------------------------------

ModPMatrix::ModPMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_prime(p);
}

ModPMatrix ModPMatrix::from_rows(std::uint32_t p, std::span<const ModPVector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ModPMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols || rows[r].p != p) throw std::invalid_argument("ragged rows");
    std::copy(rows[r].entries.begin(), rows[r].entries.end(), m.data_.begin() + r * cols);
  }
  return m;
}

ModPMatrix ModPMatrix::from_columns(std::uint32_t p, std::span<const ModPVector> columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  ModPMatrix m(p, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows || columns[c].p != p) throw std::invalid_argument("ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m.data_[r * m.cols_ + c] = columns[c].entries[r];
  }
  return m;
}

void ModPMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  data_.at(r * cols_ + c) = mod(value, p_);
}

ModPVector ModPMatrix::multiply(const ModPVector& x) const {
  if (x.size() != cols_ || x.p != p_) throw std::invalid_argument("dimension mismatch");
  std::vector<Residue> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{at(r, c)} * x.entries[c]) % p_;
    out[r] = static_cast<Residue>(acc);
  }
  return ModPVector(p_, std::move(out));
}

// ---------------------------------------------------------------------------

RowSpace::RowSpace(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) { require_prime(p); }

std::vector<Residue> RowSpace::reduce(std::span<const Residue> v) const {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::vector<Residue> w(v.begin(), v.end());
  for (auto& r : w) r %= p_;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Residue f = w[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c)
      w[c] = static_cast<Residue>((w[c] + std::uint64_t{p_ - f} * basis_[i][c]) % p_);
  }
  return w;
}

bool RowSpace::insert(std::span<const Residue> v) {
  auto w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](Residue r) { return r != 0; });
  if (it == w.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - w.begin());
  const Residue scale_by = inv_mod(*it, p_);
  for (auto& r : w) r = mul_mod(r, scale_by, p_);
  // Keep the basis fully reduced: clear the new pivot column elsewhere.
  for (auto& row : basis_) {
    const Residue f = row[pivot];
    if (f == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c)
      row[c] = static_cast<Residue>((row[c] + std::uint64_t{p_ - f} * w[c]) % p_);
  }
  basis_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpace::contains(std::span<const Residue> v) const {
  auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Residue r) { return r == 0; });
}

std::size_t rank(const ModPMatrix& m) {
  RowSpace space(m.prime(), m.cols());
  for (std::size_t r = 0; r < m.rows() && space.dimension() < m.cols(); ++r) space.insert(m.row(r));
  return space.dimension();
}

std::vector<ModPVector> kernel_basis(const ModPMatrix& m) {
  const std::uint32_t p = m.prime();
  const std::size_t cols = m.cols();
  // Reduce rows to RREF in place.
  std::vector<std::vector<Residue>> a;
  for (std::size_t r = 0; r < m.rows(); ++r) a.emplace_back(m.row(r).begin(), m.row(r).end());
  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < a.size(); ++c) {
    std::size_t pr = lead;
    while (pr < a.size() && a[pr][c] == 0) ++pr;
    if (pr == a.size()) continue;
    std::swap(a[lead], a[pr]);
    const Residue s = inv_mod(a[lead][c], p);
    for (auto& v : a[lead]) v = mul_mod(v, s, p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == lead || a[r][c] == 0) continue;
      const Residue f = a[r][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[r][j] = static_cast<Residue>((a[r][j] + std::uint64_t{p - f} * a[lead][j]) % p);
    }
    pivot_cols.push_back(c);
    ++lead;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<ModPVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = (p - a[i][free]) % p;
    basis.emplace_back(p, std::move(x));
  }
  return basis;
}

std::optional<ModPVector> solve_homogeneous(const ModPMatrix& m) {
  auto basis = kernel_basis(m);
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

RowSpace config_row_space(std::uint32_t p) {
  require_enumerable(p);
  RowSpace space(p, p);
  std::vector<Residue> perm(p);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    space.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return space;
}

std::size_t config_group_dim(std::uint32_t p) { return config_row_space(p).dimension(); }

bool norm_kernel_membership(const ModPVector& v) {
  std::uint64_t sum = 0;
  for (auto r : v.entries) sum += r;
  return sum % v.p == 0;
}

ModPVector norm_kernel_embedding(const ModPVector& v) {
  std::uint64_t sum = 0;
  for (auto r : v.entries) sum += r;
  std::vector<Residue> out;
  out.reserve(v.size() + 1);
  out.push_back(static_cast<Residue>((v.p - sum % v.p) % v.p));
  out.insert(out.end(), v.entries.begin(), v.entries.end());
  return ModPVector(v.p, std::move(out));
}

BasisReport claimed_basis(std::uint32_t p) {
  require_enumerable(p);
  const RowSpace span = config_row_space(p);
  const std::int64_t P = p;

  BasisReport report;
  report.p = p;
  report.span_dimension = span.dimension();
  RowSpace family(p, p);

  for (std::int64_t i = 1; i <= P - 1; ++i) {
    BasisCandidate cand;
    cand.index = static_cast<std::size_t>(i);
    std::vector<std::int64_t> v;
    if (i == 1) {
      cand.branch = "i=1";
      v = {1, 0};
      for (std::int64_t j = 2; j <= P - 1; ++j) v.push_back(j);
    } else if (i == 2) {
      cand.branch = "i=2";
      for (std::int64_t j = 0; j <= P - 1; ++j) v.push_back(j);
    } else if (i <= P - 2) {
      cand.branch = "3<=i<=p-2";
      // tail 1, i, i+3, i+5, ..., 2p-i-1 after leading zeros
      std::vector<std::int64_t> tail = {1, i};
      for (std::int64_t t = i + 3; t <= 2 * P - i - 1; t += 2) tail.push_back(t);
      if (static_cast<std::int64_t>(tail.size()) <= P)
        v.assign(static_cast<std::size_t>(P - static_cast<std::int64_t>(tail.size())), 0);
      v.insert(v.end(), tail.begin(), tail.end());
    } else {
      cand.branch = "i=p-1";
      v.assign(static_cast<std::size_t>(P - 2), 0);
      v.push_back(1);
      v.push_back(P - 1);
    }
    cand.vector = ModPVector(p, v);
    cand.length_ok = cand.vector.size() == p;
    if (cand.length_ok) {
      cand.in_span = span.contains(cand.vector.entries);
      family.insert(cand.vector.entries);
    }

    if (cand.branch == "3<=i<=p-2") {
      cand.has_decomposition = true;
      // (1,2,...,i-1,0,i,i+1,...,p-1)
      std::vector<std::int64_t> first, second;
      for (std::int64_t j = 1; j <= i - 1; ++j) first.push_back(j);
      first.push_back(0);
      for (std::int64_t j = i; j <= P - 1; ++j) first.push_back(j);
      // (p-1,p-2,...,p-i+1,1,0,2,...,p-i)
      for (std::int64_t j = P - 1; j >= P - i + 1; --j) second.push_back(j);
      second.push_back(1);
      second.push_back(0);
      for (std::int64_t j = 2; j <= P - i; ++j) second.push_back(j);
      cand.first_summand = ModPVector(p, first);
      cand.second_summand = ModPVector(p, second);
      cand.first_in_config = is_permutation_of_residues(cand.first_summand);
      cand.second_in_config = is_permutation_of_residues(cand.second_summand);
      cand.decomposition_holds = cand.length_ok && cand.first_summand.size() == p &&
                                 cand.second_summand.size() == p &&
                                 cand.first_summand + cand.second_summand == cand.vector;
    }
    report.candidates.push_back(std::move(cand));
  }
  report.family_rank = family.dimension();
  const bool all_lengths = std::all_of(report.candidates.begin(), report.candidates.end(),
                                       [](const BasisCandidate& c) { return c.length_ok; });
  report.independent = all_lengths && report.family_rank == report.candidates.size();
  const bool all_in_span = std::all_of(report.candidates.begin(), report.candidates.end(),
                                       [](const BasisCandidate& c) { return c.in_span; });
  report.is_basis = report.independent && all_in_span &&
                    report.candidates.size() == report.span_dimension;
  return report;
}

void write_matrix(std::ostream& out, const ModPMatrix& m) {
  out << m.prime() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c);
    out << '\n';
  }
}

ModPMatrix read_matrix(std::istream& in) {
  std::uint32_t p = 0;
  std::size_t rows = 0, cols = 0;
  if (!(in >> p >> rows >> cols)) throw std::runtime_error("matrix header must be 'p rows cols'");
  ModPMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::int64_t v = 0;
      if (!(in >> v)) throw std::runtime_error("matrix body truncated");
      m.set(r, c, v);
    }
  return m;
}

}  // namespace confset::modp

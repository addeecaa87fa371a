#include "confset/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>

#include "confset/errors.hpp"

namespace confset {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap,
                          const char* what) {
  if (b != 0 && a > cap / b)
    throw CapExceeded(std::string(what) + " order exceeds cap of " + std::to_string(cap));
  return a * b;
}

std::uint64_t factorial_capped(std::uint32_t n, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f = checked_mul(f, i, cap, "symmetric group");
  return f;
}

bool starts_atom(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return false;
  if (s.substr(pos, 6) == "table:") return true;
  char c = s[pos];
  return (c == 'Z' || c == 'D' || c == 'S') && pos + 1 < s.size() &&
         std::isdigit(static_cast<unsigned char>(s[pos + 1]));
}

}  // namespace

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

std::uint64_t GroupSpec::structural_order() const {
  std::uint64_t order = 1;
  for (const auto& a : atoms) order *= std::max<std::uint64_t>(a.order, 1);
  return order;
}

GroupSpec parse_group_spec(std::string_view text, std::uint64_t order_cap) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view s = text.substr(0, end);

  GroupSpec spec;
  spec.text = std::string(text.substr(begin, end - begin));
  std::size_t pos = begin;
  if (pos == end) throw ParseError("empty group specification", pos);

  std::uint64_t order = 1;
  for (;;) {
    AtomSpec atom;
    if (s.substr(pos, 6) == "table:") {
      pos += 6;
      std::size_t stop = pos;
      while (stop < s.size() && !(s[stop] == 'x' && starts_atom(s, stop + 1))) ++stop;
      if (stop == pos) throw ParseError("empty table path", pos);
      atom.kind = AtomKind::Table;
      atom.path = std::string(s.substr(pos, stop - pos));
      atom.order = 0;
      pos = stop;
    } else {
      if (pos >= s.size()) throw ParseError("expected atom", pos);
      switch (s[pos]) {
        case 'Z': atom.kind = AtomKind::Cyclic; break;
        case 'D': atom.kind = AtomKind::Dihedral; break;
        case 'S': atom.kind = AtomKind::Symmetric; break;
        default: throw ParseError(std::string("unexpected character '") + s[pos] + "'", pos);
      }
      std::size_t num_pos = ++pos;
      std::uint32_t n = 0;
      auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), n);
      if (ec == std::errc::result_out_of_range)
        throw ParseError("atom parameter too large", num_pos);
      if (ec != std::errc{}) throw ParseError("expected integer parameter", num_pos);
      pos = static_cast<std::size_t>(ptr - s.data());
      atom.param = n;
      switch (atom.kind) {
        case AtomKind::Cyclic:
          if (n < 1) throw ParseError("cyclic order must be >= 1", num_pos);
          atom.order = n;
          break;
        case AtomKind::Dihedral:
          if (n < 3) throw ParseError("dihedral parameter must be >= 3", num_pos);
          atom.order = checked_mul(2, n, order_cap, "dihedral group");
          break;
        case AtomKind::Symmetric:
          if (n < 1) throw ParseError("symmetric degree must be >= 1", num_pos);
          atom.order = factorial_capped(n, order_cap);
          break;
        case AtomKind::Table: break;
      }
      if (atom.order > order_cap)
        throw CapExceeded("atom order exceeds cap of " + std::to_string(order_cap));
      order = checked_mul(order, atom.order, order_cap, "group");
    }
    spec.atoms.push_back(std::move(atom));
    if (pos == s.size()) break;
    if (s[pos] != 'x') throw ParseError("expected 'x' between atoms", pos);
    ++pos;
    if (pos == s.size()) throw ParseError("expected atom after 'x'", pos);
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

std::uint64_t rank_permutation(std::span<const std::uint32_t> perm) {
  const std::size_t n = perm.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

std::vector<std::uint32_t> unrank_permutation(std::uint64_t rank, std::uint32_t n) {
  std::vector<std::uint32_t> code(n);
  for (std::uint32_t i = n; i-- > 0;) {
    std::uint64_t radix = n - i;
    code[i] = static_cast<std::uint32_t>(rank % radix);
    rank /= radix;
  }
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  std::vector<std::uint32_t> perm(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    perm[i] = pool[code[i]];
    pool.erase(pool.begin() + code[i]);
  }
  return perm;
}

// ---------------------------------------------------------------------------
// Group
// ---------------------------------------------------------------------------

ElemId Group::Factor::mul(ElemId a, ElemId b) const {
  switch (kind) {
    case AtomKind::Cyclic:
      return (a + b) % n;
    case AtomKind::Dihedral: {
      const bool ra = a >= n, rb = b >= n;
      const ElemId i = a % n, j = b % n;
      if (!ra && !rb) return (i + j) % n;
      if (!ra && rb) return n + (i + j) % n;
      if (ra && !rb) return n + (i + n - j) % n;
      return (i + n - j) % n;
    }
    case AtomKind::Symmetric: {
      auto pa = unrank_permutation(a, n);
      auto pb = unrank_permutation(b, n);
      std::vector<std::uint32_t> pc(n);
      for (std::uint32_t i = 0; i < n; ++i) pc[i] = pa[pb[i]];
      return rank_permutation(pc);
    }
    case AtomKind::Table:
      return table->mul[a * table->n + b];
  }
  return 0;
}

ElemId Group::Factor::inv(ElemId a) const {
  switch (kind) {
    case AtomKind::Cyclic:
      return (n - a) % n;
    case AtomKind::Dihedral:
      return a >= n ? a : (n - a) % n;
    case AtomKind::Symmetric: {
      auto pa = unrank_permutation(a, n);
      std::vector<std::uint32_t> pi(n);
      for (std::uint32_t i = 0; i < n; ++i) pi[pa[i]] = i;
      return rank_permutation(pi);
    }
    case AtomKind::Table:
      return table->inv[a];
  }
  return 0;
}

Group::Group(std::vector<Factor> factors, std::string name, bool abelian,
             const GroupOptions& options)
    : factors_(std::move(factors)), abelian_(abelian), name_(std::move(name)) {
  order_ = 1;
  for (const auto& f : factors_) order_ = checked_mul(order_, f.order, options.order_cap, "group");

  const std::uint64_t limit = std::min(options.table_cache_limit, kMaxCachedTableOrder);
  if (order_ <= limit) {
    if (factors_.size() == 1 && factors_[0].kind == AtomKind::Table) {
      table_ = factors_[0].table;
    } else {
      auto t = std::make_shared<MulTable>();
      t->n = static_cast<std::uint32_t>(order_);
      t->mul.resize(order_ * order_);
      t->inv.resize(order_);
      for (ElemId a = 0; a < order_; ++a) {
        t->inv[a] = static_cast<std::uint32_t>(inv_structural(a));
        for (ElemId b = 0; b < order_; ++b)
          t->mul[a * order_ + b] = static_cast<std::uint32_t>(mul_structural(a, b));
      }
      table_ = std::move(t);
    }
    auto orders = std::make_shared<std::vector<std::uint32_t>>(order_);
    for (ElemId a = 0; a < order_; ++a) {
      std::uint32_t m = 1;
      for (ElemId x = a; x != 0; x = mul(x, a)) ++m;
      (*orders)[a] = m;
    }
    orders_ = std::move(orders);
  }
}

ElemId Group::mul_structural(ElemId a, ElemId b) const {
  if (factors_.size() == 1) return factors_[0].mul(a, b);
  ElemId result = 0, place = 1;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    const std::uint64_t n = it->order;
    result += it->mul(a % n, b % n) * place;
    a /= n;
    b /= n;
    place *= n;
  }
  return result;
}

ElemId Group::inv_structural(ElemId a) const {
  if (factors_.size() == 1) return factors_[0].inv(a);
  ElemId result = 0, place = 1;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    const std::uint64_t n = it->order;
    result += it->inv(a % n) * place;
    a /= n;
    place *= n;
  }
  return result;
}

ElemId Group::mul(ElemId a, ElemId b) const {
  if (table_) return table_->mul[a * order_ + b];
  return mul_structural(a, b);
}

ElemId Group::inv(ElemId a) const {
  if (table_) return table_->inv[a];
  return inv_structural(a);
}

ElemId Group::pow(ElemId a, std::uint64_t e) const {
  ElemId result = 0;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t Group::element_order(ElemId a) const {
  if (a >= order_) throw std::out_of_range("element id out of range");
  if (orders_) return (*orders_)[a];
  std::uint64_t m = 1;
  for (ElemId x = a; x != 0; x = mul(x, a)) ++m;
  return m;
}

Group Group::from_table(MulTable table, std::string name, const GroupOptions& options) {
  const std::uint64_t n = table.n;
  if (n == 0) throw NotAGroup("table has no elements");
  if (n > options.order_cap) throw CapExceeded("table order exceeds cap");
  if (table.mul.size() != n * n) throw NotAGroup("table is not n x n");
  for (auto v : table.mul)
    if (v >= n) throw NotAGroup("table entry out of range");
  auto at = [&](std::uint64_t a, std::uint64_t b) { return table.mul[a * n + b]; };
  for (std::uint64_t x = 0; x < n; ++x)
    if (at(0, x) != x || at(x, 0) != x) throw NotAGroup("element 0 is not the identity");
  table.inv.assign(n, 0);
  for (std::uint64_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::uint64_t y = 0; y < n && !found; ++y) {
      if (at(x, y) == 0) {
        if (at(y, x) != 0) throw NotAGroup("left and right inverses differ");
        table.inv[x] = static_cast<std::uint32_t>(y);
        found = true;
      }
    }
    if (!found) throw NotAGroup("element " + std::to_string(x) + " has no inverse");
  }
  auto assoc = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return at(at(a, b), c) == at(a, at(b, c));
  };
  if (n <= 128) {
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        for (std::uint64_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw NotAGroup("table is not associative");
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw NotAGroup("table is not associative");
  }
  bool abelian = true;
  for (std::uint64_t a = 0; a < n && abelian; ++a)
    for (std::uint64_t b = a + 1; b < n && abelian; ++b)
      abelian = at(a, b) == at(b, a);

  Factor f{AtomKind::Table, static_cast<std::uint32_t>(n), n,
           std::make_shared<const MulTable>(std::move(table))};
  return Group({std::move(f)}, std::move(name), abelian, options);
}

MulTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read table file '" + path + "'");
  std::uint64_t n = 0;
  if (!(in >> n) || n == 0 || n > UINT32_MAX)
    throw NotAGroup("table file '" + path + "': bad element count");
  MulTable t;
  t.n = static_cast<std::uint32_t>(n);
  t.mul.resize(n * n);
  for (auto& v : t.mul) {
    std::uint64_t x = 0;
    if (!(in >> x)) throw NotAGroup("table file '" + path + "': truncated table");
    if (x >= n) throw NotAGroup("table file '" + path + "': entry out of range");
    v = static_cast<std::uint32_t>(x);
  }
  std::string extra;
  if (in >> extra) throw NotAGroup("table file '" + path + "': trailing data");
  return t;
}

Group build_group(const GroupSpec& spec, const GroupOptions& options) {
  std::vector<Group::Factor> factors;
  bool abelian = true;
  for (const auto& atom : spec.atoms) {
    switch (atom.kind) {
      case AtomKind::Cyclic:
        factors.push_back({atom.kind, atom.param, atom.order, nullptr});
        break;
      case AtomKind::Dihedral:
        factors.push_back({atom.kind, atom.param, atom.order, nullptr});
        abelian = false;
        break;
      case AtomKind::Symmetric:
        factors.push_back({atom.kind, atom.param, atom.order, nullptr});
        abelian = abelian && atom.param <= 2;
        break;
      case AtomKind::Table: {
        Group g = Group::from_table(read_table_file(atom.path), "table:" + atom.path, options);
        factors.push_back(g.factors_.front());
        abelian = abelian && g.is_abelian();
        break;
      }
    }
  }
  return Group(std::move(factors), spec.text, abelian, options);
}

Group make_group(std::string_view text, const GroupOptions& options) {
  return build_group(parse_group_spec(text, options.order_cap), options);
}

Group direct_power(const Group& base, std::size_t k, const GroupOptions& options) {
  if (k == 0) throw std::invalid_argument("arity must be >= 1");
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < k; ++i) order = checked_mul(order, base.order(), options.order_cap, "direct power");

  std::vector<Group::Factor> factors;
  if (base.table_) {
    Group::Factor f{AtomKind::Table, static_cast<std::uint32_t>(base.order_), base.order_, base.table_};
    factors.assign(k, f);
  } else {
    for (std::size_t i = 0; i < k; ++i)
      factors.insert(factors.end(), base.factors_.begin(), base.factors_.end());
  }
  std::string name = "(" + base.name_ + ")^" + std::to_string(k);
  return Group(std::move(factors), std::move(name), base.abelian_, options);
}

// ---------------------------------------------------------------------------
// Checks and helpers
// ---------------------------------------------------------------------------

bool verify_group_axioms(const Group& g, std::uint64_t full_assoc_limit,
                         std::size_t samples, std::uint64_t seed) {
  const std::uint64_t n = g.order();
  const std::uint64_t scan = std::min<std::uint64_t>(n, 100000);
  for (ElemId x = 0; x < scan; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) return false;
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0) return false;
  }
  if (n <= full_assoc_limit) {
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b)
        for (ElemId c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElemId> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    ElemId a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

bool commutes_exhaustively(const Group& g) {
  for (ElemId a = 0; a < g.order(); ++a)
    for (ElemId b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

Tuple tuple_mul(const Group& base, const Tuple& a, const Tuple& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("tuple arity mismatch");
  std::vector<ElemId> out(a.arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = base.mul(a[i], b[i]);
  return Tuple(std::move(out));
}

Tuple tuple_inv(const Group& base, const Tuple& a) {
  std::vector<ElemId> out(a.arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = base.inv(a[i]);
  return Tuple(std::move(out));
}

bool is_homomorphism(const Group& from, const Group& to, std::span<const ElemId> f,
                     MapKind kind) {
  if (f.size() != from.order()) return false;
  if (kind == MapKind::Isomorphism && from.order() != to.order()) return false;
  std::vector<ElemId> image(f.begin(), f.end());
  for (ElemId y : image)
    if (y >= to.order()) return false;
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;

  auto ok = [&](ElemId a, ElemId b) { return f[from.mul(a, b)] == to.mul(f[a], f[b]); };
  if (from.order() <= 256) {
    for (ElemId a = 0; a < from.order(); ++a)
      for (ElemId b = 0; b < from.order(); ++b)
        if (!ok(a, b)) return false;
    return true;
  }
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<ElemId> pick(0, from.order() - 1);
  for (int i = 0; i < 10000; ++i)
    if (!ok(pick(rng), pick(rng))) return false;
  return true;
}

std::vector<Tuple> hom_power_transport(const Group& from, const Group& to,
                                       std::span<const ElemId> f,
                                       std::span<const Tuple> xs, MapKind kind) {
  if (!is_homomorphism(from, to, f, kind))
    throw std::invalid_argument("map fails the homomorphism check");
  std::vector<Tuple> out;
  out.reserve(xs.size());
  for (const auto& t : xs) {
    std::vector<ElemId> e(t.arity());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = f[t[i]];
    out.emplace_back(std::move(e));
  }
  return out;
}

}  // namespace confset

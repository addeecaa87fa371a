#include "confset/config_set.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>

#include "confset/errors.hpp"

namespace confset {

std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (n < k) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > UINT64_MAX / (n - i)) throw CapExceeded("falling factorial overflows 64 bits");
    r *= n - i;
  }
  return r;
}

ConfigStream::ConfigStream(std::uint64_t n, std::size_t k, ElemId first)
    : n_(n), k_(k), first_(first), cur_(k), used_(n, false) {
  if (k == 0) throw std::invalid_argument("arity must be >= 1");
}

// Fills positions [pos, k) with the smallest unused ids.
bool ConfigStream::fill_from(std::size_t pos) {
  ElemId v = first_;
  for (std::size_t i = pos; i < k_; ++i) {
    while (v < n_ && used_[v]) ++v;
    if (v >= n_) return false;
    cur_[i] = v;
    used_[v] = true;
  }
  return true;
}

std::optional<Tuple> ConfigStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (n_ < first_ || n_ - first_ < k_ || !fill_from(0)) {
      done_ = true;
      return std::nullopt;
    }
    return Tuple(cur_);
  }
  for (std::size_t pos = k_; pos-- > 0;) {
    used_[cur_[pos]] = false;
    ElemId v = cur_[pos] + 1;
    while (v < n_ && used_[v]) ++v;
    if (v < n_) {
      cur_[pos] = v;
      used_[v] = true;
      // Enough ids remain by counting, so the refill cannot fail.
      fill_from(pos + 1);
      return Tuple(cur_);
    }
  }
  done_ = true;
  return std::nullopt;
}

ConfigStream config_iter(const Group& g, std::size_t k) { return ConfigStream(g.order(), k, 0); }

ConfigStream punctured_config_iter(const Group& g, std::size_t k) {
  return ConfigStream(g.order(), k, 1);
}

namespace {
std::vector<Tuple> drain(ConfigStream s) {
  std::vector<Tuple> out;
  while (auto t = s.next()) out.push_back(std::move(*t));
  return out;
}
}  // namespace

std::vector<Tuple> config_set(const Group& g, std::size_t k) { return drain(config_iter(g, k)); }

std::vector<Tuple> punctured_config_set(const Group& g, std::size_t k) {
  return drain(punctured_config_iter(g, k));
}

bool config_contains(const Group& g, const Tuple& t) {
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (t[i] >= g.order()) throw std::out_of_range("tuple entry out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (t[i] == t[j]) return false;
  }
  return true;
}

ElemId norm(const Group& g, const Tuple& t) {
  if (t.arity() == 0) throw std::invalid_argument("norm of an empty tuple");
  ElemId acc = t[0];
  for (std::size_t i = 1; i < t.arity(); ++i) acc = g.mul(acc, t[i]);
  return acc;
}

PairCheck norm_is_homomorphism(const Group& g, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("norm homomorphism check needs k >= 2");
  TupleCodec codec(g.order(), k);
  PairCheck result;
  auto check = [&](ElemId a, ElemId b) {
    ++result.pairs_checked;
    Tuple x = codec.unpack(a), y = codec.unpack(b);
    if (norm(g, tuple_mul(g, x, y)) != g.mul(norm(g, x), norm(g, y))) {
      result.holds = false;
      result.witness = {std::move(x), std::move(y)};
      return false;
    }
    return true;
  };
  const std::uint64_t n = codec.code_count();
  if (n <= 10000) {
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b)
        if (!check(a, b)) return result;
    return result;
  }
  result.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElemId> pick(0, n - 1);
  for (int i = 0; i < 100000; ++i)
    if (!check(pick(rng), pick(rng))) return result;
  return result;
}

Tuple project(const Tuple& t) {
  if (t.arity() < 2) throw std::invalid_argument("projection needs arity >= 2");
  auto e = t.entries();
  return Tuple(std::vector<ElemId>(e.begin(), e.end() - 1));
}

bool has_configuration_property(const Group& g, std::span<const Tuple> xs) {
  if (xs.empty()) return false;
  const std::size_t arity = xs.front().arity();
  if (arity < 2) throw std::invalid_argument("configuration property needs arity >= 2");
  bool meets = false;
  for (const auto& x : xs) {
    if (x.arity() != arity) throw std::invalid_argument("mixed tuple arities");
    if (config_contains(g, project(x))) {
      meets = true;
      if (!config_contains(g, x)) return false;
    }
  }
  return meets;
}

bool augmented_config_property(const Group& g, std::size_t k, const Tuple& alpha) {
  if (k < 2 || alpha.arity() != k) throw std::invalid_argument("alpha must have arity k >= 2");
  if (g.order() < k + 1) throw std::invalid_argument("requires |G| >= k+1");
  if (config_contains(g, alpha)) throw std::invalid_argument("alpha must lie outside F(G,k)");
  auto xs = config_set(g, k);
  xs.push_back(alpha);
  const bool property = has_configuration_property(g, xs);
  const bool predicted = !config_contains(g, project(alpha));
  if (property != predicted)
    throw std::logic_error("C(alpha) criterion disagrees for alpha = " + alpha.to_string());
  return property;
}

std::vector<Tuple> standard_generators(const Group& g, std::size_t k) {
  if (k < 2) throw std::invalid_argument("standard generators need k >= 2");
  std::vector<Tuple> out;
  for (std::size_t pos = 0; pos < k; ++pos) {
    for (ElemId x = 0; x < g.order(); ++x) {
      std::vector<ElemId> e(k, g.identity());
      e[pos] = x;
      out.emplace_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void write_tuples(std::ostream& out, std::span<const Tuple> xs) {
  for (const auto& t : xs) out << t.to_string() << '\n';
}

}  // namespace confset

#include "confset/closure.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "confset/config_set.hpp"
#include "confset/errors.hpp"

namespace confset {

SubgroupCarrier SubgroupCarrier::from_members(std::uint64_t ambient_order,
                                              std::span<const ElemId> members,
                                              std::vector<ElemId> generators) {
  SubgroupCarrier s;
  s.ambient_order_ = ambient_order;
  s.bits_.assign(ambient_order, false);
  for (ElemId x : members) {
    if (x >= ambient_order) throw std::out_of_range("member outside ambient group");
    if (!s.bits_[x]) {
      s.bits_[x] = true;
      ++s.size_;
    }
  }
  s.generators_ = std::move(generators);
  return s;
}

std::uint64_t SubgroupCarrier::index() const {
  if (size_ == 0 || ambient_order_ % size_ != 0)
    throw std::logic_error("subgroup size does not divide the ambient order");
  return ambient_order_ / size_;
}

std::vector<ElemId> SubgroupCarrier::members() const {
  std::vector<ElemId> out;
  out.reserve(size_);
  for (ElemId x = 0; x < ambient_order_; ++x)
    if (bits_[x]) out.push_back(x);
  return out;
}

void SubgroupCarrier::write_members(std::ostream& out) const {
  for (ElemId x = 0; x < ambient_order_; ++x)
    if (bits_[x]) out << x << '\n';
}

SubgroupCarrier closure(const Group& ambient, std::span<const ElemId> generators,
                        std::uint64_t cap) {
  const std::uint64_t n = ambient.order();
  if (n > cap)
    throw CapExceeded("ambient order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

  std::vector<ElemId> gens;
  gens.reserve(2 * generators.size());
  for (ElemId x : generators) {
    if (x >= n) throw std::out_of_range("generator outside ambient group");
    if (x == ambient.identity()) continue;
    gens.push_back(x);
    gens.push_back(ambient.inv(x));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  SubgroupCarrier s;
  s.ambient_order_ = n;
  s.bits_.assign(n, false);
  s.generators_.assign(generators.begin(), generators.end());

  std::vector<ElemId> queue;
  queue.push_back(ambient.identity());
  s.bits_[ambient.identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElemId x = queue[head];
    for (ElemId g : gens) {
      const ElemId y = ambient.mul(x, g);
      if (!s.bits_[y]) {
        s.bits_[y] = true;
        queue.push_back(y);
      }
    }
  }
  s.size_ = queue.size();
  return s;
}

bool is_generating(const Group& ambient, std::span<const ElemId> generators, std::uint64_t cap) {
  return closure(ambient, generators, cap).size() == ambient.order();
}

std::vector<ElemId> pack_all(const TupleCodec& codec, std::span<const Tuple> xs) {
  std::vector<ElemId> out;
  out.reserve(xs.size());
  for (const auto& t : xs) out.push_back(codec.pack(t));
  return out;
}

bool verify_subgroup(const Group& ambient, const SubgroupCarrier& sub, std::size_t samples,
                     std::uint64_t seed) {
  if (sub.ambient_order() != ambient.order()) return false;
  if (!sub.contains(ambient.identity())) return false;
  if (ambient.order() % sub.size() != 0) return false;
  const auto members = sub.members();
  for (ElemId x : members)
    if (!sub.contains(ambient.inv(x))) return false;
  if (members.size() <= 1000) {
    for (ElemId a : members)
      for (ElemId b : members)
        if (!sub.contains(ambient.mul(a, b))) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (std::size_t i = 0; i < samples; ++i)
    if (!sub.contains(ambient.mul(members[pick(rng)], members[pick(rng)]))) return false;
  return true;
}

std::pair<Tuple, Tuple> factor_diagonal_k2(const Group& g, ElemId x) {
  if (x >= g.order()) throw std::out_of_range("element id out of range");
  if (x == g.identity()) throw std::invalid_argument("diagonal factorization needs x != 1");
  return {Tuple{g.identity(), x}, Tuple{x, g.identity()}};
}

std::pair<Tuple, Tuple> factor_standard_generator(const Group& g, std::size_t k,
                                                  std::size_t position, ElemId x) {
  if (k < 3) throw std::invalid_argument("needs k >= 3");
  if (g.order() < k + 1) throw std::invalid_argument("needs |G| >= k+1");
  if (position >= k) throw std::out_of_range("position out of range");
  if (x >= g.order()) throw std::out_of_range("element id out of range");
  if (x == g.identity()) throw std::invalid_argument("needs x != 1");

  std::vector<ElemId> fillers;
  for (ElemId h = 0; h < g.order() && fillers.size() < k - 1; ++h)
    if (h != g.identity() && h != x) fillers.push_back(h);
  if (fillers.size() != k - 1) throw std::logic_error("cannot choose filler elements");

  std::vector<ElemId> left(k), right(k);
  for (std::size_t i = 0, f = 0; i < k; ++i) {
    if (i == position) {
      left[i] = x;
      right[i] = g.identity();
    } else {
      left[i] = fillers[f];
      right[i] = g.inv(fillers[f]);
      ++f;
    }
  }
  std::pair<Tuple, Tuple> out{Tuple(std::move(left)), Tuple(std::move(right))};
  if (!config_contains(g, out.first) || !config_contains(g, out.second))
    throw std::logic_error("factorization left F(G,k)");
  return out;
}

NormObstruction abelian_norm_obstruction(const Group& g) {
  if (!g.is_abelian()) throw std::invalid_argument("norm obstruction needs an abelian group");
  if (g.order() < 3) throw std::invalid_argument("norm obstruction needs |G| >= 3");
  const std::size_t k = static_cast<std::size_t>(g.order());

  NormObstruction out;
  for (ElemId x = 0; x < g.order(); ++x) out.norm_value = g.mul(out.norm_value, x);
  const ElemId gen[] = {out.norm_value};
  out.norm_subgroup = closure(g, gen, g.order());

  bool found = false;
  for (ElemId x = 0; x < g.order() && !found; ++x) {
    if (!out.norm_subgroup.contains(x)) {
      out.escaping_element = x;
      found = true;
    }
  }
  if (!found) throw std::logic_error("norm subgroup is all of G");
  std::vector<ElemId> e(k, g.identity());
  e.back() = out.escaping_element;
  out.escaping_tuple = Tuple(std::move(e));

  // 9! is the largest factorial below 10^6.
  if (k <= 9) {
    auto stream = config_iter(g, k);
    while (auto t = stream.next())
      if (norm(g, *t) != out.norm_value) throw std::logic_error("configuration norms differ");
    out.norms_verified = true;
  }
  return out;
}

SubgroupCarrier diagonal_subgroup(const Group& g, std::size_t k, std::uint64_t cap) {
  TupleCodec codec(g.order(), k);
  if (codec.code_count() > cap) throw CapExceeded("direct power exceeds cap");
  std::vector<ElemId> members;
  members.reserve(g.order());
  for (ElemId x = 0; x < g.order(); ++x)
    members.push_back(codec.pack(std::vector<ElemId>(k, x)));
  return SubgroupCarrier::from_members(codec.code_count(), members);
}

}  // namespace confset

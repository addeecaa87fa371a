#include "confset/punctured.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "confset/config_set.hpp"

namespace confset {

namespace {

bool in_punctured(const Group& g, const Tuple& t) {
  return config_contains(g, t) &&
         std::none_of(t.begin(), t.end(), [&](ElemId x) { return x == g.identity(); });
}

// Packed code of phi(t) without materializing the image tuple.
ElemId phi_code(const Group& g, const Tuple& t) {
  const ElemId x0_inv = g.inv(t[0]);
  ElemId code = 0;
  for (std::size_t i = 1; i < t.arity(); ++i) code = code * g.order() + g.mul(t[i], x0_inv);
  return code;
}

}  // namespace

Tuple phi(const Group& g, const Tuple& t) {
  if (t.arity() < 2) throw std::invalid_argument("phi needs arity >= 2");
  const ElemId x0_inv = g.inv(t[0]);
  std::vector<ElemId> out(t.arity() - 1);
  for (std::size_t i = 1; i < t.arity(); ++i) out[i - 1] = g.mul(t[i], x0_inv);
  return Tuple(std::move(out));
}

ImageCheck phi_image_check(const Group& g, std::size_t k) {
  ImageCheck r;
  std::set<Tuple> image;
  auto domain = config_iter(g, k + 1);
  while (auto t = domain.next()) {
    ++r.domain_size;
    image.insert(phi(g, *t));
  }
  const auto target = punctured_config_set(g, k);
  r.image_size = image.size();
  r.target_size = target.size();
  // target is produced in lexicographic order, as is the std::set
  r.holds = std::equal(image.begin(), image.end(), target.begin(), target.end());
  return r;
}

BijectionCheck product_bijection_check(const Group& g, std::size_t k) {
  BijectionCheck r;
  auto forward = [&](const Tuple& t) {
    std::vector<ElemId> out(t.begin(), t.end());
    const ElemId g0_inv = g.inv(t[0]);
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = g.mul(t[i], g0_inv);
    return Tuple(std::move(out));
  };
  auto backward = [&](const Tuple& u) {
    std::vector<ElemId> out(u.begin(), u.end());
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = g.mul(u[i], u[0]);
    return Tuple(std::move(out));
  };
  auto rest = [](const Tuple& u) {
    return Tuple(std::vector<ElemId>(u.begin() + 1, u.end()));
  };

  r.forward_round_trip = true;
  auto domain = config_iter(g, k + 1);
  while (auto t = domain.next()) {
    ++r.domain_size;
    const Tuple u = forward(*t);
    if (!in_punctured(g, rest(u)) || backward(u) != *t) r.forward_round_trip = false;
  }

  r.backward_round_trip = true;
  const auto punctured = punctured_config_set(g, k);
  for (ElemId g0 = 0; g0 < g.order(); ++g0) {
    for (const auto& q : punctured) {
      ++r.product_size;
      std::vector<ElemId> e{g0};
      e.insert(e.end(), q.begin(), q.end());
      const Tuple u(std::move(e));
      const Tuple t = backward(u);
      if (!config_contains(g, t) || forward(t) != u) r.backward_round_trip = false;
    }
  }
  r.counting = falling_factorial(g.order(), k + 1) == g.order() * falling_factorial(g.order() - 1, k);
  r.holds = r.forward_round_trip && r.backward_round_trip && r.counting &&
            r.domain_size == r.product_size;
  return r;
}

FiberSet fiber(const Group& g, const Tuple& base) {
  if (base.arity() == 0 || !in_punctured(g, base))
    throw std::invalid_argument("fiber base must lie in F(G-{1},k)");
  FiberSet f;
  f.base = base;
  for (ElemId x = 0; x < g.order(); ++x) {
    std::vector<ElemId> e{x};
    for (ElemId p : base) e.push_back(g.mul(p, x));
    Tuple t(std::move(e));
    if (!config_contains(g, t)) throw std::logic_error("fiber member outside F(G,k+1)");
    if (phi(g, t) != base) throw std::logic_error("fiber member does not map to its base");
    f.members.push_back(std::move(t));
  }
  return f;
}

nlohmann::json QuotientAudit::to_json() const {
  return {{"group", group},
          {"k", k},
          {"base", base.to_string()},
          {"quotient_size", quotient_size},
          {"image_size", image_size},
          {"injective", injective},
          {"surjective", surjective},
          {"verdict", bijection() ? "bijection" : "not-bijection"}};
}

QuotientAudit literal_quotient_audit(const Group& g, std::size_t k, std::optional<Tuple> base) {
  if (!base) {
    auto first = punctured_config_iter(g, k).next();
    if (!first) throw std::invalid_argument("F(G-{1},k) is empty");
    base = std::move(*first);
  }
  QuotientAudit a;
  a.group = g.name();
  a.k = k;
  a.base = *base;

  const FiberSet collapsed = fiber(g, *base);
  const std::set<Tuple> in_k(collapsed.members.begin(), collapsed.members.end());

  // Class [K] first, then every remaining tuple as its own class.
  std::vector<Tuple> class_images{phi(g, collapsed.members.front())};
  for (const auto& m : collapsed.members)
    if (phi(g, m) != class_images.front()) throw std::logic_error("psi is not well defined on K");
  auto domain = config_iter(g, k + 1);
  while (auto t = domain.next())
    if (!in_k.count(*t)) class_images.push_back(phi(g, *t));

  a.quotient_size = class_images.size();
  const std::set<Tuple> image(class_images.begin(), class_images.end());
  a.image_size = image.size();
  a.injective = image.size() == class_images.size();
  const auto target = punctured_config_set(g, k);
  a.surjective = std::equal(image.begin(), image.end(), target.begin(), target.end());
  return a;
}

OrbitCheck orbit_quotient_check(const Group& g, std::size_t k) {
  OrbitCheck r;
  const TupleCodec codec(g.order(), k + 1);
  const auto domain = config_set(g, k + 1);
  std::set<ElemId> seen;
  std::set<ElemId> block_phis;
  r.uniform_block_size = true;
  r.phi_constant_on_blocks = true;
  r.phi_separates_blocks = true;
  for (const auto& t : domain) {
    if (seen.count(codec.pack(t))) continue;
    ++r.blocks;
    std::set<ElemId> orbit;
    const ElemId phi0 = phi_code(g, t);
    for (ElemId h = 0; h < g.order(); ++h) {
      std::vector<ElemId> e(t.arity());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.mul(t[i], h);
      const Tuple moved(std::move(e));
      orbit.insert(codec.pack(moved));
      if (phi_code(g, moved) != phi0) r.phi_constant_on_blocks = false;
    }
    if (orbit.size() != g.order()) r.uniform_block_size = false;
    if (!block_phis.insert(phi0).second) r.phi_separates_blocks = false;
    seen.insert(orbit.begin(), orbit.end());
  }
  r.expected_blocks = falling_factorial(g.order() - 1, k);
  r.holds = r.uniform_block_size && r.phi_constant_on_blocks && r.phi_separates_blocks &&
            r.blocks == r.expected_blocks && seen.size() == domain.size();
  return r;
}

PhiHomomorphismCheck phi_homomorphism_iff_abelian(const Group& g, std::size_t k,
                                                  std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  PhiHomomorphismCheck r;
  r.abelian = g.is_abelian();
  const TupleCodec codec(g.order(), k + 1);

  auto violates = [&](const Tuple& x, const Tuple& y) {
    ++r.pairs_checked;
    return phi(g, tuple_mul(g, x, y)) != tuple_mul(g, phi(g, x), phi(g, y));
  };
  auto record = [&](Tuple x, Tuple y) {
    r.is_homomorphism = false;
    if (!r.witness) r.witness = {std::move(x), std::move(y)};
  };

  // (x,1,...,1)(1,y,1,...,1) fails exactly when x^{-1} and y do not commute.
  for (ElemId x = 0; x < g.order() && !r.witness; ++x) {
    for (ElemId y = 0; y < g.order() && !r.witness; ++y) {
      std::vector<ElemId> a(k + 1, g.identity()), b(k + 1, g.identity());
      a[0] = x;
      b[1] = y;
      Tuple ta(std::move(a)), tb(std::move(b));
      if (violates(ta, tb)) record(std::move(ta), std::move(tb));
    }
  }

  const std::uint64_t n = codec.code_count();
  if (n <= 10000) {
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b) {
        Tuple x = codec.unpack(a), y = codec.unpack(b);
        if (violates(x, y)) {
          record(std::move(x), std::move(y));
          return r;
        }
      }
    return r;
  }
  r.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElemId> pick(0, n - 1);
  for (int i = 0; i < 100000; ++i) {
    Tuple x = codec.unpack(pick(rng)), y = codec.unpack(pick(rng));
    if (violates(x, y)) {
      record(std::move(x), std::move(y));
      return r;
    }
  }
  return r;
}

}  // namespace confset

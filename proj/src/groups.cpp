#include "gyro/groups.hpp"

#include <set>
#include <stdexcept>

#include "gyro/verify.hpp"

namespace gyro::groups {

FiniteGyrogroup cyclic(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGyrogroup::from_group_table(n, std::move(t));
}

FiniteGyrogroup dihedral(std::size_t k) {
  // r^i s^j · r^p s^q = r^(i + (-1)^j p) s^(j+q)
  const std::size_t n = 2 * k;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i = x % k, j = x / k, p = y % k, q = y / k;
      const std::size_t rot = j == 0 ? (i + p) % k : (i + k - p) % k;
      t[x * n + y] = static_cast<Element>(rot + k * ((j + q) % 2));
    }
  }
  return FiniteGyrogroup::from_group_table(n, std::move(t));
}

FiniteGyrogroup semidirect_cyclic(std::size_t a, std::size_t mult) {
  if ((mult * mult) % a != 1 % a)
    throw std::invalid_argument("semidirect_cyclic: multiplier must square to 1 mod a");
  const std::size_t n = 2 * a;
  std::vector<Element> t(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t x = u % a, j = u / a, y = v % a, q = v / a;
      const std::size_t twisted = j == 0 ? y : (mult * y) % a;
      t[u * n + v] = static_cast<Element>((x + twisted) % a + a * ((j + q) % 2));
    }
  }
  return FiniteGyrogroup::from_group_table(n, std::move(t));
}

FiniteGyrogroup direct_product(const FiniteGyrogroup& g, const FiniteGyrogroup& h) {
  if (g.perms().size() != 1 || !g.perms()[0].is_identity() || h.perms().size() != 1 ||
      !h.perms()[0].is_identity())
    throw std::invalid_argument("direct_product: factors must have trivial gyrations");
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Element>(
          g.op(static_cast<Element>(x / nh), static_cast<Element>(y / nh)) * nh +
          h.op(static_cast<Element>(x % nh), static_cast<Element>(y % nh)));
  return FiniteGyrogroup::from_group_table(n, std::move(t));
}

std::size_t element_order(const FiniteGyrogroup& g, Element x) {
  Element power = x;
  for (std::size_t k = 1; k <= g.order(); ++k) {
    if (power == 0) return k;
    power = g.op(x, power);
  }
  return 0;
}

GroupInvariants invariants(const FiniteGyrogroup& g) {
  const std::size_t n = g.order();
  const Element e = 0;
  if (!check_left_identity(g).passed || !check_right_identity(g).passed ||
      !check_right_inverses(g).passed)
    throw std::invalid_argument("invariants: table is not a loop with identity 0");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw std::invalid_argument("invariants: table is not associative");

  GroupInvariants inv;
  inv.order = n;
  inv.abelian = true;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (g.op(a, b) != g.op(b, a)) inv.abelian = false;

  for (Element x = 0; x < n; ++x) ++inv.element_orders[element_order(g, x)];

  for (Element z = 0; z < n; ++z) {
    bool central = true;
    for (Element x = 0; x < n && central; ++x) central = g.op(z, x) == g.op(x, z);
    if (central) ++inv.center_size;
  }

  const auto left_inv = left_inverses(g);
  std::set<Element> derived{e};
  std::vector<Element> frontier;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element comm = g.op(g.op(*left_inv[a], *left_inv[b]), g.op(a, b));
      if (derived.insert(comm).second) frontier.push_back(comm);
    }
  }
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    const std::vector<Element> snapshot(derived.begin(), derived.end());
    for (Element y : snapshot) {
      for (Element p : {g.op(x, y), g.op(y, x)})
        if (derived.insert(p).second) frontier.push_back(p);
    }
  }
  inv.derived_size = derived.size();
  return inv;
}

}  // namespace gyro::groups

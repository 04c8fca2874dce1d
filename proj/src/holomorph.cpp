#include "gyro/holomorph.hpp"

#include <algorithm>
#include <set>

namespace gyro {

std::vector<Permutation> gyroautomorphism_group(const FiniteGyrogroup& g) {
  const Permutation id = Permutation::identity(g.order());
  std::set<Permutation> group{id};
  std::vector<Permutation> generators(g.perms().begin(), g.perms().end());
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    const Permutation p = frontier.back();
    frontier.pop_back();
    for (const auto& s : generators) {
      Permutation q = s.compose(p);
      if (group.insert(q).second) frontier.push_back(std::move(q));
    }
  }
  std::vector<Permutation> out{id};
  for (const auto& p : group)
    if (!p.is_identity()) out.push_back(p);
  return out;
}

GyroholomorphGroup gyroholomorph(const FiniteGyrogroup& g) {
  GyroholomorphGroup h{gyroautomorphism_group(g), FiniteGyrogroup::from_group_table(1, {0}), {}};
  const auto& gamma = h.automorphisms;
  const std::size_t k = gamma.size();
  const std::size_t n = g.order() * k;

  auto index_of = [&](const Permutation& p) -> std::size_t {
    const auto it = std::find(gamma.begin(), gamma.end(), p);
    if (it == gamma.end())
      throw HolomorphError("gyroholomorph: composite automorphism escapes the gyration group", {});
    return static_cast<std::size_t>(it - gamma.begin());
  };

  std::vector<Element> cayley(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto [x, xi] = h.decode(u);
    for (std::size_t v = 0; v < n; ++v) {
      const auto [y, yi] = h.decode(v);
      const Element xy = gamma[xi](y);
      const Permutation auto_part = g.gyr(x, xy).compose(gamma[xi]).compose(gamma[yi]);
      cayley[u * n + v] = static_cast<Element>(h.encode(g.op(x, xy), index_of(auto_part)));
    }
  }
  h.table = FiniteGyrogroup::from_group_table(n, std::move(cayley));
  const auto& t = h.table;

  for (Element a = 0; a < n; ++a) {
    if (t.op(0, a) != a || t.op(a, 0) != a)
      throw HolomorphError("gyroholomorph: (0, I) is not an identity", {a});
    bool has_inverse = false;
    for (Element b = 0; b < n && !has_inverse; ++b) has_inverse = t.op(a, b) == 0 && t.op(b, a) == 0;
    if (!has_inverse) throw HolomorphError("gyroholomorph: element has no inverse", {a});
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (t.op(t.op(a, b), c) != t.op(a, t.op(b, c)))
          throw HolomorphError("gyroholomorph: product is not associative", {a, b, c});

  for (Element a = 0; a < n; ++a) ++h.element_order_multiset[groups::element_order(t, a)];
  return h;
}

std::vector<StructureCandidate> holomorph_candidates(std::size_t m) {
  std::vector<std::pair<std::string, std::size_t>> actions{{"dihedral", m - 1}};
  if (m >= 8) {
    actions.emplace_back("quasidihedral", m / 2 - 1);
    actions.emplace_back("modular", m / 2 + 1);
  }
  const auto z2 = groups::cyclic(2);
  std::vector<StructureCandidate> out;
  for (const auto& [label, mult] : actions) {
    const auto product = groups::direct_product(z2, groups::semidirect_cyclic(m, mult));
    out.push_back({"Z2 x (Z" + std::to_string(m) + " x|_" + std::to_string(mult) + " Z2) [" +
                       label + "]",
                   groups::invariants(product)});
  }
  return out;
}

StructureMatch identify_structure(const groups::GroupInvariants& inv,
                                  const std::vector<StructureCandidate>& candidates) {
  StructureMatch result{inv, {}};
  for (const auto& c : candidates)
    if (c.invariants == inv) result.matches.push_back(c.name);
  return result;
}

}  // namespace gyro

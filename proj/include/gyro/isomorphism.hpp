#pragma once

#include <optional>
#include <vector>

#include "gyro/gyrogroup.hpp"

namespace gyro {

/// Per-element data preserved by every isomorphism of verified gyrogroups.
struct ElementProfile {
  std::size_t left_order;       // see groups::element_order; 0 if the powers never reach 0
  std::size_t nontrivial_gyrs;  // #b with gyr[x,b] != I
  std::size_t nontrivial_gyrs_right;  // #a with gyr[a,x] != I
  bool involution;  // x ⊕ x = 0

  auto operator<=>(const ElementProfile&) const = default;
};

std::vector<ElementProfile> element_profiles(const FiniteGyrogroup& g);

/// True iff phi(a ⊕ b) = phi(a) ⊕' phi(b) for all a, b (phi maps g into h).
bool is_homomorphism(const FiniteGyrogroup& g, const FiniteGyrogroup& h, const Permutation& phi);

/// A bijection phi with phi(a ⊕ b) = phi(a) ⊕ phi(b), or nullopt. Backtracking over
/// images with equal profiles; each assignment is propagated through the Cayley tables
/// so only generators are branched on. The map is re-verified before being returned.
std::optional<Permutation> isomorphic(const FiniteGyrogroup& g, const FiniteGyrogroup& h);

}  // namespace gyro

#pragma once

#include <cstddef>
#include <map>

#include "gyro/gyrogroup.hpp"

// Reference groups encoded as gyrogroups with trivial gyrations.
namespace gyro::groups {

/// Z_n under addition mod n.
FiniteGyrogroup cyclic(std::size_t n);

/// Dihedral group of order 2k: r^i s^j is encoded as i + k*j.
FiniteGyrogroup dihedral(std::size_t k);

/// Z_a ⋊ Z_2 where the generator of Z_2 acts by x -> mult * x (mod a). Requires
/// mult^2 ≡ 1 (mod a). Element (x, j) is encoded as x + a*j.
FiniteGyrogroup semidirect_cyclic(std::size_t a, std::size_t mult);

/// G × H with (g, h) encoded as g * |H| + h. Both factors must have trivial gyrations.
FiniteGyrogroup direct_product(const FiniteGyrogroup& g, const FiniteGyrogroup& h);

/// Isomorphism invariants of a finite group given by its Cayley table (identity 0).
struct GroupInvariants {
  std::size_t order = 0;
  bool abelian = false;
  std::map<std::size_t, std::size_t> element_orders;  // order -> count
  std::size_t center_size = 0;
  std::size_t derived_size = 0;

  bool operator==(const GroupInvariants&) const = default;
};

/// Throws std::invalid_argument if the table is not a group with identity 0.
GroupInvariants invariants(const FiniteGyrogroup& g);

/// Multiplicative order of x under repeated left multiplication: smallest k with
/// x ⊕ (x ⊕ (... ⊕ x)) = 0 (k terms). Returns 0 if the powers never reach 0.
std::size_t element_order(const FiniteGyrogroup& g, Element x);

}  // namespace gyro::groups

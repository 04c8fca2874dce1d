#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gyro/groups.hpp"
#include "gyro/gyrogroup.hpp"

namespace gyro {

/// The group generated under composition by every distinct gyration of g. The
/// identity comes first; the rest are sorted by mapping.
std::vector<Permutation> gyroautomorphism_group(const FiniteGyrogroup& g);

/// Raised when the gyrosemidirect product fails a group axiom.
class HolomorphError : public std::runtime_error {
 public:
  HolomorphError(const std::string& what, std::vector<std::size_t> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

/// G ⋊ Γ on pairs (x, X), x in G, X in the gyroautomorphism group Γ, with
///   (x, X)(y, Y) = (x ⊕ X(y), gyr[x, X(y)] ∘ X ∘ Y).
/// The pair (x, X_k) is encoded as x * |Γ| + k, so (0, I) is 0.
struct GyroholomorphGroup {
  std::vector<Permutation> automorphisms;  // Γ
  FiniteGyrogroup table;                   // Cayley table, trivial gyrations
  std::map<std::size_t, std::size_t> element_order_multiset;

  std::size_t order() const { return table.order(); }
  std::size_t encode(Element x, std::size_t k) const { return x * automorphisms.size() + k; }
  std::pair<Element, std::size_t> decode(std::size_t e) const {
    return {static_cast<Element>(e / automorphisms.size()), e % automorphisms.size()};
  }
};

/// Builds the gyroholomorph and checks associativity, identity and inverses
/// exhaustively. Throws HolomorphError with a witness on failure.
GyroholomorphGroup gyroholomorph(const FiniteGyrogroup& g);

struct StructureCandidate {
  std::string name;
  groups::GroupInvariants invariants;
};

/// Z_2 × (Z_m ⋊ Z_2) for each nonabelian action x -> kx with k^2 ≡ 1 (mod m):
/// dihedral (k = -1), quasidihedral (k = m/2 - 1) and modular (k = m/2 + 1), the
/// last two only for m >= 8.
std::vector<StructureCandidate> holomorph_candidates(std::size_t m);

struct StructureMatch {
  groups::GroupInvariants invariants;
  std::vector<std::string> matches;  // names of candidates with equal invariants
};

StructureMatch identify_structure(const groups::GroupInvariants& inv,
                                  const std::vector<StructureCandidate>& candidates);

}  // namespace gyro

#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gyro/gyrogroup.hpp"

namespace gyro {

/// The three families of subgyrogroups of G2(n):
///   Pow2(s)      ⟨2^s⟩          0 <= s <= n-1 (2^s taken mod m, so s = n-1 is ⟨0⟩)
///   Pow2M(s)     ⟨2^s, m⟩       0 <= s <= n-1
///   MPlusPow2(s) ⟨m + 2^s⟩      0 <= s <= n-2
struct ClosedFormLabel {
  enum class Family { Pow2, Pow2M, MPlusPow2 };
  Family family;
  int s;

  std::string to_string() const;
  bool operator==(const ClosedFormLabel&) const = default;
};

struct Subgyrogroup {
  std::vector<Element> elements;    // sorted, contains 0
  std::vector<Element> generators;  // sorted, never contains 0
  std::optional<ClosedFormLabel> closed_form;
  bool is_group = false;  // every internal gyration restricts to the identity

  std::size_t order() const { return elements.size(); }
  bool contains(Element x) const;
  /// "<5>", "<2,4>"; the trivial subgyrogroup is "<0>".
  std::string label() const;
};

struct SubgyrogroupLattice {
  /// Sorted by order, then lexicographically by element list.
  std::vector<Subgyrogroup> nodes;
  /// (child, parent) node indices, one per cover relation.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::optional<std::size_t> find(std::span<const Element> elements) const;
};

/// Smallest subset containing gens and 0, closed under ⊕, ⊖ and the gyrations
/// gyr[a,b] for a, b in the subset. `generators` holds gens as given (sorted, 0 dropped).
Subgyrogroup closure(const FiniteGyrogroup& g, std::span<const Element> gens);

/// True iff `elements` (sorted) contains 0 and is closed under ⊕, ⊖ and internal gyrations.
bool is_subgyrogroup(const FiniteGyrogroup& g, std::span<const Element> elements);

/// True iff gyr[a,b] fixes every c for all a, b, c in `elements`.
bool internal_gyrations_trivial(const FiniteGyrogroup& g, std::span<const Element> elements);

/// Smallest generating set of the subgyrogroup `elements` under (size, lexicographic) order.
std::vector<Element> canonical_generators(const FiniteGyrogroup& g,
                                          std::span<const Element> elements);

/// All subgyrogroups by closing singletons and then extending known ones by one element
/// until nothing new appears; covers are the transitive reduction of inclusion.
SubgyrogroupLattice enumerate_subgyrogroups(const FiniteGyrogroup& g);

/// The subgyrogroups of G2(n) from their closed forms, deduplicated, in family order.
/// Throws std::invalid_argument for n < 3.
std::vector<Subgyrogroup> classify_subgyrogroups(int n);

/// Cover relations for an arbitrary family of sets ordered as in SubgyrogroupLattice.
std::vector<std::pair<std::size_t, std::size_t>> cover_relations(
    std::span<const Subgyrogroup> nodes);

/// True iff every gyration is the identity. Also checks that this agrees with
/// associativity of ⊕ and throws std::logic_error if it does not.
bool is_degenerate_group(const FiniteGyrogroup& g);

}  // namespace gyro

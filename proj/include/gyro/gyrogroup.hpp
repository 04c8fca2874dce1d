#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gyro/permutation.hpp"

namespace gyro {

/// Index into FiniteGyrogroup::perms().
using GyrIndex = std::uint32_t;

/// A finite magma on {0..N-1} together with a gyration assignment (a,b) -> gyr[a,b].
///
/// The Cayley table is stored row-major: op(a, b) = cayley[a * N + b]. Gyrations are
/// stored as indices into a list of distinct permutations, so two gyrations are equal
/// iff their indices are equal. The permutation list is canonicalized on construction:
/// duplicates are merged, unreferenced entries dropped, and the survivors ordered by
/// first appearance in the gyration table (row-major).
///
/// Construction only validates shape. Latin-square structure and the axioms themselves
/// are properties to be checked (see verify.hpp), since corrupted tables must be
/// representable for the checks to report on them.
///
/// Immutable after construction.
class FiniteGyrogroup {
 public:
  /// Throws std::invalid_argument on a shape violation.
  FiniteGyrogroup(std::size_t order, std::vector<Element> cayley, std::vector<GyrIndex> gyr_table,
                  std::vector<Permutation> perms);

  /// A group Cayley table with every gyration set to the identity.
  static FiniteGyrogroup from_group_table(std::size_t order, std::vector<Element> cayley);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }

  Element op(Element a, Element b) const { return cayley_[a * order_ + b]; }
  GyrIndex gyr_index(Element a, Element b) const { return gyr_[a * order_ + b]; }
  const Permutation& gyr(Element a, Element b) const { return perms_[gyr_index(a, b)]; }
  Element gyr_apply(Element a, Element b, Element c) const { return gyr(a, b)(c); }

  std::span<const Element> row(Element a) const {
    return std::span<const Element>(cayley_).subspan(a * order_, order_);
  }
  std::span<const Element> cayley() const { return cayley_; }
  std::span<const GyrIndex> gyr_table() const { return gyr_; }
  std::span<const Permutation> perms() const { return perms_; }

  /// Index of the identity permutation in perms(), if any gyration is trivial.
  std::optional<GyrIndex> identity_perm_index() const;

  bool operator==(const FiniteGyrogroup&) const = default;

 private:
  std::size_t order_;
  std::vector<Element> cayley_;
  std::vector<GyrIndex> gyr_;
  std::vector<Permutation> perms_;
};

/// A row or column of the Cayley table that is not a permutation of {0..N-1}.
struct LatinDefect {
  enum class Kind { Row, Column };
  Kind kind;
  Element index;  // row or column number
  Element value;  // first value that is repeated or missing
  bool missing;   // true: `value` never occurs; false: `value` occurs twice
  std::string describe() const;
};

/// First defect scanning rows 0..N-1, then columns 0..N-1.
std::optional<LatinDefect> find_latin_defect(const FiniteGyrogroup& g);

/// Relabels elements so that `e` becomes 0 (swapping labels e and 0), conjugating
/// the gyrations accordingly.
FiniteGyrogroup relabel_identity(const FiniteGyrogroup& g, Element e);

/// Smallest e with op(e, x) = x for all x.
std::optional<Element> find_left_identity(const FiniteGyrogroup& g);

/// The sub-structure on `elements` (sorted, containing 0, closed under op and the
/// internal gyrations), relabeled to 0..k-1 by rank. Throws std::invalid_argument if
/// the subset is not closed.
FiniteGyrogroup restrict_to(const FiniteGyrogroup& g, std::span<const Element> elements);

}  // namespace gyro

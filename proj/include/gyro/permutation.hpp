#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gyro {

/// Elements of a finite gyrogroup are the integers 0..N-1.
using Element = std::uint32_t;

/// A bijection on {0..N-1}.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `mapping` is a bijection on {0..size-1}.
  explicit Permutation(std::vector<Element> mapping);

  static Permutation identity(std::size_t size);

  Element operator()(Element x) const { return mapping_[x]; }
  std::size_t size() const { return mapping_.size(); }
  std::span<const Element> mapping() const { return mapping_; }

  /// (*this ∘ inner)(x) = (*this)(inner(x)).
  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Smallest k >= 1 with p^k = identity.
  std::size_t order() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Element>> cycles() const;

  /// Cycle notation such as "(1,3)(5,7)"; the identity renders as "()".
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Element> mapping_;
};

}  // namespace gyro

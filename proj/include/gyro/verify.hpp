#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/gyrogroup.hpp"

namespace gyro {

enum class Check {
  LeftIdentity,           // (G1) 0 ⊕ x = x
  LeftInverses,           // (G2) every a has some b with b ⊕ a = 0
  GyrAutomorphisms,       // every gyration is an automorphism of ⊕
  LeftGyroassociativity,  // (G3) a ⊕ (b ⊕ c) = (a ⊕ b) ⊕ gyr[a,b]c
  LoopProperty,           // (G4) gyr[a,b] = gyr[a ⊕ b, b]
  GyratorIdentity,        // gyr[a,b]c = ⊖(a ⊕ b) ⊕ (a ⊕ (b ⊕ c))
  Gyrocommutativity,      // a ⊕ b = gyr[a,b](b ⊕ a)
  // Right-hand laws; derived from G1-G4, not part of verify().
  RightIdentity,
  RightInverses,
  RightLoopProperty,
};

std::string_view check_name(Check c);
std::optional<Check> check_from_name(std::string_view name);

/// Outcome of one check. A failed status carries the lexicographically smallest
/// violating tuple that was examined:
///   LeftIdentity, RightIdentity      (x)
///   LeftInverses, RightInverses      (a)
///   GyrAutomorphisms                 (a, b, x, y): gyr[a,b](x⊕y) != gyr[a,b]x ⊕ gyr[a,b]y
///   LeftGyroassociativity            (a, b, c)
///   LoopProperty, Gyrocommutativity  (a, b)
///   RightLoopProperty                (a, b)
///   GyratorIdentity                  (a, b, c), or (a) when a has no left inverse
struct AxiomStatus {
  Check check;
  bool passed = true;
  std::vector<Element> witness;
  bool sampled = false;
  std::string note;
};

struct VerifyOptions {
  /// Triple-quantified checks scan all N^3 triples while N <= exhaustive_limit.
  std::size_t exhaustive_limit = 512;
  /// Above the limit, this many pseudo-random triples are tested instead.
  std::uint64_t sample_count = 10'000'000;
  std::uint64_t seed = 0x5eed'2a4d'6e7cULL;
  /// 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct VerificationReport {
  std::vector<AxiomStatus> checks;

  bool all_passed() const;
  bool sampled() const;
  const AxiomStatus& status(Check c) const;
};

AxiomStatus check_left_identity(const FiniteGyrogroup& g);
AxiomStatus check_left_inverses(const FiniteGyrogroup& g);
AxiomStatus check_gyr_automorphisms(const FiniteGyrogroup& g);
AxiomStatus check_left_gyroassociativity(const FiniteGyrogroup& g, const VerifyOptions& opts = {});
AxiomStatus check_loop_property(const FiniteGyrogroup& g);
AxiomStatus check_gyrator_identity(const FiniteGyrogroup& g, const VerifyOptions& opts = {});
AxiomStatus check_gyrocommutative(const FiniteGyrogroup& g);

AxiomStatus check_right_identity(const FiniteGyrogroup& g);
AxiomStatus check_right_inverses(const FiniteGyrogroup& g);
AxiomStatus check_right_loop_property(const FiniteGyrogroup& g);

/// Runs the seven gyrogroup checks, all of them, in Check order.
VerificationReport verify(const FiniteGyrogroup& g, const VerifyOptions& opts = {});

/// Smallest b with b ⊕ x = 0, one per x; nullopt where none exists.
std::vector<std::optional<Element>> left_inverses(const FiniteGyrogroup& g);

/// The b with b ⊕ x = 0. Throws std::domain_error if there is none.
Element inverse_of(const FiniteGyrogroup& g, Element x);

/// True iff `status` is a failure whose witness really violates its law in `g`.
bool witness_reproduces(const FiniteGyrogroup& g, const AxiomStatus& status);

/// True iff p(x ⊕ y) = p(x) ⊕ p(y) for all x, y.
bool is_automorphism(const FiniteGyrogroup& g, const Permutation& p);

}  // namespace gyro

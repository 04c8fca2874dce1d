#pragma once

#include <string_view>
#include <vector>

#include "gyro/gyrogroup.hpp"

// The gyrogroup G2(n) of order 2^n built on Z_{2^n} = P(n) ∪ H(n), where
// P(n) = {0..m-1} is a copy of Z_m and H(n) = P(n) + m, with m = 2^(n-1).
namespace gyro::g2 {

inline constexpr int kMinN = 3;
inline constexpr int kDefaultMaxN = 12;

struct CyclicParams {
  int n;
  Element m;      // 2^(n-1)
  Element order;  // 2^n
  Element half;   // m / 2

  /// Throws std::invalid_argument unless kMinN <= n <= max_n.
  static CyclicParams make(int n, int max_n = kDefaultMaxN);
};

/// Parity class of an element: odd/even, in the lower half P or the upper half H.
enum class ParityClass { OddP, EvenP, OddH, EvenH };

std::string_view to_string(ParityClass c);

inline bool is_odd(ParityClass c) { return c == ParityClass::OddP || c == ParityClass::OddH; }
inline bool in_lower(ParityClass c) { return c == ParityClass::OddP || c == ParityClass::EvenP; }

/// Residues in {0..m-1}: t ≡ i+j, s ≡ i+j+m/2, r ≡ i+m/2 (mod m).
struct ResidueWitness {
  Element t;
  Element s;
  Element r;
};

ParityClass classify(const CyclicParams& p, Element i);
ResidueWitness residues(const CyclicParams& p, Element i, Element j);

/// i ⊕ j:
///   t      on (P×P) ∪ [(H×H) − (E_H×O_H)]
///   t + m  on (P×H) ∪ [(H×P) − (E_H×O_P)]
///   s      on E_H×O_H
///   s + m  on E_H×O_P
Element oplus(const CyclicParams& p, Element i, Element j);

/// The automorphism A: odd elements move by m/2 within their half, even elements are fixed.
Element a_map(const CyclicParams& p, Element i);

enum class Gyration : unsigned char { Identity, A };

/// A on M = [O_P×(O_H∪E_H)] ∪ [O_H×(O_P∪E_H)] ∪ [E_H×(O_P∪O_H)], identity elsewhere.
Gyration gyr_selector(const CyclicParams& p, Element a, Element b);

/// Inverse from the closed form: −x mod m on P, (−t mod m) + m for x = t + m on H.
Element closed_form_inverse(const CyclicParams& p, Element x);

/// Materialized tables of G2(n), with gyrations kept as one bit per pair.
class G2Tables {
 public:
  explicit G2Tables(const CyclicParams& p);

  const CyclicParams& params() const { return params_; }
  Element op(Element a, Element b) const { return cayley_[a * params_.order + b]; }
  Gyration gyr(Element a, Element b) const {
    return gyr_bits_[a * params_.order + b] ? Gyration::A : Gyration::Identity;
  }
  Permutation a_permutation() const;

  /// Widens the gyration bits to indices into [identity, A].
  FiniteGyrogroup to_gyrogroup() const;

 private:
  CyclicParams params_;
  std::vector<Element> cayley_;
  std::vector<bool> gyr_bits_;
};

/// G2(n) as a generic table-backed gyrogroup. Throws std::invalid_argument for
/// n < 3 or n > max_n.
FiniteGyrogroup build_g2(int n, int max_n = kDefaultMaxN);

}  // namespace gyro::g2

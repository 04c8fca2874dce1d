#include "gyro/construct.hpp"

#include <stdexcept>
#include <string>

namespace gyro::g2 {

namespace {

void require_element(const CyclicParams& p, Element i) {
  if (i >= p.order)
    throw std::out_of_range("element " + std::to_string(i) + " is outside G2(" +
                            std::to_string(p.n) + ")");
}

}  // namespace

CyclicParams CyclicParams::make(int n, int max_n) {
  if (n < kMinN) throw std::invalid_argument("n >= 3 is required (got " + std::to_string(n) + ")");
  if (n > max_n)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(max_n));
  if (n > 16) throw std::invalid_argument("n > 16 is not supported");
  const Element order = Element{1} << n;
  return CyclicParams{n, order / 2, order, order / 4};
}

std::string_view to_string(ParityClass c) {
  switch (c) {
    case ParityClass::OddP:
      return "O_P";
    case ParityClass::EvenP:
      return "E_P";
    case ParityClass::OddH:
      return "O_H";
    case ParityClass::EvenH:
      return "E_H";
  }
  return "?";
}

ParityClass classify(const CyclicParams& p, Element i) {
  require_element(p, i);
  const bool odd = (i & 1u) != 0;
  if (i < p.m) return odd ? ParityClass::OddP : ParityClass::EvenP;
  return odd ? ParityClass::OddH : ParityClass::EvenH;
}

ResidueWitness residues(const CyclicParams& p, Element i, Element j) {
  require_element(p, i);
  require_element(p, j);
  return ResidueWitness{(i + j) % p.m, (i + j + p.half) % p.m, (i + p.half) % p.m};
}

Element oplus(const CyclicParams& p, Element i, Element j) {
  const ParityClass ci = classify(p, i);
  const ParityClass cj = classify(p, j);
  const ResidueWitness w = residues(p, i, j);
  if (ci == ParityClass::EvenH && cj == ParityClass::OddH) return w.s;
  if (ci == ParityClass::EvenH && cj == ParityClass::OddP) return w.s + p.m;
  // Same half lands in P, mixed halves land in H.
  return in_lower(ci) == in_lower(cj) ? w.t : w.t + p.m;
}

Element a_map(const CyclicParams& p, Element i) {
  switch (classify(p, i)) {
    case ParityClass::OddP:
      return residues(p, i, 0).r;
    case ParityClass::OddH:
      return residues(p, i, 0).r + p.m;
    default:
      return i;
  }
}

Gyration gyr_selector(const CyclicParams& p, Element a, Element b) {
  const ParityClass ca = classify(p, a);
  const ParityClass cb = classify(p, b);
  bool in_m = false;
  switch (ca) {
    case ParityClass::OddP:
      in_m = !in_lower(cb);
      break;
    case ParityClass::OddH:
      in_m = cb == ParityClass::OddP || cb == ParityClass::EvenH;
      break;
    case ParityClass::EvenH:
      in_m = is_odd(cb);
      break;
    case ParityClass::EvenP:
      break;
  }
  return in_m ? Gyration::A : Gyration::Identity;
}

Element closed_form_inverse(const CyclicParams& p, Element x) {
  require_element(p, x);
  if (x < p.m) return (p.m - x) % p.m;
  return (p.m - (x - p.m)) % p.m + p.m;
}

G2Tables::G2Tables(const CyclicParams& p)
    : params_(p),
      cayley_(static_cast<std::size_t>(p.order) * p.order),
      gyr_bits_(static_cast<std::size_t>(p.order) * p.order) {
  for (Element a = 0; a < p.order; ++a) {
    for (Element b = 0; b < p.order; ++b) {
      const std::size_t k = static_cast<std::size_t>(a) * p.order + b;
      cayley_[k] = oplus(p, a, b);
      gyr_bits_[k] = gyr_selector(p, a, b) == Gyration::A;
    }
  }
}

Permutation G2Tables::a_permutation() const {
  std::vector<Element> m(params_.order);
  for (Element i = 0; i < params_.order; ++i) m[i] = a_map(params_, i);
  return Permutation(std::move(m));
}

FiniteGyrogroup G2Tables::to_gyrogroup() const {
  std::vector<GyrIndex> gyr(gyr_bits_.size());
  for (std::size_t k = 0; k < gyr.size(); ++k) gyr[k] = gyr_bits_[k] ? 1 : 0;
  return FiniteGyrogroup(params_.order, cayley_, std::move(gyr),
                         {Permutation::identity(params_.order), a_permutation()});
}

FiniteGyrogroup build_g2(int n, int max_n) {
  return G2Tables(CyclicParams::make(n, max_n)).to_gyrogroup();
}

}  // namespace gyro::g2

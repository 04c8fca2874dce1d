#include "gyro/isomorphism.hpp"

#include "gyro/groups.hpp"

namespace gyro {

std::vector<ElementProfile> element_profiles(const FiniteGyrogroup& g) {
  const std::size_t n = g.order();
  std::vector<ElementProfile> out(n);
  for (Element x = 0; x < n; ++x) {
    out[x].left_order = groups::element_order(g, x);
    out[x].involution = g.op(x, x) == 0;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (g.gyr(a, b).is_identity()) continue;
      ++out[a].nontrivial_gyrs;
      ++out[b].nontrivial_gyrs_right;
    }
  }
  return out;
}

bool is_homomorphism(const FiniteGyrogroup& g, const FiniteGyrogroup& h, const Permutation& phi) {
  if (phi.size() != g.order() || g.order() != h.order()) return false;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (phi(g.op(a, b)) != h.op(phi(a), phi(b))) return false;
  return true;
}

namespace {

constexpr std::int64_t kUnset = -1;

class IsoSearch {
 public:
  IsoSearch(const FiniteGyrogroup& g, const FiniteGyrogroup& h)
      : g_(g),
        h_(h),
        pg_(element_profiles(g)),
        ph_(element_profiles(h)),
        fwd_(g.order(), kUnset),
        bwd_(h.order(), kUnset) {}

  bool solve() {
    Element x = 0;
    while (x < g_.order() && fwd_[x] != kUnset) ++x;
    if (x == g_.order()) return true;
    for (Element y = 0; y < h_.order(); ++y) {
      if (bwd_[y] != kUnset || pg_[x] != ph_[y]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, y) && solve()) return true;
      undo(mark);
    }
    return false;
  }

  Permutation result() const {
    std::vector<Element> m(fwd_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<Element>(fwd_[i]);
    return Permutation(std::move(m));
  }

 private:
  bool bind(Element x, Element y) {
    if (fwd_[x] != kUnset) return fwd_[x] == y;
    if (bwd_[y] != kUnset || pg_[x] != ph_[y]) return false;
    fwd_[x] = y;
    bwd_[y] = x;
    trail_.push_back(x);
    return true;
  }

  // Binds x -> y and closes the partial map under the Cayley tables.
  bool assign(Element x, Element y) {
    std::size_t next = trail_.size();
    if (!bind(x, y)) return false;
    for (; next < trail_.size(); ++next) {
      const Element u = trail_[next];
      for (std::size_t i = 0; i <= next; ++i) {
        const Element v = trail_[i];
        const auto fu = static_cast<Element>(fwd_[u]);
        const auto fv = static_cast<Element>(fwd_[v]);
        if (!bind(g_.op(u, v), h_.op(fu, fv))) return false;
        if (!bind(g_.op(v, u), h_.op(fv, fu))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Element x = trail_.back();
      trail_.pop_back();
      bwd_[fwd_[x]] = kUnset;
      fwd_[x] = kUnset;
    }
  }

  const FiniteGyrogroup& g_;
  const FiniteGyrogroup& h_;
  std::vector<ElementProfile> pg_, ph_;
  std::vector<std::int64_t> fwd_, bwd_;
  std::vector<Element> trail_;
};

}  // namespace

std::optional<Permutation> isomorphic(const FiniteGyrogroup& g, const FiniteGyrogroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  IsoSearch search(g, h);
  if (!search.solve()) return std::nullopt;
  Permutation phi = search.result();
  if (!is_homomorphism(g, h, phi)) return std::nullopt;
  return phi;
}

}  // namespace gyro

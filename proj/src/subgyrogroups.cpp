#include "gyro/subgyrogroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "gyro/construct.hpp"
#include "gyro/verify.hpp"

namespace gyro {

std::string ClosedFormLabel::to_string() const {
  const char* name = family == Family::Pow2 ? "POW2" : family == Family::Pow2M ? "POW2_M" : "M_PLUS_POW2";
  return std::string(name) + "(" + std::to_string(s) + ")";
}

bool Subgyrogroup::contains(Element x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::string Subgyrogroup::label() const {
  if (generators.empty()) return "<0>";
  std::string s = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(generators[i]);
  }
  return s + ">";
}

std::optional<std::size_t> SubgyrogroupLattice::find(std::span<const Element> elements) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (std::ranges::equal(nodes[i].elements, elements)) return i;
  return std::nullopt;
}

namespace {

// Incremental closure: extends an already closed set by extra elements.
class ClosureEngine {
 public:
  explicit ClosureEngine(const FiniteGyrogroup& g) : g_(g), inverse_(left_inverses(g)) {}

  std::vector<Element> close(std::span<const Element> base, std::span<const Element> extra) const {
    const std::size_t n = g_.order();
    std::vector<bool> in(n, false);
    std::vector<bool> perm_active(g_.perms().size(), false);
    std::vector<GyrIndex> active;
    std::vector<Element> members;
    std::deque<Element> queue;

    auto add = [&](Element x) {
      if (in[x]) return;
      in[x] = true;
      members.push_back(x);
      queue.push_back(x);
    };
    auto activate = [&](GyrIndex k) {
      if (perm_active[k]) return;
      perm_active[k] = true;
      active.push_back(k);
      const Permutation& p = g_.perms()[k];
      for (std::size_t i = 0; i < members.size(); ++i) add(p(members[i]));
    };

    for (Element x : base) {
      in[x] = true;
      members.push_back(x);
    }
    for (Element a : base)
      for (Element b : base) activate(g_.gyr_index(a, b));

    add(0);
    for (Element x : extra) add(x);

    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      if (inverse_[x]) add(*inverse_[x]);
      for (std::size_t i = 0; i < active.size(); ++i) add(g_.perms()[active[i]](x));
      for (std::size_t i = 0; i < members.size(); ++i) {
        const Element y = members[i];
        add(g_.op(x, y));
        add(g_.op(y, x));
        activate(g_.gyr_index(x, y));
        activate(g_.gyr_index(y, x));
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

 private:
  const FiniteGyrogroup& g_;
  std::vector<std::optional<Element>> inverse_;
};

std::vector<Element> normalized_generators(std::span<const Element> gens) {
  std::vector<Element> out;
  for (Element x : gens)
    if (x != 0) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_subset(std::span<const Element> a, std::span<const Element> b) {
  return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool node_less(const Subgyrogroup& x, const Subgyrogroup& y) {
  if (x.order() != y.order()) return x.order() < y.order();
  return x.elements < y.elements;
}

// Visits k-subsets of `pool` in lexicographic order until `visit` returns true.
template <class Visit>
bool for_each_combination(std::span<const Element> pool, std::size_t k, const Visit& visit) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Element> pick(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    if (visit(std::span<const Element>(pick))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Subgyrogroup closure(const FiniteGyrogroup& g, std::span<const Element> gens) {
  for (Element x : gens)
    if (x >= g.order()) throw std::out_of_range("closure: generator out of range");
  Subgyrogroup h;
  h.elements = ClosureEngine(g).close({}, gens);
  h.generators = normalized_generators(gens);
  h.is_group = internal_gyrations_trivial(g, h.elements);
  return h;
}

bool is_subgyrogroup(const FiniteGyrogroup& g, std::span<const Element> elements) {
  if (elements.empty() || elements.front() != 0) return false;
  std::vector<bool> in(g.order(), false);
  for (Element x : elements) in[x] = true;
  const auto inv = left_inverses(g);
  for (Element a : elements) {
    if (!inv[a] || !in[*inv[a]]) return false;
    for (Element b : elements) {
      if (!in[g.op(a, b)]) return false;
      const Permutation& p = g.gyr(a, b);
      for (Element c : elements)
        if (!in[p(c)]) return false;
    }
  }
  return true;
}

bool internal_gyrations_trivial(const FiniteGyrogroup& g, std::span<const Element> elements) {
  for (Element a : elements)
    for (Element b : elements) {
      const Permutation& p = g.gyr(a, b);
      for (Element c : elements)
        if (p(c) != c) return false;
    }
  return true;
}

std::vector<Element> canonical_generators(const FiniteGyrogroup& g,
                                          std::span<const Element> elements) {
  const ClosureEngine engine(g);
  std::vector<Element> pool;
  for (Element x : elements)
    if (x != 0) pool.push_back(x);
  std::vector<Element> result;
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    const bool found = for_each_combination(pool, k, [&](std::span<const Element> pick) {
      if (!std::ranges::equal(engine.close({}, pick), elements)) return false;
      result.assign(pick.begin(), pick.end());
      return true;
    });
    if (found) return result;
  }
  throw std::invalid_argument("canonical_generators: set is not a subgyrogroup");
}

std::vector<std::pair<std::size_t, std::size_t>> cover_relations(
    std::span<const Subgyrogroup> nodes) {
  const std::size_t k = nodes.size();
  std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      below[i][j] = i != j && nodes[i].order() < nodes[j].order() &&
                    is_subset(nodes[i].elements, nodes[j].elements);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!below[i][j]) continue;
      bool direct = true;
      for (std::size_t mid = 0; mid < k && direct; ++mid) direct = !(below[i][mid] && below[mid][j]);
      if (direct) covers.emplace_back(i, j);
    }
  }
  return covers;
}

SubgyrogroupLattice enumerate_subgyrogroups(const FiniteGyrogroup& g) {
  const ClosureEngine engine(g);
  std::map<std::vector<Element>, bool> known;
  std::deque<std::vector<Element>> work;

  auto bottom = engine.close({}, {});
  known.emplace(bottom, true);
  work.push_back(std::move(bottom));
  while (!work.empty()) {
    const std::vector<Element> s = std::move(work.front());
    work.pop_front();
    std::vector<bool> in(g.order(), false);
    for (Element x : s) in[x] = true;
    for (Element x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      const Element extra[] = {x};
      auto t = engine.close(s, extra);
      if (known.emplace(t, true).second) work.push_back(std::move(t));
    }
  }

  SubgyrogroupLattice lattice;
  for (const auto& [elements, _] : known) {
    Subgyrogroup h;
    h.elements = elements;
    h.generators = canonical_generators(g, elements);
    h.is_group = internal_gyrations_trivial(g, elements);
    lattice.nodes.push_back(std::move(h));
  }
  std::sort(lattice.nodes.begin(), lattice.nodes.end(), node_less);
  lattice.covers = cover_relations(lattice.nodes);
  return lattice;
}

std::vector<Subgyrogroup> classify_subgyrogroups(int n) {
  const auto p = g2::CyclicParams::make(n, 16);
  const Element m = p.m;
  using Family = ClosedFormLabel::Family;

  // Multiples of `step` in P, optionally shifted into H by `offset` (a residue mod m).
  auto coset = [m](Element step, Element offset, Element shift) {
    std::vector<Element> out;
    for (Element x = 0; x < m; x += step) out.push_back((x + offset) % m + shift);
    return out;
  };

  std::vector<Subgyrogroup> out;
  auto emit = [&out](Family f, int s, std::vector<Element> elements, std::vector<Element> gens,
                     bool is_group) {
    std::sort(elements.begin(), elements.end());
    for (const auto& h : out)
      if (h.elements == elements) return;
    out.push_back(Subgyrogroup{std::move(elements), normalized_generators(gens),
                               ClosedFormLabel{f, s}, is_group});
  };

  for (int s = 0; s <= n - 1; ++s) {
    const Element pow = (Element{1} << s) % m;  // s = n-1 gives 0
    emit(Family::Pow2, s, coset(pow == 0 ? m : pow, 0, 0), {pow}, true);
  }
  for (int s = 0; s <= n - 1; ++s) {
    const Element pow = (Element{1} << s) % m;
    auto lower = coset(pow == 0 ? m : pow, 0, 0);
    auto upper = coset(pow == 0 ? m : pow, 0, m);
    lower.insert(lower.end(), upper.begin(), upper.end());
    emit(Family::Pow2M, s, std::move(lower), {pow, m}, s != 0);
  }
  for (int s = 0; s <= n - 2; ++s) {
    const Element pow = Element{1} << s;
    // H1 = ⟨2^(s+1)⟩ in P, H2 = (m + 2^s) ⊕ H1 = m + (2^s + H1).
    auto lower = coset(2 * pow, 0, 0);
    auto upper = coset(2 * pow, pow, m);
    lower.insert(lower.end(), upper.begin(), upper.end());
    emit(Family::MPlusPow2, s, std::move(lower), {m + pow}, true);
  }
  return out;
}

bool is_degenerate_group(const FiniteGyrogroup& g) {
  bool trivial_gyrations = true;
  for (const auto& p : g.perms()) trivial_gyrations = trivial_gyrations && p.is_identity();

  bool associative = true;
  const std::size_t n = g.order();
  for (Element a = 0; a < n && associative; ++a)
    for (Element b = 0; b < n && associative; ++b)
      for (Element c = 0; c < n && associative; ++c)
        associative = g.op(a, g.op(b, c)) == g.op(g.op(a, b), c);

  if (trivial_gyrations != associative)
    throw std::logic_error(trivial_gyrations
                               ? "is_degenerate_group: trivial gyrations but ⊕ is not associative"
                               : "is_degenerate_group: ⊕ is associative but a gyration is not trivial");
  return trivial_gyrations;
}

}  // namespace gyro

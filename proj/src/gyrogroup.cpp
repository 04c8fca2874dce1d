#include "gyro/gyrogroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gyro {

FiniteGyrogroup::FiniteGyrogroup(std::size_t order, std::vector<Element> cayley,
                                 std::vector<GyrIndex> gyr_table, std::vector<Permutation> perms)
    : order_(order), cayley_(std::move(cayley)) {
  if (order_ == 0) throw std::invalid_argument("gyrogroup: order must be positive");
  if (order_ > (std::size_t{1} << 16))
    throw std::invalid_argument("gyrogroup: order exceeds 65536");
  const std::size_t cells = order_ * order_;
  if (cayley_.size() != cells) throw std::invalid_argument("gyrogroup: cayley table is not N x N");
  if (gyr_table.size() != cells)
    throw std::invalid_argument("gyrogroup: gyration table is not N x N");
  for (std::size_t i = 0; i < cells; ++i) {
    if (cayley_[i] >= order_) {
      throw std::invalid_argument("gyrogroup: cayley entry out of range at (" +
                                  std::to_string(i / order_) + "," + std::to_string(i % order_) +
                                  ")");
    }
  }
  for (const auto& p : perms) {
    if (p.size() != order_) throw std::invalid_argument("gyrogroup: permutation size mismatch");
  }

  // Canonicalize: merge duplicates and order by first appearance.
  std::map<Permutation, GyrIndex> seen;
  std::vector<GyrIndex> remap(perms.size(), ~GyrIndex{0});
  gyr_.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const GyrIndex old = gyr_table[i];
    if (old >= perms.size()) {
      throw std::invalid_argument("gyrogroup: gyration index out of range at (" +
                                  std::to_string(i / order_) + "," + std::to_string(i % order_) +
                                  ")");
    }
    if (remap[old] == ~GyrIndex{0}) {
      auto [it, inserted] = seen.try_emplace(perms[old], static_cast<GyrIndex>(perms_.size()));
      if (inserted) perms_.push_back(perms[old]);
      remap[old] = it->second;
    }
    gyr_[i] = remap[old];
  }
}

FiniteGyrogroup FiniteGyrogroup::from_group_table(std::size_t order, std::vector<Element> cayley) {
  std::vector<GyrIndex> gyr(order * order, 0);
  return FiniteGyrogroup(order, std::move(cayley), std::move(gyr), {Permutation::identity(order)});
}

std::optional<GyrIndex> FiniteGyrogroup::identity_perm_index() const {
  for (std::size_t i = 0; i < perms_.size(); ++i)
    if (perms_[i].is_identity()) return static_cast<GyrIndex>(i);
  return std::nullopt;
}

std::string LatinDefect::describe() const {
  std::string s = kind == Kind::Row ? "row " : "column ";
  s += std::to_string(index);
  s += missing ? " is missing value " : " repeats value ";
  s += std::to_string(value);
  return s;
}

namespace {

std::optional<LatinDefect> scan_line(const FiniteGyrogroup& g, LatinDefect::Kind kind,
                                     Element line) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  for (Element k = 0; k < n; ++k) {
    const Element v = kind == LatinDefect::Kind::Row ? g.op(line, k) : g.op(k, line);
    if (seen[v]) return LatinDefect{kind, line, v, false};
    seen[v] = true;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LatinDefect> find_latin_defect(const FiniteGyrogroup& g) {
  // A repeat in an N-entry line implies a missing value, so scanning for repeats suffices.
  for (Element a = 0; a < g.order(); ++a)
    if (auto d = scan_line(g, LatinDefect::Kind::Row, a)) return d;
  for (Element b = 0; b < g.order(); ++b)
    if (auto d = scan_line(g, LatinDefect::Kind::Column, b)) return d;
  return std::nullopt;
}

std::optional<Element> find_left_identity(const FiniteGyrogroup& g) {
  for (Element e = 0; e < g.order(); ++e) {
    bool ok = true;
    for (Element x = 0; x < g.order() && ok; ++x) ok = g.op(e, x) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

FiniteGyrogroup relabel_identity(const FiniteGyrogroup& g, Element e) {
  const std::size_t n = g.order();
  if (e >= n) throw std::out_of_range("relabel_identity: element out of range");
  auto swap = [e](Element x) -> Element { return x == e ? 0 : (x == 0 ? e : x); };

  std::vector<Element> cayley(n * n);
  std::vector<GyrIndex> gyr(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      cayley[swap(a) * n + swap(b)] = swap(g.op(a, b));
      gyr[swap(a) * n + swap(b)] = g.gyr_index(a, b);
    }
  }
  std::vector<Permutation> perms;
  for (const auto& p : g.perms()) {
    std::vector<Element> m(n);
    for (Element x = 0; x < n; ++x) m[swap(x)] = swap(p(x));
    perms.emplace_back(std::move(m));
  }
  return FiniteGyrogroup(n, std::move(cayley), std::move(gyr), std::move(perms));
}

FiniteGyrogroup restrict_to(const FiniteGyrogroup& g, std::span<const Element> elements) {
  const std::size_t k = elements.size();
  if (k == 0 || elements.front() != 0 || !std::is_sorted(elements.begin(), elements.end()))
    throw std::invalid_argument("restrict_to: subset must be sorted and contain 0");
  std::vector<std::int64_t> rank(g.order(), -1);
  for (std::size_t i = 0; i < k; ++i) rank[elements[i]] = static_cast<std::int64_t>(i);

  auto local = [&](Element x) -> Element {
    if (rank[x] < 0) throw std::invalid_argument("restrict_to: subset is not closed");
    return static_cast<Element>(rank[x]);
  };

  std::vector<Element> cayley(k * k);
  std::vector<GyrIndex> gyr(k * k);
  std::map<std::vector<Element>, GyrIndex> perm_ids;
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      cayley[i * k + j] = local(g.op(elements[i], elements[j]));
      const Permutation& p = g.gyr(elements[i], elements[j]);
      std::vector<Element> m(k);
      for (std::size_t c = 0; c < k; ++c) m[c] = local(p(elements[c]));
      auto [it, inserted] = perm_ids.try_emplace(m, static_cast<GyrIndex>(perms.size()));
      if (inserted) perms.emplace_back(std::move(m));
      gyr[i * k + j] = it->second;
    }
  }
  return FiniteGyrogroup(k, std::move(cayley), std::move(gyr), std::move(perms));
}

}  // namespace gyro

#include "gyro/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace gyro {

Permutation::Permutation(std::vector<Element> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    const Element y = mapping_[i];
    if (y >= mapping_.size() || seen[y]) {
      throw std::invalid_argument("permutation: mapping is not a bijection at position " +
                                  std::to_string(i));
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<Element> mapping(size);
  std::iota(mapping.begin(), mapping.end(), Element{0});
  Permutation p;
  p.mapping_ = std::move(mapping);
  return p;
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.size() != size()) throw std::invalid_argument("permutation: size mismatch in compose");
  Permutation p;
  p.mapping_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) p.mapping_[i] = mapping_[inner.mapping_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.mapping_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) p.mapping_[mapping_[i]] = static_cast<Element>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (mapping_[i] != i) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& cycle : cycles()) result = std::lcm(result, cycle.size());
  return result;
}

std::vector<std::vector<Element>> Permutation::cycles() const {
  std::vector<std::vector<Element>> out;
  std::vector<bool> visited(size(), false);
  for (Element start = 0; start < size(); ++start) {
    if (visited[start] || mapping_[start] == start) continue;
    std::vector<Element> cycle;
    for (Element x = start; !visited[x]; x = mapping_[x]) {
      visited[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& cycle : cs) {
    s += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(cycle[i]);
    }
    s += ')';
  }
  return s;
}

}  // namespace gyro

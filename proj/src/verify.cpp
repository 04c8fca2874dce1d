#include "gyro/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

namespace gyro {

namespace {

constexpr std::array<std::pair<Check, std::string_view>, 10> kNames{{
    {Check::LeftIdentity, "G1"},
    {Check::LeftInverses, "G2"},
    {Check::GyrAutomorphisms, "gyr-automorphism"},
    {Check::LeftGyroassociativity, "G3"},
    {Check::LoopProperty, "G4"},
    {Check::GyratorIdentity, "gyrator-identity"},
    {Check::Gyrocommutativity, "gyrocommutativity"},
    {Check::RightIdentity, "right-identity"},
    {Check::RightInverses, "right-inverses"},
    {Check::RightLoopProperty, "right-loop-property"},
}};

using Triple = std::array<Element, 3>;

AxiomStatus pass(Check c) { return AxiomStatus{c, true, {}, false, {}}; }

AxiomStatus fail(Check c, std::vector<Element> witness, std::string note = {}) {
  return AxiomStatus{c, false, std::move(witness), false, std::move(note)};
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// First (a,b,c) in lexicographic order with ok(a,b,c) false. The range of `a` is split
// into contiguous chunks; each worker stops once a smaller failing `a` is known.
template <class Ok>
std::optional<Triple> first_failing_triple(std::size_t n, unsigned threads, const Ok& ok) {
  std::atomic<std::size_t> best_a{n};
  auto scan = [&](std::size_t lo, std::size_t hi, std::optional<Triple>& out) {
    for (std::size_t a = lo; a < hi; ++a) {
      if (a >= best_a.load(std::memory_order_relaxed)) return;
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (!ok(static_cast<Element>(a), b, c)) {
            out = Triple{static_cast<Element>(a), b, c};
            std::size_t cur = best_a.load();
            while (a < cur && !best_a.compare_exchange_weak(cur, a)) {
            }
            return;
          }
        }
      }
    }
  };

  const std::size_t workers = n < 64 ? 1 : std::min<std::size_t>(threads, n);
  std::vector<std::optional<Triple>> found(workers);
  if (workers == 1) {
    scan(0, n, found[0]);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      pool.emplace_back([&, lo, hi, w] { scan(lo, hi, found[w]); });
    }
  }
  std::optional<Triple> best;
  for (const auto& f : found)
    if (f && (!best || *f < *best)) best = f;
  return best;
}

// Smallest failing triple among `count` pseudo-random triples drawn from a fixed seed.
template <class Ok>
std::optional<Triple> sampled_failing_triple(std::size_t n, std::uint64_t count,
                                             std::uint64_t seed, const Ok& ok) {
  std::mt19937_64 rng(seed);
  std::optional<Triple> best;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Triple t{static_cast<Element>(rng() % n), static_cast<Element>(rng() % n),
                   static_cast<Element>(rng() % n)};
    if (!ok(t[0], t[1], t[2]) && (!best || t < *best)) best = t;
  }
  return best;
}

template <class Ok>
AxiomStatus triple_check(Check check, const FiniteGyrogroup& g, const VerifyOptions& opts,
                         const Ok& ok) {
  const std::size_t n = g.order();
  const bool sampled = n > opts.exhaustive_limit;
  const auto bad = sampled ? sampled_failing_triple(n, opts.sample_count, opts.seed, ok)
                           : first_failing_triple(n, resolve_threads(opts.threads), ok);
  AxiomStatus s = pass(check);
  s.sampled = sampled;
  if (bad) {
    s.passed = false;
    s.witness.assign(bad->begin(), bad->end());
  }
  if (sampled) s.note = "sampled " + std::to_string(opts.sample_count) + " triples";
  return s;
}

}  // namespace

std::string_view check_name(Check c) {
  for (const auto& [check, name] : kNames)
    if (check == c) return name;
  return "unknown";
}

std::optional<Check> check_from_name(std::string_view name) {
  for (const auto& [check, n] : kNames)
    if (n == name) return check;
  return std::nullopt;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& s) { return s.passed; });
}

bool VerificationReport::sampled() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& s) { return s.sampled; });
}

const AxiomStatus& VerificationReport::status(Check c) const {
  for (const auto& s : checks)
    if (s.check == c) return s;
  throw std::out_of_range("report has no check " + std::string(check_name(c)));
}

AxiomStatus check_left_identity(const FiniteGyrogroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.op(0, x) != x) return fail(Check::LeftIdentity, {x});
  return pass(Check::LeftIdentity);
}

AxiomStatus check_right_identity(const FiniteGyrogroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.op(x, 0) != x) return fail(Check::RightIdentity, {x});
  return pass(Check::RightIdentity);
}

std::vector<std::optional<Element>> left_inverses(const FiniteGyrogroup& g) {
  const std::size_t n = g.order();
  std::vector<std::optional<Element>> inv(n);
  for (Element b = n; b-- > 0;)
    for (Element a = 0; a < n; ++a)
      if (g.op(b, a) == 0) inv[a] = b;
  return inv;
}

Element inverse_of(const FiniteGyrogroup& g, Element x) {
  if (x >= g.order()) throw std::out_of_range("inverse_of: element out of range");
  for (Element b = 0; b < g.order(); ++b)
    if (g.op(b, x) == 0) return b;
  throw std::domain_error("inverse_of: no left inverse for " + std::to_string(x));
}

AxiomStatus check_left_inverses(const FiniteGyrogroup& g) {
  const auto inv = left_inverses(g);
  for (Element a = 0; a < g.order(); ++a)
    if (!inv[a]) return fail(Check::LeftInverses, {a});
  return pass(Check::LeftInverses);
}

AxiomStatus check_right_inverses(const FiniteGyrogroup& g) {
  const auto inv = left_inverses(g);
  for (Element a = 0; a < g.order(); ++a)
    if (!inv[a] || g.op(a, *inv[a]) != 0) return fail(Check::RightInverses, {a});
  return pass(Check::RightInverses);
}

bool is_automorphism(const FiniteGyrogroup& g, const Permutation& p) {
  if (p.size() != g.order()) return false;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (p(g.op(x, y)) != g.op(p(x), p(y))) return false;
  return true;
}

AxiomStatus check_gyr_automorphisms(const FiniteGyrogroup& g) {
  const std::size_t n = g.order();
  // perms() is ordered by first appearance, so the first failing permutation also has
  // the smallest (a, b).
  for (GyrIndex k = 0; k < g.perms().size(); ++k) {
    const Permutation& p = g.perms()[k];
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (p(g.op(x, y)) == g.op(p(x), p(y))) continue;
        const auto table = g.gyr_table();
        const auto pos = static_cast<std::size_t>(std::find(table.begin(), table.end(), k) -
                                                  table.begin());
        return fail(Check::GyrAutomorphisms,
                    {static_cast<Element>(pos / n), static_cast<Element>(pos % n), x, y});
      }
    }
  }
  return pass(Check::GyrAutomorphisms);
}

AxiomStatus check_left_gyroassociativity(const FiniteGyrogroup& g, const VerifyOptions& opts) {
  return triple_check(Check::LeftGyroassociativity, g, opts, [&g](Element a, Element b, Element c) {
    return g.op(a, g.op(b, c)) == g.op(g.op(a, b), g.gyr_apply(a, b, c));
  });
}

AxiomStatus check_loop_property(const FiniteGyrogroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (g.gyr_index(a, b) != g.gyr_index(g.op(a, b), b)) return fail(Check::LoopProperty, {a, b});
  return pass(Check::LoopProperty);
}

AxiomStatus check_right_loop_property(const FiniteGyrogroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (g.gyr_index(a, b) != g.gyr_index(a, g.op(b, a)))
        return fail(Check::RightLoopProperty, {a, b});
  return pass(Check::RightLoopProperty);
}

AxiomStatus check_gyrator_identity(const FiniteGyrogroup& g, const VerifyOptions& opts) {
  const auto maybe_inv = left_inverses(g);
  std::vector<Element> inv(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    if (!maybe_inv[a]) return fail(Check::GyratorIdentity, {a}, "no left inverse");
    inv[a] = *maybe_inv[a];
  }
  return triple_check(Check::GyratorIdentity, g, opts, [&g, &inv](Element a, Element b, Element c) {
    return g.gyr_apply(a, b, c) == g.op(inv[g.op(a, b)], g.op(a, g.op(b, c)));
  });
}

AxiomStatus check_gyrocommutative(const FiniteGyrogroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (g.op(a, b) != g.gyr_apply(a, b, g.op(b, a))) return fail(Check::Gyrocommutativity, {a, b});
  return pass(Check::Gyrocommutativity);
}

VerificationReport verify(const FiniteGyrogroup& g, const VerifyOptions& opts) {
  VerificationReport r;
  r.checks.push_back(check_left_identity(g));
  r.checks.push_back(check_left_inverses(g));
  r.checks.push_back(check_gyr_automorphisms(g));
  r.checks.push_back(check_left_gyroassociativity(g, opts));
  r.checks.push_back(check_loop_property(g));
  r.checks.push_back(check_gyrator_identity(g, opts));
  r.checks.push_back(check_gyrocommutative(g));
  return r;
}

bool witness_reproduces(const FiniteGyrogroup& g, const AxiomStatus& s) {
  if (s.passed) return false;
  const auto& w = s.witness;
  const std::size_t n = g.order();
  auto arity = [&](std::size_t k) {
    return w.size() == k && std::all_of(w.begin(), w.end(), [n](Element x) { return x < n; });
  };
  switch (s.check) {
    case Check::LeftIdentity:
      return arity(1) && g.op(0, w[0]) != w[0];
    case Check::RightIdentity:
      return arity(1) && g.op(w[0], 0) != w[0];
    case Check::LeftInverses: {
      if (!arity(1)) return false;
      for (Element b = 0; b < n; ++b)
        if (g.op(b, w[0]) == 0) return false;
      return true;
    }
    case Check::RightInverses: {
      if (!arity(1)) return false;
      const auto inv = left_inverses(g)[w[0]];
      return !inv || g.op(w[0], *inv) != 0;
    }
    case Check::GyrAutomorphisms: {
      if (!arity(4)) return false;
      const Permutation& p = g.gyr(w[0], w[1]);
      return p(g.op(w[2], w[3])) != g.op(p(w[2]), p(w[3]));
    }
    case Check::LeftGyroassociativity:
      return arity(3) &&
             g.op(w[0], g.op(w[1], w[2])) != g.op(g.op(w[0], w[1]), g.gyr_apply(w[0], w[1], w[2]));
    case Check::LoopProperty:
      return arity(2) && g.gyr_index(w[0], w[1]) != g.gyr_index(g.op(w[0], w[1]), w[1]);
    case Check::RightLoopProperty:
      return arity(2) && g.gyr_index(w[0], w[1]) != g.gyr_index(w[0], g.op(w[1], w[0]));
    case Check::GyratorIdentity: {
      if (arity(1)) {
        for (Element b = 0; b < n; ++b)
          if (g.op(b, w[0]) == 0) return false;
        return true;
      }
      if (!arity(3)) return false;
      const auto inv = left_inverses(g)[g.op(w[0], w[1])];
      if (!inv) return true;
      return g.gyr_apply(w[0], w[1], w[2]) != g.op(*inv, g.op(w[0], g.op(w[1], w[2])));
    }
    case Check::Gyrocommutativity:
      return arity(2) && g.op(w[0], w[1]) != g.gyr_apply(w[0], w[1], g.op(w[1], w[0]));
  }
  return false;
}

}  // namespace gyro

#pragma once

// Benchmark instance constructions with analytically known dual sizes,
// plus seeded random hypergraphs.
//
//   M(n)     n/2 disjoint pairs {2i-1, 2i}; dual size 2^(n/2)
//   DM(n)    all 2^(n/2) transversals of M(n); dual size n/2
//   TH(n)    pairs {i,j}, i < j, j even; dual size n/2 + 1
//   SDTH(n)  self-dualization of TH(n-2); edges = dual = (n-2)^2/4 + n/2 + 1
//   SDFP(n)  self-dualization of k disjoint Fano planes, n = 7k + 2;
//            edges = dual = 1 + 7k + 7^k
//   RANDOM   m edges, each vertex kept with probability p (splitmix64)

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgdual/hypergraph.hpp"

namespace hgdual {

enum class Family { M, DM, TH, SDTH, SDFP, RANDOM };

struct InstanceSpec {
  Family family = Family::M;
  int n = 0;
  int m = 0;          // RANDOM only
  double p = 0.0;     // RANDOM only
  std::uint64_t seed = 0;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Deterministic 64-bit generator; documented bit-exactly in the README.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // uniform in [0,1) with 53 random bits
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// dual(TH(n)) in closed form: the even vertices, plus for each even j = 2t
// the set {1..2t-1} u {even > 2t}.
inline std::vector<std::vector<Label>> threshold_dual_labels(int n) {
  std::vector<std::vector<Label>> sets;
  std::vector<Label> evens;
  for (int j = 2; j <= n; j += 2) evens.push_back(j);
  sets.push_back(evens);
  for (int t = 1; t <= n / 2; ++t) {
    std::vector<Label> s;
    for (int i = 1; i <= 2 * t - 1; ++i) s.push_back(i);
    for (int j = 2 * t + 2; j <= n; j += 2) s.push_back(j);
    sets.push_back(std::move(s));
  }
  return sets;
}

// {{a,b}} u {{a} u E : E in F} u {{b} u D : D in dual(F)} is self-dual when
// F is an antichain on labels < a < b.
inline Hypergraph self_dualize(const std::vector<std::vector<Label>>& edges,
                               const std::vector<std::vector<Label>>& dual_edges,
                               Label a, Label b) {
  std::vector<std::vector<Label>> out;
  out.reserve(1 + edges.size() + dual_edges.size());
  out.push_back({a, b});
  for (const auto& e : edges) {
    std::vector<Label> x{a};
    x.insert(x.end(), e.begin(), e.end());
    out.push_back(std::move(x));
  }
  for (const auto& d : dual_edges) {
    std::vector<Label> x{b};
    x.insert(x.end(), d.begin(), d.end());
    out.push_back(std::move(x));
  }
  return Hypergraph::from_label_edges(out);
}

inline std::vector<std::vector<Label>> threshold_labels(int n) {
  std::vector<std::vector<Label>> edges;
  for (int j = 2; j <= n; j += 2)
    for (int i = 1; i < j; ++i) edges.push_back({static_cast<Label>(i), static_cast<Label>(j)});
  return edges;
}

}  // namespace detail

inline Hypergraph gen_matching(int n) {
  detail::require(n >= 2 && n % 2 == 0, "M(n) requires even n >= 2");
  std::vector<std::vector<Label>> edges;
  for (int i = 1; i <= n / 2; ++i) edges.push_back({2 * i - 1, 2 * i});
  return Hypergraph::from_label_edges(edges);
}

inline Hypergraph gen_dual_matching(int n) {
  detail::require(n >= 2 && n % 2 == 0, "DM(n) requires even n >= 2");
  detail::require(n <= 40, "DM(n) guarded to n <= 40 (2^(n/2) edges)");
  const int k = n / 2;
  std::vector<std::vector<Label>> edges;
  edges.reserve(1ull << k);
  // one vertex from each pair; counting with pair 0 most significant gives
  // lexicographic edge order
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    std::vector<Label> e(k);
    for (int j = 0; j < k; ++j) e[j] = 2 * j + 1 + ((mask >> (k - 1 - j)) & 1);
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_label_edges(edges);
}

inline Hypergraph gen_threshold(int n) {
  detail::require(n >= 2 && n % 2 == 0, "TH(n) requires even n >= 2");
  return Hypergraph::from_label_edges(detail::threshold_labels(n));
}

inline Hypergraph gen_sd_threshold(int n) {
  detail::require(n >= 4 && n % 2 == 0, "SDTH(n) requires even n >= 4");
  return detail::self_dualize(detail::threshold_labels(n - 2),
                              detail::threshold_dual_labels(n - 2), n - 1, n);
}

inline Hypergraph gen_sd_fano(int n) {
  detail::require(n >= 9 && (n - 2) % 7 == 0, "SDFP(n) requires n = 7k + 2, k >= 1");
  const int k = (n - 2) / 7;
  detail::require(k <= 5, "SDFP(n) guarded to k <= 5 (7^k dual edges)");

  static const int fano[7][3] = {{1, 2, 3}, {1, 5, 6}, {1, 7, 4}, {2, 4, 5},
                                 {2, 6, 7}, {3, 4, 6}, {3, 5, 7}};
  std::vector<std::vector<Label>> edges;
  for (int c = 0; c < k; ++c)
    for (const auto& line : fano)
      edges.push_back({line[0] + 7 * c, line[1] + 7 * c, line[2] + 7 * c});

  // dual of disjoint copies: one line from each copy, 7^k unions
  std::vector<std::vector<Label>> duals;
  std::size_t total = 1;
  for (int c = 0; c < k; ++c) total *= 7;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Label> d;
    std::size_t rest = code;
    for (int c = 0; c < k; ++c) {
      const auto& line = fano[rest % 7];
      rest /= 7;
      for (int x : line) d.push_back(x + 7 * c);
    }
    duals.push_back(std::move(d));
  }
  return detail::self_dualize(edges, duals, n - 1, n);
}

// Each of the m hyperedges keeps vertex i (labels 1..n) independently with
// probability p; empty draws are redrawn; duplicate edges collapse at
// construction, so the result may have fewer than m edges.
inline Hypergraph gen_random(int n, int m, double p, std::uint64_t seed) {
  detail::require(n >= 1 && m >= 1, "random instance requires n, m >= 1");
  detail::require(p > 0.0 && p < 1.0, "random instance requires 0 < p < 1");
  detail::SplitMix64 rng(seed);
  std::vector<std::vector<Label>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::vector<Label> e;
    do {
      e.clear();
      for (int v = 1; v <= n; ++v)
        if (rng.next_unit() < p) e.push_back(v);
    } while (e.empty());
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_label_edges(edges);
}

inline Hypergraph generate(const InstanceSpec& spec) {
  switch (spec.family) {
    case Family::M: return gen_matching(spec.n);
    case Family::DM: return gen_dual_matching(spec.n);
    case Family::TH: return gen_threshold(spec.n);
    case Family::SDTH: return gen_sd_threshold(spec.n);
    case Family::SDFP: return gen_sd_fano(spec.n);
    case Family::RANDOM: return gen_random(spec.n, spec.m, spec.p, spec.seed);
  }
  throw std::invalid_argument("unknown instance family");
}

inline Family family_from_name(const std::string& name) {
  if (name == "M" || name == "m") return Family::M;
  if (name == "DM" || name == "dm") return Family::DM;
  if (name == "TH" || name == "th") return Family::TH;
  if (name == "SDTH" || name == "sdth") return Family::SDTH;
  if (name == "SDFP" || name == "sdfp") return Family::SDFP;
  if (name == "RANDOM" || name == "random" || name == "RAND" || name == "rand")
    return Family::RANDOM;
  throw std::invalid_argument("unknown instance family '" + name + "'");
}

}  // namespace hgdual

#pragma once

// Correctness baselines: exhaustive subset scan and the DL incremental
// algorithm.  Both are definition-level and independent of the crit/uncov
// machinery the fast enumerators use.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hgdual/hypergraph.hpp"
#include "hgdual/sink.hpp"

namespace hgdual {

// Canonical set of sets: each set ascending, the collection sorted
// lexicographically, no duplicates.
struct DualCollection {
  std::vector<std::vector<Vertex>> sets;

  void canonicalize() {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    if (std::adjacent_find(sets.begin(), sets.end()) != sets.end())
      throw std::logic_error("duplicate set in dual collection");
  }

  std::size_t size() const { return sets.size(); }
  bool operator==(const DualCollection&) const = default;
};

inline DualCollection collect_canonical(const CollectSink& sink) {
  DualCollection d{sink.sets()};
  d.canonicalize();
  return d;
}

namespace detail {

inline std::uint32_t subset_mask(const std::vector<Vertex>& vs) {
  std::uint32_t m = 0;
  for (Vertex v : vs) m |= 1u << v;
  return m;
}

}  // namespace detail

// Scans all 2^n vertex subsets in ascending cardinality and keeps those
// that hit every edge with every member critical somewhere.  Cross-checks
// each hitting set against the already accepted minimal ones.  Guarded to
// n <= 25.
inline DualCollection enumerate_brute(const Hypergraph& h, const StopToken& stop = {}) {
  const int n = h.n();
  if (n > 25) throw std::invalid_argument("enumerate_brute: refusing n > 25");

  std::vector<std::uint32_t> edge_masks;
  edge_masks.reserve(h.m());
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (EdgeId i = 0; i < h.m(); ++i) {
    std::uint32_t m = detail::subset_mask(
        {h.stored_edge(i).begin(), h.stored_edge(i).end()});
    edge_masks.push_back(h.complemented() ? (full & ~m) : m);
  }

  DualCollection out;
  std::vector<std::uint32_t> accepted;
  std::uint64_t scanned = 0;
  for (int k = 0; k <= n; ++k) {
    // Gosper's hack over all n-bit masks of popcount k
    std::uint64_t s = (k == 0) ? 0 : ((1ull << k) - 1);
    while (true) {
      std::uint32_t mask = static_cast<std::uint32_t>(s);
      if ((++scanned & 0xffff) == 0 && stop.expired()) throw TimeoutError();

      bool hitting = true;
      std::uint32_t crit_union = 0;
      for (std::uint32_t em : edge_masks) {
        std::uint32_t isect = em & mask;
        if (isect == 0) {
          hitting = false;
          break;
        }
        if (std::popcount(isect) == 1) crit_union |= isect;
      }
      if (hitting) {
        // every member critical somewhere <=> no member removable
        bool minimal = (crit_union == mask);
        if (n <= 16) {
          // independent route: ascending cardinality makes containment
          // against already accepted sets a complete minimality test
          bool by_containment = true;
          for (std::uint32_t a : accepted)
            if ((a & mask) == a) {
              by_containment = false;
              break;
            }
          if (minimal != by_containment)
            throw std::logic_error("brute-force minimality routes disagree");
        }
        if (minimal) {
          accepted.push_back(mask);
          std::vector<Vertex> set;
          for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) set.push_back(v);
          out.sets.push_back(std::move(set));
        }
      }

      if (k == 0) break;
      std::uint64_t c = s & -s;
      std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
      if (s >= (1ull << n)) break;
    }
  }
  out.canonicalize();
  return out;
}

namespace detail {

inline std::vector<std::vector<std::vector<Vertex>>> dl_levels(const Hypergraph& h,
                                                               const StopToken& stop) {
  const int n = h.n();
  std::vector<std::vector<std::vector<Vertex>>> levels;
  std::vector<std::vector<Vertex>> d{{}};  // D_0 = { emptyset }
  levels.push_back(d);

  std::vector<std::uint8_t> in_s(n, 0);
  std::uint64_t processed = 0;
  for (EdgeId i = 0; i < h.m(); ++i) {
    const std::vector<Vertex> edge = h.semantic_edge(i);
    std::vector<std::uint8_t> in_edge(n, 0);
    for (Vertex v : edge) in_edge[v] = 1;

    // occurrence index over D_{i-1} for the inclusion test
    std::vector<std::vector<std::size_t>> occ(n);
    for (std::size_t k = 0; k < d.size(); ++k)
      for (Vertex v : d[k]) occ[v].push_back(k);

    std::vector<std::vector<Vertex>> next;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if ((++processed & 0x3ff) == 0 && stop.expired()) throw TimeoutError();
      const std::vector<Vertex>& s = d[k];
      bool hits = false;
      for (Vertex v : s)
        if (in_edge[v]) {
          hits = true;
          break;
        }
      if (hits) {
        next.push_back(s);
        continue;
      }
      for (Vertex v : s) in_s[v] = 1;
      for (Vertex v : edge) {
        // reject S u v when some other S' in D_{i-1} is contained in it;
        // such an S' must contain v and have everything else inside S
        bool dominated = false;
        for (std::size_t k2 : occ[v]) {
          if (k2 == k) continue;
          bool subset = true;
          for (Vertex u : d[k2])
            if (u != v && !in_s[u]) {
              subset = false;
              break;
            }
          if (subset) {
            dominated = true;
            break;
          }
        }
        if (!dominated) {
          std::vector<Vertex> t = s;
          t.insert(std::upper_bound(t.begin(), t.end(), v), v);
          next.push_back(std::move(t));
        }
      }
      for (Vertex v : s) in_s[v] = 0;
    }
    d = std::move(next);
    levels.push_back(d);
  }
  return levels;
}

}  // namespace detail

// DL: grows the hypergraph one edge at a time, maintaining the dual of the
// prefix.  Baseline, not a performance path.
inline DualCollection enumerate_dl(const Hypergraph& h, const StopToken& stop = {}) {
  DualCollection out{detail::dl_levels(h, stop).back()};
  out.canonicalize();
  return out;
}

// All intermediate duals D_0..D_m, canonicalized (for tests).
inline std::vector<DualCollection> dl_prefix_duals(const Hypergraph& h) {
  std::vector<DualCollection> out;
  for (auto& level : detail::dl_levels(h, {})) {
    DualCollection d{std::move(level)};
    d.canonicalize();
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace hgdual

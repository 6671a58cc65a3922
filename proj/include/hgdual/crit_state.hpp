#pragma once

// Incremental bookkeeping for uncov(S) and crit(v,S).
//
// Every edge lives in at most one of the sorted doubly linked lists: the
// uncov list, or one crit[u] list for a u in S.  Edges intersecting S in
// two or more vertices live in no list.  Adding a vertex relocates edges
// in O(|F(v)|) time (or by a walk of the live lists in complemented
// storage) and logs each relocation so the exact state, including list
// order, can be restored on undo.

#include <cstdint>
#include <optional>
#include <vector>

#include "hgdual/hypergraph.hpp"

namespace hgdual {

inline constexpr std::int32_t kOwnerUncov = -1;    // edge is in the uncov list
inline constexpr std::int32_t kOwnerCovered = -2;  // |F cap S| >= 2, in no list

struct UndoFrame {
  Vertex v = -1;
  std::uint32_t trail_begin = 0;
  // true when some crit[u], u in S before the add, lost its last edge;
  // S u {v} then fails the minimality condition
  bool emptied_crit = false;
};

class CritUncovState {
 public:
  explicit CritUncovState(const Hypergraph& h, const BitMatrix* bits = nullptr)
      : h_(&h), bits_(bits) {
    const int m = h.m();
    const int n = h.n();
    nodes_.resize(m + 1 + n);
    owner_.assign(m, kOwnerUncov);
    in_s_.assign(n, 0);
    // uncov: all edges ascending
    for (int i = 0; i <= m; ++i) {
      nodes_[i].prev = (i == 0) ? uncov_head() : i - 1;
      nodes_[i].next = (i == m) ? uncov_head() : i + 1;
    }
    if (m == 0) nodes_[uncov_head()] = {uncov_head(), uncov_head()};
    else {
      nodes_[uncov_head()].next = 0;
      nodes_[uncov_head()].prev = m - 1;
      nodes_[m - 1].next = uncov_head();
    }
    for (int u = 0; u < n; ++u) nodes_[crit_head(u)] = {crit_head(u), crit_head(u)};
  }

  const Hypergraph& hypergraph() const { return *h_; }
  EdgeId sentinel() const { return h_->m(); }

  std::span<const Vertex> set() const { return s_; }
  bool in_set(Vertex v) const { return in_s_[v] != 0; }

  bool uncov_empty() const { return nodes_[uncov_head()].next == uncov_head(); }

  EdgeId min_uncov() const {
    std::int32_t head = nodes_[uncov_head()].next;
    return head == uncov_head() ? sentinel() : head;
  }

  EdgeId min_crit(Vertex u) const {
    assert(in_set(u));
    std::int32_t head = nodes_[crit_head(u)].next;
    return head == crit_head(u) ? sentinel() : head;
  }

  bool crit_empty(Vertex u) const { return nodes_[crit_head(u)].next == crit_head(u); }

  // Some u in S with crit(u,S) empty, if the minimality condition fails.
  std::optional<Vertex> violated_vertex() const {
    for (Vertex u : s_)
      if (crit_empty(u)) return u;
    return std::nullopt;
  }

  bool minimality_holds() const { return !violated_vertex().has_value(); }

  // Update_crit_uncov: relocates every F in F(v) and pushes v onto S.
  UndoFrame add_vertex(Vertex v) {
    assert(!in_set(v));
    UndoFrame frame{v, static_cast<std::uint32_t>(trail_.size()), false};
    if (!h_->complemented()) {
      for (EdgeId e : h_->stored_occ(v)) relocate(e, v, frame);
    } else {
      // Dense storage: F(v) is huge, but uncov and the crit lists shrink as
      // S grows, so walk those and test membership against the co-edge.
      for (std::int32_t e = nodes_[uncov_head()].next; e != uncov_head();) {
        std::int32_t next = nodes_[e].next;
        if (edge_has(e, v)) relocate(e, v, frame);
        e = next;
      }
      for (Vertex u : s_) {
        for (std::int32_t e = nodes_[crit_head(u)].next; e != crit_head(u);) {
          std::int32_t next = nodes_[e].next;
          if (edge_has(e, v)) relocate(e, v, frame);
          e = next;
        }
      }
    }
    s_.push_back(v);
    in_s_[v] = 1;
    return frame;
  }

  // Strict LIFO undo; restores bit-equal state including list order.
  void undo(const UndoFrame& frame) {
    assert(!s_.empty() && s_.back() == frame.v);
    assert(trail_.size() >= frame.trail_begin);
    in_s_[frame.v] = 0;
    s_.pop_back();
    for (std::size_t k = trail_.size(); k-- > frame.trail_begin;) {
      const TrailEntry& t = trail_[k];
      if (owner_[t.edge] != kOwnerCovered) unlink(t.edge);
      // neighbors recorded at removal time are adjacent again now
      nodes_[t.prev_prev].next = t.edge;
      nodes_[t.prev_next].prev = t.edge;
      nodes_[t.edge] = {t.prev_prev, t.prev_next};
      owner_[t.edge] = t.prev_owner;
    }
    trail_.resize(frame.trail_begin);
  }

  // Allocation-free walk of the uncov list; ends at sentinel().
  EdgeId uncov_begin() const {
    std::int32_t e = nodes_[uncov_head()].next;
    return e == uncov_head() ? sentinel() : e;
  }
  EdgeId uncov_next(EdgeId e) const {
    std::int32_t nx = nodes_[e].next;
    return nx == uncov_head() ? sentinel() : nx;
  }

  // --- inspection (tests, oracles) ---

  std::vector<EdgeId> uncov_list() const { return collect(uncov_head()); }
  std::vector<EdgeId> crit_list(Vertex u) const { return collect(crit_head(u)); }
  std::int32_t owner(EdgeId e) const { return owner_[e]; }

  struct Snapshot {
    std::vector<std::int32_t> prev, next, owner;
    std::vector<Vertex> s;
    bool operator==(const Snapshot&) const = default;
  };
  Snapshot snapshot() const {
    Snapshot s;
    s.prev.reserve(nodes_.size());
    s.next.reserve(nodes_.size());
    for (const Node& nd : nodes_) {
      s.prev.push_back(nd.prev);
      s.next.push_back(nd.next);
    }
    s.owner = owner_;
    s.s = s_;
    return s;
  }

 private:
  struct Node {
    std::int32_t prev = 0, next = 0;
  };
  struct TrailEntry {
    EdgeId edge;
    std::int32_t prev_owner;
    std::int32_t prev_prev, prev_next;
  };

  std::int32_t uncov_head() const { return h_->m(); }
  std::int32_t crit_head(Vertex u) const { return h_->m() + 1 + u; }

  bool edge_has(EdgeId e, Vertex v) const {
    if (bits_) return bits_->test(e, v) != h_->complemented();
    return h_->contains(e, v);
  }

  void unlink(EdgeId e) {
    nodes_[nodes_[e].prev].next = nodes_[e].next;
    nodes_[nodes_[e].next].prev = nodes_[e].prev;
  }

  void append(std::int32_t head, EdgeId e) {
    std::int32_t tail = nodes_[head].prev;
    nodes_[tail].next = e;
    nodes_[head].prev = e;
    nodes_[e] = {tail, head};
  }

  void relocate(EdgeId e, Vertex v, UndoFrame& frame) {
    std::int32_t o = owner_[e];
    if (o == kOwnerCovered) return;
    trail_.push_back({e, o, nodes_[e].prev, nodes_[e].next});
    unlink(e);
    if (o == kOwnerUncov) {
      // uncov -> crit[v]; both walks visit edges in ascending id order, so
      // appending keeps crit[v] sorted
      append(crit_head(v), e);
      owner_[e] = v;
    } else {
      // crit[u] -> covered by two or more vertices
      owner_[e] = kOwnerCovered;
      if (crit_empty(o)) frame.emptied_crit = true;
    }
  }

  std::vector<EdgeId> collect(std::int32_t head) const {
    std::vector<EdgeId> out;
    for (std::int32_t e = nodes_[head].next; e != head; e = nodes_[e].next) out.push_back(e);
    return out;
  }

  const Hypergraph* h_;
  const BitMatrix* bits_;
  std::vector<Node> nodes_;          // 0..m-1 edges, m uncov head, m+1+u crit[u] head
  std::vector<std::int32_t> owner_;  // kOwnerUncov, kOwnerCovered, or u for crit[u]
  std::vector<std::uint8_t> in_s_;
  std::vector<Vertex> s_;            // insertion order
  std::vector<TrailEntry> trail_;
};

inline CritUncovState init_state(const Hypergraph& h, const BitMatrix* bits = nullptr) {
  return CritUncovState(h, bits);
}

}  // namespace hgdual

#pragma once

// Reverse-search enumeration of all minimal hitting sets.
//
// The search space is the family of minimal hitting sets of every prefix
// hypergraph {F_1..F_i}.  A nonempty S belongs to it exactly when
// min_crit(v,S) < min_uncov(S) for every v in S, and its parent is S minus
// the vertex attaining max_v min_crit(v,S).  The children of S are the sets
// S u {v}, v in F_i for i = min_uncov(S), that keep every other min_crit
// below i.  The traversal walks this tree depth first with an explicit
// frame stack.
//
// With pruning enabled, each candidate of F_i is test-added first: if the
// addition breaks the minimality condition, or completes a minimal hitting
// set (emitted on the spot when this node is its parent), the vertex is
// violating and stays masked for the whole subtree.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hgdual/crit_state.hpp"
#include "hgdual/sink.hpp"

namespace hgdual {

// Test-only observation points; both spans list vertices in insertion order.
struct RsHooks {
  virtual ~RsHooks() = default;
  virtual void node(std::span<const Vertex>) {}
  // child relation established: child = parent u {v}
  virtual void child(std::span<const Vertex> parent, Vertex v) {}
};

struct RsOptions {
  bool prune = true;
  const BitMatrix* bits = nullptr;  // enables O(1) membership tests
  StopToken stop;
  RsHooks* hooks = nullptr;
};

// Unique vertex whose removal gives the parent: argmax of min_crit over S.
// Pre: S nonempty and in the search space.
inline std::vector<Vertex> parent(const Hypergraph& h, std::span<const Vertex> s) {
  assert(!s.empty());
  CritUncovState st(h);
  for (Vertex v : s) st.add_vertex(v);
  EdgeId best = -1;
  Vertex drop = -1;
  for (Vertex v : s) {
    EdgeId mc = st.min_crit(v);
    assert(mc < st.min_uncov());  // S must belong to the search space
    if (mc > best) {
      best = mc;
      drop = v;
    }
  }
  std::vector<Vertex> out;
  out.reserve(s.size() - 1);
  for (Vertex v : s) {
    if (v != drop) out.push_back(v);
  }
  return out;
}

// Child test for v in F_i, i = min_uncov(S): after adding v, every crit
// head of the old S must stay below i.  The state is restored before
// returning.
inline bool is_child(CritUncovState& st, Vertex v) {
  EdgeId i = st.min_uncov();
  assert(i < st.sentinel());
  UndoFrame f = st.add_vertex(v);
  bool ok = true;
  auto s = st.set();
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    if (st.min_crit(s[k]) >= i) {
      ok = false;
      break;
    }
  }
  st.undo(f);
  return ok;
}

namespace detail {

class RsMachine {
 public:
  RsMachine(const Hypergraph& h, MhsSink& sink, const RsOptions& opts)
      : h_(h), sink_(&sink), opts_(opts), st_(h, opts.bits) {
    if (opts.prune) masked_.assign(h.n(), 0);
  }

  EnumStats run() {
    visit_root();
    while (!stack_.empty() && !stats_.aborted) step();
    return stats_;
  }

 private:
  struct Frame {
    EdgeId branch = 0;
    std::vector<Vertex> recurse;
    std::size_t next = 0;
    std::vector<Vertex> masked_here;
    UndoFrame undo{};
    bool active = false;
  };

  void visit_root() {
    ++stats_.nodes;
    if (opts_.hooks) opts_.hooks->node(st_.set());
    if (st_.uncov_empty()) {
      emit();
      return;
    }
    push_frame();
  }

  void step() {
    Frame& f = stack_.back();
    if (f.active) {
      st_.undo(f.undo);
      f.active = false;
    }
    if (f.next == f.recurse.size()) {
      for (Vertex v : f.masked_here) masked_[v] = 0;
      stack_.pop_back();
      return;
    }
    Vertex v = f.recurse[f.next++];
    f.undo = st_.add_vertex(v);
    f.active = true;

    ++stats_.nodes;
    if ((stats_.nodes & 0xfff) == 0 && opts_.stop.expired()) {
      stats_.aborted = true;
      return;
    }
    stats_.max_depth = std::max(stats_.max_depth, st_.set().size());
    if (opts_.hooks) {
      opts_.hooks->node(st_.set());
      opts_.hooks->child(st_.set().first(st_.set().size() - 1), v);
    }
    assert(search_space_invariant());

    if (st_.uncov_empty()) {
      // reached only without pruning; with pruning such children are
      // emitted during the parent's scan
      emit();
      return;
    }
    push_frame();
  }

  // Scans the candidates of the branch edge and prepares the child list.
  void push_frame() {
    stack_.emplace_back();
    Frame& f = stack_.back();
    f.branch = st_.min_uncov();
    gather_candidates(f.branch);

    const std::size_t parent_size = st_.set().size();
    for (Vertex v : cand_buf_) {
      if (opts_.prune && masked_[v]) continue;
      if ((++stats_.checks & 0xfff) == 0 && opts_.stop.expired()) {
        stats_.aborted = true;
        return;
      }
      UndoFrame uf = st_.add_vertex(v);
      bool child = true;
      auto s = st_.set();
      for (std::size_t k = 0; k < parent_size; ++k) {
        if (st_.min_crit(s[k]) >= f.branch) {
          child = false;
          break;
        }
      }
      if (!opts_.prune) {
        if (child) f.recurse.push_back(v);
      } else {
        bool mhs = st_.uncov_empty() && !uf.emptied_crit;
        bool violating = uf.emptied_crit || mhs;
        if (violating) {
          masked_[v] = 1;
          f.masked_here.push_back(v);
          ++stats_.pruned;
          if (mhs && child) {
            if (opts_.hooks) opts_.hooks->child(s.first(parent_size), v);
            emit();
          }
        } else if (child) {
          f.recurse.push_back(v);
        }
      }
      st_.undo(uf);
      if (stats_.aborted) return;
    }
  }

  // Vertices of the semantic branch edge, ascending.
  void gather_candidates(EdgeId i) {
    cand_buf_.clear();
    auto row = h_.stored_edge(i);
    if (!h_.complemented()) {
      cand_buf_.assign(row.begin(), row.end());
    } else {
      std::size_t k = 0;
      for (Vertex v = 0; v < h_.n(); ++v) {
        if (k < row.size() && row[k] == v) {
          ++k;
          continue;
        }
        cand_buf_.push_back(v);
      }
    }
  }

  void emit() {
    scratch_.assign(st_.set().begin(), st_.set().end());
    std::sort(scratch_.begin(), scratch_.end());
    ++stats_.emitted;
    if (!sink_->accept(scratch_)) stats_.aborted = true;
  }

  bool search_space_invariant() const {
    EdgeId i = st_.min_uncov();
    for (Vertex u : st_.set())
      if (st_.min_crit(u) >= i) return false;
    return true;
  }

  const Hypergraph& h_;
  MhsSink* sink_;
  RsOptions opts_;
  CritUncovState st_;
  EnumStats stats_;
  std::vector<Frame> stack_;
  std::vector<std::uint8_t> masked_;
  std::vector<Vertex> cand_buf_;
  std::vector<Vertex> scratch_;
};

}  // namespace detail

inline EnumStats enumerate_rs(const Hypergraph& h, MhsSink& sink, const RsOptions& opts = {}) {
  return detail::RsMachine(h, sink, opts).run();
}

}  // namespace hgdual

#pragma once

// Hill-climbing depth-first enumeration.
//
// Vertices are added one by one while the minimality condition holds.  A
// candidate set CAND rules out duplicates: each frame picks the uncovered
// edge with the fewest candidate vertices, removes C = CAND n F wholesale,
// and processes C from the highest id down, so that violating vertices are
// discovered before the recursive calls that could retry them.  A vertex
// whose addition breaks the minimality condition, or immediately completes
// a minimal hitting set, stays out of CAND for the rest of the frame; on
// frame exit CAND is exactly its entry value again.

#include <bit>
#include <cstdint>
#include <vector>

#include "hgdual/crit_state.hpp"
#include "hgdual/sink.hpp"

namespace hgdual {

// Word-mask candidate set over the vertex universe.
class CandList {
 public:
  explicit CandList(int n) : n_(n), words_((n + 63) / 64 + ((n == 0) ? 1 : 0), 0) {}

  // all vertices occurring in at least one semantic edge
  static CandList all_occurring(const Hypergraph& h) {
    CandList c(h.n());
    for (Vertex v = 0; v < h.n(); ++v)
      if (h.degree(v) > 0) c.add(v);
    return c;
  }

  bool contains(Vertex v) const { return (words_[v / 64] >> (v % 64)) & 1u; }
  void add(Vertex v) {
    assert(!contains(v));
    words_[v / 64] |= 1ull << (v % 64);
    ++count_;
  }
  void remove(Vertex v) {
    assert(contains(v));
    words_[v / 64] &= ~(1ull << (v % 64));
    --count_;
  }
  int count() const { return count_; }
  std::span<const std::uint64_t> words() const { return words_; }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(static_cast<Vertex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
    return out;
  }

  bool operator==(const CandList&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
  int count_ = 0;
};

namespace detail {

// |F_e n CAND| for the semantic edge e.
inline std::size_t cand_isect_count(const Hypergraph& h, const BitMatrix* bits, EdgeId e,
                                    const CandList& cand) {
  if (bits) {
    auto row = bits->row(e);
    auto cw = cand.words();
    std::size_t c = 0;
    for (std::size_t w = 0; w < row.size(); ++w) c += std::popcount(row[w] & cw[w]);
    return h.complemented() ? cand.count() - c : c;
  }
  std::size_t c = 0;
  for (Vertex v : h.stored_edge(e))
    if (cand.contains(v)) ++c;
  return h.complemented() ? cand.count() - c : c;
}

// CAND n F_e, ascending.
inline void cand_isect(const Hypergraph& h, const BitMatrix* bits, EdgeId e,
                       const CandList& cand, std::vector<Vertex>& out) {
  out.clear();
  if (!h.complemented()) {
    for (Vertex v : h.stored_edge(e))
      if (cand.contains(v)) out.push_back(v);
    return;
  }
  // candidates not in the co-edge
  auto cw = cand.words();
  for (std::size_t w = 0; w < cw.size(); ++w) {
    std::uint64_t bitsw = cw[w];
    if (bits) bitsw &= ~bits->row(e)[w];
    while (bitsw) {
      int b = std::countr_zero(bitsw);
      Vertex v = static_cast<Vertex>(w * 64 + b);
      if (bits || !std::binary_search(h.stored_edge(e).begin(), h.stored_edge(e).end(), v))
        out.push_back(v);
      bitsw &= bitsw - 1;
    }
  }
}

}  // namespace detail

struct DfsOptions {
  bool prune = true;
  const BitMatrix* bits = nullptr;
  StopToken stop;
};

// Uncovered edge minimizing |F n CAND|, ties to the smaller index.  A zero
// minimum means the caller dead-ends.  Pre: uncov nonempty.
inline EdgeId choose_branch_edge(const CritUncovState& st, const CandList& cand,
                                 const BitMatrix* bits = nullptr) {
  const Hypergraph& h = st.hypergraph();
  EdgeId best = -1;
  std::size_t best_count = 0;
  for (EdgeId e = st.uncov_begin(); e != st.sentinel(); e = st.uncov_next(e)) {
    std::size_t c = detail::cand_isect_count(h, bits, e, cand);
    if (best < 0 || c < best_count) {
      best = e;
      best_count = c;
      if (c == 0) break;
    }
  }
  assert(best >= 0);
  return best;
}

namespace detail {

class DfsMachine {
 public:
  DfsMachine(const Hypergraph& h, MhsSink& sink, const DfsOptions& opts)
      : h_(h), sink_(&sink), opts_(opts), st_(h, opts.bits),
        cand_(CandList::all_occurring(h)) {}

  EnumStats run() {
    ++stats_.nodes;
    if (st_.uncov_empty()) {
      emit();
      return stats_;
    }
    push_frame();
    while (!stack_.empty() && !stats_.aborted) step();
    assert(stats_.aborted || cand_ == CandList::all_occurring(h_));
    return stats_;
  }

 private:
  struct Frame {
    std::vector<Vertex> c;            // CAND n F, ascending; processed back to front
    std::vector<std::uint8_t> violating;
    std::size_t pos = 0;
    Vertex current = -1;
    UndoFrame undo{};
    bool active = false;
  };

  // Chooses the branch edge for the current state and pushes its frame.
  // Returns false when the node is a dead end.
  bool push_frame() {
    EdgeId e = choose_branch_edge(st_, cand_, opts_.bits);
    Frame f;
    cand_isect(h_, opts_.bits, e, cand_, f.c);
    if (f.c.empty()) return false;
    f.violating.assign(f.c.size(), 0);
    f.pos = f.c.size();
    for (Vertex v : f.c) cand_.remove(v);
    stack_.push_back(std::move(f));
    return true;
  }

  void step() {
    Frame& f = stack_.back();
    if (f.active) {
      st_.undo(f.undo);
      cand_.add(f.current);  // non-violating: back in CAND for later siblings
      f.active = false;
    }
    if (f.pos == 0) {
      // restore the entry CAND: vertices violating here stay pruned only
      // within this frame's subtree
      for (std::size_t k = 0; k < f.c.size(); ++k)
        if (f.violating[k]) cand_.add(f.c[k]);
      stack_.pop_back();
      return;
    }
    std::size_t idx = --f.pos;
    Vertex v = f.c[idx];
    ++stats_.checks;
    if ((stats_.checks & 0xfff) == 0 && opts_.stop.expired()) {
      stats_.aborted = true;
      return;
    }
    UndoFrame uf = st_.add_vertex(v);
    bool ok = !uf.emptied_crit;
    if (ok && st_.uncov_empty()) {
      emit();
      mark(f, idx, v);
      st_.undo(uf);
      return;
    }
    if (!ok) {
      ++stats_.pruned;
      mark(f, idx, v);
      st_.undo(uf);
      return;
    }
    // descend
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, st_.set().size());
    assert(st_.minimality_holds());
    Frame& fr = stack_.back();  // re-take: push below may reallocate
    fr.current = v;
    fr.undo = uf;
    fr.active = true;
    if (!push_frame()) {
      // dead end: no candidate can cover the chosen uncovered edge
      st_.undo(uf);
      cand_.add(v);
      stack_.back().active = false;
    }
  }

  void mark(Frame& f, std::size_t idx, Vertex v) {
    if (opts_.prune) {
      f.violating[idx] = 1;
    } else {
      cand_.add(v);
    }
  }

  void emit() {
    scratch_.assign(st_.set().begin(), st_.set().end());
    std::sort(scratch_.begin(), scratch_.end());
    ++stats_.emitted;
    if (!sink_->accept(scratch_)) stats_.aborted = true;
  }

  const Hypergraph& h_;
  MhsSink* sink_;
  DfsOptions opts_;
  CritUncovState st_;
  CandList cand_;
  EnumStats stats_;
  std::vector<Frame> stack_;
  std::vector<Vertex> scratch_;
};

}  // namespace detail

inline EnumStats enumerate_dfs(const Hypergraph& h, MhsSink& sink, const DfsOptions& opts = {}) {
  return detail::DfsMachine(h, sink, opts).run();
}

}  // namespace hgdual

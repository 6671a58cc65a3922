#pragma once

// Immutable hypergraph over a dense vertex universe.
//
// Vertices carry external integer labels; internally they are remapped to
// dense ids 0..n-1 preserving ascending label order.  Edges and per-vertex
// occurrence lists are stored CSR-style.  A hypergraph can be flagged as
// complemented: the stored rows are then the co-edges V \ F_i and every
// membership query is inverted, while the edge order and the universe stay
// the same.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgdual {

using Vertex = std::int32_t;  // dense internal id in [0, n)
using EdgeId = std::int32_t;  // position in the edge sequence
using Label = std::int64_t;   // external non-negative label

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class Hypergraph {
 public:
  Hypergraph() = default;

  // Builds a hypergraph from edges given as label sets.  Labels are
  // remapped to dense ids; duplicate edges collapse to the first
  // occurrence.  Vertices never occurring in any edge are not part of
  // the universe.  Edges must not repeat a label.
  static Hypergraph from_label_edges(const std::vector<std::vector<Label>>& label_edges) {
    std::vector<Label> labels;
    for (const auto& e : label_edges) labels.insert(labels.end(), e.begin(), e.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    auto id_of = [&](Label l) -> Vertex {
      auto it = std::lower_bound(labels.begin(), labels.end(), l);
      return static_cast<Vertex>(it - labels.begin());
    };

    std::vector<std::vector<Vertex>> edges;
    edges.reserve(label_edges.size());
    for (const auto& e : label_edges) {
      std::vector<Vertex> row;
      row.reserve(e.size());
      for (Label l : e) row.push_back(id_of(l));
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end())
        throw std::invalid_argument("duplicate vertex within one hyperedge");
      edges.push_back(std::move(row));
    }
    dedup_keep_first(edges);
    return from_internal(std::move(labels), std::move(edges), false);
  }

  // As above but with vertices already in internal-id form over a labelled
  // universe of size labels.size().  Used by the complement/minimize paths.
  static Hypergraph from_internal(std::vector<Label> labels,
                                  std::vector<std::vector<Vertex>> edges,
                                  bool complemented) {
    Hypergraph h;
    h.n_ = static_cast<int>(labels.size());
    h.labels_ = std::move(labels);
    h.complemented_ = complemented;

    const std::size_t m = edges.size();
    h.edge_off_.assign(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) h.edge_off_[i + 1] = h.edge_off_[i] + edges[i].size();
    h.edge_verts_.reserve(h.edge_off_[m]);
    for (auto& e : edges) {
      assert(std::is_sorted(e.begin(), e.end()));
      h.edge_verts_.insert(h.edge_verts_.end(), e.begin(), e.end());
    }
    h.stored_size_ = h.edge_verts_.size();

    // occurrence lists: transpose of the stored rows, ascending edge ids
    std::vector<std::size_t> cnt(h.n_ + 1, 0);
    for (Vertex v : h.edge_verts_) ++cnt[v + 1];
    h.occ_off_.assign(h.n_ + 1, 0);
    for (int v = 0; v < h.n_; ++v) h.occ_off_[v + 1] = h.occ_off_[v] + cnt[v + 1];
    h.occ_edges_.resize(h.stored_size_);
    std::vector<std::size_t> fill(h.occ_off_.begin(), h.occ_off_.end() - 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = h.edge_off_[i]; k < h.edge_off_[i + 1]; ++k)
        h.occ_edges_[fill[h.edge_verts_[k]]++] = static_cast<EdgeId>(i);
    return h;
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edge_off_.size()) - 1; }
  bool complemented() const { return complemented_; }

  // ||F|| of the semantic family.
  std::size_t total_size() const {
    return complemented_ ? static_cast<std::size_t>(n_) * m() - stored_size_ : stored_size_;
  }
  std::size_t stored_size() const { return stored_size_; }

  Label label(Vertex v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }

  // Stored row i (the co-edge when complemented).
  std::span<const Vertex> stored_edge(EdgeId i) const {
    return {edge_verts_.data() + edge_off_[i], edge_off_[i + 1] - edge_off_[i]};
  }
  // Stored occurrence list of v (edges whose stored row contains v).
  std::span<const EdgeId> stored_occ(Vertex v) const {
    return {occ_edges_.data() + occ_off_[v], occ_off_[v + 1] - occ_off_[v]};
  }

  std::size_t edge_size(EdgeId i) const {
    std::size_t s = edge_off_[i + 1] - edge_off_[i];
    return complemented_ ? n_ - s : s;
  }
  // number of semantic edges containing v
  std::size_t degree(Vertex v) const {
    std::size_t s = occ_off_[v + 1] - occ_off_[v];
    return complemented_ ? m() - s : s;
  }

  bool contains(EdgeId i, Vertex v) const {
    auto row = stored_edge(i);
    bool stored = std::binary_search(row.begin(), row.end(), v);
    return stored != complemented_;
  }

  // Semantic vertex list of edge i, ascending.
  std::vector<Vertex> semantic_edge(EdgeId i) const {
    auto row = stored_edge(i);
    if (!complemented_) return {row.begin(), row.end()};
    std::vector<Vertex> out;
    out.reserve(n_ - row.size());
    std::size_t k = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (k < row.size() && row[k] == v) {
        ++k;
        continue;
      }
      out.push_back(v);
    }
    return out;
  }

  std::vector<std::vector<Vertex>> semantic_edges() const {
    std::vector<std::vector<Vertex>> out(m());
    for (EdgeId i = 0; i < m(); ++i) out[i] = semantic_edge(i);
    return out;
  }

  // Same semantic family, plain (non-complemented) storage.
  Hypergraph materialized() const {
    if (!complemented_) return *this;
    return from_internal(labels_, semantic_edges(), false);
  }

  // Reorders the edge sequence; the vertex universe is untouched.
  Hypergraph with_edge_order(std::span<const EdgeId> perm) const {
    assert(perm.size() == static_cast<std::size_t>(m()));
    std::vector<std::vector<Vertex>> edges(m());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      auto row = stored_edge(perm[i]);
      edges[i].assign(row.begin(), row.end());
    }
    return from_internal(labels_, std::move(edges), complemented_);
  }

 private:
  static void dedup_keep_first(std::vector<std::vector<Vertex>>& edges) {
    std::vector<std::size_t> idx(edges.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (edges[a] != edges[b]) return edges[a] < edges[b];
      return a < b;
    });
    std::vector<char> drop(edges.size(), 0);
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (edges[idx[k]] == edges[idx[k - 1]]) drop[idx[k]] = 1;
    std::vector<std::vector<Vertex>> kept;
    kept.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!drop[i]) kept.push_back(std::move(edges[i]));
    edges = std::move(kept);
  }

  int n_ = 0;
  std::vector<Label> labels_;
  std::vector<std::size_t> edge_off_{0};
  std::vector<Vertex> edge_verts_;
  std::vector<std::size_t> occ_off_{0};
  std::vector<EdgeId> occ_edges_;
  std::size_t stored_size_ = 0;
  bool complemented_ = false;
};

// One n-bit row per edge mirroring the stored rows (co-edges when the
// hypergraph is complemented).
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(const Hypergraph& h)
      : words_(std::max<std::size_t>(1, (h.n() + 63) / 64)), rows_(h.m()) {
    bits_.assign(words_ * rows_, 0);
    for (EdgeId i = 0; i < h.m(); ++i)
      for (Vertex v : h.stored_edge(i)) bits_[i * words_ + v / 64] |= 1ull << (v % 64);
  }

  bool test(EdgeId i, Vertex v) const {
    return (bits_[i * words_ + v / 64] >> (v % 64)) & 1u;
  }
  std::span<const std::uint64_t> row(EdgeId i) const { return {bits_.data() + i * words_, words_}; }
  std::size_t words_per_row() const { return words_; }
  int rows() const { return rows_; }

  std::size_t popcount_row(EdgeId i) const {
    std::size_t c = 0;
    for (std::uint64_t w : row(i)) c += std::popcount(w);
    return c;
  }

 private:
  std::size_t words_ = 1;
  int rows_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline BitMatrix build_bit_matrix(const Hypergraph& h) { return BitMatrix(h); }

// Density rule for enabling the matrix in auto mode: ||F|| > n * |F| / 64.
inline bool should_use_bits(const Hypergraph& h) {
  return h.total_size() * 64 > static_cast<std::size_t>(h.n()) * static_cast<std::size_t>(h.m());
}

// Complement transform: edge i becomes V \ F_i, same universe and edge
// order.  Storage is shared, only the interpretation flips.
inline Hypergraph complement(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> edges(h.m());
  for (EdgeId i = 0; i < h.m(); ++i) {
    auto row = h.stored_edge(i);
    edges[i].assign(row.begin(), row.end());
  }
  return Hypergraph::from_internal(std::vector<Label>(h.labels().begin(), h.labels().end()),
                                   std::move(edges), !h.complemented());
}

// Drops every edge that strictly contains another edge.  The dual is
// unchanged; the universe shrinks to the vertices still observed.
inline Hypergraph remove_superset_edges(const Hypergraph& h) {
  const Hypergraph plain = h.materialized();
  const int m = plain.m();
  BitMatrix bits(plain);
  const std::size_t words = bits.words_per_row();

  std::vector<EdgeId> order(m);
  for (EdgeId i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    if (plain.edge_size(a) != plain.edge_size(b)) return plain.edge_size(a) < plain.edge_size(b);
    return a < b;
  });

  std::vector<char> keep(m, 0);
  std::vector<EdgeId> kept;
  for (EdgeId i : order) {
    bool dominated = false;
    auto ri = bits.row(i);
    for (EdgeId j : kept) {
      auto rj = bits.row(j);
      bool subset = true;
      for (std::size_t w = 0; w < words; ++w)
        if (rj[w] & ~ri[w]) {
          subset = false;
          break;
        }
      if (subset) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      keep[i] = 1;
      kept.push_back(i);
    }
  }

  std::vector<std::vector<Label>> label_edges;
  label_edges.reserve(kept.size());
  for (EdgeId i = 0; i < m; ++i) {
    if (!keep[i]) continue;
    std::vector<Label> e;
    for (Vertex v : plain.stored_edge(i)) e.push_back(plain.label(v));
    label_edges.push_back(std::move(e));
  }
  return Hypergraph::from_label_edges(label_edges);
}

// --- text format -----------------------------------------------------------
//
// One hyperedge per line, whitespace-separated decimal labels.  Blank lines
// and lines starting with '#' are skipped; CRLF is accepted, LF is emitted.

inline Hypergraph parse_hypergraph(std::istream& in) {
  std::vector<std::vector<Label>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;

    std::vector<Label> edge;
    std::size_t i = pos;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      Label value = 0;
      for (std::size_t k = start; k < i; ++k) {
        char c = line[k];
        if (c < '0' || c > '9')
          throw ParseError(lineno, "malformed token '" + line.substr(start, i - start) + "'");
        if (value > (std::numeric_limits<Label>::max() - (c - '0')) / 10)
          throw ParseError(lineno, "label out of range");
        value = value * 10 + (c - '0');
      }
      edge.push_back(value);
    }
    std::vector<Label> sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(lineno, "duplicate vertex within one hyperedge");
    edges.push_back(std::move(edge));
  }
  return Hypergraph::from_label_edges(edges);
}

inline void write_hypergraph(const Hypergraph& h, std::ostream& out) {
  std::string buf;
  for (EdgeId i = 0; i < h.m(); ++i) {
    auto edge = h.semantic_edge(i);
    if (edge.empty())
      throw std::logic_error("empty hyperedge is not representable in the text format");
    buf.clear();
    for (std::size_t k = 0; k < edge.size(); ++k) {
      if (k) buf += ' ';
      buf += std::to_string(h.label(edge[k]));
    }
    buf += '\n';
    out << buf;
  }
}

// Writes vertex sets (internal ids) as label lines, one set per line.
template <typename SetRange>
void write_sets(const Hypergraph& h, const SetRange& sets, std::ostream& out) {
  std::string buf;
  std::vector<Vertex> scratch;
  for (const auto& s : sets) {
    scratch.assign(s.begin(), s.end());
    std::sort(scratch.begin(), scratch.end());
    buf.clear();
    for (std::size_t k = 0; k < scratch.size(); ++k) {
      Vertex v = scratch[k];
      if (v < 0 || v >= h.n()) throw std::logic_error("vertex id out of range in write_sets");
      if (k) buf += ' ';
      buf += std::to_string(h.label(v));
    }
    buf += '\n';
    out << buf;
  }
}

}  // namespace hgdual

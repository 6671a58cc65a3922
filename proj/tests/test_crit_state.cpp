#include <catch2/catch.hpp>

#include <random>

#include "test_support.hpp"

using namespace hgdual;
using test_support::example_s2;
using test_support::mk;
using test_support::oracle_crit;
using test_support::oracle_uncov;

namespace {

// uncov and every crit list must equal their definition, lists ascending,
// owner tags partitioning the edges, and sum |crit| <= m.
void check_against_oracle(const Hypergraph& h, CritUncovState& st) {
  std::vector<Vertex> s(st.set().begin(), st.set().end());
  auto uncov = st.uncov_list();
  REQUIRE(std::is_sorted(uncov.begin(), uncov.end()));
  REQUIRE(uncov == oracle_uncov(h, s));

  std::size_t crit_total = 0;
  for (Vertex u : s) {
    auto crit = st.crit_list(u);
    REQUIRE(std::is_sorted(crit.begin(), crit.end()));
    REQUIRE(crit == oracle_crit(h, s, u));
    crit_total += crit.size();
  }
  REQUIRE(crit_total <= static_cast<std::size_t>(h.m()));

  std::size_t covered = 0;
  for (EdgeId e = 0; e < h.m(); ++e)
    if (st.owner(e) == kOwnerCovered) ++covered;
  REQUIRE(uncov.size() + crit_total + covered == static_cast<std::size_t>(h.m()));
}

}  // namespace

TEST_CASE("init state: everything uncovered") {
  Hypergraph h = example_s2();
  CritUncovState st(h);
  REQUIRE(st.uncov_list() == std::vector<EdgeId>{0, 1, 2});
  REQUIRE(st.min_uncov() == 0);
  REQUIRE(st.set().empty());

  Hypergraph empty = mk({});
  CritUncovState st_empty(empty);
  REQUIRE(st_empty.uncov_empty());
  REQUIRE(st_empty.min_uncov() == 0);  // sentinel m = 0

  Hypergraph m4 = gen_matching(4);
  CritUncovState st_m4(m4);
  REQUIRE(st_m4.uncov_list() == std::vector<EdgeId>{0, 1});
}

TEST_CASE("crit evolution on the running example") {
  Hypergraph h = example_s2();
  CritUncovState st(h);
  // S = {1,3}: crit(1) = {{1,2}}, crit(3) = {{2,3,4}}, uncov empty
  auto f1 = st.add_vertex(0);
  auto f3 = st.add_vertex(2);
  REQUIRE(st.crit_list(0) == std::vector<EdgeId>{0});
  REQUIRE(st.crit_list(2) == std::vector<EdgeId>{2});
  REQUIRE(st.uncov_empty());
  REQUIRE(st.minimality_holds());
  REQUIRE_FALSE(st.violated_vertex().has_value());

  // S = {1,3,4}: crit(1) = {{1,2}}, crit(3) = crit(4) = {}
  auto f4 = st.add_vertex(3);
  REQUIRE(st.crit_list(0) == std::vector<EdgeId>{0});
  REQUIRE(st.crit_list(2).empty());
  REQUIRE(st.crit_list(3).empty());
  auto bad = st.violated_vertex();
  REQUIRE(bad.has_value());
  REQUIRE((*bad == 2 || *bad == 3));  // either 3 or 4 is removable

  st.undo(f4);
  st.undo(f3);
  st.undo(f1);
  REQUIRE(st.set().empty());
  REQUIRE(st.uncov_list() == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("min_uncov and min_crit heads") {
  Hypergraph h = example_s2();
  CritUncovState st(h);

  auto f1 = st.add_vertex(0);  // S = {1}
  REQUIRE(st.min_uncov() == 2);

  auto f2 = st.add_vertex(1);  // S = {1,2}
  REQUIRE(st.min_crit(0) == 1);
  REQUIRE(st.min_crit(1) == 2);
  st.undo(f2);

  auto f3 = st.add_vertex(2);  // S = {1,3}
  REQUIRE(st.min_crit(0) == 0);
  REQUIRE(st.min_uncov() == st.sentinel());  // hitting state
  st.undo(f3);
  st.undo(f1);
}

TEST_CASE("adding an isolated vertex logs nothing") {
  // vertex 5 occurs in no edge: constructed programmatically
  Hypergraph h = Hypergraph::from_internal({1, 2, 3}, {{0, 1}}, false);
  CritUncovState st(h);
  auto before = st.snapshot();
  auto f = st.add_vertex(2);
  REQUIRE(st.crit_list(2).empty());
  REQUIRE(st.uncov_list() == std::vector<EdgeId>{0});
  st.undo(f);
  REQUIRE(st.snapshot() == before);
}

TEST_CASE("add/undo round-trips to bit-equal state") {
  Hypergraph h = example_s2();
  CritUncovState st(h);
  auto s0 = st.snapshot();
  auto f0 = st.add_vertex(1);
  auto s1 = st.snapshot();
  auto f1 = st.add_vertex(2);
  auto s2 = st.snapshot();
  auto f2 = st.add_vertex(0);
  st.undo(f2);
  REQUIRE(st.snapshot() == s2);
  st.undo(f1);
  REQUIRE(st.snapshot() == s1);
  st.undo(f0);
  REQUIRE(st.snapshot() == s0);
}

TEST_CASE("randomized add/undo walks match the from-scratch oracle") {
  std::mt19937_64 rng(12345);
  for (int instance = 0; instance < 12; ++instance) {
    Hypergraph h = gen_random(4 + instance % 8, 3 + instance, 0.35, 1000 + instance);
    BitMatrix bits = build_bit_matrix(h);
    bool use_bits = instance % 2 == 0;
    CritUncovState st(h, use_bits ? &bits : nullptr);

    std::vector<UndoFrame> frames;
    std::vector<CritUncovState::Snapshot> snaps{st.snapshot()};
    for (int step = 0; step < 200; ++step) {
      bool can_add = st.set().size() < static_cast<std::size_t>(h.n());
      bool do_add = can_add && (frames.empty() || rng() % 3 != 0);
      if (do_add) {
        std::vector<Vertex> outside;
        for (Vertex v = 0; v < h.n(); ++v)
          if (!st.in_set(v)) outside.push_back(v);
        Vertex v = outside[rng() % outside.size()];
        // monotone shrink: crit[u] only loses edges
        std::vector<std::vector<EdgeId>> before;
        std::vector<Vertex> s_before(st.set().begin(), st.set().end());
        for (Vertex u : s_before) before.push_back(st.crit_list(u));
        frames.push_back(st.add_vertex(v));
        snaps.push_back(st.snapshot());
        for (std::size_t k = 0; k < s_before.size(); ++k) {
          auto after = st.crit_list(s_before[k]);
          REQUIRE(std::includes(before[k].begin(), before[k].end(), after.begin(),
                                after.end()));
        }
      } else if (!frames.empty()) {
        st.undo(frames.back());
        frames.pop_back();
        snaps.pop_back();
        REQUIRE(st.snapshot() == snaps.back());
      }
      check_against_oracle(h, st);
    }
  }
}

TEST_CASE("complemented storage maintains the same state") {
  std::mt19937_64 rng(999);
  for (int instance = 0; instance < 6; ++instance) {
    Hypergraph plain = gen_random(8, 10, 0.6, 2000 + instance);
    Hypergraph dense = complement(complement(plain).materialized());
    REQUIRE(dense.complemented());
    BitMatrix bits = build_bit_matrix(dense);
    CritUncovState st(dense, instance % 2 ? &bits : nullptr);

    std::vector<UndoFrame> frames;
    for (int step = 0; step < 120; ++step) {
      bool can_add = st.set().size() < static_cast<std::size_t>(dense.n());
      if (can_add && (frames.empty() || rng() % 3 != 0)) {
        std::vector<Vertex> outside;
        for (Vertex v = 0; v < dense.n(); ++v)
          if (!st.in_set(v)) outside.push_back(v);
        frames.push_back(st.add_vertex(outside[rng() % outside.size()]));
      } else if (!frames.empty()) {
        st.undo(frames.back());
        frames.pop_back();
      }
      check_against_oracle(dense, st);
    }
  }
}

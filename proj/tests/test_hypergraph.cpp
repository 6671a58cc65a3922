#include <catch2/catch.hpp>

#include <sstream>

#include "test_support.hpp"

using namespace hgdual;
using test_support::mk;

TEST_CASE("parse: labels remap to dense ids in ascending label order") {
  std::istringstream in("1 2\n1 3\n2 3 4\n");
  Hypergraph h = parse_hypergraph(in);
  REQUIRE(h.n() == 4);
  REQUIRE(h.m() == 3);
  REQUIRE(h.label(0) == 1);
  REQUIRE(h.label(3) == 4);
  auto e0 = h.semantic_edge(0);
  auto e2 = h.semantic_edge(2);
  REQUIRE(e0 == std::vector<Vertex>{0, 1});
  REQUIRE(e2 == std::vector<Vertex>{1, 2, 3});
  REQUIRE(h.total_size() == 7);
}

TEST_CASE("parse: empty input gives the empty hypergraph") {
  std::istringstream in("");
  Hypergraph h = parse_hypergraph(in);
  REQUIRE(h.n() == 0);
  REQUIRE(h.m() == 0);
}

TEST_CASE("parse: duplicate lines collapse to one edge") {
  std::istringstream in("5 7\n5 7\n");
  Hypergraph h = parse_hypergraph(in);
  REQUIRE(h.m() == 1);
  REQUIRE(h.n() == 2);
}

TEST_CASE("parse: comments, blank lines, CRLF, unsorted input") {
  std::istringstream in("# a comment\n\n3 1\r\n\n2 3\n");
  Hypergraph h = parse_hypergraph(in);
  REQUIRE(h.m() == 2);
  REQUIRE(h.semantic_edge(0) == std::vector<Vertex>{0, 2});  // labels 1 3
}

TEST_CASE("parse: malformed token reports the line") {
  std::istringstream in("1 2\n3 x\n");
  try {
    parse_hypergraph(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 2);
  }
}

TEST_CASE("parse: duplicate vertex within a line is an error") {
  std::istringstream in("1 2 1\n");
  REQUIRE_THROWS_AS(parse_hypergraph(in), ParseError);
}

TEST_CASE("write_sets formats label lines") {
  Hypergraph h = test_support::example_s2();
  std::ostringstream out;
  write_sets(h, std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}, out);
  REQUIRE(out.str() == "1 2\n2 3\n");

  std::ostringstream empty;
  write_sets(h, std::vector<std::vector<Vertex>>{}, empty);
  REQUIRE(empty.str().empty());
}

TEST_CASE("write_sets maps arbitrary labels") {
  Hypergraph h = mk({{10, 17}, {23, 42}});  // ids 0..3
  std::ostringstream out;
  write_sets(h, std::vector<std::vector<Vertex>>{{3}}, out);
  REQUIRE(out.str() == "42\n");
}

TEST_CASE("write then parse round-trips the semantic family") {
  Hypergraph h = gen_random(9, 12, 0.4, 7);
  std::ostringstream out;
  write_hypergraph(h, out);
  std::istringstream in(out.str());
  Hypergraph h2 = parse_hypergraph(in);
  REQUIRE(h2.m() == h.m());
  for (EdgeId i = 0; i < h.m(); ++i) REQUIRE(h2.semantic_edge(i) == h.semantic_edge(i));
}

TEST_CASE("remove_superset_edges keeps only inclusion-minimal edges") {
  REQUIRE(remove_superset_edges(mk({{1, 2}, {1, 2, 3}})).m() == 1);

  Hypergraph antichain = test_support::example_s2();
  Hypergraph kept = remove_superset_edges(antichain);
  REQUIRE(kept.m() == 3);
  for (EdgeId i = 0; i < 3; ++i)
    REQUIRE(kept.semantic_edge(i) == antichain.semantic_edge(i));

  Hypergraph h = remove_superset_edges(mk({{1}, {2}, {1, 2}}));
  REQUIRE(h.m() == 2);
  REQUIRE(h.semantic_edge(0).size() == 1);
  REQUIRE(h.semantic_edge(1).size() == 1);
}

TEST_CASE("remove_superset_edges is idempotent and yields an antichain") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Hypergraph h = gen_random(8, 14, 0.3, seed);
    Hypergraph once = remove_superset_edges(h);
    Hypergraph twice = remove_superset_edges(once);
    REQUIRE(once.m() == twice.m());
    // pairwise inclusion check by brute force
    for (EdgeId a = 0; a < once.m(); ++a)
      for (EdgeId b = 0; b < once.m(); ++b) {
        if (a == b) continue;
        auto ea = once.semantic_edge(a);
        auto eb = once.semantic_edge(b);
        bool subset = std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
        REQUIRE_FALSE(subset);
      }
  }
}

TEST_CASE("complement flips membership, keeps universe and edge order") {
  // n=3 universe, edges {{1,2},{1,2,3}}: co-edges {3} and {}
  Hypergraph h3 = mk({{1, 2}, {1, 2, 3}});
  Hypergraph c = complement(h3);
  REQUIRE(c.n() == 3);
  REQUIRE(c.m() == 2);
  REQUIRE(c.semantic_edge(0) == std::vector<Vertex>{2});
  REQUIRE(c.semantic_edge(1).empty());
  REQUIRE(c.total_size() == 3u * 2 - h3.total_size());
}

TEST_CASE("complement is an involution") {
  Hypergraph h = test_support::example_s2();
  Hypergraph cc = complement(complement(h));
  REQUIRE(cc.m() == h.m());
  REQUIRE_FALSE(cc.complemented());
  for (EdgeId i = 0; i < h.m(); ++i) REQUIRE(cc.semantic_edge(i) == h.semantic_edge(i));
}

TEST_CASE("complement of the running example") {
  Hypergraph c = complement(test_support::example_s2());
  // co-edges of {{1,2},{1,3},{2,3,4}} on ids 0..3: {2,3},{1,3},{0}
  REQUIRE(c.semantic_edge(0) == std::vector<Vertex>{2, 3});
  REQUIRE(c.semantic_edge(1) == std::vector<Vertex>{1, 3});
  REQUIRE(c.semantic_edge(2) == std::vector<Vertex>{0});
}

TEST_CASE("bit matrix mirrors the stored rows") {
  Hypergraph h = test_support::example_s2();
  BitMatrix bits = build_bit_matrix(h);
  REQUIRE(bits.test(0, 0));
  REQUIRE(bits.test(0, 1));
  REQUIRE_FALSE(bits.test(0, 2));
  REQUIRE(bits.test(2, 1));
  REQUIRE(bits.test(2, 2));
  REQUIRE(bits.test(2, 3));
  REQUIRE(bits.popcount_row(2) == 3);

  Hypergraph empty = mk({});
  BitMatrix none = build_bit_matrix(empty);
  REQUIRE(none.rows() == 0);
}

TEST_CASE("auto bit-matrix rule: total size beyond n*m/64") {
  // n=64, m=10, ||F||=11: 11 > 10 enables bits
  std::vector<Label> big;
  for (int l = 1; l <= 64; ++l) big.push_back(l);
  Hypergraph h = Hypergraph::from_internal(big, {{0, 1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}}, false);
  REQUIRE(h.n() == 64);
  REQUIRE(h.m() == 10);
  REQUIRE(h.total_size() == 11);
  REQUIRE(should_use_bits(h));

  Hypergraph h2 = Hypergraph::from_internal(big, {{0}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}}, false);
  REQUIRE(h2.total_size() == 10);
  REQUIRE_FALSE(should_use_bits(h2));
}

TEST_CASE("transpose consistency: occ, edges and matrix agree") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Hypergraph h = gen_random(10, 15, 0.35, seed);
    BitMatrix bits = build_bit_matrix(h);
    for (Vertex v = 0; v < h.n(); ++v)
      for (EdgeId i = 0; i < h.m(); ++i) {
        auto occ = h.stored_occ(v);
        bool in_occ = std::binary_search(occ.begin(), occ.end(), i);
        REQUIRE(in_occ == h.contains(i, v));
        REQUIRE(in_occ == bits.test(i, v));
      }
  }
}

TEST_CASE("materialized preserves semantics of complemented storage") {
  Hypergraph h = gen_random(8, 6, 0.6, 3);
  Hypergraph c = complement(h);
  Hypergraph cm = c.materialized();
  REQUIRE_FALSE(cm.complemented());
  REQUIRE(cm.m() == c.m());
  for (EdgeId i = 0; i < c.m(); ++i) REQUIRE(cm.semantic_edge(i) == c.semantic_edge(i));
}

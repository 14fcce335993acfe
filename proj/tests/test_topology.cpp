#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <utility>

#include "vqh/topology.hpp"

using namespace vqh;

namespace {

using EdgeSet = std::set<std::pair<std::uint32_t, std::uint32_t>>;

std::pair<std::uint32_t, std::uint32_t> ordered(std::uint32_t a, std::uint32_t b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Independent oracle: build the edge set straight from the recursive
// definition (two relabeled copies joined level by level), never through the
// closed-form adjacency rule under test.
EdgeSet recursive_vq_edges(int n) {
  if (n == 1) return {{0u, 1u}};
  EdgeSet sub = recursive_vq_edges(n - 1);
  EdgeSet out;
  const std::uint32_t top = 1u << (n - 1);
  for (auto [a, b] : sub) {
    out.insert({a, b});
    out.insert({a | top, b | top});
  }
  const std::set<std::pair<unsigned, unsigned>> pair_rule = {{0, 0}, {1, 1}, {2, 3}, {3, 2}};
  for (std::uint32_t x = 0; x < top; ++x) {
    for (std::uint32_t y = 0; y < top; ++y) {
      bool joined;
      if (n % 3 != 0) {
        joined = x == y;
      } else {
        const std::uint32_t below = n >= 3 ? ((1u << (n - 3)) - 1u) : 0u;
        unsigned xp = (x >> (n - 3)) & 3u;
        unsigned yp = (y >> (n - 3)) & 3u;
        joined = (x & below) == (y & below) && pair_rule.count({xp, yp}) > 0;
      }
      if (joined) out.insert({x, y | top});
    }
  }
  return out;
}

EdgeSet graph_edges(const Graph& g) {
  EdgeSet out;
  g.for_each_edge([&](const VertexLabel& x, const VertexLabel& y) {
    out.insert(ordered(x.bits(), y.bits()));
  });
  return out;
}

VertexLabel L(std::string_view s) { return VertexLabel::parse(s); }

}  // namespace

TEST_CASE("labels parse and render MSB-first") {
  CHECK(L("011").bits() == 3u);
  CHECK(L("011").dimension() == 3);
  CHECK(L("011").str() == "011");
  CHECK(L("100").bits() == 4u);
  CHECK(L("100").bit(3));
  CHECK_FALSE(L("100").bit(1));
  CHECK(L("0101").flipped(4).str() == "1101");
  CHECK_THROWS_AS(VertexLabel::parse("01x"), std::invalid_argument);
  CHECK_THROWS_AS(VertexLabel::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(VertexLabel(3, 8u), std::invalid_argument);
  CHECK_THROWS_AS(VertexLabel(0, 0u), std::out_of_range);
}

TEST_CASE("adjacency rule matches the figures") {
  CHECK(vq_adjacent(L("011"), L("110")));
  CHECK_FALSE(vq_adjacent(L("011"), L("111")));
  CHECK(vq_adjacent(L("0101"), L("1101")));
  CHECK_THROWS_AS(vq_adjacent(L("011"), L("011")), std::invalid_argument);
  CHECK_THROWS_AS(vq_adjacent(L("011"), L("0110")), std::invalid_argument);
}

TEST_CASE("matching partners") {
  CHECK(transversal_neighbor(L("010"), 3) == L("111"));
  CHECK(transversal_neighbor(L("000"), 3) == L("100"));
  CHECK(transversal_neighbor(L("010000"), 6) == L("111000"));
  CHECK_THROWS_AS(transversal_neighbor(L("010"), 4), std::out_of_range);
  CHECK_THROWS_AS(transversal_neighbor(L("010"), 0), std::out_of_range);

  // The level-6 partner is the unique neighbor whose top difference is 6.
  int hits = 0;
  for (std::uint32_t v = 0; v < 64; ++v) {
    VertexLabel y(6, v);
    if (y == L("010000")) continue;
    if (vq_adjacent(L("010000"), y) && edge_level(L("010000"), y) == 6) {
      CHECK(y == L("111000"));
      ++hits;
    }
  }
  CHECK(hits == 1);
}

TEST_CASE("neighbor sets") {
  auto ns = vq_neighbors(L("000"));
  CHECK(ns == std::vector<VertexLabel>{L("001"), L("010"), L("100")});
  auto ns7 = vq_neighbors(L("111"));
  CHECK(ns7 == std::vector<VertexLabel>{L("010"), L("101"), L("110")});
  CHECK(vq_neighbors(L("0")) == std::vector<VertexLabel>{L("1")});
}

TEST_CASE("edge classification") {
  auto crossing = classify_edge(L("011"), L("110"));
  CHECK(crossing.level == 3);
  CHECK(crossing.cls == EdgeClass::Crossing);
  auto normal = classify_edge(L("000"), L("100"));
  CHECK(normal.level == 3);
  CHECK(normal.cls == EdgeClass::Normal);
  auto top4 = classify_edge(L("0101"), L("1101"));
  CHECK(top4.level == 4);
  CHECK(top4.cls == EdgeClass::Normal);
  CHECK(top4.a == L("0101"));
  CHECK_THROWS_AS(classify_edge(L("011"), L("111")), std::invalid_argument);
}

TEST_CASE("crossing edges satisfy their structural invariant") {
  for (int n = 3; n <= 8; ++n) {
    Graph g(Family::VQ, n);
    g.for_each_edge([&](const VertexLabel& x, const VertexLabel& y) {
      auto e = classify_edge(x, y);
      if (e.cls == EdgeClass::Crossing) {
        CHECK(e.level % 3 == 0);
        CHECK(x.bit(e.level - 1));
        CHECK(y.bit(e.level - 1));
        CHECK(x.bit(e.level - 2) != y.bit(e.level - 2));
      }
    });
  }
}

TEST_CASE("closed-form adjacency equals the recursive construction") {
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(graph_edges(Graph(Family::VQ, n)) == recursive_vq_edges(n));
  }
}

TEST_CASE("regularity, edge counts, no triangles") {
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    Graph g(Family::VQ, n);
    std::uint64_t edges = 0;
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
      VertexLabel x = g.label(static_cast<std::uint32_t>(v));
      auto ns = vq_neighbors(x);
      REQUIRE(ns.size() == static_cast<std::size_t>(n));
      for (std::size_t i = 1; i < ns.size(); ++i) REQUIRE(ns[i - 1] < ns[i]);
      edges += ns.size();
      for (std::size_t i = 0; i < ns.size(); ++i) {
        for (std::size_t j = i + 1; j < ns.size(); ++j) {
          REQUIRE_FALSE(vq_adjacent(ns[i], ns[j]));  // no triangle through x
        }
      }
    }
    CHECK(edges / 2 == g.edge_count());
    CHECK(g.edge_count() == static_cast<std::uint64_t>(n) << (n - 1));
  }
}

TEST_CASE("adjacency is symmetric and partners are involutions") {
  for (int n = 1; n <= 9; ++n) {
    Graph g(Family::VQ, n);
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
      VertexLabel x = g.label(static_cast<std::uint32_t>(v));
      for (int m = 1; m <= n; ++m) {
        VertexLabel y = transversal_neighbor(x, m);
        CHECK(transversal_neighbor(y, m) == x);
        CHECK(vq_adjacent(x, y));
        CHECK(vq_adjacent(y, x));
        CHECK(edge_level(x, y) == m);
      }
    }
  }
}

TEST_CASE("the top-level matching is a bijection between the halves") {
  for (int n : {3, 4, 6, 9}) {
    std::set<std::uint32_t> images;
    for (std::uint32_t v = 0; v < (1u << (n - 1)); ++v) {
      VertexLabel x(n, v);
      REQUIRE(half_of(x) == Half::Left);
      VertexLabel y = transversal_neighbor(x, n);
      REQUIRE(half_of(y) == Half::Right);
      images.insert(y.bits());
    }
    CHECK(images.size() == (1u << (n - 1)));
  }
}

TEST_CASE("each fixed-top-bit half induces the one-smaller graph") {
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    EdgeSet small = graph_edges(Graph(Family::VQ, n - 1));
    for (std::uint32_t top : {0u, 1u << (n - 1)}) {
      EdgeSet induced;
      Graph g(Family::VQ, n);
      g.for_each_edge([&](const VertexLabel& x, const VertexLabel& y) {
        if ((x.bits() & (1u << (n - 1))) == top && (y.bits() & (1u << (n - 1))) == top) {
          induced.insert(ordered(x.bits() & ~(1u << (n - 1)), y.bits() & ~(1u << (n - 1))));
        }
      });
      CHECK(induced == small);
    }
  }
}

TEST_CASE("plain hypercube adjacency") {
  CHECK(q_adjacent(L("000"), L("100")));
  CHECK_FALSE(q_adjacent(L("000"), L("110")));
  CHECK(q_adjacent(L("01"), L("11")));
  Graph q3(Family::Q, 3);
  CHECK(graph_edges(q3).size() == 12);
}

TEST_CASE("crossed cube rule and per-level neighbor map agree") {
  CHECK(cq_adjacent(L("0"), L("1")));
  CHECK_FALSE(cq_adjacent(L("00"), L("11")));
  for (int n = 1; n <= 8; ++n) {
    Graph g(Family::CQ, n);
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
      VertexLabel x = g.label(static_cast<std::uint32_t>(v));
      std::set<std::uint32_t> by_rule;
      for (std::uint64_t w = 0; w < g.vertex_count(); ++w) {
        if (w == v) continue;
        VertexLabel y = g.label(static_cast<std::uint32_t>(w));
        if (cq_adjacent(x, y)) {
          CHECK(cq_adjacent(y, x));
          by_rule.insert(y.bits());
        }
      }
      std::set<std::uint32_t> by_map;
      for (int j = 1; j <= n; ++j) {
        VertexLabel y = cq_neighbor(x, j);
        CHECK(cq_neighbor(y, j) == x);
        by_map.insert(y.bits());
      }
      REQUIRE(by_rule == by_map);
      REQUIRE(by_map.size() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("crossed cube coincides with the varietal labels up to n = 3") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(graph_edges(Graph(Family::CQ, n)) == graph_edges(Graph(Family::VQ, n)));
  }
  // They genuinely diverge afterwards.
  CHECK(graph_edges(Graph(Family::CQ, 4)) != graph_edges(Graph(Family::VQ, 4)));
}

TEST_CASE("graph construction sizes") {
  Graph g3(Family::VQ, 3);
  CHECK(g3.vertex_count() == 8);
  CHECK(g3.edge_count() == 12);
  CHECK(graph_edges(g3) ==
        EdgeSet{{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 7}, {3, 6}, {4, 5},
                {4, 6}, {5, 7}, {6, 7}});
  Graph g4(Family::VQ, 4);
  CHECK(g4.vertex_count() == 16);
  CHECK(g4.edge_count() == 32);
  CHECK(graph_edges(g4).size() == 32);
  Graph g1(Family::VQ, 1);
  CHECK(graph_edges(g1) == EdgeSet{{0, 1}});
  CHECK_THROWS_AS(Graph(Family::VQ, 0), std::out_of_range);
  CHECK_THROWS_AS(Graph(Family::VQ, 40), std::out_of_range);
}

TEST_CASE("pair substitution") {
  CHECK(pair_allowed(0b00, 0b00));
  CHECK(pair_allowed(0b01, 0b01));
  CHECK(pair_allowed(0b10, 0b11));
  CHECK(pair_allowed(0b11, 0b10));
  CHECK_FALSE(pair_allowed(0b10, 0b10));
  CHECK_FALSE(pair_allowed(0b11, 0b11));
  CHECK_FALSE(pair_allowed(0b00, 0b01));
  for (unsigned p = 0; p < 4; ++p) CHECK(pair_partner(pair_partner(p)) == p);
}

TEST_CASE("family parsing") {
  CHECK(parse_family("vq") == Family::VQ);
  CHECK(parse_family("Q") == Family::Q);
  CHECK(parse_family("CQ") == Family::CQ);
  CHECK_THROWS_AS(parse_family("hyper"), std::invalid_argument);
  CHECK(family_name(Family::VQ) == "VQ");
}

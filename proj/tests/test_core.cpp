#include <gtest/gtest.h>

#include <numeric>

#include "hypershrink/core.hpp"
#include "hypershrink/gen.hpp"

using namespace hypershrink;

namespace {

Hypergraph h1() { return {4, {{0, 1, 2}, {1, 2, 3}, {2, 3}}}; }

}  // namespace

TEST(Validate, Loop) {
  auto r = validate({3, {{1}}});
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::loop);
  EXPECT_EQ(r.violations[0].edge, 0u);
}

TEST(Validate, DuplicateEdge) {
  auto r = validate({3, {{0, 1}, {0, 1}}});
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::duplicate_edge);
  EXPECT_EQ(r.violations[0].edge, 1u);
  EXPECT_EQ(r.violations[0].detail, 0u);
}

TEST(Validate, WellFormed) { EXPECT_TRUE(validate(h1()).ok()); }

TEST(Validate, OutOfRangeUnsortedRepeated) {
  auto r = validate({3, {{0, 5}, {2, 1}, {0, 0, 2}}});
  std::vector<ViolationKind> kinds;
  for (const auto& v : r.violations) kinds.push_back(v.kind);
  EXPECT_EQ(kinds, (std::vector<ViolationKind>{ViolationKind::out_of_range,
                                               ViolationKind::unsorted_edge,
                                               ViolationKind::repeated_vertex}));
  EXPECT_EQ(r.violations[0].detail, 5u);
}

TEST(Validate, UnsortedDuplicateStillCollides) {
  auto r = validate({3, {{0, 1, 2}, {2, 0, 1}}});
  bool dup = false;
  for (const auto& v : r.violations) dup = dup || v.kind == ViolationKind::duplicate_edge;
  EXPECT_TRUE(dup);
}

TEST(Validate, IsolatedVerticesAllowed) { EXPECT_TRUE(validate({5, {{0, 1}}}).ok()); }

TEST(Validate, MakeHypergraphSortsAndThrows) {
  auto h = make_hypergraph(3, {{2, 0}});
  EXPECT_EQ(h.edges[0], (Hyperedge{0, 2}));
  EXPECT_THROW(make_hypergraph(3, {{1}}), invalid_hypergraph);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(h1(), 2), 3u);
  EXPECT_EQ(degree(h1(), 0), 1u);
  EXPECT_EQ(degree(Hypergraph{3, {}}, 1), 0u);
  EXPECT_THROW(degree(h1(), 4), std::out_of_range);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(h1()), 3u);
  EXPECT_EQ(rank(Hypergraph{3, {{0, 1}, {1, 2}}}), 2u);
  EXPECT_EQ(rank(Hypergraph{3, {}}), 0u);
}

TEST(IncidentEdgeCount, Examples) {
  const std::vector<Vertex> two{2};
  const std::vector<Vertex> zero_three{0, 3};
  EXPECT_EQ(incident_edge_count(h1(), two), 3u);
  EXPECT_EQ(incident_edge_count(h1(), zero_three), 3u);
  EXPECT_EQ(incident_edge_count(h1(), {}), 0u);
}

TEST(DirectedDegrees, Examples) {
  const auto d = make_directed(h1(), {2, 2, 3});
  EXPECT_EQ(indegree(d, 2), 2u);
  EXPECT_EQ(indegree(d, 3), 1u);
  EXPECT_EQ(indegree(d, 0), 0u);
  EXPECT_EQ(outdegree(d, 2), 1u);
  std::size_t total = 0;
  for (Vertex v = 0; v < 4; ++v) total += indegree(d, v);
  EXPECT_EQ(total, 3u);
}

TEST(DirectedDegrees, HeadMustBelongToEdge) {
  EXPECT_THROW(make_directed(h1(), {3, 2, 3}), std::invalid_argument);
  EXPECT_THROW(make_directed(h1(), {2, 2}), std::invalid_argument);
}

TEST(CoreProperties, DegreeSumsOverRandomHypergraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto h = random_hypergraph(2 + seed % 9, 1 + seed % 12, 2 + seed % 4, seed);
    ASSERT_TRUE(validate(h).ok());
    std::size_t sum_deg = 0, sum_size = 0, sum_tails = 0;
    for (Vertex v = 0; v < h.n; ++v) sum_deg += degree(h, v);
    for (const auto& e : h.edges) {
      sum_size += e.size();
      sum_tails += e.size() - 1;
    }
    EXPECT_EQ(sum_deg, sum_size);

    // Any head choice: indegrees sum to |E|, outdegrees to the tail count.
    std::vector<Vertex> heads;
    for (std::size_t i = 0; i < h.edges.size(); ++i)
      heads.push_back(h.edges[i][(seed + i) % h.edges[i].size()]);
    const auto d = make_directed(h, heads);
    std::size_t in = 0, out = 0;
    for (Vertex v = 0; v < h.n; ++v) {
      in += indegree(d, v);
      out += outdegree(d, v);
    }
    EXPECT_EQ(in, h.edges.size());
    EXPECT_EQ(out, sum_tails);
  }
}

TEST(CoreProperties, IncidentCountIsMonotone) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = random_hypergraph(6, 7, 4, seed);
    for (std::uint64_t a = 0; a < 64; ++a) {
      const std::uint64_t b = a | (seed * 7 % 64);
      std::vector<Vertex> fa, fb;
      for (Vertex v = 0; v < 6; ++v) {
        if ((a >> v) & 1U) fa.push_back(v);
        if ((b >> v) & 1U) fb.push_back(v);
      }
      EXPECT_LE(incident_edge_count(h, fa), incident_edge_count(h, fb));
    }
  }
}

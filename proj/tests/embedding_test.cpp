#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "defcol/embedding.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace defcol {
namespace {

std::vector<std::size_t> face_degrees(const PlaneEmbedding& emb) {
  std::vector<std::size_t> out;
  for (const auto& f : trace_faces(emb))
    out.push_back(f.degree());
  std::sort(out.begin(), out.end());
  return out;
}

// Calls `visit` with every rotation system of g (all cyclic orders at every
// vertex, first neighbor fixed).
template <class Visit>
void for_each_rotation(const Graph& g, Visit visit) {
  auto verts = g.vertices();
  Rotation rot;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == verts.size()) {
      visit(PlaneEmbedding(g, rot));
      return;
    }
    const auto& nbrs = g.neighbors(verts[i]);
    std::vector<Vertex> order(nbrs.begin(), nbrs.end());
    do {
      rot[verts[i]] = order;
      rec(i + 1);
    } while (std::next_permutation(order.begin() + 1, order.end()));
  };
  rec(0);
}

TEST(TraceFaces, TriangleHasTwoTriangularFaces) {
  EXPECT_EQ(face_degrees(testing::k3()), (std::vector<std::size_t>{3, 3}));
}

TEST(TraceFaces, HexagonHasTwoHexagonalFaces) {
  EXPECT_EQ(face_degrees(testing::cycle(6)), (std::vector<std::size_t>{6, 6}));
}

TEST(TraceFaces, PendantEdgeIsWalkedTwice) {
  auto emb = testing::triangle_with_pendant_edge();
  EXPECT_EQ(face_degrees(emb), (std::vector<std::size_t>{3, 5}));
  for (const auto& f : trace_faces(emb))
    if (f.degree() == 5) {
      auto c = f.corners();
      EXPECT_EQ(std::count(c.begin(), c.end(), Vertex{0}), 2);
      EXPECT_FALSE(f.is_simple_cycle());
    }
}

TEST(TraceFaces, SingleVertexHasOneEmptyFace) {
  auto faces = trace_faces(testing::k1());
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].degree(), 0u);
  EXPECT_TRUE(check_planarity_certificate(testing::k1()));
}

TEST(TraceFaces, DeterministicOrderStartsFromSmallestDart) {
  auto faces = trace_faces(testing::k3());
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(faces[0].walk.front(), (Dart{0, 1}));
  EXPECT_LT(faces[0].walk.front(), faces[1].walk.front());
}

TEST(TraceFaces, DartsArePartitionedOnCorpus) {
  for (const auto& fx : testing::corpus()) {
    std::multiset<Dart> seen;
    std::size_t degree_sum = 0;
    for (const auto& f : trace_faces(fx.emb)) {
      degree_sum += f.degree();
      seen.insert(f.walk.begin(), f.walk.end());
      for (std::size_t i = 0; i < f.walk.size(); ++i)
        EXPECT_EQ(f.walk[i].second, f.walk[(i + 1) % f.walk.size()].first) << fx.name;
    }
    std::multiset<Dart> all;
    for (auto [u, v] : fx.emb.graph().edges()) {
      all.insert({u, v});
      all.insert({v, u});
    }
    EXPECT_EQ(seen, all) << fx.name;
    EXPECT_EQ(degree_sum, 2 * fx.emb.graph().edge_count()) << fx.name;
  }
}

TEST(PlanarityCertificate, HoldsForEveryCorpusEmbedding) {
  for (const auto& fx : testing::corpus())
    EXPECT_TRUE(check_planarity_certificate(fx.emb)) << fx.name;
}

TEST(PlanarityCertificate, NoRotationOfK5OrK33IsPlanar) {
  Graph k5 = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  std::size_t k5_count = 0;
  for_each_rotation(k5, [&](const PlaneEmbedding& e) {
    ++k5_count;
    EXPECT_FALSE(check_planarity_certificate(e));
  });
  EXPECT_EQ(k5_count, 7776u); // (3!)^5

  Graph k33 = make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  std::size_t k33_count = 0;
  for_each_rotation(k33, [&](const PlaneEmbedding& e) {
    ++k33_count;
    EXPECT_FALSE(check_planarity_certificate(e));
  });
  EXPECT_EQ(k33_count, 64u); // (2!)^6
}

TEST(PlanarityCertificate, EulerCharacteristicIsEvenAndAtMostTwo) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 60) {
    Graph g = testing::random_graph(rng, 6, 0.5);
    if (!is_connected(g))
      continue;
    Rotation rot;
    for (Vertex v : g.vertices()) {
      const auto& nbrs = g.neighbors(v);
      std::vector<Vertex> order(nbrs.begin(), nbrs.end());
      std::shuffle(order.begin(), order.end(), rng);
      rot[v] = order;
    }
    PlaneEmbedding emb(g, rot);
    long long chi = static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count()) +
                    static_cast<long long>(trace_faces(emb).size());
    EXPECT_LE(chi, 2);
    EXPECT_EQ((2 - chi) % 2, 0);
    EXPECT_EQ(check_planarity_certificate(emb), chi == 2);
    ++checked;
  }
}

TEST(PlanarityCertificate, RejectsDisconnectedGraphs) {
  Graph g = make_graph(4, {{0, 1}, {2, 3}});
  PlaneEmbedding emb(g, {{0, {1}}, {1, {0}}, {2, {3}}, {3, {2}}});
  EXPECT_THROW(check_planarity_certificate(emb), EmbeddingError);
}

TEST(PlaneEmbedding, ValidatesRotations) {
  Graph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_THROW(PlaneEmbedding(g, {{0, {1, 1}}, {1, {0, 2}}, {2, {0, 1}}}), EmbeddingError);
  EXPECT_THROW(PlaneEmbedding(g, {{0, {1}}, {1, {0, 2}}, {2, {0, 1}}}), EmbeddingError);
  EXPECT_THROW(PlaneEmbedding(g, {{0, {1, 2}}, {1, {0, 2}}, {2, {0, 1}}, {5, {}}}), EmbeddingError);
  PlaneEmbedding ok(g, {{0, {1, 2}}, {1, {2, 0}}, {2, {0, 1}}});
  EXPECT_EQ(ok.successor(0, 2), 1u);
  EXPECT_THROW((void)ok.successor(0, 0), EmbeddingError);
}

TEST(EmbeddingFromCoordinates, ClockwiseOrder) {
  Graph g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  // east, north, west, south around the origin
  auto emb = embedding_from_coordinates(g, {{0, {0, 0}}, {1, {1, 0}}, {2, {0, 1}}, {3, {-1, 0}}, {4, {0, -1}}});
  const auto& order = emb.rotation_at(0);
  auto at = [&](Vertex v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
  // clockwise from north: north, east, south, west
  EXPECT_EQ((at(1) - at(2) + 4) % 4, 1);
  EXPECT_EQ((at(4) - at(1) + 4) % 4, 1);
  EXPECT_EQ((at(3) - at(4) + 4) % 4, 1);
  EXPECT_THROW(embedding_from_coordinates(g, {{0, {0, 0}}}), EmbeddingError);
}

} // namespace
} // namespace defcol

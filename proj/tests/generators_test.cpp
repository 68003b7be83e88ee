#include <gtest/gtest.h>

#include <map>

#include "topo/edge_list.hpp"
#include "topo/generators.hpp"

namespace topo {
namespace {

std::map<std::size_t, std::size_t> degree_multiset(const Graph& g) {
  std::map<std::size_t, std::size_t> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++out[g.degree(v)];
  return out;
}

TEST(JahangirTest, SizesFromDefinition) {
  EXPECT_EQ(jahangir(5, 3).vertex_count(), 16u);
  EXPECT_EQ(jahangir(5, 3).edge_count(), 18u);
  EXPECT_EQ(jahangir(2, 3).vertex_count(), 7u);
  EXPECT_EQ(jahangir(2, 3).edge_count(), 9u);
}

TEST(JahangirTest, DegreeMultisetJ56) {
  const std::map<std::size_t, std::size_t> expected{{2, 24}, {3, 6}, {6, 1}};
  EXPECT_EQ(degree_multiset(jahangir(5, 6)), expected);
}

TEST(JahangirTest, Layout) {
  const JahangirLabeling lab{5, 4};
  const auto g = jahangir(5, 4);
  EXPECT_EQ(lab.center(), 20u);
  for (int i = 0; i < 4; ++i) EXPECT_TRUE(g.has_edge(lab.center(), lab.hub(i)));
  EXPECT_EQ(g.degree(lab.center()), 4u);
  EXPECT_TRUE(g.has_edge(0, 19));
  EXPECT_TRUE(lab.is_hub(15));
  EXPECT_FALSE(lab.is_hub(16));
  EXPECT_FALSE(lab.is_hub(20));
}

TEST(JahangirTest, RejectsInvalidParameters) {
  EXPECT_THROW(jahangir(0, 5), InvalidParameter);
  EXPECT_THROW(jahangir(5, 2), InvalidParameter);
  EXPECT_THROW(jahangir(5, -1), InvalidParameter);
  EXPECT_THROW(rotation_orbits(5, 2), InvalidParameter);
}

TEST(JahangirProperty, SizesConnectivityAndRolePartition) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 3; m <= 10; ++m) {
      const auto g = jahangir(n, m);
      const JahangirLabeling lab{n, m};
      EXPECT_EQ(g.vertex_count(), std::size_t(n * m + 1));
      EXPECT_EQ(g.edge_count(), std::size_t(m * (n + 1)));
      EXPECT_TRUE(is_connected(g));
      if (n < 2) continue;
      // Role counts: periphery (n-1)m of degree 2, m hubs of degree 3, center of degree m.
      std::size_t periphery = 0, hubs = 0;
      for (Vertex v = 0; v < lab.center(); ++v) {
        if (lab.is_hub(v)) {
          ++hubs;
          EXPECT_EQ(g.degree(v), 3u);
        } else {
          ++periphery;
          EXPECT_EQ(g.degree(v), 2u);
        }
      }
      EXPECT_EQ(periphery, std::size_t((n - 1) * m));
      EXPECT_EQ(hubs, std::size_t(m));
      EXPECT_EQ(g.degree(lab.center()), std::size_t(m));
    }
}

TEST(JahangirProperty, RotationByNIsAnAutomorphism) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 3; m <= 10; ++m) {
      const auto g = jahangir(n, m);
      const auto len = static_cast<Vertex>(n * m);
      auto rot = [&](Vertex v) { return v == len ? v : (v + n) % len; };
      for (const auto& [u, v] : g.edges()) EXPECT_TRUE(g.has_edge(rot(u), rot(v)));
    }
}

TEST(SmallFamiliesTest, Basics) {
  const auto c5 = cycle(5);
  EXPECT_EQ(c5.vertex_count(), 5u);
  EXPECT_EQ(c5.edge_count(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);

  const auto s4 = star(4);
  EXPECT_EQ(s4.vertex_count(), 5u);
  EXPECT_EQ(s4.edge_count(), 4u);
  EXPECT_EQ(s4.degree(4), 4u);

  EXPECT_EQ(path(1).vertex_count(), 1u);
  EXPECT_EQ(path(4).edge_count(), 3u);
  EXPECT_EQ(complete(5).edge_count(), 10u);
  EXPECT_EQ(wheel(6), jahangir(1, 6));
  EXPECT_EQ(wheel(6).degree(6), 6u);
}

TEST(SmallFamiliesTest, RejectsInvalidParameters) {
  EXPECT_THROW(cycle(2), InvalidParameter);
  EXPECT_THROW(path(0), InvalidParameter);
  EXPECT_THROW(star(0), InvalidParameter);
  EXPECT_THROW(complete(0), InvalidParameter);
  EXPECT_THROW(wheel(2), InvalidParameter);
}

TEST(RandomConnectedTest, SmallCases) {
  EXPECT_EQ(random_connected(1, {1, 2}, 42), path(1));
  EXPECT_EQ(random_connected(5, {1, 1}, 7), complete(5));
}

TEST(RandomConnectedTest, DeterministicAndConnected) {
  const auto a = random_connected(30, {1, 10}, 123);
  EXPECT_TRUE(is_connected(a));
  EXPECT_EQ(a, random_connected(30, {1, 10}, 123));
  EXPECT_NE(a, random_connected(30, {1, 10}, 124));
}

TEST(RandomConnectedTest, FrozenOutput) {
  // Expected strings come from a separate implementation of the documented
  // procedure (its own mt19937_64), not from this library.
  EXPECT_EQ(to_edge_list(random_connected(8, {1, 4}, 2024)),
            "p 8 8\ne 0 5\ne 0 7\ne 1 4\ne 1 5\ne 2 6\ne 2 7\ne 3 5\ne 4 7\n");
  // Sparse draw: only 2-8, 1-2, 4-9 are sampled; the joins 0-1, 1-3, 3-4,
  // 4-5, 5-6, 6-7 connect the components.
  EXPECT_EQ(to_edge_list(random_connected(10, {1, 20}, 7)),
            "p 10 9\ne 0 1\ne 1 2\ne 1 3\ne 2 8\ne 3 4\ne 4 5\ne 4 9\ne 5 6\ne 6 7\n");
}

TEST(RandomConnectedTest, RejectsInvalidParameters) {
  EXPECT_THROW(random_connected(0, {1, 2}, 1), InvalidParameter);
  EXPECT_THROW(random_connected(5, {0, 2}, 1), InvalidParameter);
  EXPECT_THROW(random_connected(5, {3, 2}, 1), InvalidParameter);
  EXPECT_THROW(random_connected(5, {1, 0}, 1), InvalidParameter);
}

TEST(RandomConnectedTest, SparseProbabilityStillConnected) {
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_TRUE(is_connected(random_connected(40, {1, 1000}, seed)));
}

TEST(RotationOrbitsTest, Sizes) {
  auto sizes = [](const OrbitSpec& s) {
    std::vector<std::size_t> out;
    for (const auto& o : s.orbits) out.push_back(o.size());
    return out;
  };
  EXPECT_EQ(sizes(rotation_orbits(5, 3)), (std::vector<std::size_t>{3, 3, 3, 3, 3, 1}));
  EXPECT_EQ(sizes(rotation_orbits(2, 4)), (std::vector<std::size_t>{4, 4, 1}));
  for (int n = 1; n <= 6; ++n)
    for (int m = 3; m <= 10; ++m) {
      const auto spec = rotation_orbits(n, m);
      EXPECT_EQ(spec.orbits.size(), std::size_t(n + 1));
      EXPECT_NO_THROW(spec.validate(std::size_t(n * m + 1)));
    }
}

}  // namespace
}  // namespace topo

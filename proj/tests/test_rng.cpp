#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "bsn/rng.hpp"
#include "support/reference.hpp"

using namespace bsn;

namespace {

// Definition check: edge pq iff fewer than two other points are strictly
// closer than |pq| to both p and q (beyond the tolerance).
bool lune_edge(const std::vector<Point2>& pts, int p, int q, double eps) {
  const double d = distance(pts[p], pts[q]);
  int inside = 0;
  for (int r = 0; r < static_cast<int>(pts.size()); ++r) {
    if (r == p || r == q) continue;
    if (distance(pts[r], pts[p]) < d - eps && distance(pts[r], pts[q]) < d - eps) ++inside;
  }
  return inside < 2;
}

}  // namespace

TEST_CASE("2-RNG examples") {
  const std::vector<Point2> tri{{0, 0}, {4, 0}, {1, 3}};
  CHECK(build_2rng(tri).edge_count() == 3);
  const std::vector<Point2> col{{0, 0}, {1, 0}, {2, 0}};
  CHECK(build_2rng(col).edge_count() == 3);
  const std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const Graph g = build_2rng(sq);
  CHECK(g.edge_count() == 4);
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 3));
}

TEST_CASE("2-RNG rejects duplicates and tiny inputs") {
  const std::vector<Point2> dup{{0, 0}, {1, 1}, {0, 0}};
  CHECK_THROWS_AS(build_2rng(dup), std::invalid_argument);
  const std::vector<Point2> one{{0, 0}};
  CHECK_THROWS_AS(build_2rng(one), std::invalid_argument);
}

TEST_CASE("2-RNG matches the lune definition and is biconnected") {
  std::mt19937_64 rng(31);
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 39);
    const auto pts = ref::random_points(n, rng);
    const Graph g = build_2rng(pts);
    const double eps = geometric_tolerance(pts);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) CHECK(g.has_edge(p, q) == lune_edge(pts, p, q, eps));
    CHECK(is_biconnected(g));
    CHECK(g.has_lengths());
    worst_ratio = std::max(worst_ratio, static_cast<double>(g.edge_count()) / n);
  }
  MESSAGE("largest 2-RNG edges per vertex: " << worst_ratio);
}

TEST_CASE("2-RNG on lattice inputs matches the lune definition") {
  std::vector<Point2> pts;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 4; ++y) pts.push_back({double(x), double(y)});
  const Graph g = build_2rng(pts);
  const double eps = geometric_tolerance(pts);
  for (int p = 0; p < static_cast<int>(pts.size()); ++p)
    for (int q = p + 1; q < static_cast<int>(pts.size()); ++q) {
      CHECK(g.has_edge(p, q) == lune_edge(pts, p, q, eps));
      CHECK((lune_count_naive(pts, p, q, eps) < 2) == lune_edge(pts, p, q, eps));
    }
  CHECK(is_biconnected(g));
}

TEST_CASE("threshold_subgraph examples") {
  const std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const Graph g = build_2rng(sq);
  CHECK(threshold_subgraph(g, 0.5).edge_count() == 0);
  CHECK(threshold_subgraph(g, 0.5).vertex_count() == 4);
  CHECK(threshold_subgraph(g, 1.0).edge_count() == 4);

  const std::vector<Point2> tri{{0, 0}, {10, 0}, {5, 1}};
  const Graph t = threshold_subgraph(build_2rng(tri), std::sqrt(26.0));
  CHECK(t.edge_count() == 2);
  CHECK(t.has_edge(0, 2));
  CHECK(t.has_edge(1, 2));
}

TEST_CASE("threshold subgraphs are nested") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = ref::random_points(3 + static_cast<int>(rng() % 20), rng);
    const Graph g = build_2rng(pts);
    const auto sched = length_schedule(g, false);
    for (std::size_t i = 0; i + 1 < sched.lengths.size(); ++i) {
      const Graph a = threshold_subgraph(g, sched.lengths[i]);
      const Graph b = threshold_subgraph(g, sched.lengths[i + 1]);
      CHECK(a.edge_count() < b.edge_count());
      for (const auto& e : a.edges()) CHECK(b.has_edge(e.u, e.v));
    }
  }
}

TEST_CASE("length_schedule examples") {
  const std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto s = length_schedule(build_2rng(sq), false);
  REQUIRE(s.lengths.size() == 1);
  CHECK(s.lengths[0] == doctest::Approx(1.0));
  CHECK(s.source_edges[0].size() == 4);

  const std::vector<Point2> two{{0, 0}, {10, 0}};
  s = length_schedule(build_2rng(two), true);
  REQUIRE(s.lengths.size() == 2);
  CHECK(s.lengths[0] == 0.0);
  CHECK(s.lengths[1] == doctest::Approx(10.0));
  CHECK(s.source_edges[0].empty());

  const std::vector<Point2> eq{{0, 0}, {2, 0}, {1, std::sqrt(3.0)}};
  s = length_schedule(build_2rng(eq), false);
  // Equal lengths up to rounding: at most the distinct doubles survive.
  CHECK(s.lengths.size() <= 3);
  for (double x : s.lengths) CHECK(x == doctest::Approx(2.0));
  const std::vector<Point2> exact_eq{{0, 0}, {2, 0}, {1, 0}};  // lengths 1, 1, 2
  s = length_schedule(build_2rng(exact_eq), false);
  CHECK(s.lengths == std::vector<double>{1.0, 2.0});
}

TEST_CASE("schedule lengths are strictly ascending and cover every edge") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = ref::random_points(2 + static_cast<int>(rng() % 30), rng);
    const Graph g = build_2rng(pts);
    const auto s = length_schedule(g, trial % 2 == 0);
    CHECK(std::is_sorted(s.lengths.begin(), s.lengths.end()));
    CHECK(std::adjacent_find(s.lengths.begin(), s.lengths.end()) == s.lengths.end());
    for (const auto& e : g.edges())
      CHECK(std::binary_search(s.lengths.begin(), s.lengths.end(), e.length));
  }
}

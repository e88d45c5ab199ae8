#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bsn/closure1.hpp"
#include "bsn/instances.hpp"
#include "bsn/rng.hpp"
#include "support/reference.hpp"

using namespace bsn;

namespace {

Graph geometric(const std::vector<Point2>& pts, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(static_cast<int>(pts.size()));
  for (auto [u, v] : edges) g.add_edge(u, v, distance(pts[u], pts[v]));
  return g;
}

}  // namespace

TEST_CASE("1-block closure examples") {
  SUBCASE("path") {
    const std::vector<Point2> pts{{0, 0}, {5, 1}, {10, 0}};
    const Closure1 c = optimal_1block_closure(geometric(pts, {{0, 1}, {1, 2}}), pts);
    CHECK(c.s0.x == doctest::Approx(5.0));
    CHECK(c.s0.y == doctest::Approx(0.0));
    CHECK(c.radius == doctest::Approx(5.0));
    CHECK(c.neighbours == std::vector<int>{0, 2});
    CHECK_FALSE(c.block);
  }
  SUBCASE("square block") {
    const std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const Closure1 c = optimal_1block_closure(geometric(pts, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), pts);
    CHECK(c.block);
    CHECK(c.radius == doctest::Approx(0.5));
    CHECK(c.s0.x == doctest::Approx(0.5));
    CHECK(c.s0.y == doctest::Approx(0.0));
  }
  SUBCASE("disconnected") {
    const std::vector<Point2> pts{{0, 0}, {1, 0}, {5, 0}, {6, 0}};
    CHECK_THROWS_AS(optimal_1block_closure(geometric(pts, {{0, 1}, {2, 3}}), pts), std::invalid_argument);
  }
}

TEST_CASE("1-block closure output is biconnected and certified optimal") {
  std::mt19937_64 rng(51);
  int compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const auto pts = generate_instance(n, 5000 + trial, trial % 2 ? Distribution::Clusters : Distribution::Uniform);
    const Graph r = build_2rng(pts);
    const auto sched = length_schedule(r, false);
    for (double t : sched.lengths) {
      const Graph g = threshold_subgraph(r, t);
      if (!is_connected(g)) continue;
      const Closure1 c = optimal_1block_closure(g, pts);
      const Graph h = embed_closure1(g, pts, c);
      CHECK(is_biconnected(h));
      double longest = 0.0;
      for (int v : c.neighbours) longest = std::max(longest, distance(c.s0, pts[v]));
      CHECK(longest == doctest::Approx(c.radius).epsilon(1e-12));
      if (compared < 60 && rng() % 3 == 0) {
        const auto opt = ref::closure_optimum(g, pts, 1, 1e-4);
        CHECK(c.radius >= opt.value - opt.error_bound);
        CHECK(c.radius <= opt.value + 1e-9);
        ++compared;
      }
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("1-block closure radius does not increase with the threshold") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 12;
    const auto pts = generate_instance(n, 6000 + trial, trial % 2 ? Distribution::Clusters : Distribution::Uniform);
    const Graph r = build_2rng(pts);
    const auto sched = length_schedule(r, false);
    double prev = std::numeric_limits<double>::infinity();
    for (double t : sched.lengths) {
      const Graph g = threshold_subgraph(r, t);
      if (!is_connected(g)) continue;
      const double rad = optimal_1block_closure(g, pts).radius;
      CHECK(rad <= prev + 1e-12);
      prev = rad;
    }
  }
}

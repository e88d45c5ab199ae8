#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bsn/instances.hpp"
#include "bsn/solver.hpp"
#include "support/reference.hpp"

using namespace bsn;

namespace {

const std::vector<Point2> kTri{{0, 0}, {10, 0}, {5, 1}};
const std::vector<Point2> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
const std::vector<Point2> kDumbbell{{0, 0}, {0, 1}, {10, 0}, {10, 1}};
const std::vector<Point2> kTwo{{0, 0}, {10, 0}};

void check_valid(const SolutionNetwork& s) {
  std::string why;
  CHECK_MESSAGE(check_solution(s, 1e-12, &why), why);
}

}  // namespace

TEST_CASE("mbsn0 examples") {
  CHECK(mbsn0(kSquare).bottleneck == doctest::Approx(1.0));
  CHECK(mbsn0(kSquare).edges.size() == 4);
  const std::vector<Point2> col{{0, 0}, {1, 0}, {2, 0}};
  CHECK(mbsn0(col).bottleneck == doctest::Approx(2.0));
  CHECK(mbsn0(col).edges.size() == 3);
  const std::vector<Point2> seven{{0, 0}, {7, 0}};
  CHECK(mbsn0(seven).bottleneck == doctest::Approx(7.0));
  for (const auto* x : {&kTri, &kSquare, &kDumbbell, &kTwo}) check_valid(mbsn0(*x));
}

TEST_CASE("mbsn1 examples") {
  const auto tri = mbsn1(kTri);
  CHECK(tri.bottleneck == doctest::Approx(std::sqrt(26.0)).epsilon(1e-12));
  CHECK(tri.threshold == doctest::Approx(std::sqrt(26.0)));
  CHECK(tri.closure_radius == doctest::Approx(5.0));
  REQUIRE(tri.steiner.size() == 1);
  CHECK(tri.steiner[0].x == doctest::Approx(5.0));
  CHECK(std::abs(tri.steiner[0].y) < 1e-9);

  CHECK(mbsn1(kSquare).bottleneck == doctest::Approx(1.0).epsilon(1e-12));

  const auto two = mbsn1(kTwo);
  CHECK(two.bottleneck == doctest::Approx(10.0));
  CHECK(two.edges.size() == 3);
  for (const auto* x : {&kTri, &kSquare, &kDumbbell, &kTwo}) check_valid(mbsn1(*x));
}

TEST_CASE("mbsn2 examples") {
  const auto d = mbsn2(kDumbbell);
  CHECK(d.bottleneck == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(d.threshold == doctest::Approx(1.0));
  REQUIRE(d.steiner.size() == 2);
  const Point2 lo = std::min(d.steiner[0], d.steiner[1]), hi = std::max(d.steiner[0], d.steiner[1]);
  CHECK(lo.x == doctest::Approx(5.0));
  CHECK(lo.y == doctest::Approx(0.0));
  CHECK(hi.x == doctest::Approx(5.0));
  CHECK(hi.y == doctest::Approx(1.0));

  const auto two = mbsn2(kTwo);
  CHECK(two.threshold == 0.0);
  CHECK(two.bottleneck >= 5.0);
  CHECK(two.bottleneck <= 5.0 + 1e-6);
  CHECK(two.steiner[0] != two.steiner[1]);

  const auto tri = mbsn2(kTri);
  CHECK(tri.bottleneck <= std::sqrt(26.0) + 1e-12);
  CHECK(tri.bottleneck <= mbsn1(kTri).bottleneck + 1e-12);
  for (const auto* x : {&kTri, &kSquare, &kDumbbell, &kTwo}) check_valid(mbsn2(*x));
}

TEST_CASE("solver input validation") {
  const std::vector<Point2> one{{0, 0}};
  const std::vector<Point2> dup{{0, 0}, {1, 0}, {0, 0}};
  const std::vector<Point2> nan{{0, 0}, {std::nan(""), 0}};
  for (int k = 0; k <= 2; ++k) {
    CHECK_THROWS_AS(solve(one, k), std::invalid_argument);
    CHECK_THROWS_AS(solve(dup, k), std::invalid_argument);
    CHECK_THROWS_AS(solve(nan, k), std::invalid_argument);
  }
  CHECK_THROWS_AS(solve(kTri, 3), std::invalid_argument);
  CHECK_THROWS_AS(solve(kTri, -1), std::invalid_argument);
}

TEST_CASE("check_solution rejects broken networks") {
  auto s = mbsn1(kTri);
  std::string why;
  auto bad = s;
  bad.steiner[0] = kTri[0];
  CHECK_FALSE(check_solution(bad, 1e-12, &why));
  bad = s;
  // Leave terminal 0 with a single edge.
  bool kept = false;
  std::erase_if(bad.edges, [&](const Edge& e) {
    if (e.u != 0 && e.v != 0) return false;
    if (!kept) return !(kept = true);
    return true;
  });
  CHECK_FALSE(check_solution(bad, 1e-12, &why));
  bad = s;
  bad.bottleneck += 1.0;
  CHECK_FALSE(check_solution(bad, 1e-12, &why));
  bad = s;
  bad.k = 2;
  CHECK_FALSE(check_solution(bad, 1e-12, &why));
}

TEST_CASE("mbsn0 equals the complete-graph threshold") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto pts = generate_instance(2 + trial % 25, 100 + trial,
                                       trial % 2 ? Distribution::Clusters : Distribution::Uniform);
    CHECK(mbsn0(pts).bottleneck == ref::complete_graph_threshold(pts));
  }
}

TEST_CASE("mbsn1 equals the exact candidate optimum") {
  for (int trial = 0; trial < 60; ++trial) {
    const auto pts = generate_instance(2 + trial % 9, 200 + trial,
                                       trial % 2 ? Distribution::Clusters : Distribution::Uniform);
    const auto s = mbsn1(pts);
    const double exact = ref::exact_k1(pts);
    CHECK(s.bottleneck >= exact - 1e-12);
    CHECK(s.bottleneck <= exact + 10 * geometric_tolerance(pts));
  }
}

TEST_CASE("more Steiner points never hurt and outputs are valid") {
  for (int trial = 0; trial < 80; ++trial) {
    const auto pts = generate_instance(2 + trial % 14, 300 + trial,
                                       trial % 2 ? Distribution::Clusters : Distribution::Uniform);
    const auto s0 = mbsn0(pts), s1 = mbsn1(pts), s2 = mbsn2(pts);
    CHECK(s2.bottleneck <= s1.bottleneck + 1e-9);
    CHECK(s1.bottleneck <= s0.bottleneck + 1e-9);
    for (const auto* s : {&s0, &s1, &s2}) {
      check_valid(*s);
      CHECK(s->terminals.size() == pts.size());
    }
  }
}

TEST_CASE("binary threshold search matches the exhaustive scan") {
  for (int trial = 0; trial < 60; ++trial) {
    const auto pts = generate_instance(2 + trial % 7, 400 + trial,
                                       trial % 2 ? Distribution::Clusters : Distribution::Uniform);
    for (int k = 1; k <= 2; ++k) {
      const auto b = solve(pts, k, ThresholdSearch::Binary);
      const auto s = solve(pts, k, ThresholdSearch::Scan);
      CHECK(b.bottleneck == doctest::Approx(s.bottleneck).epsilon(1e-12));
    }
  }
}

TEST_CASE("threshold profile is monotone in feasibility and radius") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto pts = generate_instance(3 + trial % 10, 500 + trial, Distribution::Uniform);
    for (int k = 1; k <= 2; ++k) {
      const auto prof = threshold_profile(pts, k);
      REQUIRE_FALSE(prof.empty());
      CHECK(prof.back().feasible);
      bool seen_feasible = false;
      double prev = std::numeric_limits<double>::infinity();
      for (const auto& e : prof) {
        if (seen_feasible) CHECK(e.feasible);
        if (e.feasible) {
          seen_feasible = true;
          CHECK(e.radius <= prev + 1e-8);
          prev = e.radius;
          CHECK(e.objective == doctest::Approx(std::max(e.radius, e.t)));
        }
      }
      if (k == 2) CHECK(prof.front().t == 0.0);
    }
  }
}

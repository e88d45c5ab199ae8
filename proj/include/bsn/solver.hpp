#pragma once

#include <span>
#include <string>
#include <vector>

#include "bsn/closure2.hpp"
#include "bsn/geom.hpp"
#include "bsn/graph.hpp"

namespace bsn {

// Vertices 0..n-1 are the terminals, n..n+k-1 the Steiner points.
struct SolutionNetwork {
  std::vector<Point2> terminals;
  std::vector<Point2> steiner;
  std::vector<Edge> edges;
  double bottleneck = 0.0;      // longest edge, recomputed from the geometry
  int k = 0;
  double threshold = 0.0;       // winning value of the length schedule
  double closure_radius = 0.0;  // longest Steiner edge of the winning closure

  std::vector<Point2> vertices() const;
  Graph graph() const;
};

enum class ThresholdSearch { Binary, Scan };

// Throws std::invalid_argument unless there are >= 2 finite, distinct points.
void validate_points(std::span<const Point2> points);

SolutionNetwork mbsn0(std::span<const Point2> points);
SolutionNetwork mbsn1(std::span<const Point2> points, ThresholdSearch search = ThresholdSearch::Binary);
SolutionNetwork mbsn2(std::span<const Point2> points, ThresholdSearch search = ThresholdSearch::Binary);
SolutionNetwork solve(std::span<const Point2> points, int k,
                      ThresholdSearch search = ThresholdSearch::Binary);

// One evaluated threshold: objective max(r, t), or +inf when infeasible.
struct ThresholdEval {
  double t = 0.0;
  bool feasible = false;
  double radius = 0.0;
  double objective = 0.0;
};

// Per-threshold evaluation over the whole schedule (k = 1 or 2).
std::vector<ThresholdEval> threshold_profile(std::span<const Point2> points, int k);

// Structural checks shared by tests and the CLI: biconnected, spans the
// terminals, k Steiner points distinct from each other and the terminals,
// bottleneck equal to the longest edge.
bool check_solution(const SolutionNetwork& s, double tol, std::string* why = nullptr);

}  // namespace bsn

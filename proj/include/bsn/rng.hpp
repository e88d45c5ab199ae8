#pragma once

#include <span>
#include <vector>

#include "bsn/geom.hpp"
#include "bsn/graph.hpp"

namespace bsn {

// 2-relative neighbourhood graph with Euclidean edge lengths. Edge pq is
// present iff fewer than two other points lie strictly inside its lune;
// points within the geometric tolerance of the boundary are not inside.
// Throws std::invalid_argument on fewer than two points or duplicates.
Graph build_2rng(std::span<const Point2> points);

// Number of points strictly inside the lune of (p, q), capped at `cap`.
// Brute force; used as a reference.
int lune_count_naive(std::span<const Point2> points, int p, int q, double eps, int cap = 2);

// Same vertex set, edges with length <= t.
Graph threshold_subgraph(const Graph& g, double t);

struct ThresholdSchedule {
  std::vector<double> lengths;                  // strictly ascending
  std::vector<std::vector<int>> source_edges;   // edge indices per length
};

ThresholdSchedule length_schedule(const Graph& g, bool include_zero);

}  // namespace bsn

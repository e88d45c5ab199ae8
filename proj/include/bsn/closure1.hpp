#pragma once

#include <span>
#include <vector>

#include "bsn/geom.hpp"
#include "bsn/graph.hpp"

namespace bsn {

struct Closure1 {
  Point2 s0;
  std::vector<int> neighbours;  // terminal indices adjacent to s0
  double radius = 0.0;          // longest Steiner edge
  bool block = false;           // input was a block
};

// Optimal 1-block closure of a connected graph embedded on `points`.
// Throws std::invalid_argument if g is disconnected or has a single vertex.
Closure1 optimal_1block_closure(const Graph& g, std::span<const Point2> points);

// g plus s0 (vertex index n) and its Steiner edges, with lengths.
Graph embed_closure1(const Graph& g, std::span<const Point2> points, const Closure1& c);

}  // namespace bsn

#pragma once

#include <span>
#include <vector>

#include "bsn/geom.hpp"

namespace bsn {

// Least t such that the complete graph on `points` restricted to edges of
// length <= t is biconnected. Coincident points are allowed (zero-length
// edges). Requires at least two points.
double oracle_mbsn0(std::span<const Point2> points);

struct GridOptions {
  int coarse = 0;       // cells per axis at the first level; 0 selects a default
  int min_levels = 3;   // halving levels after the first, at least
};

struct OracleK1 {
  double bottleneck = 0.0;
  Point2 s;
  double error_bound = 0.0;  // final cell half-diagonal
  Point2 domain_lo, domain_hi;
};

struct OracleK2 {
  double bottleneck = 0.0;
  Point2 s1, s2;
  double error_bound = 0.0;  // twice the final per-point cell half-diagonal
  Point2 domain_lo, domain_hi;
};

// Coarse-to-fine cell search over Steiner locations in the bounding box
// inflated by one diameter. The objective is Lipschitz in the Steiner
// locations, so every discarded cell is certified: the true optimum over the
// domain lies in [bottleneck - error_bound, bottleneck].
OracleK1 oracle_k1(std::span<const Point2> points, double target_error, GridOptions opts = {});
OracleK2 oracle_k2(std::span<const Point2> points, double target_error, GridOptions opts = {});

}  // namespace bsn

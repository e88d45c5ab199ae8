#pragma once

#include <limits>
#include <vector>

#include "bsn/geom.hpp"

namespace bsn {

// A coloured point; `id` is the caller's vertex index (or -1).
struct Site {
  Point2 pos;
  int id = -1;
};

struct ColorSystem {
  std::vector<std::vector<Site>> classes;  // each class nonempty

  std::size_t point_count() const;
  void add_class(std::vector<Site> sites);
};

struct ScsdResult {
  Circle disk;
  std::vector<Site> determinators;  // boundary points, deduplicated by position
  std::vector<Site> nearest;        // one per colour, ordered as the classes
};

// max over colours of the distance from x to the nearest point of that
// colour. Returns a value >= cutoff as soon as one colour reaches it.
double color_radius(Point2 x, const ColorSystem& cs,
                    double cutoff = std::numeric_limits<double>::infinity());

// Nearest point of each colour; ties go to the lexicographically smaller
// position, then the smaller id.
std::vector<Site> nearest_per_color(Point2 x, const ColorSystem& cs);

// Centre candidates: every distinct point, every pair midpoint and every
// non-collinear triple circumcentre, colours ignored.
std::vector<Point2> scsd_candidates(const ColorSystem& cs);

// Exact smallest colour-spanning disk over the candidate set. Near-ties
// resolve to the lexicographically smallest centre. Throws
// std::invalid_argument if there are no classes or a class is empty.
ScsdResult smallest_color_spanning_disk(const ColorSystem& cs);

// Radius only; returns +inf when no candidate beats `cutoff`.
double scsd_radius(const ColorSystem& cs,
                   double cutoff = std::numeric_limits<double>::infinity());

struct CoupledResult {
  Point2 s1;
  Point2 s2;
  double radius = 0.0;  // max(f1(s1), f2(s2), |s1 s2|)
};

// Minimises max(f1(s1), f2(s2), |s1 s2|) where f_i is color_radius on cs_i.
// The centres may coincide.
CoupledResult coupled_two_disk(const ColorSystem& cs1, const ColorSystem& cs2);

// Objective of coupled_two_disk at a given pair.
double coupled_objective(Point2 s1, Point2 s2, const ColorSystem& cs1, const ColorSystem& cs2,
                         double cutoff = std::numeric_limits<double>::infinity());

}  // namespace bsn

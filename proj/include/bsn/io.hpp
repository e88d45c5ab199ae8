#pragma once

#include <string>
#include <vector>

#include "bsn/geom.hpp"
#include "bsn/solver.hpp"

namespace bsn {

// Instance document: {"points": [[x, y], ...]}. Throws std::runtime_error on
// malformed input or non-finite coordinates.
std::vector<Point2> parse_instance(const std::string& text);
std::string format_instance(const std::vector<Point2>& points);

// Solution document: {"k", "bottleneck", "threshold", "steiner", "edges"}.
// Edge lengths and the bottleneck are recomputed from the geometry on read.
std::string format_solution(const SolutionNetwork& s);
SolutionNetwork parse_solution(const std::string& text, const std::vector<Point2>& terminals);

// SVG 1.1 drawing: filled terminals, hollow Steiner points, the longest
// edge drawn in a highlight colour.
std::string render_svg(const SolutionNetwork& s, int size_px = 600);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bsn

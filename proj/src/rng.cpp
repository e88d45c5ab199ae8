#include "bsn/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace bsn {

namespace {

bool strictly_in_lune(Point2 x, Point2 p, Point2 q, double pq, double eps) {
  const double limit = pq - eps;
  if (limit <= 0.0) return false;
  return distance(x, p) < limit && distance(x, q) < limit;
}

// Uniform bucket grid over the bounding box.
class BucketGrid {
 public:
  explicit BucketGrid(std::span<const Point2> pts) : pts_(pts) {
    lo_ = hi_ = pts[0];
    for (const Point2& p : pts) {
      lo_.x = std::min(lo_.x, p.x);
      lo_.y = std::min(lo_.y, p.y);
      hi_.x = std::max(hi_.x, p.x);
      hi_.y = std::max(hi_.y, p.y);
    }
    const double span = std::max({hi_.x - lo_.x, hi_.y - lo_.y, 1e-300});
    const int per_side = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(pts.size()))));
    cell_ = span / per_side;
    nx_ = std::max(1, static_cast<int>((hi_.x - lo_.x) / cell_) + 1);
    ny_ = std::max(1, static_cast<int>((hi_.y - lo_.y) / cell_) + 1);
    cells_.assign(static_cast<std::size_t>(nx_) * ny_, {});
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      const auto [cx, cy] = cell_of(pts[i]);
      cells_[static_cast<std::size_t>(cy) * nx_ + cx].push_back(i);
    }
  }

  // Counts points strictly inside the lune of (p, q), stopping at `cap`.
  int lune_count(int p, int q, double eps, int cap) const {
    const Point2 a = pts_[p], b = pts_[q];
    const double pq = distance(a, b);
    const Point2 mid = midpoint(a, b);
    const auto [mx, my] = cell_of(mid);
    const int rings = static_cast<int>(std::ceil(0.8660254037844387 * pq / cell_)) + 1;
    int found = 0;
    for (int k = 0; k <= rings; ++k) {
      for (int cy = my - k; cy <= my + k; ++cy) {
        if (cy < 0 || cy >= ny_) continue;
        const bool edge_row = (cy == my - k || cy == my + k);
        const int step = edge_row ? 1 : 2 * k;
        for (int cx = mx - k; cx <= mx + k; cx += step) {
          if (cx < 0 || cx >= nx_) continue;
          for (int i : cells_[static_cast<std::size_t>(cy) * nx_ + cx]) {
            if (i == p || i == q) continue;
            if (strictly_in_lune(pts_[i], a, b, pq, eps) && ++found >= cap) return found;
          }
        }
      }
    }
    return found;
  }

 private:
  std::pair<int, int> cell_of(Point2 p) const {
    int cx = static_cast<int>((p.x - lo_.x) / cell_);
    int cy = static_cast<int>((p.y - lo_.y) / cell_);
    return {std::clamp(cx, 0, nx_ - 1), std::clamp(cy, 0, ny_ - 1)};
  }

  std::span<const Point2> pts_;
  Point2 lo_, hi_;
  double cell_ = 1.0;
  int nx_ = 1, ny_ = 1;
  std::vector<std::vector<int>> cells_;
};

}  // namespace

int lune_count_naive(std::span<const Point2> points, int p, int q, double eps, int cap) {
  const double pq = distance(points[p], points[q]);
  int found = 0;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    if (i == p || i == q) continue;
    if (strictly_in_lune(points[i], points[p], points[q], pq, eps) && ++found >= cap) break;
  }
  return found;
}

Graph build_2rng(std::span<const Point2> points) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw std::invalid_argument("build_2rng: need at least two points");
  {
    std::set<Point2> seen(points.begin(), points.end());
    if (static_cast<int>(seen.size()) != n) throw std::invalid_argument("build_2rng: duplicate points");
  }
  const double eps = geometric_tolerance(points);
  const BucketGrid grid(points);
  Graph g(n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (grid.lune_count(p, q, eps, 2) < 2) g.add_edge(p, q, distance(points[p], points[q]));
  return g;
}

Graph threshold_subgraph(const Graph& g, double t) {
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges())
    if (e.length <= t) out.add_edge(e.u, e.v, e.length);
  return out;
}

ThresholdSchedule length_schedule(const Graph& g, bool include_zero) {
  std::map<double, std::vector<int>> by_length;
  for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) by_length[g.edges()[i].length].push_back(i);
  ThresholdSchedule s;
  if (include_zero && !by_length.count(0.0)) {
    s.lengths.push_back(0.0);
    s.source_edges.emplace_back();
  }
  for (auto& [len, ids] : by_length) {
    s.lengths.push_back(len);
    s.source_edges.push_back(std::move(ids));
  }
  return s;
}

}  // namespace bsn

#include "bsn/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <cstdint>
#include <tuple>

namespace bsn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense symmetric distance matrix over m points.
struct DistMatrix {
  std::size_t m = 0;
  std::vector<double> d;
  double operator()(std::size_t i, std::size_t j) const { return d[i * m + j]; }
  void set(std::size_t i, std::size_t j, double v) { d[i * m + j] = d[j * m + i] = v; }
};

// Largest edge of a minimum spanning tree of the points with index != skip,
// i.e. the least t at which that point set is connected under edges <= t.
double mst_bottleneck(const DistMatrix& dm, std::size_t skip, std::vector<double>& key, std::vector<char>& done) {
  const std::size_t n = dm.m;
  key.assign(n, kInf);
  done.assign(n, 0);
  const std::size_t start = (skip == 0) ? 1 : 0;
  if (start >= n) return 0.0;
  key[start] = 0.0;
  double worst = 0.0;
  for (;;) {
    std::size_t u = n;
    double best = kInf;
    for (std::size_t i = 0; i < n; ++i)
      if (i != skip && !done[i] && key[i] < best) {
        best = key[i];
        u = i;
      }
    if (u == n) break;
    done[u] = 1;
    worst = std::max(worst, best);
    for (std::size_t i = 0; i < n; ++i)
      if (i != skip && !done[i] && dm(u, i) < key[i]) key[i] = dm(u, i);
  }
  return worst;
}

// With m >= 3, a graph is biconnected iff deleting any one vertex leaves it
// connected. The threshold for that is the MST bottleneck of each deletion.
// The threshold is monotone in every entry of the matrix.
double biconnect_threshold(const DistMatrix& dm, std::vector<double>& key, std::vector<char>& done) {
  if (dm.m < 2) throw std::invalid_argument("oracle_mbsn0: need at least two points");
  if (dm.m == 2) return dm(0, 1);
  double t = 0.0;
  for (std::size_t v = 0; v < dm.m; ++v) t = std::max(t, mst_bottleneck(dm, v, key, done));
  return t;
}

DistMatrix matrix_of(std::span<const Point2> pts, std::size_t extra) {
  DistMatrix dm;
  dm.m = pts.size() + extra;
  dm.d.assign(dm.m * dm.m, 0.0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) dm.set(i, j, distance(pts[i], pts[j]));
  return dm;
}

struct Domain {
  Point2 lo, hi;
};

Domain inflated_box(std::span<const Point2> pts) {
  Point2 lo = pts[0], hi = pts[0];
  for (const Point2& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  double diam = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) diam = std::max(diam, distance(pts[i], pts[j]));
  return {{lo.x - diam, lo.y - diam}, {hi.x + diam, hi.y + diam}};
}

struct Box {
  Point2 lo, hi;
};

double point_box_distance(Point2 p, const Box& b) {
  const double dx = std::max({b.lo.x - p.x, 0.0, p.x - b.hi.x});
  const double dy = std::max({b.lo.y - p.y, 0.0, p.y - b.hi.y});
  return std::hypot(dx, dy);
}

double box_box_distance(const Box& a, const Box& b) {
  const double dx = std::max({b.lo.x - a.hi.x, 0.0, a.lo.x - b.hi.x});
  const double dy = std::max({b.lo.y - a.hi.y, 0.0, a.lo.y - b.hi.y});
  return std::hypot(dx, dy);
}

// Terminal distances are fixed; the trailing k rows are rewritten per query.
template <int K>
class Evaluator {
 public:
  explicit Evaluator(std::span<const Point2> x) : x_(x), dm_(matrix_of(x, K)) {}

  // Objective at concrete Steiner locations.
  double value(const std::array<Point2, K>& s) {
    const std::size_t n = x_.size();
    for (int j = 0; j < K; ++j) {
      for (std::size_t i = 0; i < n; ++i) dm_.set(n + j, i, distance(s[j], x_[i]));
      for (int l = 0; l < j; ++l) dm_.set(n + j, n + l, distance(s[j], s[l]));
    }
    return biconnect_threshold(dm_, key_, done_);
  }

  // Lower bound over all placements with s[j] in cells[j]: every Steiner edge
  // is shortened to its least length over the cells.
  double lower_bound(const std::array<Box, K>& cells) {
    const std::size_t n = x_.size();
    for (int j = 0; j < K; ++j) {
      for (std::size_t i = 0; i < n; ++i) dm_.set(n + j, i, point_box_distance(x_[i], cells[j]));
      for (int l = 0; l < j; ++l) dm_.set(n + j, n + l, box_box_distance(cells[j], cells[l]));
    }
    return biconnect_threshold(dm_, key_, done_);
  }

 private:
  std::span<const Point2> x_;
  DistMatrix dm_;
  std::vector<double> key_;
  std::vector<char> done_;
};

// Branch and bound over K Steiner locations. Each point ranges over a
// square cell of the current level. A tuple keeps the exact value at its
// centres (an upper bound) and a relaxed lower bound; tuples whose lower
// bound is within `final_bound` of the incumbent are discarded, the rest are
// split into quadrants. Since value(centre) - K * half_diagonal is also a
// lower bound, tuples at the last level are certified to the same slack.
template <int K>
struct Tuple {
  std::array<std::int64_t, 2 * K> idx;  // integer cell coordinates at the current level
};

struct SearchResult {
  double value;
  std::vector<Point2> steiner;
  double error_bound;
};

template <int K>
SearchResult branch_and_bound(std::span<const Point2> x, const Domain& dom, int coarse, int min_levels,
                              double target) {
  Evaluator<K> ev(x);
  const double side0 = std::max(dom.hi.x - dom.lo.x, dom.hi.y - dom.lo.y);
  auto side_at = [&](int level) { return side0 / (coarse * std::ldexp(1.0, level)); };
  auto bound_at = [&](int level) { return K * 0.5 * std::sqrt(2.0) * side_at(level); };
  int levels = std::max(0, min_levels);
  while (bound_at(levels) > target) ++levels;
  const double final_bound = bound_at(levels);

  // Steiner points are interchangeable: the first level keeps tuples with
  // nondecreasing cells.
  auto canonical = [](const std::array<std::int64_t, 2 * K>& idx) {
    for (int j = 0; j + 1 < K; ++j)
      if (std::tie(idx[2 * j], idx[2 * j + 1]) > std::tie(idx[2 * j + 2], idx[2 * j + 3])) return false;
    return true;
  };

  // Children of distinct parent cells are distinct unordered tuples in any
  // order; children of a repeated parent cell would otherwise appear twice.
  auto ordered_among_twins = [](const std::array<std::int64_t, 2 * K>& parent,
                                const std::array<std::int64_t, 2 * K>& idx) {
    for (int j = 0; j + 1 < K; ++j)
      if (parent[2 * j] == parent[2 * j + 2] && parent[2 * j + 1] == parent[2 * j + 3] &&
          std::tie(idx[2 * j], idx[2 * j + 1]) > std::tie(idx[2 * j + 2], idx[2 * j + 3]))
        return false;
    return true;
  };

  double best = kInf;
  std::array<Point2, K> best_pos{};
  std::vector<Tuple<K>> live;
  // Evaluates a tuple at `level`; returns whether it must be kept.
  auto visit = [&](const std::array<std::int64_t, 2 * K>& idx, int level, bool last) {
    const double side = side_at(level);
    std::array<Point2, K> c;
    std::array<Box, K> cells;
    for (int j = 0; j < K; ++j) {
      const Point2 lo{dom.lo.x + idx[2 * j] * side, dom.lo.y + idx[2 * j + 1] * side};
      cells[j] = {lo, {lo.x + side, lo.y + side}};
      c[j] = {lo.x + 0.5 * side, lo.y + 0.5 * side};
    }
    const double v = ev.value(c);
    if (v < best || (v == best && c < best_pos)) {
      best = v;
      best_pos = c;
    }
    if (last) return;
    if (ev.lower_bound(cells) < best - final_bound) live.push_back({idx});
  };

  {
    std::array<std::int64_t, 2 * K> idx{};
    for (;;) {
      if (canonical(idx)) visit(idx, 0, levels == 0);
      int d = 0;
      while (d < 2 * K && ++idx[d] == coarse) idx[d++] = 0;
      if (d == 2 * K) break;
    }
  }
  for (int level = 1; level <= levels; ++level) {
    std::vector<Tuple<K>> parents;
    parents.swap(live);
    for (const auto& t : parents) {
      for (int child = 0; child < (1 << (2 * K)); ++child) {
        std::array<std::int64_t, 2 * K> idx;
        for (int d = 0; d < 2 * K; ++d) idx[d] = 2 * t.idx[d] + ((child >> d) & 1);
        if (ordered_among_twins(t.idx, idx)) visit(idx, level, level == levels);
      }
    }
  }
  return {best, std::vector<Point2>(best_pos.begin(), best_pos.end()), final_bound};
}

}  // namespace

double oracle_mbsn0(std::span<const Point2> points) {
  std::vector<double> key;
  std::vector<char> done;
  return biconnect_threshold(matrix_of(points, 0), key, done);
}

OracleK1 oracle_k1(std::span<const Point2> points, double target_error, GridOptions opts) {
  if (points.size() < 2) throw std::invalid_argument("oracle_k1: need at least two points");
  if (!(target_error > 0.0)) throw std::invalid_argument("oracle_k1: target_error must be positive");
  const Domain dom = inflated_box(points);
  const auto r = branch_and_bound<1>(points, dom, opts.coarse > 0 ? opts.coarse : 32, opts.min_levels, target_error);
  OracleK1 out;
  out.bottleneck = r.value;
  out.s = r.steiner[0];
  out.error_bound = r.error_bound;
  out.domain_lo = dom.lo;
  out.domain_hi = dom.hi;
  return out;
}

OracleK2 oracle_k2(std::span<const Point2> points, double target_error, GridOptions opts) {
  if (points.size() < 2) throw std::invalid_argument("oracle_k2: need at least two points");
  if (!(target_error > 0.0)) throw std::invalid_argument("oracle_k2: target_error must be positive");
  const Domain dom = inflated_box(points);
  const auto r = branch_and_bound<2>(points, dom, opts.coarse > 0 ? opts.coarse : 12, opts.min_levels, target_error);
  OracleK2 out;
  out.bottleneck = r.value;
  out.s1 = r.steiner[0];
  out.s2 = r.steiner[1];
  out.error_bound = r.error_bound;
  out.domain_lo = dom.lo;
  out.domain_hi = dom.hi;
  return out;
}

}  // namespace bsn

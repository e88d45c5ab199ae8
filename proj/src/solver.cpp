#include "bsn/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "bsn/closure1.hpp"
#include "bsn/rng.hpp"

namespace bsn {

std::vector<Point2> SolutionNetwork::vertices() const {
  std::vector<Point2> v = terminals;
  v.insert(v.end(), steiner.begin(), steiner.end());
  return v;
}

Graph SolutionNetwork::graph() const {
  Graph g(static_cast<int>(terminals.size() + steiner.size()));
  for (const Edge& e : edges) g.add_edge(e.u, e.v, e.length);
  return g;
}

void validate_points(std::span<const Point2> points) {
  if (points.size() < 2) throw std::invalid_argument("need at least two points");
  for (const Point2& p : points)
    if (!is_finite(p)) throw std::invalid_argument("non-finite coordinate");
  std::set<Point2> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw std::invalid_argument("duplicate points");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SolutionNetwork from_graph(const Graph& g, std::span<const Point2> all, std::size_t n_terminals, int k,
                           double threshold) {
  SolutionNetwork s;
  s.terminals.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n_terminals));
  s.steiner.assign(all.begin() + static_cast<std::ptrdiff_t>(n_terminals), all.end());
  s.k = k;
  s.threshold = threshold;
  for (const Edge& e : g.edges()) {
    Edge out = e;
    out.length = distance(all[e.u], all[e.v]);
    s.edges.push_back(out);
    s.bottleneck = std::max(s.bottleneck, out.length);
  }
  return s;
}

// Least index i with pred(i) true; pred must be monotone and pred(last) true.
template <class Pred>
std::size_t first_true(std::size_t size, Pred&& pred) {
  std::size_t lo = 0, hi = size - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

struct CachedEval {
  ThresholdEval eval;
  Closure1 c1;
  Closure2 c2;
};

class ThresholdEvaluator {
 public:
  ThresholdEvaluator(std::span<const Point2> points, int k)
      : points_(points), k_(k), rng_(build_2rng(points)),
        schedule_(length_schedule(rng_, k == 2)) {}

  std::size_t size() const { return schedule_.lengths.size(); }
  double length(std::size_t i) const { return schedule_.lengths[i]; }
  const Graph& rng() const { return rng_; }
  Graph subgraph(std::size_t i) const { return threshold_subgraph(rng_, schedule_.lengths[i]); }

  const CachedEval& at(std::size_t i) {
    auto it = cache_.find(i);
    if (it != cache_.end()) return it->second;
    CachedEval c;
    c.eval.t = schedule_.lengths[i];
    const Graph g = subgraph(i);
    const BlockCutForest f = block_cut_forest(g);
    const int limit = 5 * k_;
    c.eval.feasible = f.b_count() <= limit && (k_ == 2 || f.component_count == 1);
    if (c.eval.feasible) {
      if (k_ == 1) {
        c.c1 = optimal_1block_closure(g, points_);
        c.eval.radius = c.c1.radius;
      } else {
        c.c2 = optimal_2block_closure(g, points_);
        c.eval.radius = c.c2.radius;
      }
      c.eval.objective = std::max(c.eval.radius, c.eval.t);
    } else {
      c.eval.objective = kInf;
    }
    return cache_.emplace(i, std::move(c)).first->second;
  }

  // Index of the best threshold under the given search discipline.
  std::size_t best_index(ThresholdSearch search) {
    if (search == ThresholdSearch::Scan) {
      std::size_t best = 0;
      for (std::size_t i = 0; i < size(); ++i)
        if (at(i).eval.objective < at(best).eval.objective) best = i;
      return best;
    }
    const std::size_t i = first_true(size(), [&](std::size_t j) {
      const ThresholdEval& e = at(j).eval;
      return e.feasible && e.radius <= e.t;
    });
    std::size_t best = i;
    if (i > 0 && at(i - 1).eval.objective < at(i).eval.objective) best = i - 1;
    return best;
  }

 private:
  std::span<const Point2> points_;
  int k_;
  Graph rng_;
  ThresholdSchedule schedule_;
  std::map<std::size_t, CachedEval> cache_;
};

// Moves p off any terminal by eps, picking the direction with the smallest
// longest distance to `nbrs`.
Point2 nudge_off_terminals(Point2 p, std::span<const Point2> terminals, const std::vector<int>& nbrs,
                           double eps) {
  auto clashes = [&](Point2 q) {
    for (Point2 x : terminals)
      if (distance(q, x) < eps * (1.0 - 1e-9)) return true;
    return false;
  };
  if (!clashes(p)) return p;
  const double pi = std::acos(-1.0);
  for (double step = eps; step < 1e6 * eps; step *= 2.0) {
    Point2 best = p;
    double best_cost = kInf;
    for (int k = 0; k < 16; ++k) {
      const double ang = 2.0 * pi * k / 16.0;
      const Point2 q = p + step * Point2{std::cos(ang), std::sin(ang)};
      if (clashes(q)) continue;
      double cost = 0.0;
      for (int v : nbrs) cost = std::max(cost, distance(q, terminals[v]));
      if (cost < best_cost) {
        best_cost = cost;
        best = q;
      }
    }
    if (best_cost < kInf) return best;
  }
  throw std::logic_error("could not separate Steiner point from terminals");
}

}  // namespace

SolutionNetwork mbsn0(std::span<const Point2> points) {
  validate_points(points);
  const Graph r = build_2rng(points);
  const ThresholdSchedule sched = length_schedule(r, false);
  const std::size_t i = first_true(sched.lengths.size(), [&](std::size_t j) {
    return is_biconnected(threshold_subgraph(r, sched.lengths[j]));
  });
  const double t = sched.lengths[i];
  return from_graph(threshold_subgraph(r, t), points, points.size(), 0, t);
}

SolutionNetwork mbsn1(std::span<const Point2> points, ThresholdSearch search) {
  validate_points(points);
  ThresholdEvaluator ev(points, 1);
  const std::size_t i = ev.best_index(search);
  const CachedEval& best = ev.at(i);
  const double eps = geometric_tolerance(points);
  const Point2 s = nudge_off_terminals(best.c1.s0, points, best.c1.neighbours, eps);

  std::vector<Point2> all(points.begin(), points.end());
  all.push_back(s);
  SolutionNetwork net = mbsn0(all);
  net.terminals.assign(points.begin(), points.end());
  net.steiner = {s};
  net.k = 1;
  net.threshold = best.eval.t;
  net.closure_radius = best.eval.radius;
  return net;
}

SolutionNetwork mbsn2(std::span<const Point2> points, ThresholdSearch search) {
  validate_points(points);
  ThresholdEvaluator ev(points, 2);
  const std::size_t i = ev.best_index(search);
  const CachedEval& best = ev.at(i);
  const Graph g = ev.subgraph(i);
  const Graph h = embed_closure2(g, points, best.c2);
  if (!is_biconnected(h)) throw std::logic_error("mbsn2: embedded closure is not biconnected");
  std::vector<Point2> all(points.begin(), points.end());
  all.push_back(best.c2.s1);
  all.push_back(best.c2.s2);
  SolutionNetwork net = from_graph(h, all, points.size(), 2, best.eval.t);
  net.closure_radius = best.eval.radius;
  return net;
}

SolutionNetwork solve(std::span<const Point2> points, int k, ThresholdSearch search) {
  switch (k) {
    case 0: return mbsn0(points);
    case 1: return mbsn1(points, search);
    case 2: return mbsn2(points, search);
    default: throw std::invalid_argument("k must be 0, 1 or 2");
  }
}

std::vector<ThresholdEval> threshold_profile(std::span<const Point2> points, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("threshold_profile: k must be 1 or 2");
  validate_points(points);
  ThresholdEvaluator ev(points, k);
  std::vector<ThresholdEval> out;
  for (std::size_t i = 0; i < ev.size(); ++i) out.push_back(ev.at(i).eval);
  return out;
}

bool check_solution(const SolutionNetwork& s, double tol, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(s.steiner.size()) != s.k) return fail("wrong number of Steiner points");
  const auto all = s.vertices();
  for (std::size_t i = 0; i < s.steiner.size(); ++i) {
    for (const Point2& t : s.terminals)
      if (s.steiner[i] == t) return fail("Steiner point coincides with a terminal");
    for (std::size_t j = i + 1; j < s.steiner.size(); ++j)
      if (s.steiner[i] == s.steiner[j]) return fail("Steiner points coincide");
  }
  Graph g(static_cast<int>(all.size()));
  double longest = 0.0;
  try {
    for (const Edge& e : s.edges) {
      g.add_edge(e.u, e.v, e.length);
      longest = std::max(longest, distance(all[e.u], all[e.v]));
    }
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  }
  if (!is_biconnected(g)) return fail("network is not biconnected");
  if (std::abs(longest - s.bottleneck) > tol) return fail("bottleneck does not match the longest edge");
  return true;
}

}  // namespace bsn

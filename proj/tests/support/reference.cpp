#include "reference.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ref {

EdgeList edge_list(const bsn::Graph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

int component_count(int n, const EdgeList& edges, int skip) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : edges)
    if (u != skip && v != skip) parent[find(u)] = find(v);
  int count = 0;
  for (int v = 0; v < n; ++v)
    if (v != skip && find(v) == v) ++count;
  return count;
}

bool is_biconnected(int n, const EdgeList& edges) {
  if (n <= 1) return true;
  if (component_count(n, edges) != 1) return false;
  if (n == 2) return true;
  for (int v = 0; v < n; ++v)
    if (component_count(n, edges, v) != 1) return false;
  return true;
}

std::vector<int> cut_vertices(int n, const EdgeList& edges) {
  const int base = component_count(n, edges);
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    // Deleting an isolated vertex lowers the count by one without cutting.
    bool isolated = true;
    for (auto [a, b] : edges)
      if (a == v || b == v) isolated = false;
    if (!isolated && component_count(n, edges, v) > base) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> blocks(int n, const EdgeList& edges) {
  const int m = static_cast<int>(edges.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      int shared = -1, x = -1, y = -1;
      if (a == c) shared = a, x = b, y = d;
      else if (a == d) shared = a, x = b, y = c;
      else if (b == c) shared = b, x = a, y = d;
      else if (b == d) shared = b, x = a, y = c;
      if (shared < 0) continue;
      // x and y joined in G - shared?
      std::vector<int> p2(n);
      std::iota(p2.begin(), p2.end(), 0);
      std::function<int(int)> f2 = [&](int z) { return p2[z] == z ? z : p2[z] = f2(p2[z]); };
      for (auto [u, v] : edges)
        if (u != shared && v != shared) p2[f2(u)] = f2(v);
      if (f2(x) == f2(y)) parent[find(i)] = find(j);
    }
  std::map<int, std::set<int>> groups;
  std::vector<char> touched(n, 0);
  for (int i = 0; i < m; ++i) {
    groups[find(i)].insert(edges[i].first);
    groups[find(i)].insert(edges[i].second);
    touched[edges[i].first] = touched[edges[i].second] = 1;
  }
  std::vector<std::vector<int>> out;
  for (auto& [k, s] : groups) out.emplace_back(s.begin(), s.end());
  for (int v = 0; v < n; ++v)
    if (!touched[v]) out.push_back({v});
  std::sort(out.begin(), out.end());
  return out;
}

int b_count(int n, const EdgeList& edges) {
  const auto bl = blocks(n, edges);
  const auto cuts = cut_vertices(n, edges);
  const std::set<int> cut(cuts.begin(), cuts.end());
  int total = 0;
  for (const auto& b : bl) {
    int c = 0;
    for (int v : b) c += static_cast<int>(cut.count(v));
    if (c == 0) total += 2;
    else if (c == 1) total += 1;
  }
  return total;
}

double complete_graph_threshold(const std::vector<Point2>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<double> lengths;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) lengths.push_back(bsn::distance(pts[i], pts[j]));
  std::sort(lengths.begin(), lengths.end());
  auto ok = [&](double t) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (bsn::distance(pts[i], pts[j]) <= t) e.emplace_back(i, j);
    return is_biconnected(n, e);
  };
  // The complete graph is 2-connected, so the last length qualifies.
  std::size_t lo = 0, hi = lengths.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (ok(lengths[mid])) hi = mid;
    else lo = mid + 1;
  }
  return lengths[lo];
}

bsn::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  bsn::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<Point2> random_points(int n, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(0.0, scale);
  std::vector<Point2> out;
  while (static_cast<int>(out.size()) < n) out.push_back({u(rng), u(rng)});
  return out;
}

double box_distance(Point2 p, const Box& b) {
  const double dx = std::max({b.lo.x - p.x, 0.0, p.x - b.hi.x});
  const double dy = std::max({b.lo.y - p.y, 0.0, p.y - b.hi.y});
  return std::hypot(dx, dy);
}

double box_box_distance(const Box& a, const Box& b) {
  const double dx = std::max({a.lo.x - b.hi.x, 0.0, b.lo.x - a.hi.x});
  const double dy = std::max({a.lo.y - b.hi.y, 0.0, b.lo.y - a.hi.y});
  return std::hypot(dx, dy);
}

Box inflated_box(const std::vector<Point2>& pts) {
  Box b{pts[0], pts[0]};
  double diam = 0.0;
  for (const auto& p : pts) {
    b.lo = {std::min(b.lo.x, p.x), std::min(b.lo.y, p.y)};
    b.hi = {std::max(b.hi.x, p.x), std::max(b.hi.y, p.y)};
    for (const auto& q : pts) diam = std::max(diam, bsn::distance(p, q));
  }
  diam = std::max(diam, 1e-9);
  return {{b.lo.x - diam, b.lo.y - diam}, {b.hi.x + diam, b.hi.y + diam}};
}

double closure_threshold(int n, const EdgeList& g_edges, int k, const std::function<double(int, int)>& dist,
                         double dss) {
  struct Cand {
    double len;
    int u, v;
  };
  std::vector<Cand> cand;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) cand.push_back({dist(j, i), i, n + j});
  if (k == 2) cand.push_back({dss, n, n + 1});
  std::sort(cand.begin(), cand.end(), [](const Cand& a, const Cand& b) { return a.len < b.len; });
  auto ok = [&](std::size_t count) {
    EdgeList e = g_edges;
    for (std::size_t i = 0; i < count; ++i) e.emplace_back(cand[i].u, cand[i].v);
    return is_biconnected(n + k, e);
  };
  if (!ok(cand.size())) return kInf;
  std::size_t lo = 0, hi = cand.size();  // ok(hi) holds
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid + 1;
  }
  // Every edge of equal length is present at radius cand[lo-1].len.
  return lo == 0 ? 0.0 : cand[lo - 1].len;
}

ClosureOptimum closure_optimum(const bsn::Graph& g, const std::vector<Point2>& pts, int k, double target) {
  const int n = static_cast<int>(pts.size());
  const EdgeList e = edge_list(g);
  const Box dom = inflated_box(pts);
  if (k == 1) {
    auto r = certified_min<1>(
        dom, target,
        [&](const std::array<Point2, 1>& s) {
          return closure_threshold(n, e, 1, [&](int, int i) { return bsn::distance(s[0], pts[i]); }, 0.0);
        },
        [&](const std::array<Box, 1>& c) {
          return closure_threshold(n, e, 1, [&](int, int i) { return box_distance(pts[i], c[0]); }, 0.0);
        });
    return {r.value, r.error_bound};
  }
  auto r = certified_min<2>(
      dom, target,
      [&](const std::array<Point2, 2>& s) {
        return closure_threshold(n, e, 2, [&](int j, int i) { return bsn::distance(s[j], pts[i]); },
                                 bsn::distance(s[0], s[1]));
      },
      [&](const std::array<Box, 2>& c) {
        return closure_threshold(n, e, 2, [&](int j, int i) { return box_distance(pts[i], c[j]); },
                                 box_box_distance(c[0], c[1]));
      });
  return {r.value, r.error_bound};
}

namespace {

std::vector<Point2> all_points(const bsn::ColorSystem& cs) {
  std::vector<Point2> out;
  for (const auto& cls : cs.classes)
    for (const auto& s : cls) out.push_back(s.pos);
  return out;
}

double class_radius(const bsn::ColorSystem& cs, const std::function<double(Point2)>& d) {
  double worst = 0.0;
  for (const auto& cls : cs.classes) {
    double best = kInf;
    for (const auto& s : cls) best = std::min(best, d(s.pos));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

ClosureOptimum scsd_optimum(const bsn::ColorSystem& cs, double target) {
  const Box dom = inflated_box(all_points(cs));
  auto r = certified_min<1>(
      dom, target,
      [&](const std::array<Point2, 1>& s) {
        return class_radius(cs, [&](Point2 p) { return bsn::distance(p, s[0]); });
      },
      [&](const std::array<Box, 1>& c) { return class_radius(cs, [&](Point2 p) { return box_distance(p, c[0]); }); });
  return {r.value, r.error_bound};
}

ClosureOptimum coupled_optimum(const bsn::ColorSystem& cs1, const bsn::ColorSystem& cs2, double target) {
  auto pts = all_points(cs1);
  const auto p2 = all_points(cs2);
  pts.insert(pts.end(), p2.begin(), p2.end());
  const Box dom = inflated_box(pts);
  auto r = certified_min<2>(
      dom, target,
      [&](const std::array<Point2, 2>& s) {
        return std::max({class_radius(cs1, [&](Point2 p) { return bsn::distance(p, s[0]); }),
                         class_radius(cs2, [&](Point2 p) { return bsn::distance(p, s[1]); }),
                         bsn::distance(s[0], s[1])});
      },
      [&](const std::array<Box, 2>& c) {
        return std::max({class_radius(cs1, [&](Point2 p) { return box_distance(p, c[0]); }),
                         class_radius(cs2, [&](Point2 p) { return box_distance(p, c[1]); }),
                         box_box_distance(c[0], c[1])});
      });
  return {r.value, r.error_bound};
}

double exact_k1(const std::vector<Point2>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<Point2> cand(pts);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      cand.push_back(bsn::midpoint(pts[i], pts[j]));
      for (int l = j + 1; l < n; ++l)
        if (auto c = bsn::circumcenter(pts[i], pts[j], pts[l])) cand.push_back(*c);
    }
  double best = kInf;
  for (const Point2& c : cand) {
    auto all = pts;
    all.push_back(c);
    best = std::min(best, complete_graph_threshold(all));
  }
  return best;
}

}  // namespace ref

#include "bsn/closure1.hpp"

#include <stdexcept>

#include "bsn/scsd.hpp"

namespace bsn {

namespace {

Edge shortest_edge(const Graph& g, std::span<const Point2> points) {
  Edge best = g.edges().front();
  double best_len = distance(points[best.u], points[best.v]);
  for (const Edge& e : g.edges()) {
    const double len = distance(points[e.u], points[e.v]);
    if (len < best_len || (len == best_len && std::pair(e.u, e.v) < std::pair(best.u, best.v))) {
      best = e;
      best_len = len;
    }
  }
  return best;
}

}  // namespace

Closure1 optimal_1block_closure(const Graph& g, std::span<const Point2> points) {
  if (static_cast<int>(points.size()) != g.vertex_count())
    throw std::invalid_argument("optimal_1block_closure: point count mismatch");
  if (g.vertex_count() < 2) throw std::invalid_argument("optimal_1block_closure: need two vertices");
  if (!is_connected(g)) throw std::invalid_argument("optimal_1block_closure: graph is disconnected");

  const BlockCutForest f = block_cut_forest(g);
  Closure1 out;
  if (f.blocks.size() == 1) {
    const Edge e = shortest_edge(g, points);
    out.block = true;
    out.s0 = midpoint(points[e.u], points[e.v]);
    out.neighbours = {e.u, e.v};
    out.radius = 0.5 * distance(points[e.u], points[e.v]);
    return out;
  }

  ColorSystem cs;
  for (int b : f.leaf_blocks) {
    std::vector<Site> sites;
    for (int v : f.interior(b)) sites.push_back({points[v], v});
    cs.add_class(std::move(sites));
  }
  const ScsdResult disk = smallest_color_spanning_disk(cs);
  out.s0 = disk.disk.center;
  out.radius = disk.disk.radius;
  for (const Site& s : disk.nearest) out.neighbours.push_back(s.id);
  return out;
}

Graph embed_closure1(const Graph& g, std::span<const Point2> points, const Closure1& c) {
  const int n = g.vertex_count();
  Graph h(n + 1);
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v, e.length);
  for (int v : c.neighbours)
    if (!h.has_edge(v, n)) h.add_edge(v, n, distance(points[v], c.s0));
  return h;
}

}  // namespace bsn

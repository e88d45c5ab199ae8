#include "bsn/closure2.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bsn/scsd.hpp"

namespace bsn {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Block: return "block";
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2: return "case2";
    case CaseTag::Case2_1: return "case2.1";
    case CaseTag::Case2_2: return "case2.2";
    case CaseTag::Case3: return "case3";
  }
  return "unknown";
}

std::vector<Partition> enumerate_partitions(const BlockCutForest& bcf, bool connected) {
  const auto& leaves = bcf.leaf_blocks;
  const int l = static_cast<int>(leaves.size());
  std::vector<Partition> out;
  if (l == 0) {
    if (!connected) out.push_back({});
    return out;
  }
  const unsigned count = 1u << (l - 1);
  for (unsigned mask = 0; mask < count; ++mask) {
    if (connected && mask == 0) continue;
    Partition p;
    p.y1.push_back(leaves[0]);
    for (int i = 1; i < l; ++i) {
      if (mask & (1u << (i - 1))) p.y2.push_back(leaves[i]);
      else p.y1.push_back(leaves[i]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

int smallest_interior(const BlockCutForest& bcf, int b) {
  const auto in = bcf.interior(b);
  if (in.empty()) throw std::logic_error("leaf block without interior");
  return in.front();
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

BlockPath extract_path(const BlockCutForest& f, int s1, int s2) {
  BlockPath path;
  const int nb = static_cast<int>(f.blocks.size());
  if (f.component_count != 1 || nb < 2) throw std::logic_error("M0 is not a connected block path");
  if (f.is_cut[s1] || f.is_cut[s2]) throw std::logic_error("Steiner point is a cut-vertex of M0");
  for (int v : f.cut_vertices)
    if (f.vertex_blocks[v].size() != 2) throw std::logic_error("M0 block cut tree is not a path");

  int current = f.vertex_blocks[s1].front();
  int prev_cut = -1;
  std::vector<char> seen(nb, 0);
  while (true) {
    seen[current] = 1;
    path.blocks.push_back(f.blocks[current]);
    int next_cut = -1;
    for (int v : f.blocks[current]) {
      if (!f.is_cut[v] || v == prev_cut) continue;
      if (next_cut >= 0) throw std::logic_error("M0 block has more than two cut-vertices");
      next_cut = v;
    }
    if (next_cut < 0) break;
    const auto& pair = f.vertex_blocks[next_cut];
    const int next = pair[0] == current ? pair[1] : pair[0];
    if (seen[next]) throw std::logic_error("M0 block cut tree has a cycle");
    path.tau.push_back(next_cut);
    prev_cut = next_cut;
    current = next;
  }
  if (path.size() != nb || !contains(path.blocks.back(), s2))
    throw std::logic_error("M0 block path does not end at s2");

  const int nv = static_cast<int>(f.is_cut.size());
  path.cell_of.assign(nv, -1);
  for (int i = 0; i < path.size(); ++i) {
    std::vector<int> cell;
    for (int v : path.blocks[i])
      if (i == 0 || v != path.tau[i - 1]) cell.push_back(v);
    for (int v : cell) {
      if (path.cell_of[v] >= 0) throw std::logic_error("M0 cells overlap");
      path.cell_of[v] = i;
    }
    path.cells.push_back(std::move(cell));
  }
  for (int v = 0; v < nv; ++v)
    if (path.cell_of[v] < 0) throw std::logic_error("M0 cells do not cover all vertices");

  const int p = path.size();
  path.j1 = path.blocks.front().size() == 2;
  path.j2 = path.blocks.back().size() == 2;
  for (int i = 0; i < p; ++i) {
    if (i == 0 && path.j1) continue;
    if (i == p - 1 && path.j2) continue;
    path.i0.push_back(i);
  }
  return path;
}

std::vector<Site> sites_of(const std::vector<int>& ids, std::span<const Point2> points) {
  std::vector<Site> out;
  const int n = static_cast<int>(points.size());
  for (int v : ids)
    if (v < n) out.push_back({points[v], v});
  return out;
}

double steiner_radius(const Closure2& c, std::span<const Point2> points) {
  double r = 0.0;
  for (int v : c.n1) r = std::max(r, distance(c.s1, points[v]));
  for (int v : c.n2) r = std::max(r, distance(c.s2, points[v]));
  if (c.s1s2) r = std::max(r, distance(c.s1, c.s2));
  return r;
}

void append_nearest(std::vector<int>& out, Point2 x, const ColorSystem& cs) {
  for (const Site& s : nearest_per_color(x, cs))
    if (!contains(out, s.id)) out.push_back(s.id);
}

double tie_of(std::span<const Point2> points) { return 1e-3 * geometric_tolerance(points); }

// Colour classes fixed by the topology for Case 1 / Case 3, plus the
// non-vertex isolated blocks that need distinct endpoints.
struct IsolatedSearchInput {
  ColorSystem base1;
  ColorSystem base2;
  std::vector<std::vector<Site>> z;
};

IsolatedSearchInput isolated_search_input(std::span<const Point2> points, const BlockCutForest& bcf,
                                          const CriticalTopology& topo) {
  IsolatedSearchInput in;
  for (int b : topo.partition.y1) in.base1.add_class(sites_of(bcf.interior(b), points));
  for (int b : topo.partition.y2) in.base2.add_class(sites_of(bcf.interior(b), points));
  const int n = static_cast<int>(points.size());
  auto component_sites = [&](int comp) {
    std::vector<Site> s;
    for (int v = 0; v < n; ++v)
      if (bcf.component[v] == comp) s.push_back({points[v], v});
    return s;
  };
  for (int comp : topo.covered2) in.base1.add_class(component_sites(comp));
  for (int comp : topo.covered1) in.base2.add_class(component_sites(comp));
  for (std::size_t i = 0; i < topo.isolated_blocks.size(); ++i) {
    auto sites = sites_of(bcf.blocks[topo.isolated_blocks[i]], points);
    if (topo.independent[i]) {
      in.z.push_back(std::move(sites));
    } else {
      in.base1.add_class(sites);
      in.base2.add_class(std::move(sites));
    }
  }
  return in;
}

class IsolatedSearch {
 public:
  IsolatedSearch(std::span<const Point2> points, IsolatedSearchInput in, CaseTag tag)
      : points_(points), in_(std::move(in)), tag_(tag) {
    tol_ = geometric_tolerance(points);
    tie_ = tie_of(points);
  }

  Closure2 run() {
    std::vector<int> choice(in_.z.size(), -1);
    search(choice);
    return best_;
  }

 private:
  void build(const std::vector<int>& choice, ColorSystem& cs1, ColorSystem& cs2) const {
    cs1 = in_.base1;
    cs2 = in_.base2;
    for (std::size_t i = 0; i < in_.z.size(); ++i) {
      if (choice[i] < 0) {
        cs1.add_class(in_.z[i]);
        cs2.add_class(in_.z[i]);
        continue;
      }
      cs1.add_class({in_.z[i][choice[i]]});
      std::vector<Site> rest;
      for (int j = 0; j < static_cast<int>(in_.z[i].size()); ++j)
        if (j != choice[i]) rest.push_back(in_.z[i][j]);
      cs2.add_class(std::move(rest));
    }
  }

  void search(std::vector<int>& choice) {
    ColorSystem cs1, cs2;
    build(choice, cs1, cs2);
    if (cs1.classes.empty() || cs2.classes.empty())
      throw std::logic_error("Steiner point without associated blocks");
    const ScsdResult d1 = smallest_color_spanning_disk(cs1);
    if (d1.disk.radius >= best_.radius - tie_) return;
    const ScsdResult d2 = smallest_color_spanning_disk(cs2);
    const double lb = std::max(d1.disk.radius, d2.disk.radius);
    if (lb >= best_.radius - tie_) return;

    const Point2 c1 = d1.disk.center, c2 = d2.disk.center;
    const double reach = lb + tol_;
    std::vector<std::pair<int, int>> picks(in_.z.size(), {-1, -1});
    int conflict = -1;
    for (std::size_t i = 0; i < in_.z.size() && conflict < 0; ++i) {
      if (choice[i] >= 0) continue;
      // Prefer the nearest endpoint for s1, then the nearest other one for s2.
      const auto& z = in_.z[i];
      int a = -1, b = -1;
      for (int j = 0; j < static_cast<int>(z.size()); ++j) {
        if (distance(c1, z[j].pos) > reach) continue;
        for (int k = 0; k < static_cast<int>(z.size()); ++k) {
          if (k == j || distance(c2, z[k].pos) > reach) continue;
          const double cost =
              std::max(distance(c1, z[j].pos), distance(c2, z[k].pos));
          if (a < 0 || cost < std::max(distance(c1, z[a].pos), distance(c2, z[b].pos))) {
            a = j;
            b = k;
          }
        }
      }
      if (a < 0) conflict = static_cast<int>(i);
      else picks[i] = {a, b};
    }

    if (conflict < 0) {
      Closure2 c;
      c.s1 = c1;
      c.s2 = c2;
      c.tag = tag_;
      append_nearest(c.n1, c1, in_.base1);
      append_nearest(c.n2, c2, in_.base2);
      for (std::size_t i = 0; i < in_.z.size(); ++i) {
        const auto& z = in_.z[i];
        int a = choice[i], b = -1;
        if (a >= 0) {
          for (int k = 0; k < static_cast<int>(z.size()); ++k)
            if (k != a && (b < 0 || distance(c2, z[k].pos) < distance(c2, z[b].pos))) b = k;
        } else {
          std::tie(a, b) = picks[i];
        }
        if (!contains(c.n1, z[a].id)) c.n1.push_back(z[a].id);
        if (!contains(c.n2, z[b].id)) c.n2.push_back(z[b].id);
      }
      c.radius = steiner_radius(c, points_);
      if (c.radius < best_.radius - tie_) best_ = c;
      return;
    }

    // Branch on the endpoint used by s1 in the conflicting block, nearest first.
    const auto& z = in_.z[conflict];
    std::vector<int> order(z.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      const double dx = distance(c1, z[x].pos), dy = distance(c1, z[y].pos);
      return dx < dy || (dx == dy && x < y);
    });
    for (int j : order) {
      choice[conflict] = j;
      search(choice);
    }
    choice[conflict] = -1;
  }

  std::span<const Point2> points_;
  IsolatedSearchInput in_;
  CaseTag tag_;
  double tol_ = 0.0;
  double tie_ = 0.0;
  Closure2 best_;
};

Closure2 locate_isolated(std::span<const Point2> points, const BlockCutForest& bcf,
                         const CriticalTopology& topo) {
  return IsolatedSearch(points, isolated_search_input(points, bcf, topo), topo.tag).run();
}

// Classes of each Steiner point's leaf blocks for Case 2; a single leaf
// block is represented by its representative vertex alone.
ColorSystem case2_base(std::span<const Point2> points, const BlockCutForest& bcf,
                       const std::vector<int>& blocks, const std::vector<int>& reps, bool pin_single) {
  ColorSystem cs;
  if (pin_single && blocks.size() == 1) {
    cs.add_class(sites_of({reps.front()}, points));
    return cs;
  }
  for (int b : blocks) cs.add_class(sites_of(bcf.interior(b), points));
  return cs;
}

}  // namespace

CriticalTopology classify(const Graph& g, const BlockCutForest& bcf, const Partition& p, int rep1,
                          int rep2) {
  const int n = g.vertex_count();
  const int s1 = n, s2 = n + 1;
  CriticalTopology t;
  t.partition = p;
  for (int b : p.y1) {
    if (!bcf.is_leaf(b)) throw std::invalid_argument("classify: partition uses a non-leaf block");
    t.rep1.push_back(p.y1.size() == 1 && rep1 >= 0 ? rep1 : smallest_interior(bcf, b));
  }
  for (int b : p.y2) {
    if (!bcf.is_leaf(b)) throw std::invalid_argument("classify: partition uses a non-leaf block");
    t.rep2.push_back(p.y2.size() == 1 && rep2 >= 0 ? rep2 : smallest_interior(bcf, b));
  }
  if (p.y1.size() + p.y2.size() != bcf.leaf_blocks.size())
    throw std::invalid_argument("classify: partition does not cover the leaf blocks");

  t.m0 = Graph(n + 2);
  for (const Edge& e : g.edges()) t.m0.add_edge(e.u, e.v, e.length);
  for (int v : t.rep1) t.m0.add_edge(s1, v);
  for (int v : t.rep2) t.m0.add_edge(s2, v);
  for (int b : bcf.isolated_blocks) {
    const auto& verts = bcf.blocks[b];
    t.isolated_blocks.push_back(b);
    t.independent.push_back(verts.size() > 1);
    t.m0.add_edge(s1, verts[0]);
    t.m0.add_edge(s2, verts.size() > 1 ? verts[1] : verts[0]);
  }

  for (int comp = 0; comp < bcf.component_count; ++comp) {
    int in1 = 0, in2 = 0;
    for (int b : p.y1) in1 += bcf.block_component[b] == comp;
    for (int b : p.y2) in2 += bcf.block_component[b] == comp;
    if (in1 + in2 == 0) continue;
    if (in2 == 0) t.covered1.push_back(comp);
    if (in1 == 0) t.covered2.push_back(comp);
  }

  const BlockCutForest f0 = block_cut_forest(t.m0);
  if (f0.component_count == 1 && f0.blocks.size() == 1) {
    t.tag = CaseTag::Case1;
  } else if (!t.covered1.empty() || !t.covered2.empty()) {
    t.tag = CaseTag::Case3;
  } else {
    if (bcf.component_count != 1) throw std::logic_error("classify: disconnected graph without covered component");
    t.tag = CaseTag::Case2;
    t.path = extract_path(f0, s1, s2);
  }
  return t;
}

Closure2 locate_case1(const Graph&, std::span<const Point2> points, const BlockCutForest& bcf,
                      const CriticalTopology& topo) {
  if (topo.tag != CaseTag::Case1) throw std::invalid_argument("locate_case1: wrong case");
  return locate_isolated(points, bcf, topo);
}

Closure2 locate_case3(const Graph&, std::span<const Point2> points, const BlockCutForest& bcf,
                      const CriticalTopology& topo) {
  if (topo.tag != CaseTag::Case3) throw std::invalid_argument("locate_case3: wrong case");
  return locate_isolated(points, bcf, topo);
}

Closure2 locate_case2_1(std::span<const Point2> points, const BlockCutForest& bcf,
                        const CriticalTopology& topo, IndexSearch mode) {
  if (topo.tag != CaseTag::Case2 || !topo.path) throw std::invalid_argument("locate_case2_1: wrong case");
  const BlockPath& path = *topo.path;
  const int n = static_cast<int>(points.size());
  const int p = path.size();
  const ColorSystem base1 = case2_base(points, bcf, topo.partition.y1, topo.rep1, true);
  const ColorSystem base2 = case2_base(points, bcf, topo.partition.y2, topo.rep2, true);
  const double tol = geometric_tolerance(points);
  const double tie = tie_of(points);

  struct Eval {
    Closure2 closure;
    double r1 = 0.0, r2 = 0.0;
  };

  auto evaluate = [&](int a) -> std::optional<Eval> {
    ColorSystem cs1 = base1;
    std::vector<int> h1;
    for (int v = 0; v < n; ++v)
      if (path.cell_of[v] >= a) h1.push_back(v);
    if (h1.empty()) return std::nullopt;
    if (a > 0) cs1.add_class(sites_of(h1, points));
    const ScsdResult d1 = smallest_color_spanning_disk(cs1);

    // Furthest cell reached by s1; its point becomes the crossing edge.
    int b = a, xb = -1;
    double xd = std::numeric_limits<double>::infinity();
    for (int v : h1) {
      const double d = distance(d1.disk.center, points[v]);
      if (d > d1.disk.radius + tol) continue;
      const int cell = path.cell_of[v];
      if (cell > b || (cell == b && d < xd)) {
        b = cell;
        xb = v;
        xd = d;
      }
    }

    ColorSystem cs2 = base2;
    std::vector<int> h2;
    if (b < p - 1) {
      for (int v = 0; v < n; ++v)
        if (path.cell_of[v] <= b && v != path.tau[b]) h2.push_back(v);
      if (h2.empty()) return std::nullopt;
      cs2.add_class(sites_of(h2, points));
    }
    const ScsdResult d2 = smallest_color_spanning_disk(cs2);

    Eval e;
    e.r1 = d1.disk.radius;
    e.r2 = d2.disk.radius;
    Closure2& c = e.closure;
    c.s1 = d1.disk.center;
    c.s2 = d2.disk.center;
    c.tag = CaseTag::Case2_1;
    c.chosen_index = a;
    append_nearest(c.n1, c.s1, base1);
    if (b > 0 && xb >= 0 && !contains(c.n1, xb)) c.n1.push_back(xb);
    append_nearest(c.n2, c.s2, cs2);
    c.radius = steiner_radius(c, points);
    return e;
  };

  Closure2 best;
  auto consider = [&](const Eval& e) {
    if (e.closure.radius < best.radius - tie) best = e.closure;
  };

  const auto& i0 = path.i0;
  if (i0.empty()) return best;
  if (mode == IndexSearch::Scan) {
    for (int a : i0)
      if (auto e = evaluate(a)) consider(*e);
    return best;
  }
  int lo = 0, hi = static_cast<int>(i0.size()) - 1;
  while (lo <= hi) {
    const int mid = lo + (hi - lo) / 2;
    const auto e = evaluate(i0[mid]);
    if (!e) {
      hi = mid - 1;
      continue;
    }
    consider(*e);
    if (e->r1 >= e->r2) hi = mid - 1;
    else lo = mid + 1;
  }
  return best;
}

Closure2 locate_case2_2(std::span<const Point2> points, const BlockCutForest& bcf,
                        const CriticalTopology& topo) {
  if (topo.tag != CaseTag::Case2) throw std::invalid_argument("locate_case2_2: wrong case");
  const ColorSystem cs1 = case2_base(points, bcf, topo.partition.y1, topo.rep1, false);
  const ColorSystem cs2 = case2_base(points, bcf, topo.partition.y2, topo.rep2, false);
  const CoupledResult r = coupled_two_disk(cs1, cs2);
  Closure2 c;
  c.s1 = r.s1;
  c.s2 = r.s2;
  c.s1s2 = true;
  c.tag = CaseTag::Case2_2;
  append_nearest(c.n1, c.s1, cs1);
  append_nearest(c.n2, c.s2, cs2);
  c.radius = steiner_radius(c, points);
  return c;
}

Closure2 locate_case2(std::span<const Point2> points, const BlockCutForest& bcf,
                      const CriticalTopology& topo, IndexSearch mode) {
  Closure2 a = locate_case2_1(points, bcf, topo, mode);
  Closure2 b = locate_case2_2(points, bcf, topo);
  return b.radius < a.radius - tie_of(points) ? b : a;
}

namespace {

Closure2 block_closure(const Graph& g, std::span<const Point2> points) {
  Edge best = g.edges().front();
  double best_len = distance(points[best.u], points[best.v]);
  for (const Edge& e : g.edges()) {
    const double len = distance(points[e.u], points[e.v]);
    if (len < best_len || (len == best_len && std::pair(e.u, e.v) < std::pair(best.u, best.v))) {
      best = e;
      best_len = len;
    }
  }
  const Point2 u = points[best.u], v = points[best.v];
  Closure2 c;
  c.tag = CaseTag::Block;
  c.s1 = u + (1.0 / 3.0) * (v - u);
  c.s2 = u + (2.0 / 3.0) * (v - u);
  c.n1 = {best.u};
  c.n2 = {best.v};
  c.s1s2 = true;
  c.radius = steiner_radius(c, points);
  return c;
}

double partition_lower_bound(std::span<const Point2> points, const BlockCutForest& bcf,
                             const Partition& p, double cutoff) {
  double lb = 0.0;
  for (const auto* side : {&p.y1, &p.y2}) {
    if (side->empty()) continue;
    ColorSystem cs;
    for (int b : *side) cs.add_class(sites_of(bcf.interior(b), points));
    lb = std::max(lb, scsd_radius(cs, cutoff));
    if (lb >= cutoff) break;
  }
  return lb;
}

}  // namespace

Closure2 optimal_2block_closure(const Graph& g, std::span<const Point2> points,
                                std::vector<CandidateClosure>* candidates, IndexSearch mode) {
  const int n = g.vertex_count();
  if (static_cast<int>(points.size()) != n) throw std::invalid_argument("optimal_2block_closure: point count mismatch");
  if (n < 2) throw std::invalid_argument("optimal_2block_closure: need two vertices");
  const double eps = geometric_tolerance(points);
  const double tie = tie_of(points);

  const BlockCutForest bcf = block_cut_forest(g);
  const bool connected = bcf.component_count == 1;
  Closure2 best;
  if (connected && bcf.blocks.size() == 1) {
    best = block_closure(g, points);
    if (candidates) candidates->push_back({{}, best});
    separate_steiner_points(best, points, eps);
    return best;
  }

  auto consider = [&](const Partition& p, const Closure2& c) {
    if (!c.valid()) return;
    if (candidates) candidates->push_back({p, c});
    if (c.radius < best.radius - tie) best = c;
  };

  for (const Partition& p : enumerate_partitions(bcf, connected)) {
    if (!candidates && connected && partition_lower_bound(points, bcf, p, best.radius) >= best.radius - tie)
      continue;
    if (!connected) {
      const CriticalTopology topo = classify(g, bcf, p);
      consider(p, topo.tag == CaseTag::Case1 ? locate_case1(g, points, bcf, topo)
                                             : locate_case3(g, points, bcf, topo));
      continue;
    }
    std::vector<int> reps1{-1}, reps2{-1};
    if (p.y1.size() == 1) reps1 = bcf.interior(p.y1.front());
    if (p.y2.size() == 1) reps2 = bcf.interior(p.y2.front());
    std::optional<CriticalTopology> path_topo;
    for (int r1 : reps1)
      for (int r2 : reps2) {
        CriticalTopology topo = classify(g, bcf, p, r1, r2);
        if (topo.tag == CaseTag::Case1) {
          consider(p, locate_case1(g, points, bcf, topo));
        } else if (topo.tag == CaseTag::Case2) {
          consider(p, locate_case2_1(points, bcf, topo, mode));
          if (!path_topo) path_topo = std::move(topo);
        } else {
          throw std::logic_error("optimal_2block_closure: covered component in a connected graph");
        }
      }
    if (path_topo) consider(p, locate_case2_2(points, bcf, *path_topo));
  }
  if (!best.valid()) throw std::logic_error("optimal_2block_closure: no closure found");
  separate_steiner_points(best, points, eps);
  return best;
}

Graph embed_closure2(const Graph& g, std::span<const Point2> points, const Closure2& c) {
  const int n = g.vertex_count();
  Graph h(n + 2);
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v, distance(points[e.u], points[e.v]));
  for (int v : c.n1)
    if (!h.has_edge(v, n)) h.add_edge(v, n, distance(points[v], c.s1));
  for (int v : c.n2)
    if (!h.has_edge(v, n + 1)) h.add_edge(v, n + 1, distance(points[v], c.s2));
  if (c.s1s2) h.add_edge(n, n + 1, distance(c.s1, c.s2));
  return h;
}

void separate_steiner_points(Closure2& c, std::span<const Point2> points, double eps) {
  const double limit = eps * (1.0 - 1e-9);
  auto clashes = [&](Point2 s, const Point2* other) {
    if (other && distance(s, *other) < limit) return true;
    for (Point2 x : points)
      if (distance(s, x) < limit) return true;
    return false;
  };
  auto longest = [&](Point2 s, const std::vector<int>& nbrs, Point2 partner) {
    double r = c.s1s2 ? distance(s, partner) : 0.0;
    for (int v : nbrs) r = std::max(r, distance(s, points[v]));
    return r;
  };
  auto move = [&](Point2& s, const std::vector<int>& nbrs, const Point2* other, Point2 partner) {
    if (!clashes(s, other)) return;
    const double pi = std::acos(-1.0);
    for (double step = eps; step < 1e6 * eps; step *= 2.0) {
      bool found = false;
      Point2 best_pos = s;
      double best_cost = std::numeric_limits<double>::infinity();
      for (int k = 0; k < 16; ++k) {
        const double ang = 2.0 * pi * k / 16.0;
        const Point2 cand = s + step * Point2{std::cos(ang), std::sin(ang)};
        if (clashes(cand, other)) continue;
        const double cost = longest(cand, nbrs, partner);
        if (cost < best_cost) {
          best_cost = cost;
          best_pos = cand;
          found = true;
        }
      }
      if (found) {
        s = best_pos;
        return;
      }
    }
  };
  move(c.s1, c.n1, nullptr, c.s2);
  move(c.s2, c.n2, &c.s1, c.s1);
  c.radius = steiner_radius(c, points);
}

}  // namespace bsn

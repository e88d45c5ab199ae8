#include "bsn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bsn {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
}

std::uint64_t Graph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

void Graph::insert(int u, int v, double length) {
  if (u == v) throw std::invalid_argument("Graph: self-loop");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: endpoint out of range");
  if (!keys_.insert(key(u, v)).second) throw std::invalid_argument("Graph: duplicate edge");
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v, length});
}

void Graph::add_edge(int u, int v) { insert(u, v, 0.0); }

void Graph::add_edge(int u, int v, double length) {
  if (!(length >= 0.0)) throw std::invalid_argument("Graph: negative or NaN edge length");
  insert(u, v, length);
  has_lengths_ = true;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return keys_.count(key(u, v)) > 0;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  const int n = g.vertex_count();
  const auto adj = g.adjacency();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

bool is_biconnected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  const BlockCutForest f = block_cut_forest(g);
  return f.component_count == 1 && f.blocks.size() == 1;
}

std::vector<int> BlockCutForest::interior(int b) const {
  std::vector<int> out;
  for (int v : blocks[b])
    if (!is_cut[v]) out.push_back(v);
  return out;
}

int BlockCutForest::leaf_cut_vertex(int b) const {
  for (int v : blocks[b])
    if (is_cut[v]) return v;
  return -1;
}

std::vector<std::pair<int, int>> BlockCutForest::adjacent_blocks(int b) const {
  std::vector<std::pair<int, int>> out;
  for (int v : blocks[b]) {
    if (!is_cut[v]) continue;
    for (int other : vertex_blocks[v])
      if (other != b) out.emplace_back(other, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool BlockCutForest::is_isolated(int b) const {
  return std::binary_search(isolated_blocks.begin(), isolated_blocks.end(), b);
}

bool BlockCutForest::is_leaf(int b) const {
  return std::binary_search(leaf_blocks.begin(), leaf_blocks.end(), b);
}

int BlockCutForest::b_count() const {
  return static_cast<int>(leaf_blocks.size() + 2 * isolated_blocks.size());
}

BlockCutForest block_cut_forest(const Graph& g) {
  const int n = g.vertex_count();
  const auto adj = g.adjacency();
  BlockCutForest f;
  f.component = connected_components(g, &f.component_count);

  std::vector<int> disc(n, -1), low(n, 0), next_child(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<int> call_stack;
  int timer = 0;

  auto emit_block = [&](int u, int v) {
    std::vector<int> verts;
    while (!edge_stack.empty()) {
      const auto e = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(e.first);
      verts.push_back(e.second);
      if (e.first == u && e.second == v) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    f.blocks.push_back(std::move(verts));
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (adj[root].empty()) {
      disc[root] = timer++;
      f.blocks.push_back({root});
      continue;
    }
    disc[root] = low[root] = timer++;
    call_stack.push_back(root);
    while (!call_stack.empty()) {
      const int u = call_stack.back();
      if (next_child[u] < static_cast<int>(adj[u].size())) {
        const int w = adj[u][next_child[u]++];
        if (disc[w] < 0) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          edge_stack.emplace_back(u, w);
          call_stack.push_back(w);
        } else if (w != parent[u] && disc[w] < disc[u]) {
          edge_stack.emplace_back(u, w);
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        call_stack.pop_back();
        const int p = parent[u];
        if (p >= 0) {
          low[p] = std::min(low[p], low[u]);
          if (low[u] >= disc[p]) emit_block(p, u);
        }
      }
    }
  }

  std::sort(f.blocks.begin(), f.blocks.end());
  f.vertex_blocks.assign(static_cast<std::size_t>(n), {});
  for (int b = 0; b < static_cast<int>(f.blocks.size()); ++b)
    for (int v : f.blocks[b]) f.vertex_blocks[v].push_back(b);

  f.is_cut.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (f.vertex_blocks[v].size() >= 2) {
      f.is_cut[v] = 1;
      f.cut_vertices.push_back(v);
    }
  }

  std::vector<int> blocks_per_component(static_cast<std::size_t>(f.component_count), 0);
  f.block_component.resize(f.blocks.size());
  for (int b = 0; b < static_cast<int>(f.blocks.size()); ++b) {
    f.block_component[b] = f.component[f.blocks[b].front()];
    ++blocks_per_component[f.block_component[b]];
  }
  for (int b = 0; b < static_cast<int>(f.blocks.size()); ++b) {
    if (blocks_per_component[f.block_component[b]] == 1) {
      f.isolated_blocks.push_back(b);
      continue;
    }
    int cuts = 0;
    for (int v : f.blocks[b]) cuts += f.is_cut[v];
    if (cuts == 1) f.leaf_blocks.push_back(b);
  }
  return f;
}

int b_count(const Graph& g) { return block_cut_forest(g).b_count(); }

LongestEdge max_edge_length(const Graph& g) {
  if (g.edges().empty()) throw std::invalid_argument("max_edge_length: edgeless graph");
  LongestEdge best{g.edges().front().length, g.edges().front()};
  for (const Edge& e : g.edges()) {
    const bool longer = e.length > best.length;
    const bool tie_smaller = e.length == best.length &&
                             std::pair(e.u, e.v) < std::pair(best.edge.u, best.edge.v);
    if (longer || tie_smaller) best = {e.length, e};
  }
  return best;
}

}  // namespace bsn

#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace bsn {

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  double length = 0.0;
};

// Undirected simple graph on vertices 0..vertex_count-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_lengths() const { return has_lengths_; }

  // Throws std::invalid_argument on self-loops, duplicates or bad endpoints.
  void add_edge(int u, int v);
  void add_edge(int u, int v, double length);
  bool has_edge(int u, int v) const;

  std::vector<std::vector<int>> adjacency() const;

 private:
  static std::uint64_t key(int u, int v);
  void insert(int u, int v, double length);

  int n_ = 0;
  bool has_lengths_ = false;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> keys_;
};

struct BlockCutForest {
  std::vector<std::vector<int>> blocks;        // sorted vertex sets
  std::vector<int> cut_vertices;               // sorted
  std::vector<char> is_cut;                    // per vertex
  std::vector<int> leaf_blocks;                // one cut-vertex, non-block component
  std::vector<int> isolated_blocks;            // block equal to its component
  std::vector<std::vector<int>> vertex_blocks;  // blocks containing each vertex
  std::vector<int> component;                  // component id per vertex
  std::vector<int> block_component;            // component id per block
  int component_count = 0;

  // Vertices of block b that are not cut-vertices.
  std::vector<int> interior(int b) const;
  // The unique cut-vertex of a leaf block.
  int leaf_cut_vertex(int b) const;
  // Blocks sharing a cut-vertex with block b, as (block, cut-vertex) pairs.
  std::vector<std::pair<int, int>> adjacent_blocks(int b) const;
  bool is_isolated(int b) const;
  bool is_leaf(int b) const;
  // Leaf blocks plus twice the isolated blocks.
  int b_count() const;
};

// Component id per vertex; ids are assigned in order of smallest vertex.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

bool is_connected(const Graph& g);

// A single vertex and a single edge count as 2-connected.
bool is_biconnected(const Graph& g);

BlockCutForest block_cut_forest(const Graph& g);

int b_count(const Graph& g);

struct LongestEdge {
  double length = 0.0;
  Edge edge;
};

// Throws std::invalid_argument on an edgeless graph. Ties go to the
// lexicographically smallest (u, v).
LongestEdge max_edge_length(const Graph& g);

}  // namespace bsn

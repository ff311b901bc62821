#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wenger {

/// Undirected simple graph: symmetric, loop-free, sorted duplicate-free
/// neighbor lists. Immutable after construction.
class SimpleGraph {
 public:
  static SimpleGraph from_edges(int n,
                                const std::vector<std::pair<int, int>>& edges);

  int n_vertices() const { return static_cast<int>(adj_.size()); }
  long long n_edges() const { return n_edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  bool has_edge(int u, int v) const;

 private:
  SimpleGraph() = default;
  std::vector<std::vector<int>> adj_;
  long long n_edges_ = 0;
};

/// Bipartite graph on points {0, ..., n_points-1} and lines
/// {n_points, ..., n_points+n_lines-1}. Edges never join two vertices of
/// the same class. Immutable after construction.
class BipartiteGraph {
 public:
  /// Edges are (point, line) pairs with the line index local in
  /// [0, n_lines); duplicates are rejected.
  static BipartiteGraph from_edges(
      int n_points, int n_lines,
      const std::vector<std::pair<int, int>>& point_line_edges);

  int n_points() const { return n_points_; }
  int n_lines() const { return n_lines_; }
  int n_vertices() const { return static_cast<int>(adj_.size()); }
  long long n_edges() const { return n_edges_; }
  bool is_point(int v) const { return v < n_points_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  bool has_edge(int u, int v) const;

  /// Same vertices and edges, partition forgotten.
  SimpleGraph as_simple() const;

 private:
  BipartiteGraph() = default;
  int n_points_ = 0, n_lines_ = 0;
  std::vector<std::vector<int>> adj_;
  long long n_edges_ = 0;
};

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  bool regular = true;
};

DegreeProfile degree_profile(const SimpleGraph& g);
DegreeProfile degree_profile(const BipartiteGraph& g);

/// Vertex sets of the connected components, each sorted ascending, listed
/// in order of their smallest vertex.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);
std::vector<std::vector<int>> connected_components(const BipartiteGraph& g);

/// Exact diameter by BFS from every vertex; nullopt when disconnected.
std::optional<int> diameter(const SimpleGraph& g);
std::optional<int> diameter(const BipartiteGraph& g);

/// Length of a shortest cycle, nullopt when acyclic.
std::optional<int> girth(const SimpleGraph& g);
std::optional<int> girth(const BipartiteGraph& g);

/// Subgraph induced on the given vertices, re-indexed by their sorted order.
SimpleGraph induced_subgraph(const SimpleGraph& g,
                             const std::vector<int>& vertices);

enum class GraphFormat { edge_list, matrix_market };

/// Byte-reproducible exports. Edge list: one "u v" line per edge,
/// zero-based, u < v, sorted. Matrix Market: coordinate pattern symmetric,
/// one-based, lower-triangular entries.
std::string export_graph(const SimpleGraph& g, GraphFormat format);
std::string export_graph(const BipartiteGraph& g, GraphFormat format);

}  // namespace wenger

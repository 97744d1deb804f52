#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distlap {

inline constexpr int kMaxOrder = 64;

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on at most 64 labeled vertices. Row i of the
/// adjacency matrix is stored as one 64-bit word; loops are never present
/// and the rows are kept symmetric by every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::uint64_t row(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  int degree(Vertex v) const;
  int edge_count() const;
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  Graph complement() const;
  /// Relabels so that vertex v of this graph becomes perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// All-pairs hop distances of a connected graph with derived transmissions.
struct DistanceData {
  int n = 0;
  std::vector<int> dist;   // row-major n*n
  std::vector<long> trans;  // Tr(v_i), row sums of dist
  long wiener = 0;
  int diam = 0;

  int operator()(Vertex i, Vertex j) const { return dist[static_cast<std::size_t>(i) * n + j]; }
  long max_transmission() const;
  long min_transmission() const;
};

bool is_connected(const Graph& g);
DistanceData distance_data(const Graph& g);

// graph6 codec
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

inline constexpr int kDefaultCanonicalLimit = 10;

/// Isomorphism-invariant key: graph6 of the relabeling whose upper-triangle
/// bit string (graph6 column order) is lexicographically smallest among all
/// relabelings that list vertices by non-increasing degree.
std::string canonical_form(const Graph& g, int limit = kDefaultCanonicalLimit);

/// Backtracking isomorphism test with degree and adjacency pruning. Not
/// bounded by the canonical-form limit; intended for sparse or structured
/// graphs such as the named families.
bool isomorphic(const Graph& a, const Graph& b);

inline constexpr int kMaxNativeEnumeration = 7;

/// One representative per isomorphism class of connected graphs on n
/// vertices, sorted by (edge count, canonical key).
std::vector<Graph> enumerate_connected(int n);

}  // namespace distlap

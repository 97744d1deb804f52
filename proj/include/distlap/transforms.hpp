#pragma once

#include <utility>
#include <vector>

#include "distlap/bounds.hpp"
#include "distlap/graph.hpp"
#include "distlap/spectra.hpp"
#include "distlap/verdict.hpp"

namespace distlap {

enum class GraftKind {
  TwoPathsAtVertex,  // both pendant paths hang from one anchor u
  TwoPathsAtTwins,   // paths hang from adjacent twins u, v
};

/// Two pendant paths of k and l appended vertices. For twins the anchors
/// must be adjacent with N(u) \ {v} = N(v) \ {u}.
struct GraftSpec {
  Graph base;
  GraftKind kind = GraftKind::TwoPathsAtVertex;
  Vertex u = 0;
  Vertex v = -1;  // twins only
  int k = 0;
  int l = 0;
};

/// Result keeps base labels, then the u-arm outward, then the v-arm outward.
Graph apply_graft(const GraftSpec& spec);

/// The same graft with one vertex moved from the l-arm to the k-arm.
GraftSpec moved_one(const GraftSpec& spec);

/// Pairs u < v that are adjacent twins.
std::vector<std::pair<Vertex, Vertex>> twin_pairs(const Graph& g);

/// Largest distance Laplacian eigenvalue does not drop from (k,l) to
/// (k+1,l-1); strict when l = 2. Needs k >= l >= 2.
BoundVerdict check_graft_monotone_L(const GraftSpec& spec);
/// Largest distance signless Laplacian eigenvalue strictly grows from (k,l)
/// to (k+1,l-1). Needs k >= l >= 2.
BoundVerdict check_graft_monotone_Q(const GraftSpec& spec);

Graph delete_edge(const Graph& g, Edge e);

/// Every eigenvalue of the distance (signless) Laplacian is non-decreasing
/// under deletion of any edge whose removal keeps the graph connected.
/// kind must be DistanceLaplacian (L2.3) or DistanceSignlessLaplacian (L2.4).
BoundVerdict check_edge_deletion(const Analysis& a, MatrixKind kind);

}  // namespace distlap

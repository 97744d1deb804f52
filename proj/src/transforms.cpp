#include "distlap/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "distlap/error.hpp"

namespace distlap {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidGraft, what); }

bool are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v || !g.has_edge(u, v)) return false;
  const std::uint64_t bu = std::uint64_t{1} << u;
  const std::uint64_t bv = std::uint64_t{1} << v;
  return (g.row(u) & ~bv) == (g.row(v) & ~bu);
}

void validate(const GraftSpec& s) {
  const int n = s.base.order();
  if (s.k < s.l || s.l < 0) invalid("arm lengths need k >= l >= 0");
  if (n + s.k + s.l > kMaxOrder) invalid("grafted graph exceeds 64 vertices");
  if (s.u < 0 || s.u >= n) invalid("anchor u out of range");
  if (!is_connected(s.base)) invalid("base graph must be connected");
  if (s.kind == GraftKind::TwoPathsAtTwins) {
    if (s.v < 0 || s.v >= n) invalid("anchor v out of range");
    if (!are_twins(s.base, s.u, s.v)) invalid("anchors must be adjacent twins");
  }
}

void hang_path(Graph& g, Vertex anchor, Vertex first, int length) {
  Vertex prev = anchor;
  for (int i = 0; i < length; ++i) {
    g.add_edge(prev, first + i);
    prev = first + i;
  }
}

BoundVerdict compare_moved(const GraftSpec& spec, MatrixKind kind, std::string id) {
  if (spec.l < 2) invalid("comparison needs k >= l >= 2");
  // The twin graft needs a base vertex besides u and v; on K_2 both arms
  // merge into one path and the move is an isomorphism.
  if (spec.kind == GraftKind::TwoPathsAtTwins && spec.base.order() < 3) {
    validate(spec);
    return not_applicable(id, "twin graft needs a base vertex outside the twin pair");
  }
  const Graph before = apply_graft(spec);
  const Graph after = apply_graft(moved_one(spec));
  const double r_before = eigenvalues(build_matrix(before, kind)).largest();
  const double r_after = eigenvalues(build_matrix(after, kind)).largest();

  BoundVerdict v;
  v.theorem_id = std::move(id);
  v.bound_value = r_before;
  v.observed = r_after;
  v.equality = std::abs(r_after - r_before) <= kEqualityTol;
  v.strict = r_after > r_before + kSlack;
  v.witness["k"] = spec.k;
  v.witness["l"] = spec.l;
  v.witness["order"] = before.order();
  return v;
}

}  // namespace

Graph apply_graft(const GraftSpec& spec) {
  validate(spec);
  const int n = spec.base.order();
  Graph g(n + spec.k + spec.l);
  for (const auto& [a, b] : spec.base.edges()) g.add_edge(a, b);
  const Vertex v_anchor = spec.kind == GraftKind::TwoPathsAtTwins ? spec.v : spec.u;
  hang_path(g, spec.u, n, spec.k);
  hang_path(g, v_anchor, n + spec.k, spec.l);
  return g;
}

GraftSpec moved_one(const GraftSpec& spec) {
  if (spec.l < 1) invalid("l-arm is already empty");
  GraftSpec out = spec;
  ++out.k;
  --out.l;
  return out;
}

std::vector<std::pair<Vertex, Vertex>> twin_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (are_twins(g, u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

BoundVerdict check_graft_monotone_L(const GraftSpec& spec) {
  const bool twins = spec.kind == GraftKind::TwoPathsAtTwins;
  BoundVerdict v = compare_moved(spec, MatrixKind::DistanceLaplacian, twins ? "T5.3" : "T5.4");
  if (v.applicable) v.holds = spec.l == 2 ? v.strict : v.observed >= v.bound_value - kSlack;
  return v;
}

BoundVerdict check_graft_monotone_Q(const GraftSpec& spec) {
  const bool twins = spec.kind == GraftKind::TwoPathsAtTwins;
  BoundVerdict v = compare_moved(spec, MatrixKind::DistanceSignlessLaplacian, twins ? "L7.2" : "L7.1");
  if (v.applicable) v.holds = v.strict;
  return v;
}

Graph delete_edge(const Graph& g, Edge e) {
  const auto [u, v] = e;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) {
    throw Error(ErrorKind::NoSuchEdge, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} not in graph");
  }
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

BoundVerdict check_edge_deletion(const Analysis& a, MatrixKind kind) {
  const bool signless = kind == MatrixKind::DistanceSignlessLaplacian;
  if (!signless && kind != MatrixKind::DistanceLaplacian) {
    throw Error(ErrorKind::InvalidParams, "edge deletion check covers the distance (signless) Laplacian only");
  }
  const std::string id = signless ? "L2.4" : "L2.3";
  const Spectrum& base = signless ? a.profile.dq : a.profile.dl;

  int checked = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const Edge& e : a.graph.edges()) {
    const Graph h = delete_edge(a.graph, e);
    if (!is_connected(h)) continue;
    const Spectrum after = eigenvalues(build_matrix(h, kind));
    // The distance Laplacian's last eigenvalue is always zero; leave it out.
    const int last = signless ? base.size() : base.size() - 1;
    for (int i = 1; i <= last; ++i) worst = std::min(worst, after.at(i) - base.at(i));
    ++checked;
  }
  if (checked == 0 || worst == std::numeric_limits<double>::infinity()) {
    return not_applicable(id, "no edge can be deleted without disconnecting");
  }

  BoundVerdict v;
  v.theorem_id = id;
  v.bound_value = 0.0;
  v.observed = worst;
  v.holds = worst >= -a.tol.slack;
  v.strict = worst > a.tol.slack;
  v.equality = std::abs(worst) <= a.tol.equality;
  v.witness["edges_checked"] = checked;
  return v;
}

}  // namespace distlap

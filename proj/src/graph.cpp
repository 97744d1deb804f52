#include "distlap/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

#include "distlap/error.hpp"

namespace distlap {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorKind::UnsupportedOrder, "order " + std::to_string(n) + " outside [1, 64]");
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorKind::InvalidParams, "vertex " + std::to_string(v) + " out of range");
  }
}

int Graph::degree(Vertex v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : adj_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::InvalidParams, "loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

Graph Graph::complement() const {
  Graph c(n_);
  const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  for (Vertex v = 0; v < n_; ++v) c.adj_[v] = all & ~adj_[v] & ~(std::uint64_t{1} << v);
  return c;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorKind::InvalidParams, "permutation size mismatch");
  }
  Graph out(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.add_edge(perm[u], perm[v]);
    }
  }
  return out;
}

long DistanceData::max_transmission() const { return *std::max_element(trans.begin(), trans.end()); }
long DistanceData::min_transmission() const { return *std::min_element(trans.begin(), trans.end()); }

namespace {

// BFS layers from src; unreachable vertices keep distance -1.
void bfs(const Graph& g, Vertex src, std::span<int> dist) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[src] = 0;
  std::uint64_t seen = std::uint64_t{1} << src;
  std::uint64_t frontier = seen;
  int level = 0;
  while (frontier != 0) {
    ++level;
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= g.row(std::countr_zero(f));
    }
    next &= ~seen;
    for (std::uint64_t f = next; f != 0; f &= f - 1) dist[std::countr_zero(f)] = level;
    seen |= next;
    frontier = next;
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.row(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

DistanceData distance_data(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, "distance data needs a connected graph");
  const int n = g.order();
  DistanceData dd;
  dd.n = n;
  dd.dist.assign(static_cast<std::size_t>(n) * n, 0);
  dd.trans.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::span<int> row(dd.dist.data() + static_cast<std::size_t>(v) * n, n);
    bfs(g, v, row);
    for (int d : row) {
      dd.trans[v] += d;
      dd.diam = std::max(dd.diam, d);
    }
  }
  dd.wiener = std::accumulate(dd.trans.begin(), dd.trans.end(), 0L) / 2;
  return dd;
}

// ---------------------------------------------------------------------------
// graph6

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::MalformedGraph6, "empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw Error(ErrorKind::MalformedGraph6, "byte outside [63, 126]");
  }

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw Error(ErrorKind::UnsupportedOrder, "8-byte order header implies more than 64 vertices");
    }
    if (text.size() < 4) throw Error(ErrorKind::MalformedGraph6, "truncated order header");
    n = (long{text[1] - 63} << 12) | (long{text[2] - 63} << 6) | long{text[3] - 63};
    pos = 4;
  }
  if (n > kMaxOrder) throw Error(ErrorKind::UnsupportedOrder, "order " + std::to_string(n) + " exceeds 64");
  if (n < 1) throw Error(ErrorKind::UnsupportedOrder, "graphs need at least one vertex");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw Error(ErrorKind::MalformedGraph6, "expected " + std::to_string(bytes) + " edge bytes, got " +
                                                std::to_string(text.size() - pos));
  }

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    degree_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) degree_[v] = g.degree(v);
    slot_degree_ = degree_;
    std::sort(slot_degree_.begin(), slot_degree_.end(), std::greater<>());
    order_.assign(n_, -1);
    column_.assign(n_, 0);
    best_.assign(n_, std::numeric_limits<std::uint64_t>::max());
    best_order_.assign(n_, -1);
  }

  std::vector<Vertex> run() {
    if (n_ > 0) place(0, 0, false);
    return best_order_;
  }

 private:
  // Column j of the relabeled upper triangle, first row in the high bit so
  // integer order equals lexicographic order of the graph6 bit stream.
  std::uint64_t column_bits(int j, Vertex v) const {
    std::uint64_t bits = 0;
    for (int i = 0; i < j; ++i) bits = (bits << 1) | (g_.has_edge(order_[i], v) ? 1U : 0U);
    return bits;
  }

  void place(int j, std::uint64_t used, bool below) {
    if (j == n_) {
      best_ = column_;
      best_order_ = order_;
      ++generation_;
      return;
    }
    const long entered = generation_;
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1U || degree_[v] != slot_degree_[j]) continue;
      // A new best found below this node shares our prefix exactly.
      if (generation_ != entered) below = false;
      const std::uint64_t col = column_bits(j, v);
      bool now_below = below;
      if (!below) {
        if (col > best_[j]) continue;
        now_below = col < best_[j];
      }
      order_[j] = v;
      column_[j] = col;
      place(j + 1, used | (std::uint64_t{1} << v), now_below);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> degree_;
  std::vector<int> slot_degree_;
  std::vector<Vertex> order_;
  std::vector<std::uint64_t> column_;
  std::vector<std::uint64_t> best_;
  std::vector<Vertex> best_order_;
  long generation_ = 0;
};

}  // namespace

std::string canonical_form(const Graph& g, int limit) {
  if (g.order() > limit) {
    throw Error(ErrorKind::UnsupportedOrder,
                "canonical form limited to " + std::to_string(limit) + " vertices");
  }
  const auto order = CanonicalSearch(g).run();
  std::vector<Vertex> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[order[pos]] = pos;
  return to_graph6(g.relabeled(perm));
}

// ---------------------------------------------------------------------------
// isomorphism

namespace {

std::vector<long> vertex_invariants(const Graph& g) {
  const int n = g.order();
  std::vector<long> inv(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> nd;
    for (std::uint64_t r = g.row(v); r != 0; r &= r - 1) nd.push_back(g.degree(std::countr_zero(r)));
    std::sort(nd.begin(), nd.end());
    long h = g.degree(v);
    for (int d : nd) h = h * 67 + d;
    inv[v] = h;
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), n_(a.order()), inv_a_(vertex_invariants(a)), inv_b_(vertex_invariants(b)) {
    // Visit a's vertices so each one (after the first of its component)
    // touches an already-mapped vertex.
    std::vector<bool> seen(n_, false);
    while (static_cast<int>(visit_.size()) < n_) {
      Vertex start = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (!seen[v] && (start < 0 || a.degree(v) > a.degree(start))) start = v;
      }
      std::deque<Vertex> queue{start};
      seen[start] = true;
      while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        visit_.push_back(v);
        for (std::uint64_t r = a.row(v); r != 0; r &= r - 1) {
          Vertex w = std::countr_zero(r);
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
    map_.assign(n_, -1);
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(int depth, std::uint64_t used) {
    if (depth == n_) return true;
    const Vertex va = visit_[depth];
    for (Vertex vb = 0; vb < n_; ++vb) {
      if ((used >> vb) & 1U || inv_a_[va] != inv_b_[vb]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        ok = a_.has_edge(va, visit_[i]) == b_.has_edge(vb, map_[visit_[i]]);
      }
      if (!ok) continue;
      map_[va] = vb;
      if (extend(depth + 1, used | (std::uint64_t{1} << vb))) return true;
    }
    map_[va] = -1;
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  std::vector<long> inv_a_;
  std::vector<long> inv_b_;
  std::vector<Vertex> visit_;
  std::vector<Vertex> map_;
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto ia = vertex_invariants(a);
  auto ib = vertex_invariants(b);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return false;
  return IsoSearch(a, b).run();
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

std::vector<Graph> extend_by_vertex(const std::vector<Graph>& smaller, int n) {
  std::map<std::pair<int, std::string>, Graph> classes;
  for (const Graph& h : smaller) {
    const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t s = 1; s < subsets; ++s) {
      Graph g(n);
      for (const auto& [u, v] : h.edges()) g.add_edge(u, v);
      for (std::uint64_t r = s; r != 0; r &= r - 1) g.add_edge(n - 1, std::countr_zero(r));
      std::string key = canonical_form(g);
      const int m = g.edge_count();
      if (!classes.contains({m, key})) {
        Graph rep = from_graph6(key);
        classes.emplace(std::pair{m, std::move(key)}, std::move(rep));
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxNativeEnumeration) {
    throw Error(ErrorKind::UnsupportedOrder, "native enumeration supports 1 <= n <= 7; stream graph6 for larger orders");
  }
  static std::mutex mu;
  static std::vector<std::vector<Graph>> cache;
  std::lock_guard lock(mu);
  if (cache.empty()) cache.push_back({Graph(1)});
  while (static_cast<int>(cache.size()) < n) {
    cache.push_back(extend_by_vertex(cache.back(), static_cast<int>(cache.size()) + 1));
  }
  return cache[n - 1];
}

}  // namespace distlap

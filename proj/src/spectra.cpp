#include "distlap/spectra.hpp"

#include <cmath>

#include "distlap/error.hpp"

namespace distlap {

SymMatrix distance_matrix(const DistanceData& dd) {
  SymMatrix m(dd.n);
  for (int i = 0; i < dd.n; ++i) {
    for (int j = i + 1; j < dd.n; ++j) m.set(i, j, dd(i, j));
  }
  return m;
}

namespace {

SymMatrix transmission_plus(const DistanceData& dd, int sign) {
  SymMatrix m(dd.n);
  for (int i = 0; i < dd.n; ++i) {
    m.set(i, i, static_cast<double>(dd.trans[i]));
    for (int j = i + 1; j < dd.n; ++j) m.set(i, j, sign * dd(i, j));
  }
  return m;
}

}  // namespace

SymMatrix dist_laplacian(const DistanceData& dd) { return transmission_plus(dd, -1); }
SymMatrix dist_signless_laplacian(const DistanceData& dd) { return transmission_plus(dd, +1); }

SymMatrix distance_matrix(const Graph& g) { return distance_matrix(distance_data(g)); }
SymMatrix dist_laplacian(const Graph& g) { return dist_laplacian(distance_data(g)); }
SymMatrix dist_signless_laplacian(const Graph& g) { return dist_signless_laplacian(distance_data(g)); }

SymMatrix laplacian(const Graph& g) {
  const int n = g.order();
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, g.degree(i));
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) m.set(i, j, -1.0);
    }
  }
  return m;
}

SymMatrix build_matrix(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Distance: return distance_matrix(g);
    case MatrixKind::DistanceLaplacian: return dist_laplacian(g);
    case MatrixKind::DistanceSignlessLaplacian: return dist_signless_laplacian(g);
    case MatrixKind::Laplacian: return laplacian(g);
  }
  throw Error(ErrorKind::InvalidParams, "unknown matrix kind");
}

SpectralProfile spectral_profile(const Graph& g) {
  SpectralProfile p;
  p.dd = distance_data(g);
  p.dl = eigenvalues(dist_laplacian(p.dd));
  p.dq = eigenvalues(dist_signless_laplacian(p.dd));
  p.lap = eigenvalues(laplacian(g));
  p.alg_connectivity = g.order() >= 2 ? p.lap.at(g.order() - 1) : 0.0;
  return p;
}

Partition Partition::singletons(int n) {
  Partition p;
  for (int i = 0; i < n; ++i) p.blocks.push_back({i});
  return p;
}

void Partition::validate(int n) const {
  std::vector<bool> seen(n, false);
  int covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw Error(ErrorKind::InvalidPartition, "empty block");
    for (int v : block) {
      if (v < 0 || v >= n) throw Error(ErrorKind::InvalidPartition, "index out of range");
      if (seen[v]) throw Error(ErrorKind::InvalidPartition, "blocks overlap");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) throw Error(ErrorKind::InvalidPartition, "blocks do not cover the index set");
}

namespace {

// Sum of the entries of block (bi, bj).
double block_sum(const SymMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  double s = 0.0;
  for (int r : rows) {
    for (int c : cols) s += m(r, c);
  }
  return s;
}

}  // namespace

Matrix quotient_matrix(const SymMatrix& m, const Partition& p) {
  p.validate(m.size());
  const int k = static_cast<int>(p.blocks.size());
  Matrix r(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      r(i, j) = block_sum(m, p.blocks[i], p.blocks[j]) / static_cast<double>(p.blocks[i].size());
    }
  }
  return r;
}

double quotient_spectral_radius(const SymMatrix& m, const Partition& p) {
  p.validate(m.size());
  const int k = static_cast<int>(p.blocks.size());
  SymMatrix sym(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const double size_product =
          static_cast<double>(p.blocks[i].size()) * static_cast<double>(p.blocks[j].size());
      sym.set(i, j, block_sum(m, p.blocks[i], p.blocks[j]) / std::sqrt(size_product));
    }
  }
  return eigenvalues(sym).largest();
}

BoundVerdict check_quotient_bound(const SymMatrix& m, const Partition& p) {
  BoundVerdict v;
  v.theorem_id = "L2.2";
  v.bound_value = quotient_spectral_radius(m, p);
  v.observed = eigenvalues(m).largest();
  v.holds = v.observed >= v.bound_value - kSlack;
  v.equality = std::abs(v.observed - v.bound_value) <= kEqualityTol;
  v.strict = v.observed > v.bound_value + kSlack;
  v.witness["blocks"] = static_cast<double>(p.blocks.size());
  return v;
}

bool check_interlacing(const Spectrum& a, const Spectrum& b) {
  const int n = a.size();
  const int m = b.size();
  if (m > n || m < 1) throw Error(ErrorKind::DimensionMismatch, "submatrix spectrum larger than the matrix");
  constexpr double kInterlaceSlack = 1e-9;
  for (int i = 1; i <= m; ++i) {
    if (b.at(i) > a.at(i) + kInterlaceSlack) return false;
    if (b.at(i) < a.at(n - m + i) - kInterlaceSlack) return false;
  }
  return true;
}

}  // namespace distlap

#pragma once

#include <vector>

#include "distlap/graph.hpp"
#include "distlap/linalg.hpp"
#include "distlap/verdict.hpp"

namespace distlap {

enum class MatrixKind {
  Distance,                   // D(G)
  DistanceLaplacian,          // Tr(G) - D(G)
  DistanceSignlessLaplacian,  // Tr(G) + D(G)
  Laplacian,                  // Diag(G) - A(G)
};

SymMatrix distance_matrix(const Graph& g);
SymMatrix dist_laplacian(const Graph& g);
SymMatrix dist_signless_laplacian(const Graph& g);
SymMatrix laplacian(const Graph& g);

SymMatrix distance_matrix(const DistanceData& dd);
SymMatrix dist_laplacian(const DistanceData& dd);
SymMatrix dist_signless_laplacian(const DistanceData& dd);

SymMatrix build_matrix(const Graph& g, MatrixKind kind);

struct SpectralProfile {
  DistanceData dd;
  Spectrum dl;   // distance Laplacian
  Spectrum dq;   // distance signless Laplacian
  Spectrum lap;  // ordinary Laplacian
  double alg_connectivity = 0.0;

  double dl_radius() const { return dl.largest(); }
  double dq_radius() const { return dq.largest(); }
};

SpectralProfile spectral_profile(const Graph& g);

struct Partition {
  std::vector<std::vector<int>> blocks;

  static Partition singletons(int n);
  /// Throws InvalidPartition unless blocks are nonempty, disjoint, and cover 0..n-1.
  void validate(int n) const;
};

/// Block-average row sums: entry (i,j) is the sum of block (i,j) divided by |block i|.
Matrix quotient_matrix(const SymMatrix& m, const Partition& p);

/// Largest eigenvalue of the quotient matrix via its symmetric similarity
/// S^{1/2} R S^{-1/2}, S = diag(block sizes).
double quotient_spectral_radius(const SymMatrix& m, const Partition& p);

/// lambda_1(m) >= lambda_1(quotient).
BoundVerdict check_quotient_bound(const SymMatrix& m, const Partition& p);

/// Cauchy interlacing of a principal-submatrix spectrum b inside a.
bool check_interlacing(const Spectrum& a, const Spectrum& b);

}  // namespace distlap
